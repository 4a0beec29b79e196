/** Wire types for the verdict-bn JSON API. */

export interface VariableDoc {
  id: string;
  states: string[];
}

export interface CptDoc {
  child: string;
  parents: string[];
  rows: number[][];
  structural: boolean[][];
}

export interface ModelDoc {
  variables: VariableDoc[];
  cpts: CptDoc[];
}

/** Posterior distributions keyed by variable id, then state label. */
export type PosteriorMap = Record<string, Record<string, number>>;

export interface InferResponse {
  posteriors: PosteriorMap;
  evidence_probability: number;
  zero_evidence: boolean;
}

export interface ScenarioResult extends InferResponse {
  name: string;
  evidence: Record<string, string>;
}

export type EvidenceMap = Record<string, string>;
