import type { EvidenceMap, ModelDoc, PosteriorMap } from "./types.js";

/**
 * Client-side evidence and comparison state. Holds no probabilities of its
 * own beyond the pinned snapshot of a past service response.
 */
export class EvidenceState {
  private evidence: EvidenceMap = {};
  private baseline: PosteriorMap | null = null;

  constructor(private readonly model: ModelDoc) {}

  /** Assert a state; asserting the already-asserted state clears the node. */
  toggle(variable: string, state: string): void {
    this.assertKnown(variable, state);
    if (this.evidence[variable] === state) {
      delete this.evidence[variable];
    } else {
      this.evidence[variable] = state;
    }
  }

  clear(variable: string): void {
    delete this.evidence[variable];
  }

  clearAll(): void {
    this.evidence = {};
  }

  /** Replace the whole evidence map (scenario presets). */
  setAll(evidence: EvidenceMap): void {
    for (const [variable, state] of Object.entries(evidence)) {
      this.assertKnown(variable, state);
    }
    this.evidence = { ...evidence };
  }

  currentEvidence(): EvidenceMap {
    return { ...this.evidence };
  }

  observedState(variable: string): string | undefined {
    return this.evidence[variable];
  }

  pinBaseline(posteriors: PosteriorMap): void {
    this.baseline = posteriors;
  }

  unpinBaseline(): void {
    this.baseline = null;
  }

  pinnedBaseline(): PosteriorMap | null {
    return this.baseline;
  }

  private assertKnown(variable: string, state: string): void {
    const doc = this.model.variables.find((v) => v.id === variable);
    if (!doc) throw new Error(`unknown variable ${variable}`);
    if (!doc.states.includes(state)) {
      throw new Error(`unknown state ${state} for ${variable}`);
    }
  }
}

/**
 * Keeps at most one inference request in flight. Extra refresh calls made
 * while a request is outstanding coalesce into a single trailing run. Every
 * refresh bumps the sequence, so a response whose request predates the
 * newest evidence reads as stale (isCurrent is false) and must be dropped.
 */
export class RequestGate {
  private latest = 0;
  private inFlight = false;
  private trailing = false;

  constructor(private readonly run: (seq: number) => Promise<void>) {}

  /** True when a response for `seq` still reflects the newest refresh. */
  isCurrent(seq: number): boolean {
    return seq === this.latest;
  }

  async refresh(): Promise<void> {
    this.latest += 1;
    if (this.inFlight) {
      this.trailing = true;
      return;
    }
    await this.drive();
  }

  private async drive(): Promise<void> {
    this.inFlight = true;
    const seq = this.latest;
    try {
      await this.run(seq);
    } finally {
      this.inFlight = false;
      if (this.trailing) {
        this.trailing = false;
        await this.drive();
      }
    }
  }
}
