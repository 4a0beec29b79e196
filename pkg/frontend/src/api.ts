import type { EvidenceMap, InferResponse, ModelDoc, ScenarioResult } from "./types.js";

/** Thin fetch client for the service; throws on any non-2xx response. */
export class ApiClient {
  constructor(private readonly base: string = "") {}

  async getModel(): Promise<ModelDoc> {
    return this.request("GET", "/api/model");
  }

  async infer(evidence: EvidenceMap, query?: string[]): Promise<InferResponse> {
    return this.request("POST", "/api/infer", { evidence, query });
  }

  async listScenarios(): Promise<string[]> {
    return this.request("GET", "/api/scenarios");
  }

  async runScenario(name: string): Promise<ScenarioResult> {
    return this.request("POST", `/api/scenarios/${encodeURIComponent(name)}`);
  }

  private async request(method: string, path: string, body?: unknown): Promise<any> {
    const response = await fetch(this.base + path, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let detail = `${response.status}`;
      try {
        const payload = await response.json();
        if (payload && payload.error) detail = `${payload.error}`;
      } catch {
        /* non-JSON error body; keep the status code */
      }
      throw new Error(detail);
    }
    return response.json();
  }
}
