import { ApiClient } from "./api.js";
import { formatDelta, formatPercent } from "./format.js";
import { arcs, panelOrder } from "./layout.js";
import { EvidenceState, RequestGate } from "./state.js";
import type { InferResponse, ModelDoc } from "./types.js";

/**
 * Single-page what-if explorer. One card per variable (topological order),
 * one bar per state; click a state to assert it as evidence, click again to
 * clear. Every displayed probability is taken verbatim from a service
 * response; the client never computes probabilities itself.
 */
export class App {
  private model!: ModelDoc;
  private evidence!: EvidenceState;
  private gate!: RequestGate;
  private lastResponse: InferResponse | null = null;

  constructor(private readonly root: HTMLElement, private readonly api: ApiClient) {}

  async start(): Promise<void> {
    this.root.innerHTML = `
      <header>
        <h1>Negligence claims against public authorities: what-if explorer</h1>
        <div class="toolbar" id="toolbar"></div>
        <div class="banner hidden" id="banner"></div>
        <div class="notice hidden" id="zero-notice">
          Contradictory evidence: this combination has probability zero, so
          posteriors are undefined. Showing the last consistent state.
        </div>
      </header>
      <main id="nodes"></main>
      <footer id="status"></footer>`;
    await this.loadModel();
  }

  /** Fetch the model descriptor and build the node panel; banner + retry on failure. */
  async loadModel(): Promise<void> {
    try {
      this.model = await this.api.getModel();
    } catch (error) {
      this.showBanner(`Service unreachable: ${(error as Error).message}`, () => this.loadModel());
      return;
    }
    this.hideBanner();
    this.evidence = new EvidenceState(this.model);
    this.gate = new RequestGate((seq) => this.runInference(seq));
    this.buildToolbar();
    this.buildNodePanel();
    await this.gate.refresh(); // empty evidence: priors
  }

  currentEvidence(): Record<string, string> {
    return this.evidence.currentEvidence();
  }

  private buildToolbar(): void {
    const toolbar = this.byId("toolbar");
    toolbar.innerHTML = "";
    this.api
      .listScenarios()
      .then((names) => {
        for (const name of names) {
          const button = document.createElement("button");
          button.textContent = name;
          button.dataset.scenario = name;
          button.addEventListener("click", () => void this.applyScenarioPreset(name));
          toolbar.prepend(button);
        }
      })
      .catch((error: Error) => this.showBanner(`Could not list scenarios: ${error.message}`));

    const clear = document.createElement("button");
    clear.id = "clear-evidence";
    clear.textContent = "Clear evidence";
    clear.addEventListener("click", () => {
      this.evidence.clearAll();
      void this.gate.refresh();
    });
    toolbar.append(clear);

    const pin = document.createElement("button");
    pin.id = "pin-baseline";
    pin.textContent = "Pin baseline";
    pin.addEventListener("click", () => this.toggleBaseline());
    toolbar.append(pin);
  }

  private buildNodePanel(): void {
    const panel = this.byId("nodes");
    panel.innerHTML = "";
    const parentsOf: Record<string, string[]> = {};
    for (const arc of arcs(this.model)) {
      (parentsOf[arc.child] ??= []).push(arc.parent);
    }
    for (const variableId of panelOrder(this.model)) {
      const variable = this.model.variables.find((v) => v.id === variableId)!;
      const card = document.createElement("section");
      card.className = "node-card";
      card.dataset.variable = variable.id;

      const title = document.createElement("h2");
      title.textContent = variable.id;
      card.append(title);

      const links = document.createElement("div");
      links.className = "arcs";
      for (const parent of parentsOf[variable.id] ?? []) {
        const arc = document.createElement("span");
        arc.className = "arc";
        arc.dataset.parent = parent;
        arc.dataset.child = variable.id;
        arc.textContent = `${parent} →`;
        links.append(arc);
      }
      card.append(links);

      for (const state of variable.states) {
        const row = document.createElement("div");
        row.className = "state-row";
        row.dataset.state = state;

        const label = document.createElement("button");
        label.className = "state-label";
        label.textContent = state;
        label.addEventListener("click", () => this.toggleEvidence(variable.id, state));
        row.append(label);

        const bar = document.createElement("div");
        bar.className = "bar";
        const fill = document.createElement("div");
        fill.className = "bar-fill";
        bar.append(fill);
        row.append(bar);

        const pct = document.createElement("span");
        pct.className = "pct";
        row.append(pct);

        const delta = document.createElement("span");
        delta.className = "delta";
        row.append(delta);

        card.append(row);
      }
      panel.append(card);
    }
  }

  /** Assert (or clear) evidence and re-infer. */
  toggleEvidence(variable: string, state: string): void {
    this.evidence.toggle(variable, state);
    void this.gate.refresh();
  }

  /** One click loads a named scenario's evidence set. */
  async applyScenarioPreset(name: string): Promise<void> {
    try {
      const scenario = await this.api.runScenario(name);
      this.evidence.setAll(scenario.evidence);
    } catch (error) {
      this.showBanner(`Scenario failed: ${(error as Error).message}`);
      return;
    }
    await this.gate.refresh();
  }

  /** Pin the current posteriors for per-node deltas; pin again to unpin. */
  toggleBaseline(): void {
    const button = this.byId("pin-baseline") as HTMLButtonElement;
    if (this.evidence.pinnedBaseline()) {
      this.evidence.unpinBaseline();
      button.textContent = "Pin baseline";
    } else if (this.lastResponse && !this.lastResponse.zero_evidence) {
      this.evidence.pinBaseline(this.lastResponse.posteriors);
      button.textContent = "Unpin baseline";
    }
    this.render();
  }

  private async runInference(seq: number): Promise<void> {
    const sent = this.evidence.currentEvidence();
    const query = this.model.variables.map((v) => v.id);
    let response: InferResponse;
    try {
      response = await this.api.infer(sent, query);
    } catch (error) {
      // Keep the previous display; just surface the failure.
      this.showBanner(`Inference failed: ${(error as Error).message}`);
      return;
    }
    if (!this.gate.isCurrent(seq)) return; // superseded by newer evidence
    this.hideBanner();
    if (!response.zero_evidence) {
      this.lastResponse = response;
    }
    this.setZeroNotice(response.zero_evidence);
    this.render();
  }

  private render(): void {
    const posteriors = this.lastResponse?.posteriors ?? {};
    const baseline = this.evidence.pinnedBaseline();
    for (const card of Array.from(this.root.querySelectorAll<HTMLElement>(".node-card"))) {
      const variable = card.dataset.variable!;
      const observed = this.evidence.observedState(variable);
      card.classList.toggle("observed", observed !== undefined);
      for (const row of Array.from(card.querySelectorAll<HTMLElement>(".state-row"))) {
        const state = row.dataset.state!;
        row.classList.toggle("asserted", observed === state);
        const probability = posteriors[variable]?.[state];
        const pct = row.querySelector<HTMLElement>(".pct")!;
        const fill = row.querySelector<HTMLElement>(".bar-fill")!;
        const delta = row.querySelector<HTMLElement>(".delta")!;
        if (probability === undefined) {
          pct.textContent = "";
          fill.style.width = "0%";
          delta.textContent = "";
          continue;
        }
        const display = formatPercent(probability);
        pct.textContent = display;
        fill.style.width = display;
        const base = baseline?.[variable]?.[state];
        delta.textContent = base === undefined ? "" : formatDelta(probability, base);
      }
    }
    const status = this.byId("status");
    if (this.lastResponse) {
      status.textContent = `P(evidence) = ${this.lastResponse.evidence_probability}`;
    }
  }

  private setZeroNotice(visible: boolean): void {
    this.byId("zero-notice").classList.toggle("hidden", !visible);
    this.byId("nodes").classList.toggle("stale", visible);
  }

  private showBanner(message: string, retry?: () => Promise<void>): void {
    const banner = this.byId("banner");
    banner.classList.remove("hidden");
    banner.textContent = message + " ";
    if (retry) {
      const button = document.createElement("button");
      button.id = "retry";
      button.textContent = "Retry";
      button.addEventListener("click", () => void retry());
      banner.append(button);
    }
  }

  private hideBanner(): void {
    this.byId("banner").classList.add("hidden");
  }

  private byId(id: string): HTMLElement {
    return this.root.querySelector<HTMLElement>(`#${id}`)!;
  }
}

export function mount(root: HTMLElement, baseUrl = ""): App {
  const app = new App(root, new ApiClient(baseUrl));
  void app.start();
  return app;
}
