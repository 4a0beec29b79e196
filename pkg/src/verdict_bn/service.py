"""JSON-over-HTTP facade for the engine.

Stateless by design: the model is loaded once at startup and never mutated;
evidence lives entirely in each request, so identical requests produce
identical responses under any concurrency. Routes:

    GET  /api/model              model descriptor (variables, parents, CPTs)
    POST /api/infer              {"evidence": {...}, "query": [...]} -> posteriors
    GET  /api/scenarios          registered scenario ids
    POST /api/scenarios/{name}   run a named scenario

Malformed bodies and unknown variables/states return 400 naming the
offending field; 422 is reserved for well-formed requests that violate the
loaded model's constraints (e.g. a scenario whose evidence variables do not
exist in a custom model). Evidence with probability zero is a legitimate
answer and returns 200 with ``zero_evidence`` set.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from .errors import ModelError, UnknownScenario
from .inference import InferenceResult, infer
from .model_json import network_to_dict
from .negligence import SCENARIOS, run_scenario
from .network import Network


def _json_response(payload: dict, status_code: int = 200) -> Response:
    return Response(content=json.dumps(payload), status_code=status_code,
                    media_type="application/json")


def _error(status_code: int, message: str, field: "str | None" = None) -> Response:
    body: dict = {"error": message}
    if field is not None:
        body["field"] = field
    return _json_response(body, status_code)


def _posteriors_payload(net: Network, result: InferenceResult) -> dict:
    return {
        "posteriors": {
            p.variable: p.by_state(net.variable(p.variable).states)
            for p in result.posteriors
        },
        "evidence_probability": result.evidence_probability,
        "zero_evidence": result.zero_evidence,
    }


def create_app(net: Network, static_dir: "Path | None" = None) -> FastAPI:
    """Build the application around one immutable network."""
    app = FastAPI(title="verdict-bn", docs_url=None, redoc_url=None)
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                       allow_headers=["*"])

    model_bytes = json.dumps(network_to_dict(net)).encode("utf-8")

    @app.get("/api/model")
    def handle_get_model() -> Response:
        return Response(content=model_bytes, media_type="application/json")

    @app.post("/api/infer")
    async def handle_infer(request: Request) -> Response:
        try:
            body = await request.json()
        except json.JSONDecodeError as exc:
            return _error(400, f"malformed JSON: {exc}")
        if not isinstance(body, dict):
            return _error(400, "request body must be a JSON object")
        evidence = body.get("evidence", {})
        if not isinstance(evidence, dict) or not all(
                isinstance(k, str) and isinstance(v, str) for k, v in evidence.items()):
            return _error(400, "evidence must map variable ids to state labels",
                          field="evidence")
        query = body.get("query")
        if query is not None and (not isinstance(query, list)
                                  or not all(isinstance(q, str) for q in query)):
            return _error(400, "query must be a list of variable ids", field="query")
        try:
            net.validate_evidence(evidence)
        except ModelError as exc:
            return _error(400, str(exc), field="evidence")
        if query is not None:
            for q in query:
                try:
                    net.variable(q)
                except ModelError as exc:
                    return _error(400, str(exc), field="query")
        return _json_response(_posteriors_payload(net, infer(net, evidence, query)))

    @app.get("/api/scenarios")
    def handle_scenarios() -> Response:
        return _json_response(list(SCENARIOS))

    @app.post("/api/scenarios/{name}")
    def handle_run_scenario(name: str) -> Response:
        try:
            result = run_scenario(net, name)
        except UnknownScenario as exc:
            return _error(404, str(exc))
        except ModelError as exc:
            # Registered scenario, but the loaded model cannot express it.
            return _error(422, str(exc))
        inference = InferenceResult(posteriors=result.posteriors,
                                    evidence_probability=result.evidence_probability,
                                    zero_evidence=result.zero_evidence)
        payload = {"name": result.name, "evidence": result.evidence,
                   **_posteriors_payload(net, inference)}
        return _json_response(payload)

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
