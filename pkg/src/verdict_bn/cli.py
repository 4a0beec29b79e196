"""Command-line entry point.

Subcommands: validate, learn, infer, scenario, summarize, serve. Exit codes:
0 success, 1 domain error (bad file, bad evidence, parse failure), 2 usage
error. Diagnostics go to stderr, data to stdout. The environment variable
VERDICT_BN_MODEL supplies a default --model path.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .cases import TotalsSummary, parse_case_csv, summarize
from .errors import ModelError
from .inference import InferenceResult, infer
from .learning import LearningConfig, learn_parameters
from .model_json import dumps_network, loads_network
from .negligence import SCENARIOS, ScenarioResult, build_negligence_skeleton, builtin_audit_extract, run_scenario
from .network import Evidence, Network

MODEL_ENV_VAR = "VERDICT_BN_MODEL"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="verdict-bn",
                                     description="Bayesian what-if analysis of negligence "
                                                 "claims against public-authority defendants")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check a model JSON file")
    _add_model_flag(p_validate)

    p_learn = sub.add_parser("learn", help="learn CPTs from audit data and write model JSON")
    p_learn.add_argument("--data", help="case CSV (default: the embedded audit extract)")
    p_learn.add_argument("--alpha", type=float, default=1.0,
                         help="Dirichlet pseudo-count per learnable cell (default 1.0)")
    p_learn.add_argument("--out", required=True, help="output model JSON path")

    p_infer = sub.add_parser("infer", help="posteriors under evidence")
    _add_model_flag(p_infer)
    p_infer.add_argument("--evidence", action="append", default=[], metavar="VAR=STATE",
                         help="observed assignment, repeatable")
    p_infer.add_argument("--query", nargs="*", default=None, metavar="VAR",
                         help="variables to query (default: all unobserved)")
    _add_format_flag(p_infer)

    p_scenario = sub.add_parser("scenario", help="run a named what-if scenario")
    p_scenario.add_argument("name", choices=sorted(SCENARIOS))
    _add_model_flag(p_scenario)
    _add_format_flag(p_scenario)

    p_summarize = sub.add_parser("summarize", help="print audit tallies")
    p_summarize.add_argument("--data", help="case CSV (default: the embedded audit extract)")

    p_serve = sub.add_parser("serve", help="serve the JSON API and web UI")
    _add_model_flag(p_serve)
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static",
                         help="directory of built UI assets to serve at / "
                              "(default: ./frontend/dist when it exists)")
    return parser


def _add_model_flag(sub_parser: argparse.ArgumentParser) -> None:
    sub_parser.add_argument("--model", default=os.environ.get(MODEL_ENV_VAR),
                            help=f"model JSON path (default: ${MODEL_ENV_VAR})")


def _add_format_flag(sub_parser: argparse.ArgumentParser) -> None:
    sub_parser.add_argument("--format", choices=("json", "table"), default="table")


def _load_model(parser: argparse.ArgumentParser, path: "str | None") -> Network:
    if not path:
        parser.error(f"--model is required (or set ${MODEL_ENV_VAR})")
    return loads_network(Path(path).read_text("utf-8"))


def _load_dataset(path: "str | None"):
    if path is None:
        return builtin_audit_extract()
    return parse_case_csv(Path(path).read_text("utf-8"))


def _parse_evidence(pairs: Sequence[str]) -> dict[str, str]:
    evidence: dict[str, str] = {}
    for pair in pairs:
        var, sep, state = pair.partition("=")
        if not sep or not var or not state:
            raise ModelError(f"evidence must be VAR=STATE, got {pair!r}")
        evidence[var] = state
    return evidence


def _result_payload(evidence: Evidence, result: InferenceResult, net: Network) -> dict:
    posteriors = {
        p.variable: p.by_state(net.variable(p.variable).states)
        for p in result.posteriors
    }
    return {
        "evidence": dict(evidence),
        "posteriors": posteriors,
        "evidence_probability": result.evidence_probability,
        "zero_evidence": result.zero_evidence,
    }


def _print_posterior_table(payload: dict, out) -> None:
    if payload["zero_evidence"]:
        print("contradictory evidence: probability 0, posteriors undefined", file=out)
        return
    width = max((len(v) for v in payload["posteriors"]), default=0)
    for var, dist in payload["posteriors"].items():
        pinned = "*" if var in payload["evidence"] else " "
        cells = "  ".join(f"{state}={p:.6f}" for state, p in dist.items())
        print(f"{pinned}{var:<{width}}  {cells}", file=out)
    print(f"P(evidence) = {payload['evidence_probability']:.6g}", file=out)


def _print_summary(totals: TotalsSummary, out) -> None:
    print(f"records: {totals.records}", file=out)
    for group in ("outcome", "duty_established", "duty_breached", "soc_breached",
                  "butfor", "ameliorated", "jurisdiction", "authority_level"):
        cells = " ".join(f"{k}={v}" for k, v in getattr(totals, group).items())
        print(f"{group}: {cells}", file=out)


def run_cli(argv: "Sequence[str] | None" = None, out=None, err=None) -> int:
    """Parse arguments and run one subcommand; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "validate":
            net = _load_model(parser, args.model)
            print(f"ok: {len(net.variables)} variables, {net.arc_count} arcs", file=out)

        elif args.command == "learn":
            ds = _load_dataset(args.data)
            net = learn_parameters(ds, build_negligence_skeleton(), LearningConfig(alpha=args.alpha))
            Path(args.out).write_text(dumps_network(net), "utf-8")

        elif args.command == "infer":
            net = _load_model(parser, args.model)
            evidence = _parse_evidence(args.evidence)
            result = infer(net, evidence, args.query)
            payload = _result_payload(evidence, result, net)
            if args.format == "json":
                print(json.dumps(payload, indent=2), file=out)
            else:
                _print_posterior_table(payload, out)

        elif args.command == "scenario":
            net = _load_model(parser, args.model)
            scenario: ScenarioResult = run_scenario(net, args.name)
            payload = _result_payload(scenario.evidence, InferenceResult(
                posteriors=scenario.posteriors,
                evidence_probability=scenario.evidence_probability,
                zero_evidence=scenario.zero_evidence), net)
            payload = {"name": scenario.name, **payload}
            if args.format == "json":
                print(json.dumps(payload, indent=2), file=out)
            else:
                print(f"scenario: {scenario.name}", file=out)
                _print_posterior_table(payload, out)

        elif args.command == "summarize":
            _print_summary(summarize(_load_dataset(args.data)), out)

        elif args.command == "serve":
            net = _load_model(parser, args.model)
            from .service import create_app
            import uvicorn
            static = Path(args.static) if args.static else Path("frontend/dist")
            if not static.is_dir():
                if args.static:
                    raise ModelError(f"static directory not found: {static}")
                static = None
            uvicorn.run(create_app(net, static_dir=static), host=args.host, port=args.port)

    except (ModelError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
