"""CLI subcommands, exit codes and output contracts."""

import io
import json

import pytest

from goldens import P_STAR_ALPHA1, P_STAR_TOL
from verdict_bn.cli import run_cli


def run(argv, **kwargs):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(argv, out=out, err=err, **kwargs)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def model_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("models") / "default.json"
    code, _, err = run(["learn", "--alpha", "1.0", "--out", str(path)])
    assert code == 0, err
    return path


def test_learn_writes_byte_identical_models(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["learn", "--alpha", "1.0", "--out", str(first)])[0] == 0
    assert run(["learn", "--alpha", "1.0", "--out", str(second)])[0] == 0
    assert first.read_bytes() == second.read_bytes()


def test_validate_ok(model_path):
    code, out, _ = run(["validate", "--model", str(model_path)])
    assert code == 0
    assert out.strip() == "ok: 9 variables, 8 arcs"


def test_validate_reports_broken_model(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"variables": []}')
    code, _, err = run(["validate", "--model", str(bad)])
    assert code == 1
    assert err.startswith("error:")


def test_missing_model_file_is_domain_error():
    code, _, err = run(["validate", "--model", "/nonexistent/model.json"])
    assert code == 1
    assert "error:" in err


def test_scenario_json_contains_frozen_golden(model_path):
    code, out, _ = run(["scenario", "plaintiff-should-win",
                        "--model", str(model_path), "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["name"] == "plaintiff-should-win"
    assert abs(payload["posteriors"]["CaseOutcome"]["won"] - P_STAR_ALPHA1) < P_STAR_TOL


def test_summarize_prints_published_totals():
    code, out, _ = run(["summarize"])
    assert code == 0
    assert "outcome: won=3 lost=12" in out
    assert "butfor: succeeded=3 failed=9 not_considered=3" in out
    assert "authority_level: L=9 S=6 F=0" in out


def test_infer_table_marks_observed(model_path):
    code, out, _ = run(["infer", "--model", str(model_path),
                        "--evidence", "CaseOutcome=won"])
    assert code == 0
    assert "P(evidence)" in out


def test_infer_json_round_trips_full_precision(model_path):
    argv = ["infer", "--model", str(model_path), "--evidence",
            "ForeseeabilityEstablished=true", "--format", "json"]
    code, first, _ = run(argv)
    assert code == 0
    _, second, _ = run(argv)
    assert json.loads(first) == json.loads(second)
    parsed = json.loads(first)
    assert parsed["posteriors"]["RiskExists"]["true"] == 1.0


def test_infer_unknown_state_names_the_state(model_path):
    code, _, err = run(["infer", "--model", str(model_path),
                        "--evidence", "CaseOutcome=banana"])
    assert code == 1
    assert "banana" in err


def test_infer_unknown_variable_is_domain_error(model_path):
    code, _, err = run(["infer", "--model", str(model_path), "--evidence", "Nope=true"])
    assert code == 1
    assert "Nope" in err


def test_malformed_evidence_flag(model_path):
    code, _, err = run(["infer", "--model", str(model_path), "--evidence", "CaseOutcome"])
    assert code == 1
    assert "VAR=STATE" in err


def test_zero_evidence_reported_in_table(model_path):
    code, out, _ = run(["infer", "--model", str(model_path),
                        "--evidence", "ForeseeabilityEstablished=true",
                        "--evidence", "RiskExists=false"])
    assert code == 0
    assert "contradictory evidence" in out


def test_unknown_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        run(["summarize", "--bogus"])
    assert exc.value.code == 2


def test_unknown_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        run(["dance"])
    assert exc.value.code == 2


def test_missing_model_flag_is_usage_error(monkeypatch):
    monkeypatch.delenv("VERDICT_BN_MODEL", raising=False)
    with pytest.raises(SystemExit) as exc:
        run(["validate"])
    assert exc.value.code == 2


def test_model_env_var_supplies_default(model_path, monkeypatch):
    monkeypatch.setenv("VERDICT_BN_MODEL", str(model_path))
    code, out, _ = run(["validate"])
    assert code == 0 and out.startswith("ok:")


def test_learn_from_custom_data(tmp_path, model_path):
    from verdict_bn.cases import CSV_COLUMNS
    data = tmp_path / "cases.csv"
    data.write_text(",".join(CSV_COLUMNS) + "\n"
                    + "X v Y,won,yes,yes,no,succeeded,no,NSW,L,yes,yes,\n")
    out_path = tmp_path / "m.json"
    code, _, err = run(["learn", "--data", str(data), "--alpha", "1.0",
                        "--out", str(out_path)])
    assert code == 0, err
    code, out, _ = run(["validate", "--model", str(out_path)])
    assert code == 0
