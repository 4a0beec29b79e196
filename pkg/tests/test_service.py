"""HTTP facade: routes, status codes and response invariants."""

import json
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from goldens import P_STAR_ALPHA1, P_STAR_TOL
from verdict_bn.inference import infer
from verdict_bn.negligence import fit_default_model
from verdict_bn.service import create_app

NET = fit_default_model()


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app(NET)) as c:
        yield c


class TestGetModel:
    def test_nine_variables(self, client):
        doc = client.get("/api/model").json()
        assert len(doc["variables"]) == 9

    def test_case_outcome_parents(self, client):
        doc = client.get("/api/model").json()
        outcome = next(c for c in doc["cpts"] if c["child"] == "CaseOutcome")
        assert outcome["parents"] == ["NecessaryRequirements", "Ameliorated"]

    def test_byte_identical_across_requests(self, client):
        assert client.get("/api/model").content == client.get("/api/model").content


class TestInfer:
    def test_foreseeability_forces_its_parents(self, client):
        response = client.post("/api/infer", json={"evidence": {"ForeseeabilityEstablished": "true"}})
        assert response.status_code == 200
        body = response.json()
        assert body["posteriors"]["RiskExists"]["true"] == 1.0
        assert body["posteriors"]["Knowledge"]["true"] == 1.0
        assert not body["zero_evidence"]

    def test_empty_evidence_returns_priors(self, client):
        body = client.post("/api/infer", json={"evidence": {}}).json()
        expected = infer(NET, {})
        for posterior in expected.posteriors:
            states = NET.variable(posterior.variable).states
            assert body["posteriors"][posterior.variable] == posterior.by_state(states)
        assert body["evidence_probability"] == expected.evidence_probability

    def test_backward_evidence_forces_requirements(self, client):
        body = client.post("/api/infer", json={"evidence": {"CaseOutcome": "won"}}).json()
        for node in ("RiskExists", "Knowledge", "ForeseeabilityEstablished",
                     "DutyEstablished", "DutyBreached", "ButForSucceeds",
                     "NecessaryRequirements"):
            assert body["posteriors"][node]["true"] == 1.0

    def test_posteriors_sum_to_one(self, client):
        body = client.post("/api/infer", json={"evidence": {"DutyBreached": "true"}}).json()
        for dist in body["posteriors"].values():
            assert abs(sum(dist.values()) - 1.0) < 1e-9

    def test_query_subset(self, client):
        body = client.post("/api/infer", json={"evidence": {}, "query": ["CaseOutcome"]}).json()
        assert list(body["posteriors"]) == ["CaseOutcome"]

    def test_zero_evidence_is_200_with_flag(self, client):
        body = client.post("/api/infer", json={
            "evidence": {"ForeseeabilityEstablished": "true", "RiskExists": "false"}})
        assert body.status_code == 200
        assert body.json() == {"posteriors": {}, "evidence_probability": 0.0,
                               "zero_evidence": True}

    def test_unknown_variable_is_400_naming_field(self, client):
        response = client.post("/api/infer", json={"evidence": {"Nope": "true"}})
        assert response.status_code == 400
        assert response.json()["field"] == "evidence"
        assert "Nope" in response.json()["error"]

    def test_unknown_state_is_400(self, client):
        response = client.post("/api/infer", json={"evidence": {"CaseOutcome": "banana"}})
        assert response.status_code == 400
        assert "banana" in response.json()["error"]

    def test_bad_query_is_400_naming_field(self, client):
        response = client.post("/api/infer", json={"evidence": {}, "query": ["Ghost"]})
        assert response.status_code == 400
        assert response.json()["field"] == "query"

    def test_malformed_json_is_400(self, client):
        response = client.post("/api/infer", content=b"{nope",
                               headers={"content-type": "application/json"})
        assert response.status_code == 400
        assert "malformed JSON" in response.json()["error"]

    def test_non_object_body_is_400(self, client):
        response = client.post("/api/infer", json=["evidence"])
        assert response.status_code == 400

    def test_non_string_evidence_is_400(self, client):
        response = client.post("/api/infer", json={"evidence": {"CaseOutcome": 1}})
        assert response.status_code == 400
        assert response.json()["field"] == "evidence"


class TestScenarios:
    def test_listing(self, client):
        assert client.get("/api/scenarios").json() == ["plaintiff-does-win",
                                                       "plaintiff-should-win"]

    def test_should_win_returns_frozen_golden(self, client):
        body = client.post("/api/scenarios/plaintiff-should-win").json()
        assert abs(body["posteriors"]["CaseOutcome"]["won"] - P_STAR_ALPHA1) < P_STAR_TOL
        assert body["evidence"] == {"ForeseeabilityEstablished": "true",
                                    "DutyBreached": "true",
                                    "ButForSucceeds": "true"}

    def test_does_win_forces_requirements(self, client):
        body = client.post("/api/scenarios/plaintiff-does-win").json()
        assert body["posteriors"]["NecessaryRequirements"]["true"] == 1.0
        assert body["posteriors"]["CaseOutcome"]["won"] == 1.0

    def test_unknown_scenario_is_404(self, client):
        assert client.post("/api/scenarios/nope").status_code == 404


def test_concurrent_identical_requests_identical_bodies(client):
    payload = {"evidence": {"DutyBreached": "true"}}

    def call(_):
        return client.post("/api/infer", json=payload).content

    with ThreadPoolExecutor(max_workers=8) as pool:
        bodies = list(pool.map(call, range(32)))
    assert len(set(bodies)) == 1


def test_static_ui_served_when_built(tmp_path):
    (tmp_path / "index.html").write_text("<html><body>ui</body></html>")
    with TestClient(create_app(NET, static_dir=tmp_path)) as c:
        response = c.get("/")
        assert response.status_code == 200
        assert "ui" in response.text
        # API still reachable with the mount in place.
        assert c.get("/api/model").status_code == 200
