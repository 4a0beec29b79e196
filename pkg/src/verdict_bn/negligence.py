"""The negligence-claim model: fixed skeleton, embedded audit extract,
record-field mappings and the two named what-if scenarios.

Nine variables. Three legal elements must hold for a plaintiff to win:
foreseeability (itself the conjunction of an existing risk of harm and the
defendant's knowledge of it), a breached duty of care, and a successful
but-for causation test. Their conjunction feeds the case outcome together
with whether the authority ameliorated (defended away) the breach. The
conjunctions are deterministic AND gates; a duty cannot be breached unless
established, and a case cannot be won when the necessary requirements fail
-- those zeros are structural, everything else is learned from the audit
extract.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .cases import CaseRecord, Dataset, parse_case_csv
from .errors import UnknownScenario
from .inference import InferenceResult, Posterior, infer
from .learning import (
    LearningConfig,
    Skeleton,
    column_mapping,
    derived_mapping,
    learn_parameters,
)
from .network import BINARY_STATES, Cpt, Evidence, Network, Variable, build_network, make_and_gate_cpt

RISK_EXISTS = "RiskExists"
KNOWLEDGE = "Knowledge"
FORESEEABILITY = "ForeseeabilityEstablished"
DUTY_ESTABLISHED = "DutyEstablished"
DUTY_BREACHED = "DutyBreached"
BUTFOR_SUCCEEDS = "ButForSucceeds"
NECESSARY_REQUIREMENTS = "NecessaryRequirements"
AMELIORATED = "Ameliorated"
CASE_OUTCOME = "CaseOutcome"

REQUIREMENT_NODES = (
    RISK_EXISTS, KNOWLEDGE, FORESEEABILITY,
    DUTY_ESTABLISHED, DUTY_BREACHED, BUTFOR_SUCCEEDS,
    NECESSARY_REQUIREMENTS,
)

SCENARIOS: dict[str, dict[str, str]] = {
    # Backward: condition on the effect, read the causes.
    "plaintiff-does-win": {CASE_OUTCOME: "won"},
    # Forward: condition on the three requirements, read the outcome.
    "plaintiff-should-win": {
        FORESEEABILITY: "true",
        DUTY_BREACHED: "true",
        BUTFOR_SUCCEEDS: "true",
    },
}

_YES_NO_TO_BOOL = {"yes": "true", "no": "false"}

_UNIFORM_BINARY = ((0.5, 0.5),)
_NOT_STRUCTURAL = ((False, False),)


def _and_states(*values: "str | None") -> str | None:
    """Three-valued conjunction over 'true'/'false'/None extractions."""
    if any(v == "false" for v in values):
        return "false"
    if all(v == "true" for v in values):
        return "true"
    return None


def _foreseeability_from(record: CaseRecord) -> str | None:
    return _and_states(_YES_NO_TO_BOOL.get(record.risk_exists),
                       _YES_NO_TO_BOOL.get(record.knowledge))


def _requirements_from(record: CaseRecord) -> str | None:
    return _and_states(
        _foreseeability_from(record),
        _YES_NO_TO_BOOL.get(record.duty_breached),
        {"succeeded": "true", "failed": "false"}.get(record.butfor),
    )


def build_negligence_skeleton() -> Skeleton:
    """The fixed nine-variable structure with unfilled (placeholder) CPTs."""
    def binary(var_id: str) -> Variable:
        return Variable(id=var_id, states=BINARY_STATES)

    risk = binary(RISK_EXISTS)
    knowledge = binary(KNOWLEDGE)
    foreseeability = binary(FORESEEABILITY)
    duty_established = binary(DUTY_ESTABLISHED)
    duty_breached = binary(DUTY_BREACHED)
    butfor = binary(BUTFOR_SUCCEEDS)
    requirements = binary(NECESSARY_REQUIREMENTS)
    ameliorated = binary(AMELIORATED)
    outcome = Variable(id=CASE_OUTCOME, states=("won", "lost"))
    variables = (risk, knowledge, foreseeability, duty_established, duty_breached,
                 butfor, requirements, ameliorated, outcome)

    def learnable_root(var_id: str) -> Cpt:
        return Cpt(child=var_id, parents=(), rows=_UNIFORM_BINARY, structural=_NOT_STRUCTURAL)

    cpts = (
        learnable_root(RISK_EXISTS),
        learnable_root(KNOWLEDGE),
        make_and_gate_cpt(foreseeability, (risk, knowledge)),
        learnable_root(DUTY_ESTABLISHED),
        # A duty that was never established cannot be breached.
        Cpt(child=DUTY_BREACHED, parents=(DUTY_ESTABLISHED,),
            rows=((0.5, 0.5), (0.0, 1.0)),
            structural=((False, False), (True, True))),
        learnable_root(BUTFOR_SUCCEEDS),
        make_and_gate_cpt(requirements, (foreseeability, duty_breached, butfor)),
        learnable_root(AMELIORATED),
        # Rows: (req=true, amel=true), (req=true, amel=false), then the
        # structural impossibility of winning without the requirements.
        Cpt(child=CASE_OUTCOME, parents=(NECESSARY_REQUIREMENTS, AMELIORATED),
            rows=((0.5, 0.5), (0.5, 0.5), (0.0, 1.0), (0.0, 1.0)),
            structural=((False, False), (False, False), (True, True), (True, True))),
    )

    mappings = {
        RISK_EXISTS: column_mapping(risk, "risk_exists", _YES_NO_TO_BOOL),
        KNOWLEDGE: column_mapping(knowledge, "knowledge", _YES_NO_TO_BOOL),
        FORESEEABILITY: derived_mapping(foreseeability, _foreseeability_from),
        DUTY_ESTABLISHED: column_mapping(duty_established, "duty_established", _YES_NO_TO_BOOL),
        DUTY_BREACHED: column_mapping(duty_breached, "duty_breached", _YES_NO_TO_BOOL),
        BUTFOR_SUCCEEDS: column_mapping(butfor, "butfor",
                                        {"succeeded": "true", "failed": "false"}),
        NECESSARY_REQUIREMENTS: derived_mapping(requirements, _requirements_from),
        AMELIORATED: column_mapping(ameliorated, "ameliorated", _YES_NO_TO_BOOL),
        CASE_OUTCOME: column_mapping(outcome, "outcome", {"won": "won", "lost": "lost"}),
    }
    return Skeleton(network=build_network(variables, cpts), mappings=mappings)


@lru_cache(maxsize=1)
def builtin_audit_extract() -> Dataset:
    """The embedded 15-record audit extract shipped with the package."""
    text = resources.files("verdict_bn").joinpath("data/case_audit_extract.csv").read_text("utf-8")
    return parse_case_csv(text)


def fit_default_model(cfg: LearningConfig = LearningConfig()) -> Network:
    """Learn the skeleton's parameters from the embedded extract."""
    return learn_parameters(builtin_audit_extract(), build_negligence_skeleton(), cfg)


@dataclass(frozen=True)
class ScenarioResult:
    """Evidence set plus resulting posteriors for all nine variables."""

    name: str
    evidence: dict[str, str]
    posteriors: tuple[Posterior, ...]
    evidence_probability: float
    zero_evidence: bool


def run_scenario(net: Network, scenario: "str | Evidence") -> ScenarioResult:
    """Run a named scenario or a custom evidence set, querying every variable.

    Observed variables come back as point masses. Contradictory (zero
    probability) evidence is reported through ``zero_evidence``, not raised.
    """
    if isinstance(scenario, str):
        try:
            evidence = SCENARIOS[scenario]
        except KeyError:
            known = ", ".join(SCENARIOS)
            raise UnknownScenario(f"unknown scenario {scenario!r} (known: {known})") from None
        name = scenario
    else:
        evidence, name = dict(scenario), "custom"
    result: InferenceResult = infer(net, evidence, net.variable_ids)
    return ScenarioResult(
        name=name,
        evidence=dict(evidence),
        posteriors=result.posteriors,
        evidence_probability=result.evidence_probability,
        zero_evidence=result.zero_evidence,
    )
