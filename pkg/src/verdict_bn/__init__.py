"""Discrete Bayesian networks for negligence-claim decision support.

Core engine (network types, exact inference), parameter learning from the
case-audit extract, the fixed negligence model with its two named what-if
scenarios, and CLI/HTTP front ends.
"""

from .cases import CaseRecord, Dataset, TotalsSummary, parse_case_csv, serialize_case_csv, summarize
from .errors import ModelError
from .inference import (
    InferenceResult,
    Posterior,
    elimination_order,
    enumerate_posterior,
    infer,
    joint_probability,
    probability_of_evidence,
)
from .learning import (
    FamilyCounts,
    LearningConfig,
    Skeleton,
    VariableMapping,
    column_mapping,
    derived_mapping,
    family_counts,
    learn_parameters,
)
from .model_json import dumps_network, loads_network
from .negligence import (
    SCENARIOS,
    ScenarioResult,
    build_negligence_skeleton,
    builtin_audit_extract,
    fit_default_model,
    run_scenario,
)
from .network import Cpt, Evidence, Network, Variable, build_network, make_and_gate_cpt

__all__ = [
    "CaseRecord", "Dataset", "TotalsSummary", "parse_case_csv", "serialize_case_csv", "summarize",
    "ModelError",
    "InferenceResult", "Posterior", "elimination_order", "enumerate_posterior", "infer",
    "joint_probability", "probability_of_evidence",
    "FamilyCounts", "LearningConfig", "Skeleton", "VariableMapping",
    "column_mapping", "derived_mapping", "family_counts", "learn_parameters",
    "dumps_network", "loads_network",
    "SCENARIOS", "ScenarioResult", "build_negligence_skeleton", "builtin_audit_extract",
    "fit_default_model", "run_scenario",
    "Cpt", "Evidence", "Network", "Variable", "build_network", "make_and_gate_cpt",
]

__version__ = "0.1.0"
