"""CPT parameter estimation from case records.

Estimator: maximum likelihood with additive (Dirichlet/Laplace) smoothing,
one pseudo-count ``alpha`` per learnable cell. Missing data policy is
family-wise complete-case: a record contributes to a family's counts only
when the child and every parent are observed for that record; an unknown
anywhere in the family skips the record for that family alone.

Structural CPT entries (fixed 0/1 logic) are never counted, smoothed or
overwritten.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .cases import CaseRecord, Dataset
from .errors import InvalidAlpha, UnmappedVariable
from .network import Cpt, Network, Variable, build_network

# Reads one model-variable state off a record; None when unobserved.
StateExtractor = Callable[[CaseRecord], "str | None"]


@dataclass(frozen=True)
class LearningConfig:
    """Knobs for learn_parameters. ``alpha`` is the Dirichlet pseudo-count
    added to every learnable cell; the missing-data policy is fixed to
    family-wise complete-case."""

    alpha: float = 1.0


@dataclass(frozen=True)
class VariableMapping:
    """Ties a model variable to the record field (or derivation) it is
    learned from."""

    variable: Variable
    extract: StateExtractor


def column_mapping(variable: Variable, column: str,
                   to_state: Mapping[str, str]) -> VariableMapping:
    """Mapping that reads ``record.<column>`` and translates tokens to
    states; tokens absent from ``to_state`` (e.g. unknown) read as missing."""

    def extract(record: CaseRecord) -> str | None:
        return to_state.get(getattr(record, column))

    return VariableMapping(variable=variable, extract=extract)


def derived_mapping(variable: Variable, fn: StateExtractor) -> VariableMapping:
    """Mapping for synthetic variables computed from several record fields."""
    return VariableMapping(variable=variable, extract=fn)


@dataclass(frozen=True)
class FamilyCounts:
    """Complete-case counts for one CPT family.

    ``counts[r][s]`` counts records falling in parent combination r (row-major
    in parent order) with the child in state s. ``skipped`` counts records
    dropped because the child or a parent was unobserved.
    """

    child: str
    parents: tuple[str, ...]
    counts: tuple[tuple[int, ...], ...]
    skipped: int

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)


@dataclass(frozen=True)
class Skeleton:
    """A network whose learnable CPT cells hold placeholders, plus the
    record-field mappings used to fill them."""

    network: Network
    mappings: Mapping[str, VariableMapping]


def family_counts(ds: Dataset, child_id: str, parent_ids: Sequence[str],
                  mappings: Mapping[str, VariableMapping]) -> FamilyCounts:
    """Count (parent combination, child state) cells over complete cases."""
    try:
        child = mappings[child_id]
        parents = [mappings[p] for p in parent_ids]
    except KeyError as exc:
        raise UnmappedVariable(f"no record-field mapping for variable {exc}") from None

    parent_sizes = [len(p.variable.states) for p in parents]
    n_rows = math.prod(parent_sizes)
    counts = [[0] * len(child.variable.states) for _ in range(n_rows)]
    skipped = 0
    for record in ds:
        child_state = child.extract(record)
        parent_states = [p.extract(record) for p in parents]
        if child_state is None or any(s is None for s in parent_states):
            skipped += 1
            continue
        row = 0
        for mapping, state in zip(parents, parent_states):
            row = row * len(mapping.variable.states) + mapping.variable.state_index(state)
        counts[row][child.variable.state_index(child_state)] += 1
    return FamilyCounts(child=child_id, parents=tuple(parent_ids),
                        counts=tuple(tuple(row) for row in counts), skipped=skipped)


def _learned_row(row: Sequence[float], mask: Sequence[bool],
                 cell_counts: Sequence[int], alpha: float) -> tuple[float, ...]:
    learnable = [s for s, is_structural in enumerate(mask) if not is_structural]
    observed = sum(cell_counts[s] for s in learnable)
    denominator = observed + alpha * len(learnable)
    out = list(row)
    for s in learnable:
        if denominator == 0.0:
            out[s] = 1.0 / len(learnable)  # no observations, no smoothing
        else:
            out[s] = (cell_counts[s] + alpha) / denominator
    return tuple(out)


def learn_parameters(ds: Dataset, skeleton: Skeleton, cfg: LearningConfig) -> Network:
    """Fill every learnable CPT cell of the skeleton from the dataset.

    Each learnable cell becomes (count + alpha) / (row count total + alpha x
    learnable states in the row); structural cells pass through untouched.
    The result is re-validated, so rows still sum to 1.
    """
    alpha = cfg.alpha
    if not isinstance(alpha, (int, float)) or math.isnan(alpha) or math.isinf(alpha) or alpha < 0:
        raise InvalidAlpha(f"alpha must be a finite number >= 0, got {alpha!r}")

    net = skeleton.network
    learned_cpts = []
    for cpt in net.cpts:
        if all(all(row) for row in cpt.structural):
            learned_cpts.append(cpt)  # fully structural, data cannot touch it
            continue
        counts = family_counts(ds, cpt.child, cpt.parents, skeleton.mappings)
        rows = []
        for row, mask, cell_counts in zip(cpt.rows, cpt.structural, counts.counts):
            if all(mask):
                rows.append(row)
            else:
                rows.append(_learned_row(row, mask, cell_counts, float(alpha)))
        learned_cpts.append(Cpt(child=cpt.child, parents=cpt.parents,
                                rows=tuple(rows), structural=cpt.structural))
    return build_network(net.variables, learned_cpts)
