"""Exact inference under hard evidence.

Two independent routes compute the same posteriors:

* :func:`enumerate_posterior` sums the chain-rule joint over every full
  assignment consistent with the evidence. Pure Python, no shared machinery;
  it is the ground-truth oracle for the variable-elimination path.
* :func:`infer` runs variable elimination over numpy factors using a
  deterministic min-degree order with lexicographic tie-breaks.

Evidence whose marginal probability is exactly zero is a legal analytical
outcome (structural contradictions occur during what-if exploration); both
routes report it through ``InferenceResult.zero_evidence`` instead of
raising or emitting NaN posteriors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import IncompleteAssignment
from .network import Evidence, Network

ORACLE_TOL = 1e-9


@dataclass(frozen=True)
class Posterior:
    """Distribution over one variable's states, in the variable's state order."""

    variable: str
    probabilities: tuple[float, ...]

    def by_state(self, states: Sequence[str]) -> dict[str, float]:
        return dict(zip(states, self.probabilities))


@dataclass(frozen=True)
class InferenceResult:
    """Posteriors for the queried variables plus the evidence probability.

    When ``zero_evidence`` is true the evidence has probability exactly zero,
    posteriors are undefined and the tuple is empty.
    """

    posteriors: tuple[Posterior, ...]
    evidence_probability: float
    zero_evidence: bool

    def posterior(self, var_id: str) -> Posterior:
        for p in self.posteriors:
            if p.variable == var_id:
                return p
        raise KeyError(var_id)


def _resolve_query(net: Network, evidence: Evidence, query_vars: Sequence[str] | None) -> tuple[str, ...]:
    net.validate_evidence(evidence)
    if query_vars is None:
        return tuple(v.id for v in net.variables if v.id not in evidence)
    for q in query_vars:
        net.variable(q)
    return tuple(query_vars)


def joint_probability(net: Network, full_assignment: Evidence) -> float:
    """Chain-rule probability of one full assignment: the product over all
    variables of the CPT entry selected by the assignment."""
    net.validate_evidence(full_assignment)
    missing = [v.id for v in net.variables if v.id not in full_assignment]
    if missing:
        raise IncompleteAssignment(f"assignment missing: {', '.join(missing)}")
    state_of = {v.id: v.state_index(full_assignment[v.id]) for v in net.variables}
    p = 1.0
    for variable, cpt in zip(net.variables, net.cpts):
        row = net.row_index(cpt, state_of)
        p *= cpt.rows[row][state_of[variable.id]]
    return p


def enumerate_posterior(net: Network, evidence: Evidence,
                        query_vars: Sequence[str] | None = None) -> InferenceResult:
    """Brute-force oracle: sum :func:`joint_probability` over all full
    assignments consistent with the evidence, then normalize per query."""
    query = _resolve_query(net, evidence, query_vars)
    sums = {q: [0.0] * len(net.variable(q).states) for q in query}
    z = 0.0
    state_lists = [v.states for v in net.variables]
    for combo in itertools.product(*state_lists):
        assignment = {v.id: s for v, s in zip(net.variables, combo)}
        if any(assignment[var] != state for var, state in evidence.items()):
            continue
        p = joint_probability(net, assignment)
        z += p
        for q in query:
            sums[q][net.variable(q).state_index(assignment[q])] += p
    if z == 0.0:
        return InferenceResult(posteriors=(), evidence_probability=0.0, zero_evidence=True)
    posteriors = tuple(
        Posterior(variable=q, probabilities=tuple(s / z for s in sums[q])) for q in query
    )
    return InferenceResult(posteriors=posteriors, evidence_probability=z, zero_evidence=False)


# ---------------------------------------------------------------------------
# Variable elimination
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Factor:
    """A nonnegative table over a tuple of variable ids."""

    vars: tuple[str, ...]
    table: np.ndarray  # shape: state counts of ``vars`` in order


def _cpt_factor(net: Network, var_id: str) -> _Factor:
    cpt = net.cpt(var_id)
    scope = (*cpt.parents, var_id)
    shape = tuple(len(net.variable(v).states) for v in scope)
    table = np.array(cpt.rows, dtype=np.float64).reshape(shape)
    return _Factor(vars=scope, table=table)


def _reduce(factor: _Factor, var_id: str, state_index: int) -> _Factor:
    axis = factor.vars.index(var_id)
    table = np.take(factor.table, state_index, axis=axis)
    scope = factor.vars[:axis] + factor.vars[axis + 1:]
    return _Factor(vars=scope, table=table)


def _multiply(a: _Factor, b: _Factor) -> _Factor:
    scope = a.vars + tuple(v for v in b.vars if v not in a.vars)
    # Broadcast both tables onto the joint scope.
    a_table = a.table.reshape(a.table.shape + (1,) * (len(scope) - len(a.vars)))
    b_axes = [scope.index(v) for v in b.vars]
    b_table = np.moveaxis(
        b.table.reshape(b.table.shape + (1,) * (len(scope) - len(b.vars))),
        list(range(len(b.vars))), b_axes)
    return _Factor(vars=scope, table=a_table * b_table)


def _sum_out(factor: _Factor, var_id: str) -> _Factor:
    axis = factor.vars.index(var_id)
    scope = factor.vars[:axis] + factor.vars[axis + 1:]
    return _Factor(vars=scope, table=factor.table.sum(axis=axis))


def elimination_order(net: Network, evidence: Evidence,
                      query_vars: Sequence[str] | None = None) -> tuple[str, ...]:
    """Order in which non-query, non-evidence variables are summed out.

    Min-degree on the moralized graph (evidence vertices deleted first,
    since conditioning removes them from every factor scope), with
    lexicographic tie-break on variable id for determinism.
    """
    query = _resolve_query(net, evidence, query_vars)
    neighbors: dict[str, set[str]] = {v.id: set() for v in net.variables}
    for cpt in net.cpts:
        clique = (*cpt.parents, cpt.child)
        for u, w in itertools.combinations(clique, 2):
            neighbors[u].add(w)
            neighbors[w].add(u)
    for observed in evidence:
        for other in neighbors.pop(observed):
            neighbors[other].discard(observed)

    eliminable = {v.id for v in net.variables if v.id not in evidence and v.id not in query}
    order: list[str] = []
    while eliminable:
        chosen = min(eliminable, key=lambda v: (len(neighbors[v]), v))
        order.append(chosen)
        eliminable.remove(chosen)
        adjacent = neighbors.pop(chosen)
        for u in adjacent:
            neighbors[u].discard(chosen)
        for u, w in itertools.combinations(sorted(adjacent), 2):
            neighbors[u].add(w)
            neighbors[w].add(u)
    return tuple(order)


def infer(net: Network, evidence: Evidence,
          query_vars: Sequence[str] | None = None) -> InferenceResult:
    """Exact posteriors by variable elimination.

    Matches :func:`enumerate_posterior` entrywise within 1e-9 and is a pure
    function: identical inputs give bit-identical outputs across runs.
    """
    query = _resolve_query(net, evidence, query_vars)
    evidence_index = {var: net.variable(var).state_index(state)
                      for var, state in evidence.items()}

    factors: list[_Factor] = []
    for variable in net.variables:
        factor = _cpt_factor(net, variable.id)
        for var_id in factor.vars:
            if var_id in evidence_index:
                factor = _reduce(factor, var_id, evidence_index[var_id])
        factors.append(factor)

    for var_id in elimination_order(net, evidence, query):
        touching = [f for f in factors if var_id in f.vars]
        rest = [f for f in factors if var_id not in f.vars]
        product = touching[0]
        for f in touching[1:]:
            product = _multiply(product, f)
        factors = rest + [_sum_out(product, var_id)]

    joint = factors[0]
    for f in factors[1:]:
        joint = _multiply(joint, f)
    z = float(joint.table.sum())
    if z == 0.0:
        return InferenceResult(posteriors=(), evidence_probability=0.0, zero_evidence=True)

    posteriors = []
    for q in query:
        states = net.variable(q).states
        if q in evidence_index:
            point = [0.0] * len(states)
            point[evidence_index[q]] = 1.0
            posteriors.append(Posterior(variable=q, probabilities=tuple(point)))
            continue
        axes = tuple(i for i, v in enumerate(joint.vars) if v != q)
        marginal = joint.table.sum(axis=axes) if axes else joint.table
        posteriors.append(Posterior(variable=q, probabilities=tuple(float(p / z) for p in marginal)))
    return InferenceResult(posteriors=tuple(posteriors), evidence_probability=z, zero_evidence=False)


def probability_of_evidence(net: Network, evidence: Evidence) -> float:
    """Marginal probability of the evidence (1.0 for empty evidence)."""
    return infer(net, evidence, query_vars=()).evidence_probability
