"""Discrete Bayesian-network representation and validation.

A network is an immutable DAG of discrete variables. Every variable carries a
conditional probability table (CPT) with one row per combination of parent
states, rows indexed row-major in the declared parent order (last parent
varies fastest). Binary variables use the canonical state order
("true", "false"). CPT entries may be flagged *structural*, meaning they are
fixed to exactly 0 or 1 by domain logic and are never altered by learning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadRow,
    CycleDetected,
    DuplicateVariable,
    InvalidVariable,
    NonBinaryVariable,
    UnknownParent,
    UnknownState,
    UnknownVariable,
)

ROW_SUM_TOL = 1e-9

BINARY_STATES = ("true", "false")

# Hard evidence: a partial assignment of variable ids to state labels.
Evidence = Mapping[str, str]


@dataclass(frozen=True)
class Variable:
    """A named discrete variable with an ordered list of at least two states."""

    id: str
    states: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        if not self.id or any(c.isspace() for c in self.id):
            raise InvalidVariable(f"variable id must be nonempty without whitespace: {self.id!r}")
        if len(self.states) < 2:
            raise InvalidVariable(f"variable {self.id!r} needs at least 2 states")
        if len(set(self.states)) != len(self.states):
            raise InvalidVariable(f"variable {self.id!r} has duplicate state labels")

    def state_index(self, state: str) -> int:
        try:
            return self.states.index(state)
        except ValueError:
            raise UnknownState(f"{state!r} is not a state of {self.id!r} "
                               f"(states: {', '.join(self.states)})") from None


@dataclass(frozen=True)
class Cpt:
    """Conditional probability table for one variable.

    ``rows[r][s]`` is P(child = state s | parent combination r). The row
    index r enumerates parent-state combinations row-major in the declared
    parent order. ``structural[r][s]`` flags entries fixed by logic.
    """

    child: str
    parents: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    structural: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parents", tuple(self.parents))
        object.__setattr__(self, "rows", tuple(tuple(float(p) for p in row) for row in self.rows))
        object.__setattr__(self, "structural", tuple(tuple(bool(b) for b in row) for row in self.structural))
        if not self.rows:
            raise BadRow(f"cpt for {self.child!r} has no rows")
        width = len(self.rows[0])
        if width < 2:
            raise BadRow(f"cpt for {self.child!r} has rows narrower than 2 states")
        if len(self.structural) != len(self.rows):
            raise BadRow(f"cpt for {self.child!r}: structural mask has {len(self.structural)} "
                         f"rows, table has {len(self.rows)}")
        for r, (row, mask) in enumerate(zip(self.rows, self.structural)):
            if len(row) != width or len(mask) != width:
                raise BadRow(f"cpt for {self.child!r}: row {r} has inconsistent width")
            for p in row:
                if not (0.0 <= p <= 1.0) or math.isnan(p):
                    raise BadRow(f"cpt for {self.child!r}: row {r} entry {p!r} outside [0, 1]")
            if abs(sum(row) - 1.0) > ROW_SUM_TOL:
                raise BadRow(f"cpt for {self.child!r}: row {r} sums to {sum(row)!r}, not 1")
            for p, is_structural in zip(row, mask):
                if is_structural and p not in (0.0, 1.0):
                    raise BadRow(f"cpt for {self.child!r}: structural entry {p!r} in row {r} "
                                 f"is not exactly 0 or 1")

    @property
    def n_states(self) -> int:
        return len(self.rows[0])


@dataclass(frozen=True)
class Network:
    """A validated, immutable Bayesian network.

    Construct through :func:`build_network`; the constructor assumes its
    arguments already satisfy all invariants. Safe to share across threads.
    """

    variables: tuple[Variable, ...]
    cpts: tuple[Cpt, ...]  # aligned with ``variables``
    topological_order: tuple[str, ...]
    _index: dict[str, int] = field(repr=False, hash=False, compare=False)

    def variable(self, var_id: str) -> Variable:
        try:
            return self.variables[self._index[var_id]]
        except KeyError:
            raise UnknownVariable(f"no variable {var_id!r} in the network") from None

    def cpt(self, var_id: str) -> Cpt:
        try:
            return self.cpts[self._index[var_id]]
        except KeyError:
            raise UnknownVariable(f"no variable {var_id!r} in the network") from None

    def parents(self, var_id: str) -> tuple[str, ...]:
        return self.cpt(var_id).parents

    @property
    def variable_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.variables)

    @property
    def arc_count(self) -> int:
        return sum(len(c.parents) for c in self.cpts)

    def row_index(self, cpt: Cpt, state_of: Mapping[str, int]) -> int:
        """Row of ``cpt`` selected by parent state indices (row-major)."""
        index = 0
        for parent_id in cpt.parents:
            index = index * len(self.variable(parent_id).states) + state_of[parent_id]
        return index

    def validate_evidence(self, evidence: Evidence) -> None:
        """Raise UnknownVariable / UnknownState if the evidence is invalid."""
        for var_id, state in evidence.items():
            self.variable(var_id).state_index(state)


def build_network(variables: Sequence[Variable], cpts: Sequence[Cpt]) -> Network:
    """Validate variables and CPTs and assemble an immutable network.

    Raises DuplicateVariable, UnknownParent, BadRow (wrong row count or row
    width for the declared parents/child) or CycleDetected.
    """
    variables = tuple(variables)
    seen: dict[str, Variable] = {}
    for v in variables:
        if v.id in seen:
            raise DuplicateVariable(f"variable {v.id!r} declared twice")
        seen[v.id] = v

    by_child: dict[str, Cpt] = {}
    for cpt in cpts:
        if cpt.child not in seen:
            raise UnknownVariable(f"cpt declared for unknown variable {cpt.child!r}")
        if cpt.child in by_child:
            raise DuplicateVariable(f"two cpts declared for {cpt.child!r}")
        by_child[cpt.child] = cpt
    missing = [v.id for v in variables if v.id not in by_child]
    if missing:
        raise BadRow(f"no cpt declared for: {', '.join(missing)}")

    for cpt in by_child.values():
        expected_rows = 1
        for parent_id in cpt.parents:
            if parent_id not in seen:
                raise UnknownParent(f"cpt for {cpt.child!r} names unknown parent {parent_id!r}")
            expected_rows *= len(seen[parent_id].states)
        if len(cpt.parents) != len(set(cpt.parents)):
            raise UnknownParent(f"cpt for {cpt.child!r} repeats a parent")
        if len(cpt.rows) != expected_rows:
            raise BadRow(f"cpt for {cpt.child!r} has {len(cpt.rows)} rows, "
                         f"expected {expected_rows} for its parents")
        if cpt.n_states != len(seen[cpt.child].states):
            raise BadRow(f"cpt for {cpt.child!r} has {cpt.n_states}-state rows, "
                         f"variable has {len(seen[cpt.child].states)} states")

    order = _topological_order(variables, by_child)
    aligned = tuple(by_child[v.id] for v in variables)
    index = {v.id: i for i, v in enumerate(variables)}
    return Network(variables=variables, cpts=aligned, topological_order=order, _index=index)


def _topological_order(variables: Sequence[Variable], by_child: Mapping[str, Cpt]) -> tuple[str, ...]:
    """Kahn's algorithm; ties resolved by declaration order. Raises CycleDetected."""
    remaining_parents = {v.id: set(by_child[v.id].parents) for v in variables}
    children: dict[str, list[str]] = {v.id: [] for v in variables}
    for v in variables:
        for parent_id in by_child[v.id].parents:
            children[parent_id].append(v.id)

    ready = [v.id for v in variables if not remaining_parents[v.id]]
    order: list[str] = []
    while ready:
        current = ready.pop(0)
        order.append(current)
        for child in children[current]:
            remaining_parents[child].discard(current)
            if not remaining_parents[child]:
                ready.append(child)
    if len(order) != len(variables):
        cyclic = sorted(v for v, parents in remaining_parents.items() if parents)
        raise CycleDetected(f"parent relation has a cycle through: {', '.join(cyclic)}")
    return tuple(order)


def make_and_gate_cpt(child: Variable, parents: Sequence[Variable]) -> Cpt:
    """Deterministic AND gate: child is true iff every parent is true.

    Child and parents must be binary with the canonical ("true", "false")
    state order. Every entry is structural.
    """
    for v in (child, *parents):
        if v.states != BINARY_STATES:
            raise NonBinaryVariable(f"{v.id!r} must have states {BINARY_STATES} for an AND gate")
    n_rows = 2 ** len(parents)
    rows = []
    for r in range(n_rows):
        # Row-major over (true, false) per parent: row 0 is the all-true row.
        all_true = r == 0
        rows.append((1.0, 0.0) if all_true else (0.0, 1.0))
    structural = tuple((True, True) for _ in range(n_rows))
    return Cpt(child=child.id, parents=tuple(p.id for p in parents),
               rows=tuple(rows), structural=structural)
