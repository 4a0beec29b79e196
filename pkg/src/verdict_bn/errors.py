"""Exception types raised by the network, learning and ingestion layers."""


class ModelError(Exception):
    """Base class for all domain errors in this package."""


class InvalidVariable(ModelError):
    """A variable declaration violates its invariants (empty or whitespace
    id, fewer than two states, duplicate state labels)."""


class DuplicateVariable(ModelError):
    """Two variables in a network share the same id."""


class UnknownParent(ModelError):
    """A CPT names a parent id that is not a declared variable."""


class BadRow(ModelError):
    """A CPT is malformed: wrong shape, a row not summing to 1, an entry
    outside [0, 1], or a structural entry that is not exactly 0 or 1."""


class CycleDetected(ModelError):
    """The parent relation induced by the CPTs contains a cycle."""


class UnknownVariable(ModelError):
    """An evidence or query id does not name a variable of the network."""


class UnknownState(ModelError):
    """An assigned state label is not a state of the referenced variable."""


class IncompleteAssignment(ModelError):
    """A full assignment was required but some variable is missing."""


class NonBinaryVariable(ModelError):
    """A logic-gate CPT was requested over variables that are not binary
    with states (true, false)."""


class BadHeader(ModelError):
    """A case-audit CSV is missing a required column."""


class BadToken(ModelError):
    """A case-audit CSV cell holds a value outside its column's vocabulary."""


class UnmappedVariable(ModelError):
    """A model variable in a learnable family has no record-field mapping."""


class InvalidAlpha(ModelError):
    """The smoothing pseudo-count is negative or not a finite number."""


class UnknownScenario(ModelError):
    """A scenario was requested under a name that is not registered."""
