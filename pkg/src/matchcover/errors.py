"""Exception types shared across the package."""


class MatchCoverError(Exception):
    """Base class for all package errors."""


class EdgeListError(MatchCoverError, ValueError):
    """Malformed edge-list text (bad header, bad line, loop, index out of range)."""


class GeneratorError(MatchCoverError, ValueError):
    """Unknown generator name or infeasible generator parameters."""


class NotRegularError(MatchCoverError, ValueError):
    """An operation required an r-regular graph and the input is not one."""


class NotRGraphError(MatchCoverError, ValueError):
    """An operation required an r-graph; carries the violating odd cut."""

    def __init__(self, message, witness=None, value=None):
        super().__init__(message)
        self.witness = witness
        self.value = value


class NoPerfectMatchingError(MatchCoverError, ValueError):
    """A perfect matching was required and none exists (odd n, isolated vertex, ...)."""


class UncoverableEdgeError(MatchCoverError, ValueError):
    """Some edge lies in no perfect matching, so a full cover is impossible."""

    def __init__(self, message, edge_id=None):
        super().__init__(message)
        self.edge_id = edge_id


class CapExceededError(MatchCoverError, RuntimeError):
    """A search or enumeration hit its configured cap before finishing."""


class MembershipFailure(MatchCoverError, ValueError):
    """A vector had to lie in the perfect matching polytope and does not.

    Carries the failed membership report for honest diagnostics.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class LemmaViolationError(MatchCoverError, AssertionError):
    """A certified gain prediction failed; indicates an internal bug, never user error."""
