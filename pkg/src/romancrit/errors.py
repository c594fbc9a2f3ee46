"""Exception types shared across the package."""

from __future__ import annotations


class RomanCritError(Exception):
    """Base class for all errors raised by this package."""


class IndexOutOfRange(RomanCritError, IndexError):
    """A vertex index is not in 0..n-1."""


class SelfLoop(RomanCritError, ValueError):
    """An edge endpoint pair (v, v) was supplied; simple graphs only."""


class NoSuchEdge(RomanCritError, ValueError):
    """Asked to delete an edge that is not present."""


class EdgeExists(RomanCritError, ValueError):
    """Asked to add an edge that is already present."""


class InvalidOrder(RomanCritError, ValueError):
    """A graph order outside the valid range for the operation."""


class TooLarge(RomanCritError, ValueError):
    """Order exceeds a hard guard; the operation refuses rather than truncate."""


class MalformedGraph6(RomanCritError, ValueError):
    """A graph6 line that violates the format."""


class LengthMismatch(RomanCritError, ValueError):
    """A label sequence whose length differs from the graph order."""


class NotVCritical(RomanCritError, ValueError):
    """Operation requires a v-critical graph and the input is not one."""


class PreconditionViolated(RomanCritError, ValueError):
    """Input fails a documented precondition of a characterization predicate."""


class UnknownClaim(RomanCritError, KeyError):
    """Claim id not present in the registry."""
