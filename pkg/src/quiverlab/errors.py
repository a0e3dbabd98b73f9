"""Exception hierarchy shared by all quiverlab modules."""

from __future__ import annotations


class QuiverlabError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInput(QuiverlabError):
    """Input could not be parsed (bad matrix file, bad JSON body, bad index)."""


class NotSignSkewSymmetric(QuiverlabError):
    """Nonzero diagonal, or the sign pattern B_ij/B_ji is not opposite."""


class NoSymmetrizer(QuiverlabError):
    """Sign pattern is fine but no positive integral symmetrizer exists."""


class NotSkewSymmetric(QuiverlabError):
    """Operation requires an entrywise skew-symmetric matrix."""


class NotAcyclic(QuiverlabError):
    """Operation requires a diagram without oriented cycles."""


class MixedSigns(QuiverlabError):
    """Vector has both positive and negative entries."""


class ZeroVector(QuiverlabError):
    """Vector is identically zero where a nonzero vector is required."""


class SignCoherenceLost(QuiverlabError):
    """Seed mutation produced a mixed-sign c-vector.

    Attributes carry the failing vector index, the offending vector and,
    when raised from a walk, the prefix of labels applied up to and
    including the failing step.
    """

    def __init__(self, message: str, *, index: int | None = None,
                 vector: tuple[int, ...] | None = None,
                 walk_prefix: tuple[int, ...] | None = None):
        super().__init__(message)
        self.index = index
        self.vector = vector
        self.walk_prefix = walk_prefix


class NotUnitNorm(QuiverlabError):
    """Reflection axis does not have squared norm 2 under the given form."""


class NotACompanion(QuiverlabError):
    """Matrix fails the quasi-Cartan companion conditions for the given B."""

    def __init__(self, message: str, *, entry: tuple[int, int] | None = None):
        super().__init__(message)
        self.entry = entry


class NotAdmissible(QuiverlabError):
    """Companion violates a cycle parity or cut condition."""

    def __init__(self, message: str, *, cycle=None):
        super().__init__(message)
        self.cycle = cycle


class DimensionMismatch(QuiverlabError):
    """Operands have incompatible dimensions."""


class BoundsExceeded(QuiverlabError):
    """Search bounds were hit; carries the partial report when available."""

    def __init__(self, message: str, *, report=None):
        super().__init__(message)
        self.report = report
