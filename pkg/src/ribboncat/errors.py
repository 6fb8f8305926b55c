"""Exception types shared across the package."""

from __future__ import annotations


class RibbonCatError(Exception):
    """Base class for all package errors."""


class StructureError(RibbonCatError):
    """Input tensors or maps have the wrong shape or type."""


class UnknownLabelError(RibbonCatError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class InvalidDataError(RibbonCatError):
    """Data is well-formed but mathematically inadmissible."""


class DataInconsistencyError(InvalidDataError):
    """Two independent computations on the same data disagree."""


class ExactDimsRequired(RibbonCatError):
    pass


class PreconditionError(RibbonCatError):
    pass


class DomainError(RibbonCatError):
    pass


class ResourceLimitError(RibbonCatError):
    pass


class GroupMismatchError(RibbonCatError):
    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message)
        self.witness = witness


class UnsupportedError(RibbonCatError):
    pass


class DegeneracyViolation(RibbonCatError):
    """A label that must be degenerate has a nontrivial channel monodromy.

    ``witness`` is ``(a, b, c, phase)`` with label names and the exact phase.
    """

    def __init__(self, message: str, witness) -> None:
        super().__init__(message)
        self.witness = witness


class NeedsCocycle(RibbonCatError):
    """Several stabilizer cocycle classes remain admissible."""

    def __init__(self, message: str, candidates) -> None:
        super().__init__(message)
        self.candidates = candidates


class AmbiguityError(RibbonCatError):
    """The Gram factorization does not have exactly one solution."""

    def __init__(self, message: str, count: int, truncated: bool = False) -> None:
        super().__init__(message)
        self.count = count
        self.truncated = truncated


class InconsistencyError(RibbonCatError):
    """No nonnegative integer condensed fusion tensor exists."""
