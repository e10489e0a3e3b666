"""Exception hierarchy shared by every layer of the package."""


class Rank2Error(Exception):
    """Base class for all errors raised by rank2mult."""


class ContextError(Rank2Error):
    """Operands live in different variable contexts."""


class NormalizationError(Rank2Error):
    """A denominator factor cannot be expanded as a geometric series."""


class OutOfBoxError(Rank2Error, IndexError):
    """A coefficient was requested outside the computed truncation box.

    Also used as the enlarge-and-retry signal by callers that manage
    their own expansion boxes.
    """


class DomainError(Rank2Error, ValueError):
    """Argument outside the mathematical domain of an operation."""


class UnknownAlgebraError(Rank2Error, ValueError):
    pass


class UnsupportedFormulaError(Rank2Error):
    """No closed-form formula is available for the requested weight."""


class InternalConsistencyError(Rank2Error, AssertionError):
    """An exactness assertion failed (inexact division, non-integral value)."""


class NonStabilizationError(Rank2Error):
    """A truncated reconstruction did not stabilize inside its box."""


class ReconstructionError(Rank2Error):
    """A reconstruction violated a hard structural bound."""
