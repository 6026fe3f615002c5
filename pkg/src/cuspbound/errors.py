"""Exception hierarchy.

Each error also derives from the builtin a caller would naturally catch.
"""

from typing import Any


class CuspBoundError(Exception):
    """Base class for all library errors."""

    pass


class TruncationError(CuspBoundError, IndexError):
    """Raised when a coefficient at or beyond the truncation order is requested."""

    pass


class NonInvertibleSeriesError(CuspBoundError, ZeroDivisionError):
    """Raised when inverting a series whose computed coefficients all vanish."""

    def __init__(self, message: str = "non-invertible series"):
        super().__init__(message)


class UnsupportedParameterError(CuspBoundError, ValueError):
    """Raised for weights, indices or names outside the supported range."""

    pass


class NonSummableTailError(CuspBoundError, ArithmeticError):
    """Raised when a tail majorant cannot be summed at the requested height."""

    pass


class IndeterminateComparisonError(CuspBoundError, ArithmeticError):
    """Raised when an interval comparison stays ambiguous at the precision cap."""

    pass


class BasisConstructionError(CuspBoundError, RuntimeError):
    """Raised when a spanning set does not reach the expected rank."""

    pass


class CertificationError(CuspBoundError, AssertionError):
    """Raised when a certified check fails and the caller asked for a hard stop."""

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class CoefficientParseError(CuspBoundError, ValueError):
    """Raised when a coefficient file cannot be parsed."""

    pass
