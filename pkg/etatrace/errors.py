"""
Exception hierarchy for etatrace.

Every error raised on purpose by the package derives from :class:`EtaTraceError`.
Leaf classes also derive from the closest builtin so that callers catching
``ValueError`` or ``ArithmeticError`` keep working.
"""

from __future__ import annotations

from typing import Optional, Sequence


class EtaTraceError(Exception):
    """Base class for all etatrace errors."""


class InvalidLieTypeError(EtaTraceError, ValueError):
    """Unknown family letter or a rank outside the family's range."""


class InvalidWeightError(EtaTraceError, ValueError):
    """Weight of the wrong length, or not dominant where dominance is required."""


class PoleError(EtaTraceError, ArithmeticError):
    """A rational function was evaluated at a pole."""


class SeriesInversionError(EtaTraceError, ArithmeticError):
    """A truncated series without an invertible constant term was inverted."""


class SizeLimitExceeded(EtaTraceError):
    """A module larger than the configured size limit was requested."""

    def __init__(self, type_name: str, weight: Sequence[int], dim: int, limit: int) -> None:
        self.type_name = type_name
        self.weight = tuple(weight)
        self.dim = dim
        self.limit = limit
        coords = ",".join(str(n) for n in self.weight)
        super().__init__(
            f"V({coords}) of type {type_name} has dimension {dim}, "
            f"above the size limit {limit}"
        )


class ModuleConstructionError(EtaTraceError, AssertionError):
    """Internal invariant of the module builder failed (must never happen)."""


class StringDecompositionError(EtaTraceError, AssertionError):
    """An i-string disagrees with the K_i eigenvalue of its top vector."""


class NonInvariantSubspaceError(EtaTraceError, ValueError):
    """A trace was requested on a weight space the operator does not preserve."""


class TraceShapeError(EtaTraceError, AssertionError):
    """A Coxeter trace is not of the form epsilon * q^e with epsilon in {-1, 0, 1}."""


class CacheFormatError(EtaTraceError, ValueError):
    """A cache entry has the wrong format version or a bad digest."""


class ConfigError(EtaTraceError, ValueError):
    """Invalid run configuration."""

    def __init__(self, message: str, option: Optional[str] = None) -> None:
        self.option = option
        super().__init__(f"{option}: {message}" if option else message)
