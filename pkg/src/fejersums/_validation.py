"""Exceptions and argument checks shared by the public modules."""

from __future__ import annotations

import math
import numbers

import numpy as np

# k * x must be exact after a Veltkamp split of x into two 26-bit halves.
MAX_TERMS = 2**26


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class UnsupportedCombinationError(ValueError):
    """The requested (kind, point) pair has no implementation."""


class BracketError(ArithmeticError):
    """A root-finding bracket does not enclose a sign change."""


class ConsistencyError(RuntimeError):
    """An internal numerical premise did not hold."""


class CounterexampleError(ArithmeticError):
    """A grid check found a point violating a claimed inequality."""

    def __init__(self, message: str, *, n: int, x: float, value: float):
        super().__init__(message)
        self.n = n
        self.x = x
        self.value = value


def check_positive_int(value, name: str, *, upper: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    value = int(value)
    if value < 1:
        raise DomainError(f"{name} must be >= 1, got {value}")
    if upper is not None and value > upper:
        raise DomainError(f"{name} must be <= {upper}, got {value}")
    return value


def check_nonnegative_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    value = int(value)
    if value < 0:
        raise DomainError(f"{name} must be >= 0, got {value}")
    return value


def check_terms(n) -> int:
    return check_positive_int(n, "n", upper=MAX_TERMS)


def check_finite(x, name: str = "x"):
    """Return ``x`` as a float (scalar input) or float64 array, rejecting NaN/inf."""
    if np.ndim(x) == 0:
        if isinstance(x, bool) or not isinstance(x, numbers.Real):
            raise TypeError(f"{name} must be a real number, got {type(x).__name__}")
        x = float(x)
        if not math.isfinite(x):
            raise DomainError(f"{name} must be finite, got {x}")
        return x
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must contain only finite values")
    return arr
