"""Unit-argument Bessel coefficients and the Bessel-series form of the modified sums.

With the Jacobi-Anger identities

    sin(sin t) = 2 * sum_r J_{2r+1}(1) sin((2r+1) t)
    sin(cos t) = 2 * sum_r (-1)**r J_{2r+1}(1) cos((2r+1) t)

the sums ``S_n^(4)`` and ``S_n^(3)`` become rapidly convergent combinations
of ``s_n((2r+1)x)`` and ``c_n((2r+1)x)``.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._validation import DomainError, check_nonnegative_int, check_positive_int
from .series import SumKind, evaluate, harmonic

# Working supremum of |s_n| used to majorize the tail.
XI = 2.0

# Extra terms kept when a J-series tail is summed numerically.
TAIL_TERMS = 40

__all__ = [
    "XI",
    "BesselCoefficient",
    "CosineExpansion",
    "ExpansionSplit",
    "SpikeLocation",
    "TailBound",
    "bessel_unit",
    "expansion_cos_spike_coefficients",
    "partial_expansion_cos",
    "partial_expansion_sin",
    "tail_bound",
]


@dataclass(frozen=True)
class BesselCoefficient:
    order: int
    value: float

    @property
    def upper_bound(self) -> float:
        """``2**-order / Gamma(1 + order)``, a strict upper bound on ``J_order(1)``."""
        return math.exp(-self.order * math.log(2.0) - math.lgamma(1.0 + self.order))


@dataclass(frozen=True)
class TailBound:
    """Tail majorant ``B_m`` and, for ``m >= 2``, the auxiliary bound ``H_m``."""

    m: int
    b: float
    h: float | None


@dataclass(frozen=True)
class ExpansionSplit:
    m: int
    n: int
    x: float
    f_value: float
    tail_abs_bound: float


@dataclass(frozen=True)
class CosineExpansion:
    m: int
    n: int
    x: float
    head: float
    tail_abs_bound: float


class SpikeLocation(enum.Enum):
    TWO_PI_OVER_3 = 3
    TWO_PI_OVER_5 = 5

    @property
    def radians(self) -> float:
        return 2.0 * math.pi / self.value


@functools.lru_cache(maxsize=None)
def _j_unit(order: int) -> float:
    # sum_k (-1)^k (1/2)^(2k+v) / (k! (k+v)!), terms generated exactly
    term = Fraction(1, 2**order * math.factorial(order))
    terms = []
    k = 0
    while True:
        value = float(term)
        terms.append(value)
        if abs(value) < 1e-18 * abs(terms[0]):
            break
        k += 1
        term = -term / (4 * k * (k + order))
    return math.fsum(terms)


def bessel_unit(order: int) -> BesselCoefficient:
    """``J_order(1)`` for odd positive ``order`` from its ascending power series."""
    order = check_positive_int(order, "order")
    if order % 2 == 0:
        raise DomainError(f"order must be odd, got {order}")
    return BesselCoefficient(order=order, value=_j_unit(order))


def _j(order: int) -> float:
    return _j_unit(order)


@functools.lru_cache(maxsize=None)
def _tail_exact(m: int) -> Fraction:
    return sum(
        (Fraction(1, 4**k * math.factorial(2 * k + 1)) for k in range(m + 1, m + 1 + TAIL_TERMS)),
        Fraction(0),
    )


def tail_bound(m: int) -> TailBound:
    """``B_m = sum_{k>m} 2**(-2k)/(2k+1)!`` and ``H_m = 2**(-2m)/(2m)! * 16m^2/(16m^2-1)``.

    ``B_m`` equals ``2 sinh(1/2)`` minus the first ``m + 1`` terms, but that
    difference cancels catastrophically in floating point, so the tail is
    summed directly in exact rationals and rounded once.
    """
    m = check_nonnegative_int(m, "m")
    b = float(_tail_exact(m))
    h = None
    if m >= 2:
        h = float(
            Fraction(1, 4**m * math.factorial(2 * m)) * Fraction(16 * m * m, 16 * m * m - 1)
        )
    return TailBound(m=m, b=b, h=h)


def partial_expansion_sin(m: int, n: int, x) -> ExpansionSplit:
    """Head ``F_m(n; x) = sum_{k<=m} J_{2k+1}(1) s_n((2k+1)x)`` of ``S_n^(4)/2``.

    ``tail_abs_bound`` is ``XI * sum_{k>m} J_{2k+1}(1)``, which majorizes the
    omitted tail and stays below ``B_m``.
    """
    m = check_nonnegative_int(m, "m")
    n = check_positive_int(n, "n")
    head = sum(_j(2 * k + 1) * evaluate(SumKind.SINE_BASIC, n, x, 2 * k + 1) for k in range(m + 1))
    tail = XI * math.fsum(_j(2 * k + 1) for k in range(m + 1, m + 1 + TAIL_TERMS))
    return ExpansionSplit(m=m, n=n, x=x, f_value=head if np.ndim(head) else float(head), tail_abs_bound=tail)


def partial_expansion_cos(m: int, n: int, x) -> CosineExpansion:
    """Head ``sum_{r<=m} (-1)**r J_{2r+1}(1) c_n((2r+1)x)`` of ``S_n^(3)/2``.

    Since ``|c_n| <= sigma_n``, the omitted part is at most
    ``sigma_n * sum_{r>m} J_{2r+1}(1)``.
    """
    m = check_nonnegative_int(m, "m")
    n = check_positive_int(n, "n")
    head = sum(
        (-1) ** r * _j(2 * r + 1) * evaluate(SumKind.COSINE_BASIC, n, x, 2 * r + 1)
        for r in range(m + 1)
    )
    tail = harmonic(n).sigma * math.fsum(_j(2 * r + 1) for r in range(m + 1, m + 1 + TAIL_TERMS))
    return CosineExpansion(m=m, n=n, x=x, head=head if np.ndim(head) else float(head), tail_abs_bound=tail)


def expansion_cos_spike_coefficients(location: SpikeLocation) -> float:
    """Coefficient of ``sigma_n`` in ``S_n^(3)`` at ``2pi/p``, p in {3, 5}.

    At ``x = 2pi/p`` every ``c_n(p(2j+1)x)`` equals ``sigma_n``; collecting
    those Bessel terms gives ``2 * sum_j (-1)**r J_nu(1)`` over
    ``nu = p(2j+1) = 2r+1``.
    """
    location = SpikeLocation(location)
    p = location.value
    terms = []
    j = 0
    while True:
        nu = p * (2 * j + 1)
        r = (nu - 1) // 2
        value = _j(nu)
        if value < 1e-18:
            break
        terms.append((-1) ** r * value)
        j += 1
    return 2.0 * math.fsum(terms)
