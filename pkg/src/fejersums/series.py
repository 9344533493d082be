"""Direct evaluation of the sine/cosine sums and their modified variants.

All six families share the form ``sum_{k=1}^{n} f(g(k x)) / k``:

========================  ==================  =====
kind                      term                code
========================  ==================  =====
``SumKind.SINE_BASIC``    ``sin(kx)``         ``s``
``SumKind.COSINE_BASIC``  ``cos(kx)``         ``c``
``SumKind.COS_COS``       ``cos(cos kx)``     ``1``
``SumKind.COS_SIN``       ``cos(sin kx)``     ``2``
``SumKind.SIN_COS``       ``sin(cos kx)``     ``3``
``SumKind.SIN_SIN``       ``sin(sin kx)``     ``4``
========================  ==================  =====

Every phase ``k x`` is reduced modulo ``2 pi`` from the exact product, and the
terms are added with compensated summation, so results keep full double
precision for ``n`` into the millions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._numerics import BLOCK, MAX_ABS_X, compensated_sum, cumulative_compensated, reduce_phase
from ._validation import (
    MAX_TERMS,
    DomainError,
    UnsupportedCombinationError,
    check_finite,
    check_positive_int,
    check_terms,
)

EULER_GAMMA = 0.57721566490153286061
LOG2 = math.log(2.0)

__all__ = [
    "EULER_GAMMA",
    "Endpoint",
    "EndpointExpansion",
    "HarmonicValue",
    "Parity",
    "SpecialPoint",
    "SumKind",
    "cosine_sum",
    "digamma",
    "endpoint_derivative",
    "endpoint_expansion",
    "evaluate",
    "harmonic",
    "modified_sum",
    "partial_sums",
    "sine_sum",
    "special_value",
]


class SumKind(enum.Enum):
    SINE_BASIC = "s"
    COSINE_BASIC = "c"
    COS_COS = "1"
    COS_SIN = "2"
    SIN_COS = "3"
    SIN_SIN = "4"

    @property
    def is_basic(self) -> bool:
        return self in (SumKind.SINE_BASIC, SumKind.COSINE_BASIC)

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    SumKind.SINE_BASIC: "SineBasic",
    SumKind.COSINE_BASIC: "CosineBasic",
    SumKind.COS_COS: "CosCos",
    SumKind.COS_SIN: "CosSin",
    SumKind.SIN_COS: "SinCos",
    SumKind.SIN_SIN: "SinSin",
}

_TERMS = {
    SumKind.SINE_BASIC: np.sin,
    SumKind.COSINE_BASIC: np.cos,
    SumKind.COS_COS: lambda t: np.cos(np.cos(t)),
    SumKind.COS_SIN: lambda t: np.cos(np.sin(t)),
    SumKind.SIN_COS: lambda t: np.sin(np.cos(t)),
    SumKind.SIN_SIN: lambda t: np.sin(np.sin(t)),
}


class SpecialPoint(enum.Enum):
    PI = "pi"
    TWO_PI_OVER_3 = "2pi/3"
    PI_OVER_2 = "pi/2"

    @property
    def radians(self) -> float:
        return {
            SpecialPoint.PI: math.pi,
            SpecialPoint.TWO_PI_OVER_3: 2.0 * math.pi / 3.0,
            SpecialPoint.PI_OVER_2: 0.5 * math.pi,
        }[self]


class Endpoint(enum.Enum):
    ZERO = "0"
    PI = "pi"


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, n: int) -> "Parity":
        return cls.EVEN if n % 2 == 0 else cls.ODD


@dataclass(frozen=True)
class HarmonicValue:
    n: int
    sigma: float
    psi_form: float


@dataclass(frozen=True)
class EndpointExpansion:
    """Truncated odd power series of ``S_n^(4)`` about an endpoint.

    ``coefficients[p]`` multiplies ``h**p``, where ``h = x`` at ``Endpoint.ZERO``
    and ``h = pi - x`` at ``Endpoint.PI``.
    """

    n: int
    endpoint: Endpoint
    parity: Parity
    coefficients: tuple[float, ...]

    def __call__(self, h):
        return np.polynomial.polynomial.polyval(h, self.coefficients)


# -- core evaluation ---------------------------------------------------------


def _sum_terms(kind: SumKind, n: int, x, scale: int = 1):
    """Compensated sum of ``term(k * scale * x)/k``, k = 1..n, for scalar or array ``x``."""
    term = _TERMS[kind]
    scalar = np.ndim(x) == 0
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    flat = xs.ravel()
    out = np.empty(flat.shape)
    k_block = min(n, BLOCK)
    rows = max(1, BLOCK // k_block)
    for i in range(0, flat.size, rows):
        xi = flat[i : i + rows, None]
        partial = []
        for start in range(1, n + 1, k_block):
            k = np.arange(start, min(n, start + k_block - 1) + 1, dtype=float)
            partial.append(compensated_sum(term(reduce_phase(k * scale, xi)) / k))
        if len(partial) == 1:
            out[i : i + rows] = partial[0]
        else:
            out[i : i + rows] = compensated_sum(np.stack(partial, axis=-1))
    out = out.reshape(xs.shape)
    return float(out[0]) if scalar else out


def _check_scale(n: int, scale: int) -> int:
    scale = check_positive_int(scale, "scale")
    if n * scale > MAX_TERMS:
        raise DomainError(f"n * scale must be <= {MAX_TERMS}, got {n * scale}")
    return scale


def _check_angle(x):
    x = check_finite(x)
    if np.any(np.abs(x) > MAX_ABS_X):
        raise DomainError(f"|x| must be <= {MAX_ABS_X:g} for exact phase reduction")
    return x


def evaluate(kind: SumKind, n: int, x, scale: int = 1):
    """Evaluate any of the six sums at ``scale * x``; ``x`` may be a scalar or an array.

    An integer ``scale`` enters the phase exactly, so ``evaluate(kind, n, x, 3)``
    is the sum at the real number ``3x`` rather than at ``fl(3x)``.
    """
    kind = SumKind(kind)
    n = check_terms(n)
    scale = _check_scale(n, scale)
    x = _check_angle(x)
    return _sum_terms(kind, n, x, scale)


def sine_sum(n: int, x):
    """``s_n(x) = sum_{k=1}^n sin(kx)/k``."""
    return evaluate(SumKind.SINE_BASIC, n, x)


def cosine_sum(n: int, x):
    """``c_n(x) = sum_{k=1}^n cos(kx)/k``."""
    return evaluate(SumKind.COSINE_BASIC, n, x)


def modified_sum(kind: SumKind, n: int, x):
    """One of the four nested sums ``sum f(g(kx))/k``.

    Raises
    ------
    UnsupportedCombinationError
        If ``kind`` is one of the two basic sums.
    """
    kind = SumKind(kind)
    if kind.is_basic:
        raise UnsupportedCombinationError(
            f"{kind.label} is a basic sum; use sine_sum/cosine_sum"
        )
    return evaluate(kind, n, x)


def partial_sums(kind: SumKind, n_max: int, x, scale: int = 1) -> np.ndarray:
    """All partial sums ``S_1 .. S_{n_max}`` at once.

    Returns an array of shape ``np.shape(x) + (n_max,)`` whose last index
    ``j`` holds the sum with ``j + 1`` terms. Accumulation is forward in ``k``
    with Neumaier compensation; intended for grid scans over many ``n``.
    """
    kind = SumKind(kind)
    n_max = check_terms(n_max)
    scale = _check_scale(n_max, scale)
    x = np.asarray(_check_angle(x), dtype=float)
    k = np.arange(1, n_max + 1, dtype=float)
    terms = _TERMS[kind](reduce_phase(k * scale, x[..., None])) / k
    return cumulative_compensated(terms)


# -- harmonic numbers and digamma --------------------------------------------

# B_2, B_4, ..., B_16
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)


def digamma(x: float) -> float:
    """Digamma function for ``x > 0``.

    Lifts the argument above 10 with ``psi(x) = psi(x + 1) - 1/x`` and applies
    the Bernoulli-number asymptotic series there. Relative accuracy is about
    1e-15 for ``x >= 1`` away from the positive zero near 1.4616.
    """
    x = check_finite(x)
    if np.ndim(x) != 0:
        raise TypeError("digamma takes a scalar argument")
    if x <= 0.0:
        raise DomainError(f"digamma is only implemented for x > 0, got {x}")
    shift = []
    while x < 10.0:
        shift.append(1.0 / x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for j, b in enumerate(_BERNOULLI, start=1):
        series += b / (2 * j) * power
        power *= inv2
    return math.fsum([math.log(x), -0.5 / x, -series] + [-s for s in shift])


def harmonic(n: int) -> HarmonicValue:
    """``sigma_n = 1 + 1/2 + ... + 1/n`` by compensated summation, with its digamma form."""
    n = check_terms(n)
    total = []
    for start in range(1, n + 1, BLOCK):
        k = np.arange(start, min(n, start + BLOCK - 1) + 1, dtype=float)
        total.append(compensated_sum(1.0 / k))
    sigma = compensated_sum(np.array(total))
    return HarmonicValue(n=n, sigma=sigma, psi_form=digamma(n + 1.0) + EULER_GAMMA)


def _h(m: int) -> float:
    """``psi(m + 1) + gamma``, i.e. the harmonic number of integer ``m >= 0``."""
    return 0.0 if m == 0 else digamma(m + 1.0) + EULER_GAMMA


def _odd_reciprocals(n: int) -> float:
    """``1 + 1/3 + 1/5 + ...`` over odd ``k <= n``, via ``psi(j + 1/2)``."""
    j = (n + 1) // 2
    if j == 0:
        return 0.0
    return 0.5 * digamma(j + 0.5) + 0.5 * EULER_GAMMA + LOG2


# -- closed forms -------------------------------------------------------------


def _alternating(n: int) -> float:
    # psi(n/2 + 1 - r/2) - psi(n + 1), r = n mod 2
    return digamma(n // 2 + 1.0) - digamma(n + 1.0)


def _cos_two_thirds(n: int) -> float:
    # (psi(n/3 + 1 - r/3) - psi(n + 1)) / 2, r = n mod 3
    return 0.5 * (digamma(n // 3 + 1.0) - digamma(n + 1.0))


def _coscos_half_pi(n: int) -> float:
    return _odd_reciprocals(n) + 0.5 * math.cos(1.0) * _h(n // 2)


def _cossin_half_pi(n: int) -> float:
    return math.cos(1.0) * _odd_reciprocals(n) + 0.5 * _h(n // 2)


def _sincos_two_thirds(n: int) -> float:
    s1, s_half = math.sin(1.0), math.sin(0.5)
    return (s1 + s_half) / 3.0 * _h(n // 3) - s_half * _h(n)


_CLOSED_FORMS = {
    (SumKind.COSINE_BASIC, SpecialPoint.PI): _alternating,
    (SumKind.COSINE_BASIC, SpecialPoint.TWO_PI_OVER_3): _cos_two_thirds,
    (SumKind.COS_COS, SpecialPoint.PI_OVER_2): _coscos_half_pi,
    (SumKind.COS_SIN, SpecialPoint.PI_OVER_2): _cossin_half_pi,
    (SumKind.SIN_COS, SpecialPoint.PI): lambda n: math.sin(1.0) * _alternating(n),
    (SumKind.SIN_COS, SpecialPoint.TWO_PI_OVER_3): _sincos_two_thirds,
}


def special_value(kind: SumKind, n: int, point: SpecialPoint) -> float:
    """Digamma closed form of a sum at one of its special points.

    Supported pairs: ``c_n`` at ``pi`` and ``2pi/3``; ``S^(1)``, ``S^(2)`` at
    ``pi/2``; ``S^(3)`` at ``pi`` and ``2pi/3``. The parity of ``n`` (or its
    residue mod 3) picks the digamma arguments.
    """
    kind = SumKind(kind)
    point = SpecialPoint(point)
    n = check_positive_int(n, "n")
    try:
        form = _CLOSED_FORMS[(kind, point)]
    except KeyError:
        raise UnsupportedCombinationError(
            f"no closed form for {kind.label} at {point.value}"
        ) from None
    return form(n)


# -- endpoints ------------------------------------------------------------------

_ENDPOINT_KINDS = (SumKind.SINE_BASIC, SumKind.SIN_SIN)


def endpoint_derivative(kind: SumKind, n: int, endpoint: Endpoint) -> float:
    kind = SumKind(kind)
    endpoint = Endpoint(endpoint)
    n = check_positive_int(n, "n")
    if kind not in _ENDPOINT_KINDS:
        raise UnsupportedCombinationError(
            f"endpoint derivatives are only available for SineBasic and SinSin, not {kind.label}"
        )
    if endpoint is Endpoint.ZERO:
        return float(n)
    return 0.0 if n % 2 == 0 else -1.0


def endpoint_expansion(n: int, endpoint: Endpoint, terms: int = 3) -> EndpointExpansion:
    """Leading odd-order terms of ``S_n^(4)`` about ``x = 0`` or ``x = pi``.

    Built from ``sin(sin y) = y - y**3/3 + y**5/10 - ...`` and the power sums
    ``sum k**2``, ``sum k**4`` (plain at 0, alternating at pi).
    """
    n = check_positive_int(n, "n")
    endpoint = Endpoint(endpoint)
    if terms not in (1, 2, 3):
        raise DomainError(f"terms must be 1, 2 or 3, got {terms}")
    if endpoint is Endpoint.ZERO:
        p2 = n * (n + 1) * (2 * n + 1)
        odd = [n, -p2 / 18, p2 * (3 * n * n + 3 * n - 1) / 300]
    else:
        sign = 1 if n % 2 == 0 else -1
        base = n * (n + 1)
        odd = [n % 2, sign * base / 6, -sign * base * (n * n + n - 1) / 20]
    coefficients = [0.0] * (2 * terms)
    for j in range(terms):
        coefficients[2 * j + 1] = float(odd[j])
    return EndpointExpansion(
        n=n, endpoint=endpoint, parity=Parity.of(n), coefficients=tuple(coefficients)
    )
