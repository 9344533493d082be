"""Spikes of ``S^(1..3)`` and the jump of ``S^(4)`` near ``2pi/3``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._validation import DomainError, UnsupportedCombinationError, check_positive_int
from .bessel import _j as _bessel_j
from .certify import gibbs_constant
from .series import SpecialPoint, SumKind, modified_sum, special_value

__all__ = [
    "JumpMeasurement",
    "SpikeEstimate",
    "growth_coefficient",
    "growth_fit",
    "jump_prediction",
    "measure_jump",
    "spike_height",
    "spike_location_small_even",
]

_SPIKE_POINTS = {
    SumKind.COS_COS: SpecialPoint.PI_OVER_2,
    SumKind.COS_SIN: SpecialPoint.PI_OVER_2,
    SumKind.SIN_COS: SpecialPoint.TWO_PI_OVER_3,
}


@dataclass(frozen=True)
class SpikeEstimate:
    kind: SumKind
    location: float
    n: int
    predicted: float
    measured: float
    growth_coefficient: float

    def record(self) -> dict:
        return {
            "kind": self.kind.label,
            "location": self.location,
            "n": self.n,
            "predicted": self.predicted,
            "measured": self.measured,
            "growth_coefficient": self.growth_coefficient,
        }


@dataclass(frozen=True)
class JumpMeasurement:
    n: int
    window_half_width: float
    left_level: float
    right_level: float
    jump: float

    def record(self) -> dict:
        return {
            "n": self.n,
            "window_half_width": self.window_half_width,
            "left_level": self.left_level,
            "right_level": self.right_level,
            "jump": self.jump,
        }


def growth_coefficient(kind: SumKind) -> float:
    """Slope against ``log n`` of the spike of ``kind``."""
    kind = SumKind(kind)
    if kind in (SumKind.COS_COS, SumKind.COS_SIN):
        return 0.5 * (1.0 + math.cos(1.0))
    if kind is SumKind.SIN_COS:
        return (math.sin(1.0) - 2.0 * math.sin(0.5)) / 3.0
    raise UnsupportedCombinationError(f"{kind.label} has no logarithmic spike")


def spike_height(kind: SumKind, n: int) -> SpikeEstimate:
    """Closed-form and directly summed spike value.

    ``S^(1)`` and ``S^(2)`` spike at pi/2, ``S^(3)`` at 2pi/3. ``S^(4)`` stays
    bounded and has a jump instead; see :func:`measure_jump`.
    """
    kind = SumKind(kind)
    n = check_positive_int(n, "n")
    if kind not in _SPIKE_POINTS:
        raise UnsupportedCombinationError(
            f"{kind.label} has no spike; use measure_jump for SinSin"
        )
    point = _SPIKE_POINTS[kind]
    return SpikeEstimate(
        kind=kind,
        location=point.radians,
        n=n,
        predicted=special_value(kind, n, point),
        measured=modified_sum(kind, n, point.radians),
        growth_coefficient=growth_coefficient(kind),
    )


def spike_location_small_even(n: int) -> tuple[float, float]:
    """The two maximizers ``pi/2 -+ pi/(2n+2)`` of ``S_n^(1)`` for even ``n <= 16``.

    For even ``n >= 18`` and for odd ``n`` the maximum sits at pi/2 itself.
    """
    n = check_positive_int(n, "n")
    if n % 2 or n > 16:
        raise DomainError(f"side maxima exist only for even n <= 16, got {n}")
    offset = math.pi / (2 * n + 2)
    return 0.5 * math.pi - offset, 0.5 * math.pi + offset


def jump_prediction(delta: float | None = None) -> float:
    """Limiting jump ``2 (J_3 + J_9 + J_15 + ...) * 2 delta`` near 2pi/3.

    ``delta`` defaults to the Gibbs constant ``Si(pi)``.
    """
    if delta is None:
        delta = gibbs_constant()
    terms = []
    order = 3
    while (value := _bessel_j(order)) >= 1e-18:
        terms.append(value)
        order += 6
    return 2.0 * math.fsum(terms) * 2.0 * delta


def measure_jump(n: int, points: int = 400) -> JumpMeasurement:
    """Jump of ``S_n^(4)`` across 2pi/3.

    ``S_n^(4)`` is sampled on ``points`` equispaced points of
    ``[2pi/3 - 10pi/n, 2pi/3 + 10pi/n]``. The jump is the maximum over the
    right half minus the minimum over the left half.
    """
    n = check_positive_int(n, "n")
    if n < 100:
        raise DomainError(f"the jump window needs n >= 100, got {n}")
    centre = 2.0 * math.pi / 3.0
    half = 10.0 * math.pi / n
    xs = np.linspace(centre - half, centre + half, points)
    ys = modified_sum(SumKind.SIN_SIN, n, xs)
    left = float(ys[xs < centre].min())
    right = float(ys[xs > centre].max())
    return JumpMeasurement(
        n=n, window_half_width=half, left_level=left, right_level=right, jump=right - left
    )


def growth_fit(kind: SumKind, location: float, n_schedule: Sequence[int]) -> float:
    """Least-squares slope of ``S_n(location)`` against ``log n``.

    The intercept is fitted too; only the slope is returned.
    """
    kind = SumKind(kind)
    ns = [check_positive_int(n, "n") for n in n_schedule]
    if len(ns) < 4:
        raise DomainError(f"need at least 4 values of n, got {len(ns)}")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise DomainError("n_schedule must be strictly increasing")
    if ns[-1] < 100 * ns[0]:
        raise DomainError("n_schedule must span at least two decades")
    values = [modified_sum(kind, n, location) for n in ns]
    slope, _ = np.polyfit(np.log(ns), values, 1)
    return float(slope)
