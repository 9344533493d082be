"""Stage-by-stage positivity certificate for ``S_n^(4)(x) = sum sin(sin kx)/k``.

Write ``S_n^(4) = 2 (F_m + T_m)`` with head ``F_m`` and tail ``T_m`` of the
Bessel expansion. The tail is bounded below by ``-B_m`` and, close to the
endpoints, the head is bounded below by ``F_0(2; x) = J_1(1) sin x (1 + cos x)``.
So ``S_n^(4) > 0`` wherever ``F_0(2; x) > B_m``, i.e. between the two roots
``x_m^-`` and ``x_m^+`` of ``F_0(2; x) = B_m``. Each stage ``m`` pushes these
roots further towards 0 and pi, and the stages chain because consecutive
intervals overlap.

This is a floating-point verification of that argument, not an
interval-arithmetic proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._numerics import bisect_bracket
from ._validation import (
    BracketError,
    ConsistencyError,
    CounterexampleError,
    DomainError,
    check_positive_int,
)
from .bessel import XI, tail_bound
from .bessel import _j as _bessel_j
from .series import SumKind, partial_sums, sine_sum

M_MAX_LIMIT = 64

__all__ = [
    "M_MAX_LIMIT",
    "CertificateStage",
    "PositivityCertificate",
    "RootPair",
    "build_certificate",
    "gibbs_constant",
    "lambda_crossing",
    "lowest_curve",
    "solve_roots",
    "verify_lemma1",
    "verify_lemma2_bound",
    "verify_lemma3",
]


def gibbs_constant() -> float:
    """``Si(pi)``, the limiting height of the first maximum of ``s_n``.

    Summed from ``Si(x) = sum_k (-1)**k x**(2k+1) / ((2k+1) (2k+1)!)``.
    """
    x = math.pi
    terms = []
    power_over_fact = x  # x**(2k+1) / (2k+1)!
    k = 0
    while abs(power_over_fact) > 1e-20:
        terms.append(power_over_fact / (2 * k + 1))
        k += 1
        power_over_fact *= -x * x / ((2 * k) * (2 * k + 1))
    return math.fsum(terms)


def lambda_crossing(step: float = math.pi * 1e-4) -> float:
    """First crossing of ``s_2`` and ``s_9`` to the right of 0, as a fraction of pi.

    The crossing is located by a sign scan with ``step`` and refined by
    bisection to full precision.
    """

    def diff(x):
        return sine_sum(2, x) - sine_sum(9, x)

    xs = np.arange(1, int(math.pi / 3 / step) + 1) * step
    values = diff(xs)
    changes = np.nonzero(np.sign(values[:-1]) != np.sign(values[1:]))[0]
    if changes.size == 0:
        raise ConsistencyError("s_2 - s_9 has no sign change in (0, pi/3)")
    i = changes[0]
    lo, hi = bisect_bracket(diff, float(xs[i]), float(xs[i + 1]))
    return 0.5 * (lo + hi) / math.pi


def lowest_curve(x):
    """``F_0(2; x) = J_1(1) sin x (1 + cos x)``."""
    return _bessel_j(1) * np.sin(x) * (1.0 + np.cos(x))


def _lowest_curve_hat(x_hat):
    # F_0(2; pi - x_hat) without forming pi - x_hat; 1 - cos = 2 sin^2(h/2)
    return _bessel_j(1) * np.sin(x_hat) * 2.0 * np.sin(0.5 * x_hat) ** 2


@dataclass(frozen=True)
class RootPair:
    """Roots of ``F_0(2; x) = B_m`` near 0 and near pi.

    ``x_plus_hat = pi - x_plus`` is kept separately because ``x_plus`` rounds
    to pi long before ``x_plus_hat`` underflows.
    """

    m: int
    bound: float
    x_minus: float
    x_plus_hat: float
    residual_minus: float
    residual_plus: float
    bracket_minus: tuple[float, float]
    bracket_plus_hat: tuple[float, float]

    @property
    def x_plus(self) -> float:
        return math.pi - self.x_plus_hat

    @property
    def x_minus_over_pi(self) -> float:
        return self.x_minus / math.pi

    @property
    def x_plus_over_pi(self) -> float:
        return 1.0 - self.x_plus_hat / math.pi


def solve_roots(m: int) -> RootPair:
    """Bisect ``J_1(1) sin x (1 + cos x) = B_m`` on brackets around its asymptotic roots.

    Near 0 the root is close to ``B_m / (2 J_1(1))``; near pi the distance
    ``pi - x`` is close to ``(2 B_m / J_1(1))**(1/3)``. Each bracket spans a
    factor of 10 either side of that estimate (capped at pi/3) and is shrunk
    until no double lies strictly inside.
    """
    m = check_positive_int(m, "m", upper=M_MAX_LIMIT)
    b = tail_bound(m).b
    j1 = _bessel_j(1)

    x_est = b / (2.0 * j1)
    lo, hi = bisect_bracket(
        lambda x: float(lowest_curve(x)) - b, x_est / 10.0, min(10.0 * x_est, math.pi / 3)
    )
    x_minus = hi if abs(lowest_curve(hi) - b) < abs(lowest_curve(lo) - b) else lo

    hat_est = (2.0 * b / j1) ** (1.0 / 3.0)
    hlo, hhi = bisect_bracket(
        lambda h: float(_lowest_curve_hat(h)) - b, hat_est / 10.0, min(10.0 * hat_est, math.pi / 3)
    )
    x_hat = hhi if abs(_lowest_curve_hat(hhi) - b) < abs(_lowest_curve_hat(hlo) - b) else hlo

    return RootPair(
        m=m,
        bound=b,
        x_minus=x_minus,
        x_plus_hat=x_hat,
        residual_minus=abs(float(lowest_curve(x_minus)) - b),
        residual_plus=abs(float(_lowest_curve_hat(x_hat)) - b),
        bracket_minus=(lo, hi),
        bracket_plus_hat=(hlo, hhi),
    )


def verify_lemma1(m: int) -> bool:
    """Check ``B_{m-1} < H_m/(2m+1)`` and ``J_1(1) sin(pi/(2m+1)) > 2 B_{m-1}``."""
    m = check_positive_int(m, "m")
    if m < 2:
        raise DomainError(f"the tail-bound check applies to m >= 2, got {m}")
    prev = tail_bound(m - 1).b
    h = tail_bound(m).h
    first = prev < h / (2 * m + 1)
    second = _bessel_j(1) * math.sin(math.pi / (2 * m + 1)) > 2.0 * prev
    return bool(first and second)


def verify_lemma3(m: int, current: RootPair, previous: RootPair) -> bool:
    """Check ``x_m^- < x_{m-1}^- < pi/(2m+1)`` and ``2m pi/(2m+1) < x_{m-1}^+ < x_m^+``.

    The right-hand chain is compared through the distances to pi.
    """
    m = check_positive_int(m, "m")
    if m < 2:
        raise DomainError(f"the root-ordering check applies to m >= 2, got {m}")
    if current.m != m or previous.m != m - 1:
        raise ValueError(
            f"expected root pairs for m={m} and m={m - 1}, got {current.m} and {previous.m}"
        )
    edge = math.pi / (2 * m + 1)
    left = current.x_minus < previous.x_minus < edge
    right = current.x_plus_hat < previous.x_plus_hat < edge
    return bool(left and right)


def verify_lemma2_bound(n_max: int = 100, points: int = 2000) -> float:
    """Margin ``sqrt(3)/4 J_1(1) - XI J_3(1)`` used for ``F_1`` on the middle third.

    Also scans ``F_1(n; x) = J_1(1) s_n(x) + J_3(1) s_n(3x)`` for
    ``2 <= n <= n_max`` on ``points`` interior grid points of ``(0, pi)`` and
    raises :class:`CounterexampleError` at the first non-positive value.
    """
    margin = math.sqrt(3.0) / 4.0 * _bessel_j(1) - XI * _bessel_j(3)
    xs = np.linspace(0.0, math.pi, points + 2)[1:-1]
    s1 = partial_sums(SumKind.SINE_BASIC, n_max, xs)
    s3 = partial_sums(SumKind.SINE_BASIC, n_max, xs, scale=3)
    f1 = _bessel_j(1) * s1 + _bessel_j(3) * s3
    f1 = f1[:, 1:]  # n >= 2
    if np.any(f1 <= 0.0):
        i, j = np.unravel_index(np.argmin(f1), f1.shape)
        raise CounterexampleError(
            "F_1(n; x) <= 0 on the grid",
            n=int(j) + 2,
            x=float(xs[i]),
            value=float(f1[i, j]),
        )
    return margin


@dataclass(frozen=True)
class CertificateStage:
    """One step of the chain.

    For ``m = 1`` the tail-bound check does not apply (``lemma1_ok`` is vacuously true),
    ``lemma3_ok`` records that both roots lie in ``(0, pi*lambda) U (2pi/3, pi)``
    and there is no previous stage to overlap.
    """

    m: int
    roots: RootPair
    lemma1_ok: bool
    lemma3_ok: bool
    overlap_ok: bool

    @property
    def ok(self) -> bool:
        return self.lemma1_ok and self.lemma3_ok and self.overlap_ok

    def record(self) -> dict:
        return {
            "m": self.m,
            "B_m": float(f"{self.roots.bound:.10g}"),
            "x_minus_over_pi": float(f"{self.roots.x_minus_over_pi:.10g}"),
            "x_plus_over_pi": float(f"{self.roots.x_plus_over_pi:.10g}"),
            "lemma1_ok": self.lemma1_ok,
            "lemma3_ok": self.lemma3_ok,
            "overlap_ok": self.overlap_ok,
        }


@dataclass(frozen=True)
class PositivityCertificate:
    stages: tuple[CertificateStage, ...]
    all_verified: bool
    failed_stage: int | None = None
    lambda_fraction: float = field(default=float("nan"))

    @property
    def final_interval(self) -> tuple[float, float]:
        last = self.stages[-1].roots
        return last.x_minus, last.x_plus

    def report(self) -> dict:
        return {
            "all_verified": self.all_verified,
            "failed_stage": self.failed_stage,
            "stages": [stage.record() for stage in self.stages],
        }


def build_certificate(m_max: int) -> PositivityCertificate:
    """Run stages ``m = 1 .. m_max`` and collect their checks.

    A failing stage does not raise: the certificate comes back with
    ``all_verified = False`` and ``failed_stage`` set to the first bad ``m``.
    """
    m_max = check_positive_int(m_max, "m_max", upper=M_MAX_LIMIT)
    lam = lambda_crossing()
    stages: list[CertificateStage] = []
    failed = None
    previous: RootPair | None = None
    for m in range(1, m_max + 1):
        try:
            roots = solve_roots(m)
        except BracketError:
            failed = m
            break
        if previous is None:
            in_region = roots.x_minus < math.pi * lam and roots.x_plus_hat < math.pi / 3
            stage = CertificateStage(m, roots, True, bool(in_region), True)
        else:
            overlap = roots.x_minus < previous.x_minus and roots.x_plus_hat < previous.x_plus_hat
            stage = CertificateStage(
                m,
                roots,
                verify_lemma1(m),
                verify_lemma3(m, roots, previous),
                bool(overlap),
            )
        stages.append(stage)
        if failed is None and not stage.ok:
            failed = m
        previous = roots
    all_verified = failed is None and len(stages) == m_max
    return PositivityCertificate(
        stages=tuple(stages), all_verified=all_verified, failed_stage=failed, lambda_fraction=lam
    )
