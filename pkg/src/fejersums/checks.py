"""Grid and sweep checks of the structural properties, run by ``fejersums selftest``."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import bessel, certify, series, spikes
from .series import SpecialPoint, SumKind

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def rounding_slack(n: int) -> float:
    """Absolute allowance for comparing two compensated O(sigma_n) evaluations."""
    return 16.0 * EPS * max(1.0, math.log(n) + 1.0)


def _interior(points: int, lo: float = 0.0, hi: float = math.pi) -> np.ndarray:
    return np.linspace(lo, hi, points + 2)[1:-1]


# -- sums -----------------------------------------------------------------------


def periodicity(n_max: int = 50, samples: int = 100, seed: int = 0) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    xs = rng.uniform(-math.pi, math.pi, samples)
    worst = 0.0
    for n in range(1, n_max + 1):
        for f in (series.sine_sum, series.cosine_sum):
            worst = max(worst, float(np.max(np.abs(f(n, xs + 2 * math.pi) - f(n, xs)))))
    return worst <= 1e-12, f"max |f(x+2pi) - f(x)| = {worst:.3g}"


def cosine_symmetry(n_max: int = 50, samples: int = 100, seed: int = 1) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    xs = rng.uniform(0.0, 2 * math.pi, samples)
    worst = max(
        float(np.max(np.abs(series.cosine_sum(n, xs) - series.cosine_sum(n, 2 * math.pi - xs))))
        for n in range(1, n_max + 1)
    )
    return worst <= 1e-12, f"max |c_n(x) - c_n(2pi-x)| = {worst:.3g}"


def fejer_jackson(n_max: int = 200, points: int = 2000) -> tuple[bool, str]:
    s = series.partial_sums(SumKind.SINE_BASIC, n_max, _interior(points))
    low = float(s.min())
    return low > 0.0, f"min s_n = {low:.3g}"


def cosine_lower_bound(n_max: int = 200, points: int = 2000) -> tuple[bool, str]:
    c = series.partial_sums(SumKind.COSINE_BASIC, n_max, _interior(points))
    low = float(c.min())
    return low > -1.0, f"min c_n = {low:.6f}"


def closed_forms() -> tuple[bool, str]:
    worst = 0.0
    for n in (2, 3, 10, 11, 100, 101, 999, 1000):
        for kind, point in (
            (SumKind.COSINE_BASIC, SpecialPoint.PI),
            (SumKind.COSINE_BASIC, SpecialPoint.TWO_PI_OVER_3),
            (SumKind.COS_COS, SpecialPoint.PI_OVER_2),
            (SumKind.COS_SIN, SpecialPoint.PI_OVER_2),
            (SumKind.SIN_COS, SpecialPoint.PI),
            (SumKind.SIN_COS, SpecialPoint.TWO_PI_OVER_3),
        ):
            closed = series.special_value(kind, n, point)
            direct = series.evaluate(kind, n, point.radians)
            worst = max(worst, abs(closed - direct) / abs(direct))
    return worst <= 1e-10, f"max relative gap = {worst:.3g}"


def harmonic_asymptotics(n_values=(10, 11, 50, 100, 1000, 10**4, 10**5)) -> tuple[bool, str]:
    bad = [
        n
        for n in n_values
        if abs(series.harmonic(n).sigma - math.log(n) - series.EULER_GAMMA - 0.5 / n) > 1.0 / n**2
    ]
    return not bad, f"violations at n = {bad}" if bad else "ok"


def middle_third_minimum(n_max: int = 200, points: int = 4000) -> tuple[bool, str]:
    xs = np.linspace(math.pi / 3, 2 * math.pi / 3, points)
    s = series.partial_sums(SumKind.SINE_BASIC, n_max, xs)[:, 1:]
    low = float(s.min())
    return low >= math.sqrt(3) / 4 - 1e-9, f"min = {low:.12f}, sqrt(3)/4 = {math.sqrt(3) / 4:.12f}"


def lowest_curve(n_max: int = 200, points: int = 2000) -> tuple[bool, str]:
    lam = 0.207685
    worst = -math.inf
    for lo, hi in ((0.0, lam * math.pi), (2 * math.pi / 3, math.pi)):
        s = series.partial_sums(SumKind.SINE_BASIC, n_max, _interior(points, lo, hi))
        worst = max(worst, float(np.max(s[:, [1]] - s[:, 2:])))
    return worst <= 1e-12, f"max s_2 - s_n = {worst:.3g}"


# -- Bessel expansion ---------------------------------------------------------


def bessel_bounds() -> tuple[bool, str]:
    values = [bessel.bessel_unit(v) for v in range(1, 42, 2)]
    below = all(0.0 < c.value < c.upper_bound for c in values)
    decreasing = all(a.value > b.value for a, b in zip(values, values[1:]))
    return below and decreasing, f"bound={below} decreasing={decreasing}"


def tail_bounds() -> tuple[bool, str]:
    ok = True
    for m in range(21):
        head = [2.0 ** (-2 * k) / math.factorial(2 * k + 1) for k in range(m + 1)]
        total = math.fsum(head + [bessel.tail_bound(m).b])
        ok &= abs(total - 2 * math.sinh(0.5)) <= 1e-15 * 2 * math.sinh(0.5)
        ok &= bessel.tail_bound(m).b > bessel.tail_bound(m + 1).b
    for m in range(5, 16):
        scaled = bessel.tail_bound(m).b * math.factorial(2 * m + 3) * 2.0 ** (2 * m + 2)
        ok &= 1.0 <= scaled <= 1.0 + 10.0 / m**2
    return bool(ok), "identity, monotonicity and asymptotics"


def sin_reconstruction(samples: int = 200, seed: int = 2) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    worst = -math.inf
    for _ in range(samples):
        n = int(rng.integers(1, 1001))
        x = float(rng.uniform(0.0, math.pi))
        direct = series.modified_sum(SumKind.SIN_SIN, n, x)
        for m in range(7):
            gap = abs(direct - 2 * bessel.partial_expansion_sin(m, n, x).f_value)
            worst = max(worst, gap - 2 * bessel.tail_bound(m).b - rounding_slack(n))
    return worst < 0.0, f"max excess over 2B_m = {worst:.3g}"


def cos_reconstruction(samples: int = 50, seed: int = 3, m: int = 10) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    worst = -math.inf
    for _ in range(samples):
        n = int(rng.integers(1, 1001))
        x = float(rng.uniform(0.0, math.pi))
        split = bessel.partial_expansion_cos(m, n, x)
        gap = abs(series.modified_sum(SumKind.SIN_COS, n, x) - 2 * split.head)
        worst = max(worst, gap - 2 * split.tail_abs_bound - rounding_slack(n))
    return worst < 0.0, f"max excess over tail bound = {worst:.3g}"


# -- certificate -------------------------------------------------------------------


def root_sequences(m_max: int = 20) -> tuple[bool, str]:
    roots = [certify.solve_roots(m) for m in range(1, m_max + 1)]
    ordered = all(
        b.x_minus < a.x_minus and b.x_plus_hat < a.x_plus_hat for a, b in zip(roots, roots[1:])
    )
    residual = max(max(r.residual_minus, r.residual_plus) for r in roots)
    j1 = bessel.bessel_unit(1).value
    asym = all(
        0.999 <= r.x_minus * 2 * j1 / r.bound <= 1.001
        and 0.99 <= r.x_plus_hat**3 * j1 / (2 * r.bound) <= 1.01
        for r in roots
        if r.m >= 8
    )
    ok = ordered and residual <= 1e-12 and asym
    return ok, f"ordered={ordered} max residual={residual:.3g} asymptotics={asym}"


def lemma_sweeps() -> tuple[bool, str]:
    bad1 = [m for m in range(2, 41) if not certify.verify_lemma1(m)]
    roots = {m: certify.solve_roots(m) for m in range(1, 21)}
    bad3 = [m for m in range(2, 21) if not certify.verify_lemma3(m, roots[m], roots[m - 1])]
    return not bad1 and not bad3, f"lemma1 failures {bad1}, lemma3 failures {bad3}"


def certified_interval_positive(n_max: int = 50, points: int = 2000) -> tuple[bool, str]:
    roots = certify.solve_roots(3)
    xs = np.linspace(roots.x_minus, roots.x_plus, points)
    s = series.partial_sums(SumKind.SIN_SIN, n_max, xs)[:, 1:]
    low = float(s.min())
    return low > 0.0, f"min S_n^(4) = {low:.3g}"


def lemma2_grid() -> tuple[bool, str]:
    margin = certify.verify_lemma2_bound()
    return margin > 0.0, f"margin = {margin:.6f}"


# -- spikes and jump ------------------------------------------------------------


def spike_sum_structure(n_max: int = 200, points: int = 2001) -> tuple[bool, str]:
    xs = np.linspace(0.0, math.pi, points)
    sigma = np.cumsum(1.0 / np.arange(1, n_max + 1))
    s1 = series.partial_sums(SumKind.COS_COS, n_max, xs)
    s2 = series.partial_sums(SumKind.COS_SIN, n_max, xs)
    sym = max(float(np.max(np.abs(s - s[::-1]))) for s in (s1, s2))
    lower1 = bool(np.all(s1 >= sigma * math.cos(1.0) - 1e-12))
    # n = 1 attains sigma_1 cos 1 at pi/2, so the strict bound starts at n = 2
    lower2 = bool(np.all(s2[:, 1:] > sigma[1:] * math.cos(1.0)))
    return sym <= 1e-12 and lower1 and lower2, f"symmetry gap {sym:.3g}, lower bounds {lower1}/{lower2}"


def jump_behaviour() -> tuple[bool, str]:
    jumps = [spikes.measure_jump(n).jump for n in (10**2, 10**3, 10**4, 10**5)]
    prediction = spikes.jump_prediction()
    ok = all(j > 0 for j in jumps) and round(prediction, 4) == 0.1449
    return ok, f"jumps {[round(j, 5) for j in jumps]}, prediction {prediction:.6f}"


def negative_spike_growth() -> tuple[bool, str]:
    ns = [1000 * 2**j for j in range(11)]
    values = [series.modified_sum(SumKind.SIN_COS, n, 2 * math.pi / 3) for n in ns]
    ok = all(b < a for a, b in zip(values, values[1:]))
    return ok, f"S^(3)(2pi/3): {values[0]:.5f} -> {values[-1]:.5f}"


SUITES: dict[str, Callable[[], tuple[bool, str]]] = {
    "periodicity": periodicity,
    "cosine symmetry": cosine_symmetry,
    "fejer-jackson positivity": fejer_jackson,
    "cosine lower bound": cosine_lower_bound,
    "closed forms": closed_forms,
    "harmonic asymptotics": harmonic_asymptotics,
    "middle-third minimum": middle_third_minimum,
    "lowest curve": lowest_curve,
    "bessel bounds": bessel_bounds,
    "tail bounds": tail_bounds,
    "S4 reconstruction": sin_reconstruction,
    "S3 reconstruction": cos_reconstruction,
    "root sequences": root_sequences,
    "lemma sweeps": lemma_sweeps,
    "certified interval positivity": certified_interval_positive,
    "middle-third head positivity": lemma2_grid,
    "S1/S2 structure": spike_sum_structure,
    "jump": jump_behaviour,
    "negative spike growth": negative_spike_growth,
}


def run_all() -> Iterator[CheckResult]:
    for name, check in SUITES.items():
        start = time.perf_counter()
        try:
            passed, detail = check()
        except Exception as exc:  # a crash is a failed check, not a failed run
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        yield CheckResult(name, bool(passed), detail, time.perf_counter() - start)
