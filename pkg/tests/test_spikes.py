from __future__ import annotations

import math

import numpy as np
import pytest
import scipy.optimize

from fejersums import (
    DomainError,
    SumKind,
    UnsupportedCombinationError,
    bessel_unit,
    evaluate,
    growth_fit,
    harmonic,
    jump_prediction,
    measure_jump,
    modified_sum,
    spike_height,
    spike_location_small_even,
)
from fejersums.spikes import growth_coefficient

DECADES = [10**3, 10**4, 10**5, 10**6]


def _maximize(kind: SumKind, n: int, lo: float, hi: float) -> tuple[float, float]:
    result = scipy.optimize.minimize_scalar(
        lambda x: -evaluate(kind, n, x), bounds=(lo, hi), method="bounded", options={"xatol": 1e-12}
    )
    return float(result.x), -float(result.fun)


class TestSpikeHeight:
    @pytest.mark.parametrize("kind", [SumKind.COS_COS, SumKind.COS_SIN, SumKind.SIN_COS], ids=lambda k: k.label)
    @pytest.mark.parametrize("n", [1, 2, 17, 1000, 1001])
    def test_closed_form_matches_direct(self, kind, n):
        estimate = spike_height(kind, n)
        assert estimate.predicted == pytest.approx(estimate.measured, rel=1e-10)

    def test_negative_spike_value(self):
        assert spike_height(SumKind.SIN_COS, 4 * 10**5).measured == pytest.approx(-1.011006, abs=5e-6)

    def test_growth_coefficients(self):
        assert spike_height(SumKind.COS_COS, 1000).growth_coefficient == pytest.approx(0.7701512, abs=5e-8)
        sum_j = 2 * sum((-1) ** r * bessel_unit(2 * r + 1).value for r in (1, 4, 7, 10))
        assert growth_coefficient(SumKind.SIN_COS) == pytest.approx(sum_j, rel=1e-14)

    def test_sin_sin_rejected(self):
        with pytest.raises(UnsupportedCombinationError):
            spike_height(SumKind.SIN_SIN, 100)

    @pytest.mark.parametrize("n", [18, 20, 40, 41])
    def test_coscos_global_max_at_half_pi(self, n):
        xs = np.linspace(0.0, math.pi, 4001)
        values = evaluate(SumKind.COS_COS, n, xs)
        assert values.max() <= spike_height(SumKind.COS_COS, n).measured + 1e-12

    @pytest.mark.parametrize("n", [10**3, 10**4, 10**5])
    def test_cossin_spike_below_sigma(self, n):
        assert spike_height(SumKind.COS_SIN, n).measured <= harmonic(n).sigma


class TestSmallEvenLocations:
    @pytest.mark.parametrize("n", list(range(2, 17, 2)))
    def test_matches_numerical_maximizer(self, n):
        left, right = spike_location_small_even(n)
        assert left == pytest.approx(math.pi / 2 - math.pi / (2 * n + 2))
        x_right, _ = _maximize(SumKind.COS_COS, n, math.pi / 2 + 1e-9, math.pi / 2 + 2 * math.pi / (2 * n + 2))
        assert x_right == pytest.approx(right, abs=1e-6)

    def test_n16(self):
        left, right = spike_location_small_even(16)
        assert (left, right) == (math.pi / 2 - math.pi / 34, math.pi / 2 + math.pi / 34)

    @pytest.mark.parametrize("n", [1, 3, 18, 20])
    def test_domain(self, n):
        with pytest.raises(DomainError):
            spike_location_small_even(n)


class TestJump:
    def test_prediction(self):
        assert round(jump_prediction(), 4) == 0.1449
        assert jump_prediction(2.0) == pytest.approx(0.15651, abs=5e-6)
        assert jump_prediction(2.0) > jump_prediction()

    def test_small_n_positive(self):
        assert measure_jump(100).jump > 0

    @pytest.mark.parametrize("n", [1, 99])
    def test_small_n_rejected(self, n):
        with pytest.raises(DomainError):
            measure_jump(n)

    @pytest.mark.slow
    def test_converges_along_schedule(self):
        ns = [10**4, 2 * 10**4, 4 * 10**4, 8 * 10**4]
        gaps = [abs(measure_jump(n).jump - jump_prediction()) for n in ns]
        assert all(b <= a for a, b in zip(gaps, gaps[1:]))

    def test_record_fields(self):
        record = measure_jump(1000).record()
        assert record["jump"] == pytest.approx(record["right_level"] - record["left_level"])
        assert record["n"] == 1000


class TestGrowthFit:
    @pytest.mark.parametrize(
        "kind,location",
        [(SumKind.COS_COS, math.pi / 2), (SumKind.COS_SIN, math.pi / 2), (SumKind.SIN_COS, 2 * math.pi / 3)],
        ids=["CosCos", "CosSin", "SinCos"],
    )
    def test_slopes(self, kind, location):
        slope = growth_fit(kind, location, DECADES)
        assert slope == pytest.approx(growth_coefficient(kind), rel=0.02)

    def test_sincos_against_series_value(self):
        slope = growth_fit(SumKind.SIN_COS, 2 * math.pi / 3, DECADES)
        assert slope == pytest.approx(-0.0391267, rel=0.02)
        assert slope != pytest.approx(-0.0386302, rel=0.005)

    @pytest.mark.parametrize(
        "schedule", [[10, 100, 1000], [10, 100, 50, 1000], [100, 200, 300, 400]], ids=["short", "unsorted", "narrow"]
    )
    def test_bad_schedules(self, schedule):
        with pytest.raises(DomainError):
            growth_fit(SumKind.COS_COS, math.pi / 2, schedule)

    def test_spike_value_grows_like_log(self):
        values = [modified_sum(SumKind.SIN_COS, n, 2 * math.pi / 3) for n in (1000, 2000, 4000, 8000)]
        steps = np.diff(values)
        assert np.allclose(steps, growth_coefficient(SumKind.SIN_COS) * math.log(2), rtol=0.05)
