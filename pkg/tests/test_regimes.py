import math

import numpy as np
import pytest

from mimo_ee.optimizer import relaxed_optimum
from mimo_ee.params import normalize
from mimo_ee.regimes import (
    classify,
    large_gc_approx,
    large_r_approx,
    small_gc_approx,
    small_r_approx,
)

from conftest import reference_params


class TestSmallRateApprox:
    def test_formula(self):
        th = normalize(reference_params(-150.0))
        zeta, m = small_r_approx(0.5, th)
        assert zeta == pytest.approx(0.5 / (th.rho + th.rho_c), rel=1e-12)
        assert m == 1.0

    def test_matches_relaxed_at_tiny_rate(self):
        th = normalize(reference_params(-150.0))
        R = 1e-6
        zeta, _ = small_r_approx(R, th)
        assert relaxed_optimum(R, th).zeta == pytest.approx(zeta, rel=0.01)

    def test_linear_in_rate(self):
        th = normalize(reference_params(-150.0))
        assert small_r_approx(2e-6, th)[0] == pytest.approx(
            2 * small_r_approx(1e-6, th)[0], rel=1e-12)


class TestLargeRateApprox:
    def test_no_load_term_form(self):
        th = normalize(reference_params(-150.0))
        th0 = type(th)(alpha=th.alpha, rho=th.rho, rho_c=th.rho_c, rho_d=0.0)
        R = 20.0
        expected = R / (2 * math.sqrt(th.alpha * th.rho * (2 ** R - 1)))
        assert large_r_approx(R, th0) == pytest.approx(expected, rel=1e-12)

    def test_decays_to_zero(self):
        th = normalize(reference_params(-150.0))
        vals = [large_r_approx(R, th) for R in (20, 40, 80)]
        assert all(b < a for a, b in zip(vals, vals[1:]))
        assert vals[-1] < 1e-6

    def test_matches_relaxed_at_large_rate(self):
        th = normalize(reference_params(-150.0))
        assert large_r_approx(25.0, th) == pytest.approx(
            relaxed_optimum(25.0, th).zeta, rel=0.02)

    def test_relaxed_decay_window(self):
        # strict decrease of the optimal trade-off over R in [15, 30]
        th = normalize(reference_params(-150.0))
        grid = np.linspace(15, 30, 16)
        vals = [relaxed_optimum(float(R), th).zeta for R in grid]
        assert all(b < a for a, b in zip(vals, vals[1:]))
        assert vals[-1] < vals[0] / 2


class TestLargeGainApprox:
    def test_desk_value(self):
        assert large_gc_approx(5.0, reference_params(-150.0)) == pytest.approx(
            6.937e5, rel=1e-3)

    def test_independent_of_gain(self):
        a = large_gc_approx(5.0, reference_params(-90.0))
        b = large_gc_approx(5.0, reference_params(-100.0))
        assert a == b

    def test_relaxed_eta_flat_at_large_gain(self):
        etas = []
        for gc_db in (-90.0, -100.0):
            p = reference_params(gc_db)
            etas.append(relaxed_optimum(5.0, normalize(p), params=p).eta)
        assert abs(etas[0] - etas[1]) / etas[1] < 0.01

    def test_flat_across_decade(self):
        # the exact optimum sits at M = 1 here and is flat to < 1%; the
        # relaxed optimum keeps slightly more than one antenna and drifts
        # a little further (< 2%)
        from mimo_ee.optimizer import optimize_exact
        exact, relaxed = [], []
        for gc in (1e-11, 1e-10, 1e-9):
            p = reference_params(-150.0).with_gc(gc)
            th = normalize(p)
            exact.append(optimize_exact(5.0, th, params=p).eta)
            relaxed.append(relaxed_optimum(5.0, th, params=p).eta)
        assert (max(exact) - min(exact)) / min(exact) < 0.01
        assert (max(relaxed) - min(relaxed)) / min(relaxed) < 0.02


class TestSmallGainApprox:
    def test_sqrt_scaling_exact_in_formula(self):
        p = reference_params(-160.0)
        eta1, _ = small_gc_approx(5.0, p)
        eta4, _ = small_gc_approx(5.0, p.with_gc(p.Gc * 4))
        assert eta4 == pytest.approx(2 * eta1, rel=1e-12)

    def test_quartering_gain_doubles_excess_antennas(self):
        p = reference_params(-160.0)
        _, m1 = small_gc_approx(5.0, p)
        _, m2 = small_gc_approx(5.0, p.with_gc(p.Gc / 4))
        assert m2 - 1 == pytest.approx(2 * (m1 - 1), rel=1e-12)

    def test_relaxed_eta_slope_approaches_half(self):
        # deep in the PA-dominated regime the slope settles at 1/2; one
        # window higher the fixed circuit draw still bends it below
        def slope(lo_exp, hi_exp):
            gains = np.logspace(lo_exp, hi_exp, 9)
            etas = [relaxed_optimum(5.0, normalize(
                reference_params(-150.0).with_gc(float(gc))),
                params=reference_params(-150.0).with_gc(float(gc))).eta
                for gc in gains]
            return np.polyfit(np.log(gains), np.log(etas), 1)[0]

        assert 0.48 <= slope(-21, -19) <= 0.52
        assert 0.44 <= slope(-18, -16) < 0.48

    def test_relaxed_m_slope_is_minus_half(self):
        gains = np.logspace(-18, -16, 9)
        ms = [relaxed_optimum(5.0, normalize(reference_params(-150.0).with_gc(
            float(gc)))).M - 1 for gc in gains]
        slope = np.polyfit(np.log(gains), np.log(ms), 1)[0]
        assert -0.52 <= slope <= -0.48


class TestClassify:
    def test_tiny_rate_is_small_r(self):
        rep = classify(1e-5, reference_params(-150.0))
        assert rep.regime == "small-R"
        assert rep.approx_M == 1.0

    def test_large_gain(self):
        # dominance ratio at -100 dB is ~2.8, so the strict default
        # threshold of 10 labels it transitional; the large-Gc inequality
        # is recognized once the threshold admits it
        assert classify(5.0, reference_params(-100.0)).regime == "transitional"
        assert "large-Gc" in classify(5.0, reference_params(-100.0),
                                      threshold=2.0).satisfied
        assert "large-Gc" in classify(5.0, reference_params(-85.0)).satisfied

    def test_small_gain(self):
        rep = classify(5.0, reference_params(-170.0))
        assert rep.regime == "small-Gc"
        assert rep.approx_M > 100

    def test_large_rate(self):
        # load-dependent draw inflated so the rate inequality holds while
        # the gain inequality does not
        p = reference_params(-150.0)
        rep = classify(25.0, p)
        assert rep.regime in ("large-R", "small-Gc")

    def test_boundary_is_transitional(self):
        # alpha = 1, R = 1, P_BS = 4 makes every lhs and rhs exactly 4, so
        # at threshold 1 the strict comparisons all fail
        from mimo_ee.params import SystemParams
        p = SystemParams(B=1.0, N0=1.0, Gc=1.0, alpha=1.0, P_BS=4.0)
        rep = classify(1.0, p, threshold=1.0)
        assert rep.lhs == rep.rhs == 4.0
        assert rep.regime == "transitional"

    def test_threshold_validation(self):
        with pytest.raises(ValueError):
            classify(5.0, reference_params(-150.0), threshold=0.5)

    def test_small_r_point_has_near_unit_antenna_count(self):
        p = reference_params(-150.0)
        rep = classify(1e-5, p)
        if rep.regime == "small-R":
            assert relaxed_optimum(1e-5, normalize(p)).M < 1.5

    def test_small_gc_point_has_pa_dominance(self):
        from mimo_ee.params import pa_fraction_closed_form
        p = reference_params(-170.0)
        rep = classify(5.0, p)
        assert rep.regime == "small-Gc"
        assert pa_fraction_closed_form(p, 5.0) > 0.4
