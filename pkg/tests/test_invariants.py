"""Tests for signed curvatures, the poristic range, neighbour bends and moments."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from steiner_chains.core.geometry import Gauge, construct_chain, make_gauge
from steiner_chains.core.invariants import (
    ERRATA,
    axial_bends4,
    axial_bends6,
    lateral_bends4,
    lateral_quadratic,
    moments3,
    moments4,
    moments6,
    moments_from_bends,
    moments_numeric,
    neighbor_curvatures,
    poristic_range,
    signed_curvatures,
    YiuQuadratic,
    yiu_quadratic,
)
from steiner_chains.utils.validators import InputError, NumericError, RangeError

from .conftest import SQRT2, gauges, phases


class TestSignedCurvatures:
    def test_example(self, gauge_6_1):
        k = signed_curvatures(gauge_6_1)
        assert (k.a, k.A) == pytest.approx((1.0, -1.0 / 6.0))

    def test_concentric(self, concentric4):
        k = signed_curvatures(concentric4)
        assert k.a == pytest.approx(1.0)
        assert k.A == pytest.approx(-(3.0 - 2.0 * SQRT2), rel=1e-12)


class TestPoristicRange:
    def test_examples(self, gauge_6_1, gauge_14_1):
        rng = poristic_range(gauge_6_1)
        assert (rng.r_lo, rng.r_hi, rng.b_lo, rng.b_hi) == pytest.approx((2.0, 3.0, 1 / 3, 1 / 2))
        rng = poristic_range(gauge_14_1)
        assert (rng.r_lo, rng.r_hi, rng.b_lo, rng.b_hi) == pytest.approx((6.0, 7.0, 1 / 7, 1 / 6))

    def test_concentric_range_collapses(self, concentric4):
        rng = poristic_range(concentric4)
        assert rng.r_lo == pytest.approx(1.0 + SQRT2)
        assert rng.r_hi == pytest.approx(rng.r_lo, rel=1e-12)

    @given(gauges())
    def test_range_is_attained_over_a_turn(self, g):
        rng = poristic_range(g)
        bends = [construct_chain(g, phase).circles[0].bend for phase in np.linspace(0.0, 2.0 * math.pi, 721)]
        assert min(bends) == pytest.approx(rng.b_lo, rel=1e-9)
        assert max(bends) == pytest.approx(rng.b_hi, rel=1e-9)

    @given(gauges(), phases)
    def test_constructed_radii_stay_in_range(self, g, phase):
        rng = poristic_range(g)
        for radius in construct_chain(g, phase).radii:
            assert rng.contains_radius(radius, 1e-9)


class TestNeighbors:
    def test_yiu_coefficients(self, gauge_6_1):
        q = yiu_quadratic(gauge_6_1, 3.0)
        assert (q.alpha, q.beta, q.gamma) == pytest.approx((1296.0, -1080.0, 225.0), rel=1e-12)
        q = yiu_quadratic(gauge_6_1, 2.0)
        assert (q.alpha, q.beta, q.gamma) == pytest.approx((576.0, -480.0, 100.0), rel=1e-12)

    @pytest.mark.parametrize("u", [2.0, 3.0])
    def test_double_root_at_extremes(self, gauge_6_1, u):
        v_minus, v_plus = neighbor_curvatures(gauge_6_1, u)
        assert v_minus == v_plus
        assert v_minus == pytest.approx(5 / 12, rel=1e-12)

    def test_discriminant_band_is_two_sided(self):
        q = YiuQuadratic(1.0, -2.0, 1.0 - 1e-12)
        assert q.roots(1e-9) == (1.0, 1.0)
        low, high = q.roots(1e-15)
        assert low < 1.0 < high
        assert (low, high) == pytest.approx((1.0 - 1e-6, 1.0 + 1e-6), rel=1e-9)

    def test_negative_discriminant_beyond_band(self):
        with pytest.raises(NumericError):
            YiuQuadratic(1.0, -2.0, 1.1).roots(1e-9)

    def test_discriminant_tolerance_is_separate(self, gauge_6_1):
        u = 2.0 * (1.0 + 5e-8)
        v_minus, v_plus = neighbor_curvatures(gauge_6_1, u, discriminant_tol=1e-9)
        assert v_minus < v_plus
        snapped = neighbor_curvatures(gauge_6_1, u, discriminant_tol=1e-3)
        assert snapped[0] == snapped[1] == pytest.approx((v_minus + v_plus) / 2, rel=1e-12)

    def test_lateral_neighbors(self, gauge_6_1):
        low, high = sorted(lateral_bends4(gauge_6_1)[:2])
        v_minus, v_plus = neighbor_curvatures(gauge_6_1, 1.0 / high)
        assert v_minus == pytest.approx(low, rel=1e-9)
        assert v_plus == pytest.approx(high, rel=1e-9)

    def test_outside_range(self, gauge_6_1):
        with pytest.raises(RangeError):
            yiu_quadratic(gauge_6_1, 1.5)

    @given(gauges(), phases)
    def test_root_sum_matches_constructed_neighbors(self, g, phase):
        chain = construct_chain(g, phase)
        bends = chain.bends
        quadratic = yiu_quadratic(g, chain.radii[0], 1e-9)
        assert quadratic.root_sum == pytest.approx(bends[1] + bends[-1], rel=1e-7)

    @given(gauges(), phases)
    def test_every_neighbor_is_a_root(self, g, phase):
        chain = construct_chain(g, phase)
        bends = chain.bends
        for i, u in enumerate(chain.radii):
            q = yiu_quadratic(g, u, 1e-9)
            for x in (bends[i - 1], bends[(i + 1) % g.n]):
                size = q.alpha * x * x + abs(q.beta) * x + q.gamma
                assert abs(q.evaluate(x)) <= 1e-8 * size


class TestSymmetricChains:
    def test_axial_bends4(self, gauge_6_1):
        bends = axial_bends4(gauge_6_1)
        assert bends == pytest.approx((1 / 2, 5 / 12, 1 / 3, 5 / 12))
        assert bends[1] == bends[3]

    def test_concentric_axial_and_lateral_agree(self, concentric4):
        b = 1.0 / (1.0 + SQRT2)
        assert axial_bends4(concentric4) == pytest.approx((b,) * 4, rel=1e-9)
        assert lateral_bends4(concentric4) == pytest.approx(axial_bends4(concentric4), rel=1e-9)

    @given(gauges(n_values=(4,)))
    def test_lateral_sum_is_first_moment(self, g):
        k = signed_curvatures(g)
        assert sum(lateral_bends4(g)) == pytest.approx(2.0 * (k.A + k.a), rel=1e-12)

    def test_lateral_quadratic_roots(self, gauge_6_1):
        c0, c1, c2 = lateral_quadratic(gauge_6_1)
        for x in set(lateral_bends4(gauge_6_1)):
            assert abs(c0 + c1 * x + c2 * x * x) < 1e-14

    def test_axial_chain_matches_construction(self, gauge_6_1):
        radii = sorted(construct_chain(gauge_6_1, 0.0).radii)
        assert sorted(1.0 / b for b in axial_bends4(gauge_6_1)) == pytest.approx(radii, rel=1e-9)

    def test_requires_matching_n(self, gauge_14_1):
        with pytest.raises(InputError):
            axial_bends4(gauge_14_1)


class TestMoments:
    def test_moments3(self, gauge_14_1):
        assert tuple(moments3(gauge_14_1)) == pytest.approx((13 / 28, 113 / 1568), rel=1e-12)

    def test_moments3_concentric(self):
        g = make_gauge(7.0 + 4.0 * math.sqrt(3.0), 1.0, 3)
        b = 2.0 / (g.R - g.r)
        assert moments3(g)[0] == pytest.approx(3.0 * b, rel=1e-9)

    def test_moments4_exact(self, gauge_6_1):
        assert tuple(moments4(gauge_6_1)) == pytest.approx((5 / 3, 17 / 24, 265 / 864), rel=1e-12)

    def test_moments4_near_rounded_values(self, gauge_6_1):
        assert tuple(moments4(gauge_6_1)) == pytest.approx((1.6662, 0.7079, 0.3065), abs=2e-3)

    def test_moments4_concentric(self, concentric4):
        b = 1.0 / (1.0 + SQRT2)
        assert tuple(moments4(concentric4)) == pytest.approx((4 * b, 4 * b ** 2, 4 * b ** 3), rel=1e-9)

    @given(phases)
    def test_numeric_matches_closed_forms(self, phase):
        g4 = Gauge(6.0, 1.0, 1.0, 4)
        g3 = Gauge(14.0, 1.0, 1.0, 3)
        assert tuple(moments_numeric(g4, 3, phase)) == pytest.approx(tuple(moments4(g4)), rel=1e-9)
        assert tuple(moments_numeric(g3, 2, phase)) == pytest.approx(tuple(moments3(g3)), rel=1e-9)

    @given(gauges(n_values=(3, 4, 6)), st.lists(phases, min_size=3, max_size=6))
    def test_first_moments_are_invariant(self, g, angles):
        reference = moments_numeric(g, g.n - 1, 0.0)
        for phase in angles:
            assert tuple(moments_numeric(g, g.n - 1, phase)) == pytest.approx(tuple(reference), rel=1e-8)

    def test_nth_moment_is_not_invariant(self, gauge_6_1):
        assert not moments_numeric(gauge_6_1, 4).is_invariant
        axial = moments_numeric(gauge_6_1, 4, 0.0)[3]
        lateral = moments_numeric(gauge_6_1, 4, math.pi / 4)[3]
        assert abs(axial - lateral) > 1e-6

    def test_moments_from_bends(self):
        assert tuple(moments_from_bends((1.0, 1.0, 1.0, 1.0), 3)) == (4.0, 4.0, 4.0)
        with pytest.raises(InputError):
            moments_from_bends((1.0, -1.0), 2)
        with pytest.raises(InputError):
            moments_from_bends((1.0, 2.0), 0)


class TestSixChains:
    def test_extreme_bends(self, gauge_6_axial):
        bends = axial_bends6(gauge_6_axial)
        root = math.sqrt(11.0 / 3.0)
        assert bends[0] == pytest.approx(2.0 / (3.0 - root), rel=1e-12)
        assert bends[3] == pytest.approx(2.0 / (3.0 + root), rel=1e-12)
        assert bends[1] == bends[5] and bends[2] == bends[4]

    @given(gauges(n_values=(6,)), phases)
    def test_axial_bends_reproduce_moments(self, g, phase):
        expected = moments_numeric(g, 5, phase)
        assert tuple(moments6(g)) == pytest.approx(tuple(expected), rel=1e-8)

    def test_concentric_six_chain(self):
        g = make_gauge(3.0, 1.0, 6)
        assert axial_bends6(g) == pytest.approx((1.0,) * 6, rel=1e-9)


def test_errata_are_documented():
    assert len(ERRATA) >= 3
    assert all(isinstance(entry, str) and entry for entry in ERRATA)
