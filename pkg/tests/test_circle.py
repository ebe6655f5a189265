import math

import numpy as np
import pytest

from fekete import (
    CircleWeight,
    InvalidInputError,
    circle_diameter,
    circle_points,
    log_weighted_vandermonde,
    mobius,
)

TWO_PI = 2.0 * math.pi


class TestCircleWeight:
    @pytest.mark.parametrize("b", [1.0, -1.0])
    def test_charge_on_circle_rejected(self, b):
        with pytest.raises(InvalidInputError):
            CircleWeight(b)

    def test_log_w(self):
        w = CircleWeight(0.5)
        assert w.log_w(0.0) == pytest.approx(-math.log(0.5))
        assert w.log_w(math.pi) == pytest.approx(-math.log(1.5))


class TestMobius:
    def test_values(self):
        assert mobius(0.5, 1.0) == pytest.approx(-1.0)
        assert mobius(0.5, -1.0) == pytest.approx(1.0)
        assert mobius(2.0, 1.0) == pytest.approx(-1.0)
        assert mobius(2.0, -1.0) == pytest.approx(1.0)

    def test_b_zero_is_negative_inverse(self):
        w = np.exp(1j * 0.7)
        assert mobius(0.0, w) == pytest.approx(-1.0 / w)

    def test_pole_rejected(self):
        with pytest.raises(InvalidInputError):
            mobius(0.5, 0.5)

    def test_preserves_modulus_and_involutes(self):
        rng = np.random.default_rng(31)
        for b in (0.0, 0.5, -0.5, 2.0, -2.0, 10.0):
            w = np.exp(1j * rng.uniform(0, TWO_PI, 100))
            img = mobius(b, w)
            assert np.max(np.abs(np.abs(img) - 1.0)) <= 1e-12
            assert np.max(np.abs(mobius(b, img) - w)) <= 1e-12


class TestCirclePoints:
    def test_two_points(self):
        sol = circle_points(0.5, 2, 0.0)
        np.testing.assert_allclose(sol.angles, [0.0, math.pi], atol=1e-14)
        np.testing.assert_allclose(sol.points, [1.0, -1.0], atol=1e-14)

    def test_equilateral_triangle_at_b_zero(self):
        sol = circle_points(0.0, 3, 0.0)
        expected = sorted(np.mod(np.angle([-1.0,
                                           -np.exp(-2j * math.pi / 3),
                                           -np.exp(-4j * math.pi / 3)]), TWO_PI))
        np.testing.assert_allclose(sol.angles, expected, atol=1e-12)
        gaps = np.diff(list(sol.angles) + [sol.angles[0] + TWO_PI])
        np.testing.assert_allclose(gaps, TWO_PI / 3, atol=1e-12)

    def test_outside_charge(self):
        sol = circle_points(2.0, 2, 0.0)
        np.testing.assert_allclose(sorted(z.real for z in sol.points), [-1.0, 1.0],
                                   atol=1e-14)

    def test_unit_modulus_and_preimage_spacing(self):
        for b in (0.5, -0.5, 2.0, 10.0):
            for n in (2, 5, 9):
                sol = circle_points(b, n, 0.37)
                pts = np.asarray(sol.points)
                assert np.max(np.abs(np.abs(pts) - 1.0)) <= 1e-12
                pre = np.sort(np.mod(np.angle(mobius(b, pts)), TWO_PI))
                gaps = np.diff(np.concatenate([pre, [pre[0] + TWO_PI]]))
                assert np.max(np.abs(gaps - TWO_PI / n)) <= 1e-9


class TestCircleDiameter:
    def test_unweighted_case(self):
        assert circle_diameter(0.0, 2) == pytest.approx(2.0)

    def test_half(self):
        assert circle_diameter(0.5, 2) == pytest.approx(8.0 / 3.0)

    def test_outside_charge(self):
        assert circle_diameter(2.0, 4) == pytest.approx(4.0 ** (1.0 / 3.0) / 3.0)

    def test_two_point_oracle(self):
        # brute-force the two-point maximization over angle pairs
        ts = np.linspace(0.0, TWO_PI, 721)
        b = 0.5
        best = 0.0
        for i, t1 in enumerate(ts):
            z1 = np.exp(1j * t1)
            z2 = np.exp(1j * ts[i + 1:])
            vals = np.abs(z1 - z2) / (np.abs(z1 - b) * np.abs(z2 - b))
            if vals.size:
                best = max(best, float(np.max(vals)))
        assert best <= circle_diameter(b, 2) + 1e-9
        assert best == pytest.approx(circle_diameter(b, 2), rel=1e-4)

    def test_b_scaling_invariance(self):
        for n in (2, 4, 7):
            ref = n ** (1.0 / (n - 1))
            for b in (0.0, 0.5, -0.5, 2.0, 10.0):
                assert circle_diameter(b, n) * abs(1 - b * b) == pytest.approx(ref)


class TestAlphaIndependence:
    def test_log_vandermonde_matches_diameter_for_any_alpha(self):
        for b in (0.5, 2.0):
            for n in (2, 5, 8):
                w = CircleWeight(b)
                target = n * (n - 1) / 2.0 * math.log(circle_diameter(b, n))
                for alpha in np.linspace(0.0, TWO_PI / n, 10, endpoint=False):
                    sol = circle_points(b, n, alpha)
                    lwv = log_weighted_vandermonde(sol.angles, w)
                    assert abs(lwv - target) <= 1e-9
