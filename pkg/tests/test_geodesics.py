import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import prob_pairs
from geoskew import geodesics as geo
from geoskew.errors import DomainError, UnsupportedAlphaError

INF = math.inf


class TestAlphaGeodesic:
    def test_start(self, example_pair):
        pt = geo.alpha_geodesic_point(0.0, 0.0, *example_pair)
        np.testing.assert_allclose(pt.r.weights, example_pair[0], atol=1e-15)
        assert pt.c == pytest.approx(1.0, abs=1e-15)

    def test_mixture_midpoint(self, example_pair):
        p, q = example_pair
        pt = geo.alpha_geodesic_point(-1.0, 0.5, p, q)
        np.testing.assert_allclose(pt.r.weights, (p + q) / 2, atol=1e-15)
        assert pt.c == pytest.approx(1.0, abs=1e-15)

    def test_geometric_midpoint(self, example_pair):
        raw = np.array([math.sqrt(0.5 * 0.25), math.sqrt(0.5 * 0.75)])
        pt = geo.alpha_geodesic_point(1.0, 0.5, *example_pair)
        np.testing.assert_allclose(pt.r.weights, raw / raw.sum(), rtol=1e-14)
        assert pt.c == pytest.approx(1 / raw.sum(), rel=1e-14)

    @given(prob_pairs(), st.sampled_from([-5.0, -1.0, 0.0, 1.0, 3.0, 10.0, INF, -INF]), st.floats(0, 1))
    def test_endpoints_and_normalisation(self, pair, alpha, t):
        p, q = pair
        np.testing.assert_allclose(geo.alpha_geodesic_point(alpha, 0.0, p, q).r.weights, p, atol=1e-12)
        np.testing.assert_allclose(geo.alpha_geodesic_point(alpha, 1.0, p, q).r.weights, q, atol=1e-12)
        assert abs(geo.alpha_geodesic_point(alpha, t, p, q).r.weights.sum() - 1) <= 1e-9

    def test_length_mismatch(self):
        with pytest.raises(DomainError):
            geo.alpha_geodesic_point(0.0, 0.5, [0.5, 0.5], [1.0])


class TestCoordinates:
    def test_alpha_representation_examples(self):
        m = np.array([2.0, 7.0])
        np.testing.assert_array_equal(geo.alpha_representation(-1.0, m).theta, m)
        np.testing.assert_allclose(geo.alpha_representation(0.0, [4.0, 9.0]).theta, [2.0, 3.0])
        np.testing.assert_allclose(geo.alpha_representation(1.0, [1.0, math.e]).theta, [0.0, 1.0], atol=1e-15)

    def test_dual_examples(self):
        assert geo.dual_representation(0.0, [4.0]).eta[0] == 2.0
        assert geo.alpha_representation(0.0, [4.0]).theta[0] == 2.0
        m = np.array([0.5, 3.0])
        np.testing.assert_allclose(geo.dual_representation(-1.0, m).eta, np.log(m))
        assert geo.dual_representation(3.0, [2.0]).eta[0] == pytest.approx(4.0)

    @given(st.floats(-6, 6).filter(lambda a: abs(abs(a) - 1) > 1e-3),
           st.lists(st.floats(1e-3, 1e3), min_size=1, max_size=8))
    def test_dual_from_theta(self, alpha, masses):
        theta = geo.alpha_representation(alpha, masses).theta
        eta = geo.dual_representation(alpha, masses).eta
        np.testing.assert_allclose(theta ** ((1 + alpha) / (1 - alpha)), eta, rtol=1e-10)

    @given(st.floats(-6, 6), st.lists(st.floats(1e-3, 1e3), min_size=1, max_size=8))
    def test_duality_involution(self, alpha, masses):
        np.testing.assert_allclose(geo.dual_representation(-alpha, masses).eta,
                                   geo.alpha_representation(alpha, masses).theta, atol=1e-12, rtol=0)

    def test_masses_round_trip_and_potential(self):
        m = np.array([0.3, 1.2, 4.0])
        np.testing.assert_allclose(geo.alpha_representation(0.5, m).masses(), m, rtol=1e-14)
        dual = geo.dual_representation(0.5, m)
        np.testing.assert_allclose(dual.masses(), m, rtol=1e-14)
        assert dual.psi == pytest.approx(0.25 * m.sum(), rel=1e-14)

    def test_infinite_alpha(self):
        with pytest.raises(UnsupportedAlphaError):
            geo.alpha_representation(INF, [1.0])
        with pytest.raises(UnsupportedAlphaError):
            geo.dual_representation(-INF, [1.0])

    def test_needs_positive_masses(self):
        with pytest.raises(DomainError):
            geo.alpha_representation(0.0, [1.0, 0.0])


def _gauss_density(x, mu, var):
    return np.exp(-(x - mu) ** 2 / (2 * var)) / math.sqrt(2 * math.pi * var)


class TestExponentialFamilies:
    def test_gaussian_log_partition_normalises(self):
        fam = geo.gaussian_family()
        x = np.linspace(-3, 5, 7)
        got = np.exp(fam.log_density(geo.gaussian_natural(1.0, 2.0), x))
        np.testing.assert_allclose(got, _gauss_density(x, 1.0, 2.0), rtol=1e-13)

    def test_gaussian_midpoint_equal_variance(self):
        fam = geo.gaussian_family()
        grid = geo.quadrature_grid(-14.0, 15.0)
        got = geo.natural_geodesic_density(
            fam, geo.gaussian_natural(0, 1), geo.gaussian_natural(1, 1), 0.5, grid).weights
        oracle = grid.weights * _gauss_density(grid.points, 0.5, 1.0)
        np.testing.assert_allclose(got, oracle / oracle.sum(), atol=1e-12)

    def test_endpoint(self):
        fam = geo.categorical_family(4)
        tp, tq = np.array([0.2, -1.0, 0.5]), np.array([1.0, 0.0, -2.0])
        got = geo.natural_geodesic_density(fam, tp, tq, 0.0, geo.categorical_grid(4)).weights
        logits = np.append(tp, 0.0)
        np.testing.assert_allclose(got, np.exp(logits) / np.exp(logits).sum(), rtol=1e-14)

    def test_categorical_against_geometric_oracle(self, rng):
        k = 7
        fam = geo.categorical_family(k)
        tp, tq = rng.normal(size=k - 1), rng.normal(size=k - 1)
        p = np.exp(np.append(tp, 0)); p /= p.sum()
        q = np.exp(np.append(tq, 0)); q /= q.sum()
        raw = p ** 0.7 * q ** 0.3
        got = geo.natural_geodesic_density(fam, tp, tq, 0.3, geo.categorical_grid(k)).weights
        np.testing.assert_allclose(got, raw / raw.sum(), atol=1e-8)

    @pytest.mark.parametrize("lam", [0.0, 0.25, 0.5, 0.75, 1.0])
    def test_gaussian_geometric_interpolation(self, lam):
        fam = geo.gaussian_family()
        grid = geo.quadrature_grid(-15.0, 15.0)
        p = _gauss_density(grid.points, -0.5, 0.8)
        q = _gauss_density(grid.points, 1.0, 1.7)
        raw = grid.weights * p ** (1 - lam) * q ** lam
        got = geo.natural_geodesic_density(
            fam, geo.gaussian_natural(-0.5, 0.8), geo.gaussian_natural(1.0, 1.7), lam, grid).weights
        np.testing.assert_allclose(got, raw / raw.sum(), atol=1e-8)

    def test_invalid_parameters(self):
        fam = geo.gaussian_family()
        with pytest.raises(DomainError):
            geo.natural_geodesic_density(fam, [0.0, 0.5], [0.0, -0.5], 0.5, geo.quadrature_grid(-5, 5))
        with pytest.raises(DomainError):
            geo.gaussian_natural(0.0, -1.0)
        with pytest.raises(DomainError):
            fam.psi([1.0, -0.5, 3.0])


class TestScaledKL:
    def setup_method(self):
        self.fam = geo.gaussian_family()
        self.grid = geo.quadrature_grid(-14.0, 15.0)
        self.tp = geo.gaussian_natural(0.0, 1.0)
        self.tq = geo.gaussian_natural(1.0, 1.0)

    def test_lambda_zero(self):
        rep = geo.verify_scaled_kl(self.fam, self.tp, self.tq, 0.0, self.grid)
        assert (rep.geodesic_value, rep.scaled_kl, rep.abs_diff) == (0.0, 0.0, 0.0)

    def test_lambda_one(self):
        rep = geo.verify_scaled_kl(self.fam, self.tp, self.tq, 1.0, self.grid)
        assert rep.scaled_kl == pytest.approx(0.5, abs=1e-10)
        assert rep.abs_diff <= 1e-12

    def test_half(self):
        # KL(N(0,1) || N(1,1)) = 1/2
        rep = geo.verify_scaled_kl(self.fam, self.tp, self.tq, 0.5, self.grid)
        assert rep.geodesic_value == pytest.approx(0.25, abs=1e-8)
        assert rep.scaled_kl == pytest.approx(0.25, abs=1e-8)
        assert rep.abs_diff <= 1e-8

    @given(st.integers(2, 10), st.floats(0, 1), st.integers(0, 2**32 - 1))
    def test_categorical(self, k, lam, seed):
        r = np.random.default_rng(seed)
        fam = geo.categorical_family(k)
        rep = geo.verify_scaled_kl(fam, r.normal(size=k - 1) * 2, r.normal(size=k - 1) * 2,
                                   lam, geo.categorical_grid(k))
        assert rep.abs_diff <= 1e-8
