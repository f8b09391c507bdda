import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import prob_pairs
from geoskew.errors import ConvergenceError, DomainError
from geoskew.measures import (
    NonnegVec,
    PositiveMeasureVec,
    ProbVec,
    binomial_pmf,
    gaussian_density,
    normalize,
    shannon_entropy,
    tv_distance,
)
from geoskew.quadrature import QuadratureConfig, composite_rule, integrate


class TestProbVec:
    def test_rejects_zero_and_bad_sum(self):
        with pytest.raises(DomainError):
            ProbVec([0.0, 1.0])
        with pytest.raises(DomainError):
            ProbVec([0.5, 0.6])
        with pytest.raises(DomainError):
            ProbVec([])

    def test_immutable(self):
        p = ProbVec([0.5, 0.5])
        with pytest.raises(ValueError):
            p.weights[0] = 1.0

    def test_array_protocol(self):
        p = ProbVec([0.25, 0.75])
        assert len(p) == 2
        np.testing.assert_array_equal(np.asarray(p), [0.25, 0.75])
        assert list(p) == [0.25, 0.75]

    def test_nonneg_allows_zero(self):
        assert NonnegVec([0.0, 1.0]).weights[0] == 0.0
        with pytest.raises(DomainError):
            NonnegVec([-0.1, 1.1])

    def test_positive_measure(self):
        assert PositiveMeasureVec([3.0, 4.0]).masses.sum() == 7.0
        with pytest.raises(DomainError):
            PositiveMeasureVec([0.0, 1.0])


class TestNormalize:
    def test_examples(self):
        assert normalize([2, 2]) == ProbVec([0.5, 0.5])
        assert normalize([1, 3]) == ProbVec([0.25, 0.75])

    def test_strict_rejects_zero(self):
        with pytest.raises(DomainError):
            normalize([0, 1])

    def test_all_zero(self):
        with pytest.raises(DomainError):
            normalize([0, 0], mode="clamp")

    def test_clamp(self):
        p = normalize([0, 1], mode="clamp", eps=1e-12)
        assert p.weights[0] == pytest.approx(1e-12 / (1 + 1e-12))
        assert math.fsum(p.weights) == pytest.approx(1.0, abs=1e-15)

    @given(st.lists(st.floats(1e-8, 1e8), min_size=1, max_size=60))
    def test_invariants(self, raw):
        p = normalize(raw)
        assert np.all(p.weights > 0)
        assert abs(math.fsum(p.weights) - 1) <= 1e-9


class TestBinomial:
    def test_small_cases(self):
        np.testing.assert_allclose(binomial_pmf(1, 0.5).weights, [0.5, 0.5], rtol=1e-15)
        np.testing.assert_allclose(binomial_pmf(2, 0.5).weights, [0.25, 0.5, 0.25], rtol=1e-15)

    def test_b10_03_against_direct_formula(self):
        oracle = [math.comb(10, k) * 0.3 ** k * 0.7 ** (10 - k) for k in range(11)]
        p = binomial_pmf(10, 0.3).weights
        np.testing.assert_allclose(p, oracle, rtol=1e-12)
        assert int(np.argmax(p)) == 3
        assert abs(math.fsum(p) - 1) <= 1e-12

    @pytest.mark.parametrize("prob", [0.0, 1.0, 1.5])
    def test_degenerate_prob(self, prob):
        with pytest.raises(DomainError):
            binomial_pmf(10, prob)

    def test_bad_n(self):
        with pytest.raises(DomainError):
            binomial_pmf(0, 0.5)


class TestGaussian:
    def test_peak_values(self):
        assert gaussian_density(0, 1)(0.0) == pytest.approx(1 / math.sqrt(2 * math.pi), rel=1e-15)
        assert gaussian_density(0, 0.5)(0.0) == pytest.approx(1 / math.sqrt(math.pi), rel=1e-15)

    def test_support(self):
        d = gaussian_density(1.0, 4.0)
        assert (d.lo, d.hi) == (1.0 - 24.0, 1.0 + 24.0)
        assert d.params == {"family": "gaussian", "mu": 1.0, "var": 4.0}

    def test_bad_variance(self):
        with pytest.raises(DomainError):
            gaussian_density(0, 0)

    @given(st.floats(-10, 10), st.floats(0.1, 10))
    def test_normalised(self, mu, var):
        assert abs(gaussian_density(mu, var).total_mass() - 1) <= 1e-8


class TestTV:
    def test_examples(self):
        assert tv_distance([0.5, 0.5], [0.5, 0.5]) == 0
        assert tv_distance([0.5, 0.5], [0.25, 0.75]) == 0.5
        eps = 1e-12
        assert tv_distance([1 - eps, eps], [eps, 1 - eps]) == pytest.approx(2.0)

    def test_length_mismatch(self):
        with pytest.raises(DomainError):
            tv_distance([0.5, 0.5], [1.0])

    @given(prob_pairs(), st.data())
    def test_metric(self, pair, data):
        a, b = pair
        raw = data.draw(st.lists(st.floats(1e-3, 10), min_size=len(a), max_size=len(a)))
        c = np.asarray(raw) / math.fsum(raw)
        assert tv_distance(a, b) == pytest.approx(tv_distance(b, a), abs=1e-15)
        assert tv_distance(a, a) <= 1e-12
        assert tv_distance(a, c) <= tv_distance(a, b) + tv_distance(b, c) + 1e-12


class TestEntropy:
    def test_examples(self):
        assert shannon_entropy([0.5, 0.5]) == pytest.approx(math.log(2), rel=1e-15)
        assert shannon_entropy([0.25] * 4) == pytest.approx(math.log(4), rel=1e-15)

    def test_deterministic_limit(self):
        vals = [shannon_entropy([1 - e, e]) for e in (1e-2, 1e-4, 1e-8, 1e-12)]
        assert all(x > y for x, y in zip(vals, vals[1:]))
        assert vals[-1] < 1e-10
        assert shannon_entropy([1.0]) == 0.0


class TestQuadrature:
    def test_polynomial_exact(self):
        x, w = composite_rule(-1.0, 2.0, panels=3, node_count=8)
        assert math.fsum(w * x ** 15) == pytest.approx((2.0 ** 16 - 1.0) / 16, rel=1e-13)

    def test_integrate_exp(self):
        assert integrate(np.exp, 0.0, 1.0) == pytest.approx(math.e - 1, abs=1e-13)

    def test_config_validation(self):
        with pytest.raises(DomainError):
            QuadratureConfig(node_count=4)
        with pytest.raises(DomainError):
            QuadratureConfig(abs_tol=0)

    def test_non_convergence(self):
        cfg = QuadratureConfig(node_count=8, panel_count=1, abs_tol=1e-14, max_panels=4)
        with pytest.raises(ConvergenceError):
            integrate(lambda x: np.sin(200 * x) ** 2, 0.0, 10.0, cfg)
