"""KL-type divergences and the alpha-geodesical skew divergence.

All discrete functions take probability vectors (``ProbVec`` or any 1-D
array-like that satisfies the same invariants) and return a float in nats.

The geodesical skew divergence replaces the mixture in the classical skew
divergence by the weighted f-mean of the two densities,

    D(alpha, lam)[p || q] = sum_i p_i log(p_i / m(lam, alpha; p_i, q_i)),

so ``alpha = -1`` is the skew divergence, ``alpha = 1`` is ``lam * KL``
and ``lam = 1`` is ``KL`` for every alpha.
"""
from __future__ import annotations

import math

import numpy as np

from . import scalar
from .errors import DomainError, UnsupportedAlphaError
from .measures import SUM_TOL, DensityFn, ProbVec
from .quadrature import QuadratureConfig, integrate
from .scalar import ALPHA_ONE_TOL, as_alpha, check_lambda


def _vec(x, name: str, allow_zero: bool = False) -> np.ndarray:
    if isinstance(x, ProbVec):
        return x.weights
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1 or arr.size == 0 or not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be a non-empty finite 1-D vector")
    if allow_zero:
        if np.any(arr < 0):
            raise DomainError(f"{name} has a negative weight")
    elif not np.all(arr > 0):
        raise DomainError(f"{name} must be strictly positive")
    if abs(math.fsum(arr) - 1.0) > SUM_TOL:
        raise DomainError(f"{name} does not sum to one")
    return arr


def _pair(p, q, allow_zero_p: bool = False):
    p = _vec(p, "p", allow_zero=allow_zero_p)
    q = _vec(q, "q")
    if p.shape != q.shape:
        raise DomainError(f"length mismatch: {p.size} vs {q.size}")
    return p, q


def _total(terms) -> float:
    # exactly rounded sum: result is independent of element order
    return math.fsum(terms)


def _kl_terms(p, log_p, log_r):
    terms = np.zeros_like(p)
    nz = p > 0
    terms[nz] = p[nz] * (log_p[nz] - log_r[nz])
    return terms


def _kl(p: np.ndarray, r: np.ndarray) -> float:
    with np.errstate(divide="ignore"):
        log_p = np.log(p)
    return _total(_kl_terms(p, log_p, np.log(r)))


def kl(p, q) -> float:
    """KL divergence with the convention ``0 log 0 = 0`` for zeros in ``p``."""
    p, q = _pair(p, q, allow_zero_p=True)
    return _kl(p, q)


def js(p, q) -> float:
    p, q = _pair(p, q)
    m = 0.5 * (p + q)
    return 0.5 * (_kl(p, m) + _kl(q, m))


def jeffreys(p, q) -> float:
    p, q = _pair(p, q)
    return _kl(p, q) + _kl(q, p)


def skew(lam, p, q) -> float:
    """KL from ``p`` to the mixture ``(1 - lam) p + lam q``."""
    lam = check_lambda(lam)
    p, q = _pair(p, q)
    if lam == 0.0:
        return 0.0
    if lam == 1.0:
        return _kl(p, q)
    return _kl(p, (1.0 - lam) * p + lam * q)


def alpha_divergence(alpha, p, q) -> float:
    """Amari alpha-divergence; ``alpha = -1`` is KL(p||q), ``+1`` is KL(q||p)."""
    alpha = as_alpha(alpha)
    if math.isinf(alpha):
        raise UnsupportedAlphaError("alpha-divergence needs finite alpha")
    p, q = _pair(p, q)
    if abs(alpha + 1.0) < ALPHA_ONE_TOL:
        return _kl(p, q)
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        return _kl(q, p)
    # 1 - sum p^(1-s) q^s written as -sum p expm1(s log(q/p)), s = (1+alpha)/2
    s = (1.0 + alpha) / 2.0
    log_ratio = np.log(q) - np.log(p)
    gap = -_total(p * np.expm1(s * log_ratio))
    return 4.0 / (1.0 - alpha * alpha) * gap


def _geodesical_skew_generic(alpha, lam, p: np.ndarray, q: np.ndarray) -> float:
    log_p, log_q = np.log(p), np.log(q)
    log_m = scalar.log_f_interpolate(alpha, lam, log_p, log_q)
    return _total(p * (log_p - log_m))


def geodesical_skew(alpha, lam, p, q) -> float:
    """Alpha-geodesical skew divergence ``D(alpha, lam)[p || q]``.

    Closed forms are used for ``lam in {0, 1}`` and ``alpha in {1, -1, ±inf}``;
    every other case goes through the log-domain f-mean kernel.
    """
    alpha = as_alpha(alpha)
    lam = check_lambda(lam)
    p, q = _pair(p, q)
    if lam == 0.0:
        return 0.0
    if lam == 1.0:
        return _kl(p, q)
    if alpha == 1.0:
        return lam * _kl(p, q)
    if alpha == -1.0:
        return _kl(p, (1.0 - lam) * p + lam * q)
    if alpha == math.inf:
        return _upper(p, q)
    if alpha == -math.inf:
        return _lower(p, q)
    return _geodesical_skew_generic(alpha, lam, p, q)


def symmetrized_geodesical_skew(alpha, lam, p, q) -> float:
    p, q = _pair(p, q)
    return 0.5 * (geodesical_skew(alpha, lam, p, q) + geodesical_skew(alpha, lam, q, p))


def _lower(p, q) -> float:
    return _total(p * np.minimum(0.0, np.log(p) - np.log(q)))


def _upper(p, q) -> float:
    return _total(p * np.maximum(0.0, np.log(p) - np.log(q)))


def divergence_lower_bound(p, q) -> float:
    """``sum p log(p / max(p, q))``; never positive."""
    p, q = _pair(p, q)
    return _lower(p, q)


def divergence_upper_bound(p, q) -> float:
    """``sum p log(p / min(p, q))``; never negative."""
    p, q = _pair(p, q)
    return _upper(p, q)


def geodesical_skew_continuous(
    alpha, lam, p: DensityFn, q: DensityFn, cfg: QuadratureConfig | None = None
) -> float:
    """Geodesical skew divergence between two 1-D densities.

    The integrand is evaluated from log-densities and integrated over the
    union of both supports with composite Gauss-Legendre quadrature.
    """
    alpha = as_alpha(alpha)
    lam = check_lambda(lam)
    if p.hi < q.lo or q.hi < p.lo:
        raise DomainError("densities have non-overlapping supports")
    if lam == 0.0:
        return 0.0

    def integrand(x):
        log_p = np.asarray(p.logpdf(x), dtype=float)
        log_q = np.asarray(q.logpdf(x), dtype=float)
        log_m = scalar.log_f_interpolate(alpha, lam, log_p, log_q)
        return np.exp(log_p) * (log_p - log_m)

    return integrate(integrand, min(p.lo, q.lo), max(p.hi, q.hi), cfg)


def gaussian_kl(mu1: float, var1: float, mu2: float, var2: float) -> float:
    """Closed-form ``KL(N(mu1, var1) || N(mu2, var2))``."""
    return 0.5 * (math.log(var2 / var1) + (var1 + (mu1 - mu2) ** 2) / var2 - 1.0)
