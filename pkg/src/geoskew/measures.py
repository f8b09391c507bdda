"""Probability vectors, 1-D densities and a few helpers on them."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import stats

from .errors import DomainError
from .quadrature import QuadratureConfig, integrate

SUM_TOL = 1e-9
# zero weights become this in clamp mode
CLAMP_EPS = 1e-12
# Gaussian support half-width, in standard deviations
SUPPORT_SIGMAS = 12.0


def _frozen_array(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError(f"{name} must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    arr.flags.writeable = False
    return arr


class _VecMixin:
    def __array__(self, dtype=None, copy=None):
        arr = self._data
        return arr if dtype is None else arr.astype(dtype)

    def __len__(self):
        return self._data.size

    def __iter__(self):
        return iter(self._data.tolist())

    def __getitem__(self, i):
        return self._data[i]


@dataclass(frozen=True, eq=False)
class ProbVec(_VecMixin):
    """Strictly positive probability vector (sums to one within 1e-9)."""

    weights: np.ndarray

    def __post_init__(self):
        arr = _frozen_array(self.weights, "weights")
        self._check(arr)
        if abs(math.fsum(arr) - 1.0) > SUM_TOL:
            raise DomainError(f"weights sum to {math.fsum(arr)!r}, not 1")
        object.__setattr__(self, "weights", arr)

    @staticmethod
    def _check(arr):
        if not np.all(arr > 0):
            raise DomainError("probability vector has a non-positive weight")

    @property
    def _data(self):
        return self.weights

    def __eq__(self, other):
        if not isinstance(other, ProbVec):
            return NotImplemented
        return np.array_equal(self.weights, other.weights)

    def __repr__(self):
        return f"{type(self).__name__}({self.weights.tolist()!r})"


class NonnegVec(ProbVec):
    """Probability vector that may contain zeros (first argument of KL)."""

    @staticmethod
    def _check(arr):
        if not np.all(arr >= 0):
            raise DomainError("probability vector has a negative weight")


@dataclass(frozen=True, eq=False)
class PositiveMeasureVec(_VecMixin):
    """Finite positive measure; no normalisation required."""

    masses: np.ndarray

    def __post_init__(self):
        arr = _frozen_array(self.masses, "masses")
        if not np.all(arr > 0):
            raise DomainError("masses must be strictly positive")
        object.__setattr__(self, "masses", arr)

    @property
    def _data(self):
        return self.masses


@dataclass(frozen=True)
class DensityFn:
    """A 1-D density known through its log, plus an effective support."""

    logpdf: Callable[[np.ndarray], np.ndarray]
    lo: float
    hi: float
    params: dict = field(default_factory=dict)

    def evaluate(self, x):
        return np.exp(self.logpdf(x))

    __call__ = evaluate

    def total_mass(self, cfg: QuadratureConfig | None = None) -> float:
        return integrate(self.evaluate, self.lo, self.hi, cfg)


def normalize(raw: Sequence[float], mode: str = "strict", eps: float = CLAMP_EPS) -> ProbVec:
    """Divide ``raw`` by its total.

    ``mode="strict"`` rejects zero entries; ``mode="clamp"`` lifts them to
    ``eps`` before renormalising.
    """
    arr = np.array(raw, dtype=float)
    if arr.ndim != 1 or arr.size == 0 or not np.all(np.isfinite(arr)):
        raise DomainError("raw weights must be a non-empty finite 1-D sequence")
    if np.any(arr < 0):
        raise DomainError("raw weights must be nonnegative")
    if not np.any(arr > 0):
        raise DomainError("raw weights are all zero")
    if mode == "clamp":
        if not eps > 0:
            raise DomainError("clamp eps must be positive")
        arr = np.where(arr > 0, arr, eps)
    elif mode != "strict":
        raise DomainError(f"unknown mode {mode!r}")
    elif np.any(arr == 0):
        raise DomainError("zero weight in strict mode")
    return ProbVec(arr / math.fsum(arr))


def binomial_pmf(n: int, prob: float) -> ProbVec:
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    if not 0.0 < prob < 1.0:
        raise DomainError("prob must lie strictly inside (0, 1)")
    pmf = stats.binom.pmf(np.arange(int(n) + 1), int(n), prob)
    return ProbVec(pmf / math.fsum(pmf))


def gaussian_density(mu: float, sigma2: float) -> DensityFn:
    if not sigma2 > 0:
        raise DomainError("variance must be positive")
    mu, sigma2 = float(mu), float(sigma2)
    sigma = math.sqrt(sigma2)
    log_norm = -0.5 * math.log(2.0 * math.pi * sigma2)

    def logpdf(x):
        x = np.asarray(x, dtype=float)
        return log_norm - (x - mu) ** 2 / (2.0 * sigma2)

    return DensityFn(
        logpdf=logpdf,
        lo=mu - SUPPORT_SIGMAS * sigma,
        hi=mu + SUPPORT_SIGMAS * sigma,
        params={"family": "gaussian", "mu": mu, "var": sigma2},
    )


def _same_length(p0, p1):
    a = np.asarray(p0, dtype=float)
    b = np.asarray(p1, dtype=float)
    if a.shape != b.shape:
        raise DomainError(f"length mismatch: {a.shape} vs {b.shape}")
    return a, b


def tv_distance(p0, p1) -> float:
    """L1 distance ``sum |p1 - p0|`` (twice the usual total variation)."""
    a, b = _same_length(p0, p1)
    return math.fsum(np.abs(b - a))


def shannon_entropy(p) -> float:
    """Entropy in nats."""
    arr = np.asarray(p, dtype=float)
    terms = np.zeros_like(arr)
    nz = arr > 0
    terms[nz] = arr[nz] * np.log(arr[nz])
    return 0.0 - math.fsum(terms)
