"""Alpha-geodesics, alpha/dual coordinates and exponential-family geodesics."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import scalar
from .divergences import _pair
from .errors import DomainError
from .measures import PositiveMeasureVec, ProbVec
from .quadrature import QuadratureConfig, composite_rule
from .scalar import as_alpha, check_lambda


@dataclass(frozen=True)
class GeodesicPoint:
    t: float
    r: ProbVec
    c: float


@dataclass(frozen=True)
class AlphaCoords:
    theta: np.ndarray
    alpha: float

    def masses(self) -> np.ndarray:
        return np.asarray(scalar.f_alpha_inv(self.alpha, self.theta))


@dataclass(frozen=True)
class DualCoords:
    eta: np.ndarray
    alpha: float

    def masses(self) -> np.ndarray:
        return np.asarray(scalar.f_alpha_inv(-self.alpha, self.eta))

    @property
    def psi(self) -> float:
        """Potential ``(1 - alpha)/2 * sum m_i`` whose gradient gives ``eta``."""
        return (1.0 - self.alpha) / 2.0 * math.fsum(self.masses())


def _measure(m) -> np.ndarray:
    if isinstance(m, PositiveMeasureVec):
        return m.masses
    return PositiveMeasureVec(m).masses


def alpha_geodesic_point(alpha, t, p, q) -> GeodesicPoint:
    """Point at ``t`` on the normalised alpha-geodesic from ``p`` to ``q``.

    The f-mean of the two vectors is taken coordinate-wise and then rescaled
    by ``c(t) = 1 / sum`` so it lies back on the simplex.
    """
    alpha = as_alpha(alpha)
    t = check_lambda(t)
    p, q = _pair(p, q)
    raw = np.asarray(scalar.f_interpolate(alpha, t, p, q))
    c = 1.0 / math.fsum(raw)
    r = raw * c
    return GeodesicPoint(t=t, r=ProbVec(r), c=c)


def alpha_representation(alpha, m) -> AlphaCoords:
    alpha = as_alpha(alpha)
    theta = np.asarray(scalar.f_alpha(alpha, _measure(m)))
    return AlphaCoords(theta=theta, alpha=alpha)


def dual_representation(alpha, m) -> DualCoords:
    """The (-alpha)-representation of ``m``."""
    alpha = as_alpha(alpha)
    if math.isinf(alpha):
        raise scalar.UnsupportedAlphaError("dual coordinates need finite alpha")
    eta = np.asarray(scalar.f_alpha(-alpha, _measure(m)))
    return DualCoords(eta=eta, alpha=alpha)


# ---------------------------------------------------------------------------
# exponential families


@dataclass(frozen=True)
class ExpFamilySpec:
    """``p(x; theta) = exp(theta . T(x) + k(x) - psi(theta))``."""

    name: str
    natural_dim: int
    sufficient_statistic: Callable[[np.ndarray], np.ndarray]
    log_partition: Callable[[np.ndarray], float]
    carrier: Callable[[np.ndarray], np.ndarray]

    def psi(self, theta) -> float:
        theta = np.asarray(theta, dtype=float)
        if theta.shape != (self.natural_dim,):
            raise DomainError(
                f"{self.name}: natural parameter must have shape ({self.natural_dim},)"
            )
        value = float(self.log_partition(theta))
        if not math.isfinite(value):
            raise DomainError(f"{self.name}: invalid natural parameter {theta.tolist()}")
        return value

    def log_density(self, theta, x) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        psi = self.psi(theta)
        stat = np.asarray(self.sufficient_statistic(x), dtype=float)
        return stat @ theta + np.asarray(self.carrier(x), dtype=float) - psi


@dataclass(frozen=True)
class OutcomeGrid:
    """Outcome points with integration weights (unit weights when discrete)."""

    points: np.ndarray
    weights: np.ndarray


def gaussian_family() -> ExpFamilySpec:
    def stat(x):
        x = np.asarray(x, dtype=float)
        return np.stack([x, x * x], axis=-1)

    def psi(theta):
        t1, t2 = theta
        if not t2 < 0:
            return math.inf
        return -t1 * t1 / (4.0 * t2) + 0.5 * math.log(math.pi / -t2)

    return ExpFamilySpec(
        name="gaussian",
        natural_dim=2,
        sufficient_statistic=stat,
        log_partition=psi,
        carrier=lambda x: np.zeros(np.shape(x)),
    )


def gaussian_natural(mu: float, var: float) -> np.ndarray:
    if not var > 0:
        raise DomainError("variance must be positive")
    return np.array([mu / var, -0.5 / var])


def categorical_family(k: int) -> ExpFamilySpec:
    """Categorical on ``{0, ..., k-1}``; logits with the last one fixed at 0."""
    if k < 2:
        raise DomainError("categorical family needs at least two outcomes")

    def stat(x):
        x = np.asarray(x, dtype=int)
        return np.eye(k)[x][..., : k - 1]

    def psi(theta):
        return float(np.logaddexp.reduce(np.append(theta, 0.0)))

    return ExpFamilySpec(
        name=f"categorical{k}",
        natural_dim=k - 1,
        sufficient_statistic=stat,
        log_partition=psi,
        carrier=lambda x: np.zeros(np.shape(x)),
    )


def categorical_grid(k: int) -> OutcomeGrid:
    return OutcomeGrid(points=np.arange(k), weights=np.ones(k))


def quadrature_grid(lo: float, hi: float, cfg: QuadratureConfig | None = None) -> OutcomeGrid:
    cfg = cfg or QuadratureConfig()
    nodes, weights = composite_rule(lo, hi, cfg.panel_count, cfg.node_count)
    return OutcomeGrid(points=nodes, weights=weights)


def _masses(fam: ExpFamilySpec, theta, grid: OutcomeGrid) -> np.ndarray:
    with np.errstate(under="ignore"):
        return grid.weights * np.exp(fam.log_density(theta, grid.points))


def natural_geodesic_density(fam: ExpFamilySpec, theta_p, theta_q, lam, grid: OutcomeGrid) -> ProbVec:
    """Distribution at ``(1 - lam) theta_p + lam theta_q`` on ``grid``, normalised."""
    lam = check_lambda(lam)
    theta_p = np.asarray(theta_p, dtype=float)
    theta_q = np.asarray(theta_q, dtype=float)
    fam.psi(theta_p)
    fam.psi(theta_q)
    if lam == 0.0:
        theta = theta_p
    elif lam == 1.0:
        theta = theta_q
    else:
        theta = (1.0 - lam) * theta_p + lam * theta_q
    mass = _masses(fam, theta, grid)
    total = math.fsum(mass)
    if not np.all(mass > 0):
        raise DomainError("geodesic density underflows on the outcome grid")
    return ProbVec(mass / total)


@dataclass(frozen=True)
class ScaledKLReport:
    geodesic_value: float
    scaled_kl: float
    abs_diff: float


def verify_scaled_kl(fam: ExpFamilySpec, theta_p, theta_q, lam, grid: OutcomeGrid) -> ScaledKLReport:
    """Compare ``D(1, lam)[p || q]`` with ``lam * KL[p || q]``.

    The left side is assembled from the natural-parameter geodesic: the
    geometric mean of the two densities equals the geodesic density times
    ``exp(psi(theta(lam)) - (1 - lam) psi(theta_p) - lam psi(theta_q))``.
    The right side is the plain KL sum scaled by ``lam``.
    """
    lam = check_lambda(lam)
    theta_p = np.asarray(theta_p, dtype=float)
    theta_q = np.asarray(theta_q, dtype=float)
    theta_l = (1.0 - lam) * theta_p + lam * theta_q
    if lam == 0.0:
        theta_l = theta_p
    elif lam == 1.0:
        theta_l = theta_q
    psi_gap = fam.psi(theta_l) - (1.0 - lam) * fam.psi(theta_p) - lam * fam.psi(theta_q)

    log_p = fam.log_density(theta_p, grid.points)
    log_q = fam.log_density(theta_q, grid.points)
    log_l = fam.log_density(theta_l, grid.points)
    with np.errstate(under="ignore"):
        mass_p = grid.weights * np.exp(log_p)
    geodesic_value = math.fsum(mass_p * (log_p - log_l)) - psi_gap
    scaled = lam * math.fsum(mass_p * (log_p - log_q))
    return ScaledKLReport(geodesic_value, scaled, abs(geodesic_value - scaled))
