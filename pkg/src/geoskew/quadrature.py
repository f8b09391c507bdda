"""Composite Gauss-Legendre quadrature with panel doubling."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError


@dataclass(frozen=True)
class QuadratureConfig:
    node_count: int = 32
    panel_count: int = 16
    abs_tol: float = 1e-8
    max_panels: int = 2**12

    def __post_init__(self):
        if self.node_count < 8:
            raise DomainError("node_count must be at least 8")
        if self.panel_count < 1 or self.max_panels < self.panel_count:
            raise DomainError("need 1 <= panel_count <= max_panels")
        if not self.abs_tol > 0:
            raise DomainError("abs_tol must be positive")


@lru_cache(maxsize=None)
def _reference_rule(node_count: int):
    x, w = np.polynomial.legendre.leggauss(node_count)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def composite_rule(lo: float, hi: float, panels: int, node_count: int = 32):
    """Nodes and weights of ``panels`` equal Gauss-Legendre panels on [lo, hi]."""
    if not hi > lo:
        raise DomainError(f"empty interval [{lo}, {hi}]")
    x, w = _reference_rule(node_count)
    edges = np.linspace(lo, hi, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _apply(f, lo, hi, panels, node_count) -> float:
    nodes, weights = composite_rule(lo, hi, panels, node_count)
    return math.fsum(weights * np.asarray(f(nodes), dtype=float))


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    cfg: QuadratureConfig | None = None,
) -> float:
    """Integrate a vectorised ``f`` over [lo, hi].

    Panels are doubled until two successive estimates differ by less than
    ``cfg.abs_tol``; the finer estimate is returned.
    """
    cfg = cfg or QuadratureConfig()
    panels = cfg.panel_count
    prev = _apply(f, lo, hi, panels, cfg.node_count)
    while panels * 2 <= cfg.max_panels:
        panels *= 2
        cur = _apply(f, lo, hi, panels, cfg.node_count)
        if not math.isfinite(cur):
            raise ConvergenceError("integrand produced a non-finite estimate")
        if abs(cur - prev) < cfg.abs_tol:
            return cur
        prev = cur
    raise ConvergenceError(
        f"no convergence to {cfg.abs_tol:g} within {cfg.max_panels} panels"
    )
