"""Scalar kernels of the f_alpha power-mean family.

``f_alpha(x) = x**((1 - alpha) / 2)`` for ``alpha != 1`` and ``log(x)`` for
``alpha == 1``.  The weighted f-mean built on it,

    m(lam, alpha; a, b) = f_alpha^{-1}((1 - lam) f_alpha(a) + lam f_alpha(b)),

interpolates between ``a`` and ``b``: ``alpha = -1`` gives the arithmetic
mixture, ``alpha = 1`` the geometric one, ``alpha = 3`` the harmonic one and
``alpha = +inf / -inf`` collapse to ``min`` / ``max``.

Every function accepts scalars or numpy arrays.  Scalars in give a Python
float back.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, UnsupportedAlphaError

# |alpha - 1| below this routes the mean to the geometric branch
ALPHA_ONE_TOL = 1e-8

_INF_TOKENS = {
    "inf": math.inf,
    "+inf": math.inf,
    "infinity": math.inf,
    "+infinity": math.inf,
    "-inf": -math.inf,
    "-infinity": -math.inf,
}


def as_alpha(value) -> float:
    """Coerce ``value`` to an extended-real alpha (``±inf`` allowed, NaN not)."""
    if isinstance(value, str):
        token = value.strip().lower()
        if token in _INF_TOKENS:
            return _INF_TOKENS[token]
        try:
            value = float(token)
        except ValueError:
            raise ValueError(f"cannot parse alpha from {value!r}") from None
    alpha = float(value)
    if math.isnan(alpha):
        raise DomainError("alpha must not be NaN")
    return alpha


def check_lambda(lam) -> float:
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"lambda must lie in [0, 1], got {lam!r}")
    return lam


def u_exponent(alpha) -> float:
    """The power ``(1 - alpha) / 2`` used by ``f_alpha``."""
    alpha = _finite_alpha(alpha)
    return (1.0 - alpha) / 2.0


def _finite_alpha(alpha) -> float:
    alpha = as_alpha(alpha)
    if math.isinf(alpha):
        raise UnsupportedAlphaError(
            "infinite alpha is only defined for the interpolation itself"
        )
    return alpha


def _out(arr: np.ndarray, scalar: bool):
    return float(arr) if scalar else arr


def _positive(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(arr > 0) or not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite and strictly positive")
    return arr


def f_alpha(alpha, x):
    alpha = _finite_alpha(alpha)
    arr = _positive(x, "x")
    if alpha == 1.0:
        out = np.log(arr)
    else:
        out = np.power(arr, (1.0 - alpha) / 2.0)
    return _out(out, arr.ndim == 0)


def f_alpha_inv(alpha, y):
    alpha = _finite_alpha(alpha)
    arr = np.asarray(y, dtype=float)
    if alpha == 1.0:
        out = np.exp(arr)
    else:
        if not np.all(arr > 0):
            raise DomainError("f_alpha_inv needs y > 0 unless alpha == 1")
        out = np.power(arr, 2.0 / (1.0 - alpha))
    return _out(out, arr.ndim == 0)


def log_f_interpolate(alpha, lam, log_a, log_b) -> np.ndarray:
    """Logarithm of the f-interpolation, taking ``log a`` and ``log b``.

    Works entirely in the log domain so that tiny densities and huge
    ``|alpha|`` neither underflow nor overflow.  No domain checks: callers
    pass finite logs.  The result is clipped into ``[min, max]`` of the two
    inputs, which the exact mean always satisfies.
    """
    alpha = as_alpha(alpha)
    lam = float(lam)
    la, lb = np.broadcast_arrays(
        np.asarray(log_a, dtype=float), np.asarray(log_b, dtype=float)
    )
    if lam == 0.0:
        return np.array(la, dtype=float)
    if lam == 1.0:
        return np.array(lb, dtype=float)
    lo, hi = np.minimum(la, lb), np.maximum(la, lb)
    if alpha == math.inf:
        return lo
    if alpha == -math.inf:
        return hi
    if abs(alpha - 1.0) < ALPHA_ONE_TOL:
        out = (1.0 - lam) * la + lam * lb
    else:
        u = (1.0 - alpha) / 2.0
        out = np.logaddexp(math.log1p(-lam) + u * la, math.log(lam) + u * lb) / u
    return np.clip(out, lo, hi)


def f_interpolate(alpha, lam, a, b):
    """Weighted f-mean of ``a`` and ``b`` with weight ``lam`` on ``b``.

    >>> f_interpolate(-1, 0.5, 1.0, 3.0)
    2.0
    >>> f_interpolate(float("inf"), 0.7, 2.0, 5.0)
    2.0
    """
    alpha = as_alpha(alpha)
    lam = check_lambda(lam)
    a_arr = _positive(a, "a")
    b_arr = _positive(b, "b")
    scalar = a_arr.ndim == 0 and b_arr.ndim == 0
    a_arr, b_arr = np.broadcast_arrays(a_arr, b_arr)

    if lam == 0.0:
        out = np.array(a_arr, dtype=float)
    elif lam == 1.0:
        out = np.array(b_arr, dtype=float)
    elif alpha == math.inf:
        out = np.minimum(a_arr, b_arr)
    elif alpha == -math.inf:
        out = np.maximum(a_arr, b_arr)
    elif alpha == -1.0:
        out = (1.0 - lam) * a_arr + lam * b_arr
        out = np.clip(out, np.minimum(a_arr, b_arr), np.maximum(a_arr, b_arr))
    else:
        out = np.exp(log_f_interpolate(alpha, lam, np.log(a_arr), np.log(b_arr)))
        out = np.clip(out, np.minimum(a_arr, b_arr), np.maximum(a_arr, b_arr))
    return _out(out, scalar)
