"""Exact Fréchet decision for 1-D curves, distance by bisection, and the
discrete Fréchet distance for point sequences."""

import math

import numpy as np

from ._backend import kernels
from .core import as_series
from .errors import InvalidParameterError


def decide_continuous(pi, tau, delta):
    """Return True iff the continuous Fréchet distance is at most ``delta``.

    Runs monotone reachability through the free space of the two curves in
    O(|pi| * |tau|) time. Single-value curves are treated as constant
    segments.
    """
    if delta < 0 or math.isnan(delta):
        raise InvalidParameterError("delta must be non-negative")
    p = as_series(pi)
    q = as_series(tau)
    return bool(kernels.decide_1d(p, q, float(delta)))


def distance_bounds(pi, tau):
    """A lower and an upper bound on the Fréchet distance of two 1-D curves."""
    p = as_series(pi)
    q = as_series(tau)
    lo = max(abs(p[0] - q[0]), abs(p[-1] - q[-1]))
    hi = max(abs(p.max() - q.min()), abs(q.max() - p.min()))
    return float(lo), float(max(hi, lo))


def distance_continuous(pi, tau, tol=1e-9):
    """Bisection estimate ``d`` with ``d_F <= d <= d_F + tol``.

    The returned value always passes :func:`decide_continuous`.
    """
    if not tol > 0:
        raise InvalidParameterError("tol must be positive")
    p = as_series(pi)
    q = as_series(tau)
    lo, hi = distance_bounds(p, q)
    decide = kernels.decide_1d
    if decide(p, q, lo):
        return lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if decide(p, q, mid):
            hi = mid
        else:
            lo = mid
    return float(hi)


def as_points(P):
    arr = np.array(P, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise InvalidParameterError("a point sequence needs at least one point of positive dimension")
    if not np.all(np.isfinite(arr)):
        raise InvalidParameterError("point coordinates must be finite")
    return arr


def discrete_frechet(P, Q):
    """Discrete Fréchet distance (Euclidean ground metric) by dynamic programming.

    Parameters
    ----------
    P, Q : array_like, shape (n, d) and (m, d)
        Point sequences. 1-D inputs are read as sequences of scalars.

    Returns
    -------
    float
    """
    P = as_points(P)
    Q = as_points(Q)
    if P.shape[1] != Q.shape[1]:
        raise InvalidParameterError(f"dimension mismatch: {P.shape[1]} vs {Q.shape[1]}")
    return float(kernels.discrete_frechet_nd(np.ascontiguousarray(P), np.ascontiguousarray(Q)))
