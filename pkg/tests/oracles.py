"""Independent reference computations used to freeze test expectations.

Nothing here calls into the package's Fréchet or enumeration code.
"""

import math

import numpy as np


def discrete_dp(P, Q):
    P = np.asarray(P, dtype=float)
    Q = np.asarray(Q, dtype=float)
    if P.ndim == 1:
        P = P[:, None]
        Q = Q[:, None]
    n, m = len(P), len(Q)
    ca = [[math.inf] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            d = float(np.linalg.norm(P[i] - Q[j]))
            if i == 0 and j == 0:
                best = d
            else:
                prev = min(ca[i - 1][j] if i else math.inf,
                           ca[i][j - 1] if j else math.inf,
                           ca[i - 1][j - 1] if i and j else math.inf)
                best = max(prev, d)
            ca[i][j] = best
    return ca[-1][-1]


def refine(curve, step):
    """Insert evenly spaced points so no step exceeds ``step``."""
    out = [float(curve[0])]
    for a, b in zip(curve, curve[1:]):
        pieces = max(1, math.ceil(abs(b - a) / step))
        out.extend(a + (b - a) * t / pieces for t in range(1, pieces + 1))
    return out


def frechet_bracket(pi, tau, step=0.05):
    """Interval [lo, hi] guaranteed to contain the continuous distance.

    The discrete distance of the refined vertex sequences is at least the
    continuous one and exceeds it by at most half the largest step of
    either refinement, rounded up to ``step``.
    """
    a = refine(list(pi), step)
    b = refine(list(tau), step)
    d = discrete_dp(np.array(a), np.array(b))
    return d - step, d


def literal_candidates(lows, highs, k):
    """Every cell sequence of length <= k drawn in non-decreasing range order."""
    out = set()
    L = len(lows)

    def rec(seq, i):
        out.add(tuple(seq))
        if len(seq) == k:
            return
        for j in range(i, L):
            for c in range(lows[j], highs[j] + 1):
                rec(seq + [c], j)

    for j in range(L):
        for c in range(lows[j], highs[j] + 1):
            rec([c], j)
    return out


def extrema(seq):
    """Endpoints plus strict local extrema after collapsing equal runs."""
    s = [seq[0]]
    for v in seq[1:]:
        if v != s[-1]:
            s.append(v)
    if len(s) <= 2:
        return tuple(s)
    keep = [s[0]]
    for a, b, c in zip(s, s[1:], s[2:]):
        if (b - a) * (c - b) < 0:
            keep.append(b)
    keep.append(s[-1])
    return tuple(keep)
