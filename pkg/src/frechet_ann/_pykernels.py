"""Reference (pure Python) implementation of the hot loops.

The compiled ``_kernels`` module implements the same functions with the same
semantics; ``_backend`` picks one at import time.

Free-space intervals are stored in edge coordinates: on an ascending edge
the coordinate of a point is its value, on a descending edge its negated
value, and on a constant edge its interpolation parameter in [0, 1]. Moving
forward along an edge always increases the coordinate, and no division is
needed, so interval end points are exact copies of input values or of
``y +/- delta``.
"""

import math

import numpy as np

INF = math.inf
EMPTY = (INF, -INF)

NAME = "python"


def _free(a, b, y, d):
    """Points of edge a->b within distance d of value y, in edge coordinates."""
    if b > a:
        lo = a if a > y - d else y - d
        hi = b if b < y + d else y + d
        return (lo, hi) if lo <= hi else EMPTY
    if b < a:
        lo = b if b > y - d else y - d
        hi = a if a < y + d else y + d
        return (-hi, -lo) if lo <= hi else EMPTY
    return (0.0, 1.0) if abs(y - a) <= d else EMPTY


def _row_init(pi, y, d):
    """Reachable part of the horizontal line at the first vertex ``y``."""
    n = len(pi)
    row = [EMPTY] * (n - 1)
    chain = abs(pi[0] - y) <= d
    wall = chain
    for i in range(n - 1):
        if not chain:
            break
        row[i] = _free(pi[i], pi[i + 1], y, d)
        chain = abs(pi[i + 1] - y) <= d
    return row, wall


def _row_step(pi, row, wall, a, b, d):
    """Propagate reachability through the cells of curve edge a->b."""
    n = len(pi)
    new = [EMPTY] * (n - 1)
    left = _free(a, b, pi[0], d) if wall else EMPTY
    for i in range(n - 1):
        bottom = row[i]
        bottom_ok = bottom[0] <= bottom[1]
        left_ok = left[0] <= left[1]
        if left_ok or bottom_ok:
            top = _free(pi[i], pi[i + 1], b, d)
            if not left_ok and top[0] < bottom[0]:
                top = (bottom[0], top[1]) if bottom[0] <= top[1] else EMPTY
            new[i] = top
            right = _free(a, b, pi[i + 1], d)
            if not bottom_ok and right[0] < left[0]:
                right = (left[0], right[1]) if left[0] <= right[1] else EMPTY
            left = right
        else:
            left = EMPTY
    return new, wall and abs(pi[0] - b) <= d


def _row_alive(row, wall):
    if wall:
        return True
    for lo, hi in row:
        if lo <= hi:
            return True
    return False


def _lift(curve):
    curve = [float(v) for v in curve]
    if len(curve) == 1:
        curve.append(curve[0])
    return curve


def decide_1d(pi, tau, delta):
    """True iff the Fréchet distance of two 1-D polygonal curves is <= delta."""
    p = _lift(pi)
    q = _lift(tau)
    d = float(delta)
    if abs(p[0] - q[0]) > d or abs(p[-1] - q[-1]) > d:
        return False
    row, wall = _row_init(p, q[0], d)
    for j in range(len(q) - 1):
        if not _row_alive(row, wall):
            return False
        row, wall = _row_step(p, row, wall, q[j], q[j + 1], d)
    last = row[-1]
    return last[0] <= last[1] and abs(p[-1] - q[-1]) <= d


def discrete_frechet_nd(P, Q):
    P = np.asarray(P, dtype=np.float64)
    Q = np.asarray(Q, dtype=np.float64)
    dist = np.sqrt(((P[:, None, :] - Q[None, :, :]) ** 2).sum(axis=2))
    n, m = dist.shape
    prev = [0.0] * m
    acc = 0.0
    for j in range(m):
        acc = max(acc, dist[0, j])
        prev[j] = acc
    for i in range(1, n):
        cur = [0.0] * m
        cur[0] = max(prev[0], dist[i, 0])
        for j in range(1, m):
            best = min(prev[j], prev[j - 1], cur[j - 1])
            cur[j] = max(best, dist[i, j])
        prev = cur
    return float(prev[-1])


def _successors(lo_cells, hi_cells):
    """For each range index j, the cells usable after j and their new state.

    A cell's new state is the first range (at or after j) containing it, so
    each distinct cell sequence is produced exactly once.
    """
    L = len(lo_cells)
    table = []
    for j in range(L):
        first = {}
        for jj in range(j, L):
            for c in range(int(lo_cells[jj]), int(hi_cells[jj]) + 1):
                if c not in first:
                    first[c] = jj
        table.append(sorted(first.items()))
    return table


def enumerate_keys(pi, lo_cells, hi_cells, width, radius, max_len,
                   min_inner=0, min_outer=0):
    """Canonical cell sequences drawn in order from the ranges and within
    ``radius`` of ``pi`` (Fréchet distance, cell c standing for value c*width).

    ``min_inner`` and ``min_outer`` optionally restrict emitted keys of
    length >= 3: their first and last steps must be at least ``min_outer``
    cells and their other steps at least ``min_inner`` cells.
    """
    p = _lift(pi)
    d = float(radius)
    w = float(width)
    out = []
    if len(lo_cells) == 0 or max_len < 1:
        return out
    succ = _successors(lo_cells, hi_cells)
    last_pi = p[-1]
    prefix = []

    def shape_ok_for_emit(t):
        if t < 3:
            return True
        return abs(prefix[1] - prefix[0]) >= min_outer and abs(prefix[t - 1] - prefix[t - 2]) >= min_outer

    def visit(state, row, wall):
        t = len(prefix)
        y = prefix[-1] * w
        if row[-1][0] <= row[-1][1] and abs(last_pi - y) <= d and shape_ok_for_emit(t):
            out.append(tuple(prefix))
        if t >= max_len:
            return
        if t >= 2 and abs(prefix[1] - prefix[0]) < min_outer:
            return
        if t >= 3 and abs(prefix[t - 1] - prefix[t - 2]) < min_inner:
            return
        last = prefix[-1]
        rising = t >= 2 and prefix[-1] > prefix[-2]
        for c, nxt in succ[state]:
            if c == last:
                continue
            if t >= 2 and (c > last) == rising:
                continue
            nrow, nwall = _row_step(p, row, wall, y, c * w, d)
            if not _row_alive(nrow, nwall):
                continue
            prefix.append(c)
            visit(nxt, nrow, nwall)
            prefix.pop()

    for c, nxt in succ[0]:
        y = c * w
        if abs(p[0] - y) > d:
            continue
        row, wall = _row_init(p, y, d)
        prefix.append(c)
        visit(nxt, row, wall)
        prefix.pop()
    return out
