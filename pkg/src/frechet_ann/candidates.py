"""Candidate key generation shared by the two dictionary indexes.

Candidates are grid curves whose vertices are drawn, in order, from a list
of value ranges around a corpus curve. Each range is stored as an inclusive
pair of grid indices.
"""

from decimal import ROUND_FLOOR, Decimal, localcontext
from fractions import Fraction
import math

from ._backend import kernels


def grid_bounds(lo, hi, width):
    """Inclusive grid-index range covering the grid points in [lo, hi]."""
    return math.ceil(lo / width), math.floor(hi / width)


def ranges_around(values, pad, width):
    lows, highs = [], []
    for v in values:
        a, b = grid_bounds(v - pad, v + pad, width)
        lows.append(a)
        highs.append(b)
    return lows, highs


def range_sizes(lows, highs):
    return [max(0, b - a + 1) for a, b in zip(lows, highs)]


def count_sequences(lows, highs, max_len):
    """Exact number of distinct cell sequences of length 1..max_len whose
    entries can be assigned to ranges with non-decreasing range index.

    Each sequence is counted once by always assigning a cell to the first
    admissible range, which makes the count a small dynamic program.
    """
    L = len(lows)
    if L == 0 or max_len < 1:
        return 0
    # succ[j] maps each usable cell to its first range at or after j
    trans = []
    for j in range(L):
        first = {}
        for jj in range(j, L):
            for c in range(lows[jj], highs[jj] + 1):
                first.setdefault(c, jj)
        per_target = [0] * L
        for jj in first.values():
            per_target[jj] += 1
        trans.append(per_target)
    # initial step: any cell from any range, first admissible range
    ways = list(trans[0])
    total = sum(ways)
    for _ in range(max_len - 1):
        nxt = [0] * L
        for j, count in enumerate(ways):
            if count:
                for jj, t in enumerate(trans[j]):
                    if t:
                        nxt[jj] += count * t
        ways = nxt
        total += sum(ways)
    return total


def five_eps_bound(k, epsilon):
    """floor((2e)^k (4/eps + 2)^k), the per-curve candidate bound."""
    per_range = 4 / Fraction(epsilon).limit_denominator(10**9) + 2
    with localcontext() as ctx:
        ctx.prec = 60
        base = 2 * Decimal(1).exp() * Decimal(per_range.numerator) / Decimal(per_range.denominator)
        return int((base ** k).to_integral_value(rounding=ROUND_FLOOR))


def two_eps_bound(k, m, epsilon):
    """C(k+m-1, k) (4/eps + 2)^k as an exact rational, floored."""
    per_range = 4 / Fraction(epsilon).limit_denominator(10**9) + 2
    return math.floor(math.comb(k + m - 1, k) * per_range ** k)


def enumerate_keys(curve, lows, highs, width, radius, max_len, min_inner=0, min_outer=0):
    """Canonical candidate keys within ``radius`` of ``curve``, in a fixed order."""
    return kernels.enumerate_keys(curve, lows, highs, width, radius, max_len,
                                  min_inner, min_outer)
