"""Randomized index hashing 1-signatures onto randomly shifted grids.

Each repetition draws a shift ``z`` uniformly from ``[0, w]`` and maps every
value ``x`` (after scaling by the radius) to the cell ``floor((x - z) / w)``.
A corpus curve is stored under the canonical cell sequence of its
1-signature; a query looks up the canonical cell sequence of its own
vertices. Equal keys certify distance at most ``(2w + 1) r``; a curve within
``r`` of the query collides in one repetition with probability at least
``1 - 6k/w``, which is 1/2 at the default width ``12k``.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from ._dictindex import CurveStats, check_k, check_radius, split_corpus
from .core import ShiftedGrid, canonical_key, canonicalize, scale, snap_shifted
from .errors import InvalidParameterError
from .signature import compute_signature

KIND = "lsh"


def default_width(k):
    return 12.0 * k


def default_reps(n, factor=2):
    return max(1, math.ceil(factor * math.log2(n + 1)))


def draw_shifts(seed, reps, width):
    rng = np.random.default_rng(seed)
    return tuple(float(z) for z in rng.uniform(0.0, width, reps))


def grid_key(values, width, shift):
    return canonical_key(snap_shifted(values, ShiftedGrid(width, shift)).tolist())


@dataclass
class LshIndex:
    k: int
    radius: float
    width: float  # in units of the radius
    seed: int
    shifts: tuple
    ids: list
    curves: list
    tables: list
    stats: list = field(default_factory=list)
    kind: str = KIND

    @property
    def reps(self):
        return len(self.shifts)

    def __len__(self):
        return sum(len(t) for t in self.tables)


def build_lsh(corpus, k, r, seed=0, reps=None, width=None):
    """Build ``reps`` shifted-grid dictionaries over the corpus.

    ``width`` is measured in units of ``r`` and defaults to ``12 k``;
    ``reps`` defaults to ``ceil(2 log2(n + 1))``.
    """
    k = check_k(k)
    r = check_radius(r)
    ids, curves = split_corpus(corpus)
    if width is None:
        width = default_width(k)
    if not (isinstance(width, (int, float)) and math.isfinite(width) and width > 0):
        raise InvalidParameterError(f"grid width must be positive, got {width!r}")
    if reps is None:
        reps = default_reps(len(curves))
    if isinstance(reps, bool) or not isinstance(reps, int) or reps < 1:
        raise InvalidParameterError(f"repetitions must be a positive integer, got {reps!r}")
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise InvalidParameterError(f"seed must be a non-negative integer, got {seed!r}")
    width = float(width)
    shifts = draw_shifts(seed, reps, width)
    tables = [{} for _ in shifts]
    stats = []
    for pos, curve in enumerate(curves):
        sig = compute_signature(scale(curve, r), 1.0)
        st = CurveStats(signature_length=len(sig))
        stats.append(st)
        if len(sig) > k:
            st.skipped = True
            continue
        for table, z in zip(tables, shifts):
            if table.setdefault(grid_key(sig.values, width, z), pos) == pos:
                st.stored += 1
    return LshIndex(k, r, width, seed, shifts, ids, curves, tables, stats)


def query_keys(index, tau):
    verts = canonicalize(scale(tau, index.radius))
    return [grid_key(verts, index.width, z) for z in index.shifts]


def query_lsh(index, tau, with_repetition=False):
    """First identifier found over the repetitions, or None.

    With ``with_repetition`` returns (identifier, repetition index or None).
    """
    for i, (table, key) in enumerate(zip(index.tables, query_keys(index, tau))):
        pos = table.get(key)
        if pos is not None:
            found = index.ids[pos]
            return (found, i) if with_repetition else found
    return (None, None) if with_repetition else None
