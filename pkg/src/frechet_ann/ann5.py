"""Deterministic (5+ε)-approximate near-neighbor index.

Every corpus curve is scaled so the query radius becomes 1. All grid curves
of at most ``k`` vertices that lie near its 1-signature and within 3+w of
the curve are stored as keys. A query snaps the vertices of its own
2-signature to the grid and performs a single lookup.

By default only candidates whose shape can actually arise as a snapped
2-signature are stored: interior steps of a 2-signature exceed 4 and its
boundary steps exceed 2, which bounds the cell differences of any query
key from below. Keys violating these bounds can never be looked up, so
dropping them changes no answer. Pass ``prune=False`` to keep every
filtered candidate.
"""

import math

from . import candidates
from ._dictindex import (
    CurveStats,
    DictIndex,
    check_epsilon,
    check_k,
    check_radius,
    generate_all,
    merge_first_writer,
    split_corpus,
)
from .core import canonical_key, canonicalize, scale, snap_nearest_cells
from .signature import compute_signature

KIND = "five-eps"


def shape_limits(width):
    """Smallest cell steps (interior, boundary) a snapped 2-signature can have."""
    inner = max(0, math.floor(4 / width - 1 - 1e-9))
    outer = max(0, math.floor(2 / width - 1 - 1e-9))
    return inner, outer


def max_signature_length(k):
    # a curve within distance 1 of a query with k vertices has at most k+2
    # 1-signature vertices: the interior ranges each need their own query
    # vertex, while the two boundary ranges may share one with a neighbour
    return k + 2


def curve_keys(curve, epsilon, k, prune=True):
    """Keys and stats for one already-scaled corpus curve."""
    w = epsilon / 2
    sig = compute_signature(curve, 1.0)
    stats = CurveStats(signature_length=len(sig))
    if len(sig) > max_signature_length(k):
        stats.skipped = True
        return [], stats
    lows, highs = candidates.ranges_around(sig.values, 2 + w, w)
    stats.candidates = candidates.count_sequences(lows, highs, k)
    inner, outer = shape_limits(w) if prune else (0, 0)
    keys = candidates.enumerate_keys(canonicalize(curve), lows, highs, w, 3 + w, k,
                                     inner, outer)
    stats.stored = len(keys)
    return keys, stats


def build_five_eps(corpus, epsilon, k, r, prune=True, threads=1):
    """Build the index over ``corpus`` (a sequence, or a mapping id -> series)."""
    epsilon = check_epsilon(epsilon)
    k = check_k(k)
    r = check_radius(r)
    ids, curves = split_corpus(corpus)
    results = generate_all(lambda c: curve_keys(scale(c, r), epsilon, k, prune),
                           curves, threads)
    table = merge_first_writer([keys for keys, _ in results])
    return DictIndex(KIND, epsilon, k, r, ids, curves, table,
                     [s for _, s in results])


def query_key(index, tau):
    scaled = scale(tau, index.radius)
    sig = compute_signature(scaled, 2.0)
    return canonical_key(snap_nearest_cells(sig.values, index.width).tolist())


def query_five_eps(index, tau):
    """Return the identifier stored under the query's key, or None."""
    return index.lookup(query_key(index, tau))
