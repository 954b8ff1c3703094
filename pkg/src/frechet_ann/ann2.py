"""Deterministic (2+ε)-approximate near-neighbor index.

Candidates are drawn from ranges of half-width 4+w around every vertex of
the scaled corpus curve and kept when within 1+w of it. A query keeps the
vertices of its 1-signature, tries every subset of its remaining vertices
in order of increasing size, and returns the first stored key it hits.
"""

from itertools import combinations

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
from .errors import QueryBudgetError
from .signature import compute_signature

KIND = "two-eps"

# refuse queries needing more than 2**MAX_FREE_VERTICES lookups
MAX_FREE_VERTICES = 24


def curve_keys(curve, epsilon, k):
    w = epsilon / 2
    verts = canonicalize(curve)
    stats = CurveStats(signature_length=len(verts))
    lows, highs = candidates.ranges_around(verts, 4 + w, w)
    stats.candidates = candidates.count_sequences(lows, highs, k)
    keys = candidates.enumerate_keys(verts, lows, highs, w, 1 + w, k)
    stats.stored = len(keys)
    return keys, stats


def build_two_eps(corpus, epsilon, k, r, threads=1):
    epsilon = check_epsilon(epsilon)
    k = check_k(k)
    r = check_radius(r)
    ids, curves = split_corpus(corpus)
    results = generate_all(lambda c: curve_keys(scale(c, r), epsilon, k), curves, threads)
    table = merge_first_writer([keys for keys, _ in results])
    return DictIndex(KIND, epsilon, k, r, ids, curves, table, [s for _, s in results])


def probe_keys(index, tau):
    """Yield the lookup keys of a query, in probing order.

    Raises QueryBudgetError when the query has more than
    ``MAX_FREE_VERTICES`` vertices outside its signature.
    """
    verts = canonicalize(scale(tau, index.radius))
    sig = compute_signature(verts, 1.0)
    fixed = set(sig.indices)
    free = [i for i in range(len(verts)) if i not in fixed]
    if len(free) > MAX_FREE_VERTICES:
        raise QueryBudgetError(
            f"query has {len(free)} vertices outside its signature; "
            f"at most {MAX_FREE_VERTICES} are enumerated")
    cells = snap_nearest_cells(verts, index.width).tolist()
    for size in range(len(free) + 1):
        for extra in combinations(free, size):
            keep = sorted(fixed.union(extra))
            yield canonical_key(cells[i] for i in keep)


def query_two_eps(index, tau, with_probes=False):
    """Return the first identifier hit, or None.

    With ``with_probes`` the result is a pair (identifier, lookups made).
    """
    probes = 0
    found = None
    for key in probe_keys(index, tau):
        probes += 1
        found = index.lookup(key)
        if found is not None:
            break
    return (found, probes) if with_probes else found
