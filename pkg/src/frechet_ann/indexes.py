"""Uniform build/query entry points over the three index kinds."""

from . import ann2, ann5, lsh
from .core import canonicalize, scale
from .errors import InvalidParameterError, QueryBudgetError

KINDS = (ann5.KIND, ann2.KIND, lsh.KIND)


def build(kind, corpus, epsilon=1.0, k=1, radius=1.0, seed=0, reps=None, width=None,
          threads=1):
    if kind == ann5.KIND:
        return ann5.build_five_eps(corpus, epsilon, k, radius, threads=threads)
    if kind == ann2.KIND:
        return ann2.build_two_eps(corpus, epsilon, k, radius, threads=threads)
    if kind == lsh.KIND:
        return lsh.build_lsh(corpus, k, radius, seed=seed, reps=reps, width=width)
    raise InvalidParameterError(f"unknown index kind {kind!r}; choose from {', '.join(KINDS)}")


def approximation_factor(index):
    if index.kind == ann5.KIND:
        return 5 + index.epsilon
    if index.kind == ann2.KIND:
        return 2 + index.epsilon
    return 2 * index.width + 1


def query(index, tau):
    """Answer one query; returns (identifier or None, lookups made).

    A two-eps query over the enumeration budget raises QueryBudgetError.
    """
    if index.kind == ann5.KIND:
        return ann5.query_five_eps(index, tau), 1
    if index.kind == ann2.KIND:
        return ann2.query_two_eps(index, tau, with_probes=True)
    found, rep = lsh.query_lsh(index, tau, with_repetition=True)
    return found, index.reps if rep is None else rep + 1


def completeness_applies(index, tau):
    """Whether a "no" from this index can be held against it for ``tau``.

    The deterministic indexes promise completeness only for queries with at
    most k vertices after scaling; the randomized index never promises it
    for an individual query.
    """
    if index.kind == lsh.KIND:
        return False
    return len(canonicalize(scale(tau, index.radius))) <= index.k


def curve_of(index, ident):
    return index.curves[index.ids.index(ident)]


__all__ = ["KINDS", "build", "query", "approximation_factor", "completeness_applies",
           "curve_of", "QueryBudgetError"]
