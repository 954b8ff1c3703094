"""Exhaustive linear-scan ground truth and a verdict check for index answers."""

from enum import Enum
from typing import NamedTuple, Optional

from ._dictindex import split_corpus
from .core import as_series
from .errors import InvalidParameterError
from .frechet import decide_continuous, distance_bounds, distance_continuous


class OracleAnswer(NamedTuple):
    any_within_r: bool
    best_id: Optional[object]
    best_distance: float


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL_SOUNDNESS = "FAIL(soundness)"
    FAIL_COMPLETENESS = "FAIL(completeness)"
    SKIPPED = "SKIPPED-PRECONDITION"

    @property
    def failed(self):
        return self in (Verdict.FAIL_SOUNDNESS, Verdict.FAIL_COMPLETENESS)

    def __str__(self):
        return self.value


def scan(corpus, tau, r, tol=1e-9):
    """Decide every corpus curve against ``tau`` at radius ``r`` and locate
    the nearest one.

    ``best_distance`` is within ``tol`` above the true minimum distance.
    Curves that cannot beat the current best are rejected with a single
    decision call instead of a full bisection.
    """
    if not r > 0:
        raise InvalidParameterError("radius must be positive")
    if not tol > 0:
        raise InvalidParameterError("tol must be positive")
    ids, curves = split_corpus(corpus)
    tau = as_series(tau)
    any_within = False
    best_id, best = None, float("inf")
    for ident, pi in zip(ids, curves):
        if decide_continuous(pi, tau, r):
            any_within = True
        lo, _ = distance_bounds(pi, tau)
        if lo > best or (best < float("inf") and not decide_continuous(pi, tau, best)):
            continue
        d = distance_continuous(pi, tau, tol)
        if d < best:
            best_id, best = ident, d
    return OracleAnswer(any_within, best_id, best)


def validate(returned, oracle_answer, c, r, tau=None, curve=None,
             preconditions_met=True, tol=1e-6):
    """Judge one index answer against the oracle.

    ``returned`` is the identifier the index gave (None for "no"), ``curve``
    the corresponding corpus curve. A returned curve must lie within
    ``c*r + tol`` of ``tau``. A "no" is wrong only when the oracle found
    a curve within ``r``, and only if the index's completeness
    preconditions hold; otherwise the verdict is SKIPPED-PRECONDITION.
    """
    if returned is not None:
        if curve is None or tau is None:
            raise InvalidParameterError("a returned answer needs its curve and the query")
        if decide_continuous(curve, tau, c * r + tol):
            return Verdict.PASS
        return Verdict.FAIL_SOUNDNESS
    if not oracle_answer.any_within_r:
        return Verdict.PASS
    if not preconditions_met:
        return Verdict.SKIPPED
    return Verdict.FAIL_COMPLETENESS
