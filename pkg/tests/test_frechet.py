import math

from hypothesis import assume, given, settings, strategies as st
import numpy as np
import pytest

from conftest import series, values
from frechet_ann.core import concatenate
from frechet_ann.errors import InvalidParameterError
from frechet_ann.frechet import (
    decide_continuous,
    discrete_frechet,
    distance_bounds,
    distance_continuous,
)
from oracles import discrete_dp, frechet_bracket

TOL = 1e-9


@pytest.mark.parametrize("pi, tau, delta, expected", [
    ([0, 4], [1, 3], 1.0, True),
    ([0, 4], [1, 3], 0.99, False),
    ([0, 4, 0], [0, 0], 3.99, False),
    ([0, 4, 0], [0, 0], 4.0, True),
    ([0, 4, 0], [0], 4.0, True),
    ([3], [3], 0.0, True),
    ([0, 10, 0, 10], [0, 10], 4.99, False),
    ([0, 10, 0, 10], [0, 10], 5.0, True),
])
def test_decide_examples(pi, tau, delta, expected):
    assert decide_continuous(pi, tau, delta) is expected
    assert decide_continuous(tau, pi, delta) is expected


def test_decide_rejects_negative_delta():
    with pytest.raises(InvalidParameterError):
        decide_continuous([0, 1], [0, 1], -1e-3)
    with pytest.raises(InvalidParameterError):
        decide_continuous([0, 1], [0, 1], math.nan)


@pytest.mark.parametrize("pi, tau, expected", [
    ([0, 4], [1, 3], 1.0),
    ([1, 5, 2], [1, 5, 2], 0.0),
    ([0, 10], [0.2, 9.8], 0.2),
    ([0, 10, 0, 10], [0, 10], 5.0),
])
def test_distance_examples(pi, tau, expected):
    d = distance_continuous(pi, tau, TOL)
    assert expected - TOL <= d <= expected + TOL
    assert decide_continuous(pi, tau, d)


def test_distance_rejects_bad_tol():
    with pytest.raises(InvalidParameterError):
        distance_continuous([0], [1], 0)


tiny_ints = st.integers(-6, 6).map(float)


@settings(max_examples=60)
@given(series(max_size=5, elements=tiny_ints), series(max_size=5, elements=tiny_ints))
def test_distance_agrees_with_refined_discrete(pi, tau):
    lo, hi = frechet_bracket(pi, tau, step=0.25)
    d = distance_continuous(pi, tau, TOL)
    assert lo - 1e-9 <= d <= hi + 1e-9


@given(series(max_size=8), series(max_size=8), st.floats(0, 60))
def test_decision_is_symmetric(pi, tau, delta):
    assert decide_continuous(pi, tau, delta) == decide_continuous(tau, pi, delta)


@given(series(max_size=8), series(max_size=8), st.floats(0, 50), st.floats(0, 20))
def test_decision_is_monotone(pi, tau, d1, extra):
    if decide_continuous(pi, tau, d1):
        assert decide_continuous(pi, tau, d1 + extra)


@given(series(max_size=6), series(max_size=6), series(max_size=6))
def test_triangle_inequality(a, b, c):
    ab = distance_continuous(a, b, TOL)
    bc = distance_continuous(b, c, TOL)
    ac = distance_continuous(a, c, TOL)
    assert ac <= ab + bc + 3 * TOL


@given(values, values, values, values)
def test_segment_distance_is_endpoint_maximum(a1, a2, b1, b2):
    d = distance_continuous([a1, a2], [b1, b2], TOL)
    assert abs(d - max(abs(a1 - b1), abs(a2 - b2))) <= TOL


@given(series(max_size=10), st.floats(0, 5), st.integers(0, 2**32 - 1))
def test_per_vertex_perturbation_bound(xs, eps, seed):
    rng = np.random.default_rng(seed)
    ys = np.asarray(xs) + rng.uniform(-eps, eps, len(xs))
    assert distance_continuous(xs, ys, TOL) <= eps + TOL


@given(series(max_size=5), series(max_size=5), series(max_size=5), series(max_size=5))
def test_concatenation_bound(t1, t2, p1, p2):
    # make the pieces share junction vertices
    t2 = [t1[-1]] + t2
    p2 = [p1[-1]] + p2
    left = distance_continuous(t1, p1, TOL)
    right = distance_continuous(t2, p2, TOL)
    both = distance_continuous(concatenate(t1, t2), concatenate(p1, p2), TOL)
    assert both <= max(left, right) + TOL


def _subdivide_and_perturb(a, b, delta, rng):
    lo, hi = min(a, b), max(a, b)
    inner = np.sort(rng.uniform(lo, hi, rng.integers(0, 5)))
    if a > b:
        inner = inner[::-1]
    pts = np.concatenate([[a], inner, [b]])
    pts = pts + rng.uniform(-delta, delta, len(pts))
    # clamp endpoints so the segment's range is covered by the curve's ends
    if a <= b:
        pts[0] = min(pts[0], a)
        pts[-1] = max(pts[-1], b)
    else:
        pts[0] = max(pts[0], a)
        pts[-1] = min(pts[-1], b)
    return pts


@given(values, values, st.floats(0.01, 5), st.floats(0.01, 5), st.integers(0, 2**32 - 1))
def test_tight_matching_corollary(a, b, d1, d2, seed):
    rng = np.random.default_rng(seed)
    tau = _subdivide_and_perturb(a, b, d1, rng)
    pi = _subdivide_and_perturb(a, b, d2, rng)
    dx_tau = distance_continuous([a, b], tau, TOL)
    dx_pi = distance_continuous([a, b], pi, TOL)
    assert distance_continuous(tau, pi, TOL) <= max(dx_tau, dx_pi) + 3 * TOL


@given(series(max_size=8), series(max_size=8))
def test_discrete_dominates_continuous(pi, tau):
    assert discrete_frechet(pi, tau) >= distance_continuous(pi, tau, TOL) - TOL


@given(series(max_size=8), series(max_size=8))
def test_bounds_bracket_distance(pi, tau):
    lo, hi = distance_bounds(pi, tau)
    d = distance_continuous(pi, tau, TOL)
    assert lo - TOL <= d <= hi + TOL


# discrete distance ----------------------------------------------------------

@pytest.mark.parametrize("P, Q, expected", [
    ([[0.0], [4.0]], [[1.0], [3.0]], 1.0),
    ([[0.0, 0.0]], [[3.0, 4.0]], 5.0),
    ([[1.0, 2.0], [3.0, 4.0]], [[1.0, 2.0], [3.0, 4.0]], 0.0),
])
def test_discrete_examples(P, Q, expected):
    assert discrete_frechet(P, Q) == pytest.approx(expected, abs=1e-12)


def test_discrete_dimension_mismatch():
    with pytest.raises(InvalidParameterError):
        discrete_frechet([[0, 0]], [[0, 0, 0]])


point_seqs = st.integers(1, 3).flatmap(
    lambda d: st.tuples(
        st.lists(st.lists(values, min_size=d, max_size=d), min_size=1, max_size=7),
        st.lists(st.lists(values, min_size=d, max_size=d), min_size=1, max_size=7)))


@given(point_seqs)
def test_discrete_matches_reference_and_is_symmetric(pq):
    P, Q = pq
    d = discrete_frechet(P, Q)
    assert d == pytest.approx(discrete_dp(P, Q), abs=1e-9)
    assert d == pytest.approx(discrete_frechet(Q, P), abs=1e-12)


@given(series(max_size=7), series(max_size=7))
def test_backends_agree_on_decisions(pi, tau):
    from frechet_ann import _backend
    assume(_backend.compiled is not None)
    for delta in (0.0, 0.5, 3.0, 10.0, 40.0):
        assert bool(_backend.compiled.decide_1d(pi, tau, delta)) == \
            bool(_backend.python.decide_1d(pi, tau, delta))
