"""Curve pairs that encode set disjointness as a Fréchet distance gap.

Three families are provided: time series whose continuous distance is
at most 1 for disjoint sets and at least 2 otherwise; planar point
sequences separating 1 from 1.11 under the discrete distance; and point
sequences in dimension U+2 separating sqrt(2) from sqrt(3). A random
sign projection maps the last family to low dimension with near-isometric
squared distances.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from .core import canonicalize
from .errors import InvalidParameterError


@dataclass(frozen=True)
class SetPair:
    universe_size: int
    alice: frozenset
    bob: frozenset

    def __post_init__(self):
        if isinstance(self.universe_size, bool) or not isinstance(self.universe_size, int) \
                or self.universe_size < 1:
            raise InvalidParameterError("universe size must be a positive integer")
        object.__setattr__(self, "alice", frozenset(self.alice))
        object.__setattr__(self, "bob", frozenset(self.bob))
        for name, elems in (("alice", self.alice), ("bob", self.bob)):
            bad = [e for e in elems if not (isinstance(e, int) and 1 <= e <= self.universe_size)]
            if bad:
                raise InvalidParameterError(f"{name} has elements outside 1..{self.universe_size}: {bad}")

    @property
    def intersecting(self):
        return bool(self.alice & self.bob)


# continuous gadget -----------------------------------------------------------

def continuous_gadget(sp, raw=False):
    """Time series (x, y) with distance <= 1 iff the sets are disjoint
    (and >= 2 otherwise). Returned in canonical form unless ``raw``."""
    U = sp.universe_size
    x, y = [0.0], [0.0]
    for i in range(1, U + 1):
        if i in sp.alice:
            x += [4 * i + 4, 4 * i]
        else:
            x += [4 * i, 4 * i]
        if i in sp.bob:
            y += [4 * i, 4 * i]
        else:
            y += [4 * i + 3, 4 * i + 1]
    x.append(4 * U + 5)
    y.append(4 * U + 5)
    x = np.array(x, dtype=np.float64)
    y = np.array(y, dtype=np.float64)
    if raw:
        return x, y
    return canonicalize(x), canonicalize(y)


# planar discrete gadget --------------------------------------------------------

def _pt(a, b):
    # stored through exact decimal fractions before conversion
    return (float(Fraction(a)), float(Fraction(b)))


PLANAR_POINTS = {
    "alpha0": _pt("-1.61", "0.5"), "alpha1": _pt("-1.61", "-0.5"),
    "alpha0'": _pt("1.61", "0.5"), "alpha1'": _pt("1.61", "-0.5"),
    "beta0": _pt("-0.61", "0.5"), "beta1": _pt("-0.61", "-0.5"),
    "beta0'": _pt("0.61", "0.5"), "beta1'": _pt("0.61", "-0.5"),
    "s": _pt("0", "0"), "w": _pt("-0.75", "0"), "w'": _pt("0.75", "0"),
    "y1": _pt("-0.25", "0"), "y2": _pt("0.25", "0"),
    "x1": _pt("-0.25", "-1"), "x2": _pt("0.25", "-1"),
}


def vector_gadget(bits, family):
    """Point names for one bit vector; ``family`` is "alpha" or "beta".

    Odd coordinates (1-based) use the unprimed points, even ones the primed.

    >>> vector_gadget((0, 1, 0, 0), "alpha")
    ['alpha0', "alpha1'", 'alpha0', "alpha0'"]
    """
    names = []
    for j, bit in enumerate(bits, start=1):
        if bit not in (0, 1):
            raise InvalidParameterError("bit vectors may only contain 0 and 1")
        names.append(f"{family}{bit}" + ("" if j % 2 else "'"))
    return names


def _check_vectors(vectors, D, who):
    out = []
    for v in vectors:
        v = tuple(int(b) for b in v)
        if len(v) != D:
            raise InvalidParameterError(f"{who} vectors must all have length {D}")
        out.append(v)
    return out


def planar_gadget_names(a_vectors, b_vectors, skip_pairs=None):
    a_vectors = list(a_vectors)
    b_vectors = list(b_vectors)
    if not a_vectors:
        raise InvalidParameterError("need at least one query-side vector")
    D = len(a_vectors[0])
    if D == 0 or D % 2:
        raise InvalidParameterError(f"vector length must be positive and even, got {D}")
    a_vectors = _check_vectors(a_vectors, D, "query-side")
    b_vectors = _check_vectors(b_vectors, D, "data-side")
    k, m = len(a_vectors), len(b_vectors)
    if skip_pairs is None:
        # enough skipping pairs to pass over every query gadget on either side
        skip_pairs = D * max(k, m) // 2
    W = ["w", "w'"] * skip_pairs
    P = list(W) + ["x1"]
    for b in b_vectors:
        P += ["s"] + vector_gadget(b, "beta")
    P += ["s", "x2"] + W
    Q = []
    for a in a_vectors:
        Q += ["y1"] + vector_gadget(a, "alpha") + ["y2"]
    return P, Q


def discrete_planar_gadget(a_vectors, b_vectors, skip_pairs=None):
    """Planar point sequences (P, Q) with discrete distance <= 1 when some
    query-side vector equals a data-side vector, and >= 1.11 otherwise.

    ``skip_pairs`` sets the number of (w, w') repetitions at each end of P;
    by default D * max(k, m) / 2.
    """
    P, Q = planar_gadget_names(a_vectors, b_vectors, skip_pairs)
    return (np.array([PLANAR_POINTS[n] for n in P]),
            np.array([PLANAR_POINTS[n] for n in Q]))


# high-dimensional gadget ---------------------------------------------------------

def highdim_gadget(sp):
    """Point sequences in R^(U+2): distance <= sqrt(2) when the sets
    intersect, >= sqrt(3) when disjoint. Alice's set forms the query side Q."""
    if not sp.alice:
        raise InvalidParameterError("the query-side set must be non-empty")
    U = sp.universe_size

    def point(a, b, e=None):
        v = np.zeros(U + 2)
        v[0], v[1] = a, b
        if e is not None:
            v[1 + e] = 1.0
        return v

    w, x1, x2, s = point(1, 1), point(1, -1), point(-1, 1), point(0, 0)
    y1, y2 = point(1, 0), point(0, 1)
    P = [w, x1]
    for t in sorted(sp.bob):
        P += [s, point(0, 0, t)]
    P += [s, x2, w]
    Q = []
    for i in sorted(sp.alice):
        Q += [y1, point(1, 1, i), y2]
    return np.array(P), np.array(Q)


def jl_dimension(n, epsilon, beta=1.0):
    """Target dimension sufficient for a (1 +/- epsilon) embedding of n
    points with failure probability n**-beta under random sign matrices."""
    return math.ceil((4 + 2 * beta) / (epsilon ** 2 / 2 - epsilon ** 3 / 3) * math.log(n))


def sign_matrix(target_dim, dim, seed):
    rng = np.random.default_rng(seed)
    return rng.choice(np.array([-1.0, 1.0]), size=(target_dim, dim))


def random_sign_projection(points, target_dim, seed=0, matrix=None):
    """Map every point by one shared matrix with independent uniform +/-1
    entries (no normalization).

    ``matrix`` overrides the random draw, e.g. an identity for diagnostics.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts[None, :]
    if isinstance(target_dim, bool) or not isinstance(target_dim, int) or target_dim < 1:
        raise InvalidParameterError("target dimension must be a positive integer")
    if matrix is None:
        matrix = sign_matrix(target_dim, pts.shape[1], seed)
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.shape != (target_dim, pts.shape[1]):
        raise InvalidParameterError(
            f"projection matrix must have shape {(target_dim, pts.shape[1])}, got {matrix.shape}")
    return pts @ matrix.T
