"""δ-signatures of time series: construction and an independent checker.

A δ-signature keeps a subsequence of a curve's extrema such that the curve
stays within Fréchet distance δ of the simplified curve, while every kept
edge is long and makes no large backward excursion. All index positions
refer to the canonical (extrema-only) form of the input.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import as_series, canonicalize
from .errors import InvalidParameterError


@dataclass(frozen=True)
class Signature:
    indices: tuple
    values: tuple
    delta: float

    @property
    def curve(self):
        return np.array(self.values, dtype=np.float64)

    def __len__(self):
        return len(self.indices)


class SignatureCheck(NamedTuple):
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


# number of times the repair pass had to run; exposed for diagnostics
repair_count = 0


def _scan(x, delta):
    """Linear scan emitting confirmed reversals larger than 2*delta."""
    m = len(x)
    if m == 1:
        return [0]
    sig = [0]
    phase = 0
    ext = 0
    x0 = x[0]
    for i in range(1, m):
        v = x[i]
        if phase == 0:
            if v > x0 + delta:
                phase, ext = 1, i
            elif v < x0 - delta:
                phase, ext = -1, i
        elif phase == 1:
            if v > x[ext]:
                ext = i
            elif v < x[ext] - 2 * delta:
                sig.append(ext)
                phase, ext = -1, i
        else:
            if v < x[ext]:
                ext = i
            elif v > x[ext] + 2 * delta:
                sig.append(ext)
                phase, ext = 1, i
    last = m - 1
    if phase != 0 and ext != last and abs(x[ext] - x[last]) > delta:
        # the pending extremum is kept only if the closing edge is long enough
        sig.append(ext)
    sig.append(last)
    return sig


def compute_signature(ts, delta):
    """Compute a δ-signature of ``ts``.

    >>> compute_signature([0, 0.5, 0, 10], 1.0).values
    (0.0, 10.0)
    """
    global repair_count
    if delta < 0:
        raise InvalidParameterError("delta must be non-negative")
    x = canonicalize(ts)
    delta = float(delta)
    idx = _scan(x, delta)
    sig = _make(x, idx, delta)
    if not verify_signature(x, sig, delta):
        repair_count += 1
        sig = _repair(x, idx, delta)
    return sig


def _make(x, idx, delta):
    return Signature(tuple(int(i) for i in idx), tuple(float(x[i]) for i in idx), delta)


def _repair(x, idx, delta):
    """Drop interior vertices until the checker accepts (quadratic fallback)."""
    idx = list(idx)
    while len(idx) > 2:
        for pos in range(1, len(idx) - 1):
            trial = idx[:pos] + idx[pos + 1:]
            if verify_signature(x, _make(x, trial, delta), delta):
                return _make(x, trial, delta)
        for pos in range(1, len(idx) - 2):
            trial = idx[:pos] + idx[pos + 2:]
            if verify_signature(x, _make(x, trial, delta), delta):
                return _make(x, trial, delta)
        idx = idx[:1] + idx[2:]
    sig = _make(x, idx, delta)
    check = verify_signature(x, sig, delta)
    if not check:
        raise RuntimeError(f"no valid signature found: {check.reason}")
    return sig


def _max_drop(seg):
    """Largest seg[a] - seg[b] over a < b."""
    best = 0.0
    peak = seg[0]
    for v in seg[1:]:
        if peak - v > best:
            best = peak - v
        if v > peak:
            peak = v
    return best


def verify_signature(ts, sig, delta):
    """Check the four signature properties exactly.

    Returns a :class:`SignatureCheck` that is truthy on success and carries
    the first violated property otherwise. A signature with only the two
    end points is exempt from the edge-length property, which no curve of
    small value range could satisfy.
    """
    x = canonicalize(ts)
    idx = list(sig.indices) if isinstance(sig, Signature) else list(sig)
    m = len(x)
    if not idx or any(not 0 <= i < m for i in idx):
        raise InvalidParameterError("signature indices out of range")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise InvalidParameterError("signature indices must be strictly increasing")
    if idx[0] != 0 or idx[-1] != m - 1:
        raise InvalidParameterError("signature must start and end at the curve end points")
    if isinstance(sig, Signature) and any(
            float(x[i]) != v for i, v in zip(idx, sig.values)):
        raise InvalidParameterError("signature values do not match the curve")
    ell = len(idx)
    if ell == 1:
        return SignatureCheck(True)
    v = [float(x[i]) for i in idx]
    two_d = 2 * delta

    for i in range(1, ell - 1):
        lo, hi = min(v[i - 1], v[i + 1]), max(v[i - 1], v[i + 1])
        if lo <= v[i] <= hi:
            return SignatureCheck(False, f"non-degeneracy violated at signature vertex {i}")

    for i in range(ell - 1):
        seg = x[idx[i]: idx[i + 1] + 1]
        if v[i] < v[i + 1] and _max_drop(seg) > two_d:
            return SignatureCheck(False, f"direction-preserving violated on edge {i}")
        if v[i] > v[i + 1] and _max_drop(-seg) > two_d:
            return SignatureCheck(False, f"direction-preserving violated on edge {i}")

    if ell > 2:
        for i in range(ell - 1):
            length = abs(v[i + 1] - v[i])
            boundary = i == 0 or i == ell - 2
            if length <= (delta if boundary else two_d):
                return SignatureCheck(False, f"minimum edge length violated on edge {i}")

    for i in range(ell - 1):
        seg = x[idx[i]: idx[i + 1] + 1]
        a, b = min(v[i], v[i + 1]), max(v[i], v[i + 1])
        allowed = [(a, b)]
        if i == 0:
            allowed.append((v[0] - delta, v[0] + delta))
        if i == ell - 2:
            allowed.append((v[-1] - delta, v[-1] + delta))
        for value in seg:
            if not any(lo <= value <= hi for lo, hi in allowed):
                return SignatureCheck(False, f"range violated on edge {i}: {value} outside padded range")
    return SignatureCheck(True)


def stabs_in_order(signature_values, curve, radius, strict=False):
    """Greedy test that ``curve``'s vertices hit each range around the
    signature values in order.

    With ``strict`` every range needs its own vertex; otherwise consecutive
    ranges may share one (they can overlap around the first and last edge).
    """
    verts = canonicalize(curve)
    pos = 0
    for c in signature_values:
        while pos < len(verts) and abs(verts[pos] - c) > radius:
            pos += 1
        if pos == len(verts):
            return False
        if strict:
            pos += 1
    return True
