"""Curve representation helpers: canonical form, grids, snapping, scaling.

A time series is a 1-D float64 array of vertex values, linearly interpolated
between consecutive entries. Every function here accepts any array-like and
returns fresh arrays, so callers may pass lists, tuples or numpy arrays.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import InvalidParameterError


def as_series(values):
    """Validate ``values`` and return them as a read-only float64 array."""
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidParameterError("a time series must be one-dimensional")
    if arr.size == 0:
        raise InvalidParameterError("a time series needs at least one value")
    if not np.all(np.isfinite(arr)):
        raise InvalidParameterError("time series values must be finite")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class UniformGrid:
    width: float

    def __post_init__(self):
        if not self.width > 0:
            raise InvalidParameterError("grid width must be positive")


@dataclass(frozen=True)
class ShiftedGrid:
    width: float
    shift: float = 0.0

    def __post_init__(self):
        if not self.width > 0:
            raise InvalidParameterError("grid width must be positive")
        if not 0 <= self.shift <= self.width:
            raise InvalidParameterError("grid shift must lie in [0, width]")


def canonical_positions(values):
    """Indices of the vertices kept by :func:`canonicalize`.

    Runs of equal values are treated as a single vertex (the first index of
    the run is reported).
    """
    n = len(values)
    if n == 0:
        return []
    # collapse runs of equal values
    runs = [0]
    for i in range(1, n):
        if values[i] != values[runs[-1]]:
            runs.append(i)
    if len(runs) <= 2:
        return runs
    keep = [runs[0]]
    for a, b, c in zip(runs, runs[1:], runs[2:]):
        vb = values[b]
        if (vb - values[a]) * (values[c] - vb) < 0:
            keep.append(b)
    keep.append(runs[-1])
    return keep


def canonicalize(ts):
    """Keep the endpoints and every strict interior local extremum.

    >>> canonicalize([1, 2, 3]).tolist()
    [1.0, 3.0]
    """
    arr = as_series(ts)
    out = arr[canonical_positions(arr)].copy()
    out.flags.writeable = False
    return out


def canonical_key(cells):
    """Canonical form of an integer sequence, as a tuple."""
    cells = list(cells)
    return tuple(cells[i] for i in canonical_positions(cells))


def is_canonical(values):
    return len(canonical_positions(values)) == len(values)


def snap_nearest_cells(ts, width):
    """Index of the nearest grid point for each value, ties going up."""
    arr = np.asarray(ts, dtype=np.float64)
    return np.floor(arr / width + 0.5).astype(np.int64)


def snap_nearest(ts, grid):
    """Replace each value by its nearest point of ``grid``."""
    width = grid.width if isinstance(grid, UniformGrid) else UniformGrid(grid).width
    arr = as_series(ts)
    return snap_nearest_cells(arr, width).astype(np.float64) * width


def snap_shifted(ts, grid):
    """Cell index ``floor((x - shift) / width)`` of every value."""
    arr = as_series(ts)
    return np.floor((arr - grid.shift) / grid.width).astype(np.int64)


def arclength(ts):
    arr = as_series(ts)
    return float(np.abs(np.diff(arr)).sum())


def scale(ts, r):
    """Divide every value by ``r`` so that the query radius becomes 1."""
    if not (isinstance(r, (int, float, np.floating, np.integer)) and r > 0 and math.isfinite(r)):
        raise InvalidParameterError("scale factor must be a positive finite number")
    arr = as_series(ts) / float(r)
    arr.flags.writeable = False
    return arr


def concatenate(a, b):
    """Join two series, merging the shared junction vertex when equal."""
    a = as_series(a)
    b = as_series(b)
    if a[-1] == b[0]:
        return np.concatenate([a, b[1:]])
    return np.concatenate([a, b])
