"""Timing comparison of the compiled and pure-Python kernels."""

import math
import time

import numpy as np

from . import _backend
from .candidates import ranges_around
from .signature import compute_signature


def _time(fn, reps):
    best = math.inf
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _workloads(seed):
    rng = np.random.default_rng(seed)
    pairs = [(rng.uniform(0, 100, 40), rng.uniform(0, 100, 40)) for _ in range(20)]
    near = []
    for p, _ in pairs:
        near.append((p, p + rng.uniform(-1, 1, p.size)))
    P = rng.normal(size=(60, 3))
    Q = rng.normal(size=(60, 3))
    curve = np.array([0.0, 10.0, 3.0, 12.0])
    sig = compute_signature(curve, 1.0)
    lows, highs = ranges_around(sig.values, 2.5, 0.5)
    return {
        "decide_far": lambda k: [k.decide_1d(a, b, 5.0) for a, b in pairs],
        "decide_near": lambda k: [k.decide_1d(a, b, 1.0) for a, b in near],
        "discrete_frechet": lambda k: k.discrete_frechet_nd(P, Q),
        "enumerate_keys": lambda k: k.enumerate_keys(curve, lows, highs, 0.5, 3.5, 4, 7, 3),
    }


def run_benchmark(reps=5, seed=0):
    """Best-of-``reps`` wall time per workload and backend, plus speedups."""
    backends = {"python": _backend.python}
    if _backend.compiled is not None:
        backends["compiled"] = _backend.compiled
    results = {}
    for name, work in _workloads(seed).items():
        row = {b: _time(lambda k=kern: work(k), reps) for b, kern in backends.items()}
        if "compiled" in row and row["compiled"] > 0:
            row["speedup"] = row["python"] / row["compiled"]
        results[name] = row
    return {"backends": sorted(backends), "active": _backend.NAME, "reps": reps,
            "seed": seed, "seconds": results}
