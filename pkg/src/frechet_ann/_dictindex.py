"""State and helpers shared by the deterministic dictionary indexes."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import math

from .core import as_series
from .errors import InvalidParameterError


def check_epsilon(epsilon):
    if not (isinstance(epsilon, (int, float)) and 0 < epsilon <= 1):
        raise InvalidParameterError(f"epsilon must lie in (0, 1], got {epsilon!r}")
    return float(epsilon)


def check_k(k):
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k!r}")
    return k


def check_radius(r):
    if not (isinstance(r, (int, float)) and math.isfinite(r) and r > 0):
        raise InvalidParameterError(f"radius must be positive and finite, got {r!r}")
    return float(r)


def split_corpus(corpus):
    """Accept a sequence of series or a mapping id -> series."""
    if hasattr(corpus, "items"):
        pairs = list(corpus.items())
    else:
        pairs = list(enumerate(corpus))
    ids = [i for i, _ in pairs]
    if len(set(ids)) != len(ids):
        raise InvalidParameterError("corpus identifiers must be unique")
    return ids, [as_series(c) for _, c in pairs]


@dataclass
class CurveStats:
    """Per-curve bookkeeping from a build.

    ``candidates`` is the number of distinct grid sequences generated before
    filtering; ``stored`` is the number of keys that survived the filter.
    ``skipped`` marks curves excluded by the signature-length rule.
    """
    signature_length: int
    candidates: int = 0
    stored: int = 0
    skipped: bool = False


@dataclass
class DictIndex:
    kind: str
    epsilon: float
    k: int
    radius: float
    ids: list
    curves: list
    table: dict
    stats: list = field(default_factory=list)

    @property
    def width(self):
        return self.epsilon / 2

    def __len__(self):
        return len(self.table)

    def lookup(self, key):
        pos = self.table.get(key)
        return None if pos is None else self.ids[pos]

    def max_candidates(self):
        return max((s.candidates for s in self.stats), default=0)


def generate_all(work, items, threads):
    """Run ``work`` on every item, preserving order; optionally threaded."""
    if threads and threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(work, items))
    return [work(item) for item in items]


def merge_first_writer(results):
    """Insert keys curve by curve; an existing key keeps its first owner."""
    table = {}
    for pos, keys in enumerate(results):
        for key in keys:
            table.setdefault(key, pos)
    return table
