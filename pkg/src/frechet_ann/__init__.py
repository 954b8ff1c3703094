"""Approximate near-neighbor search for time series under the Fréchet distance."""

from ._backend import NAME as BACKEND
from .core import (
    ShiftedGrid,
    UniformGrid,
    arclength,
    canonicalize,
    scale,
    snap_nearest,
    snap_shifted,
)
from .errors import DatasetError, InvalidParameterError, QueryBudgetError
from .frechet import decide_continuous, discrete_frechet, distance_continuous
from .signature import Signature, compute_signature, verify_signature
from .ann5 import build_five_eps, query_five_eps
from .ann2 import build_two_eps, query_two_eps
from .lsh import build_lsh, query_lsh
from .oracle import OracleAnswer, Verdict, scan, validate

__version__ = "0.1.0"
