"""Certified evaluation: intervals, balls, tail majorants and grid extrema.

The evaluation table and the transformation checks live in the `suite` and
`identities` submodules, which depend on the form constructors.
"""

from .ball import Ball
from .evaluate import CertifiedSeries, abs_sum_bound, deriv_bound, eval_ball
from .grid import GridExtremum, Prefactor, grid_extremum
from .intervals import (
    decide,
    float_down,
    float_up,
    hi,
    ival,
    lo,
    round_down,
    round_up,
    working_precision,
)
from .tails import TailBound, TailKind

__all__ = [
    "Ball",
    "CertifiedSeries",
    "GridExtremum",
    "Prefactor",
    "TailBound",
    "TailKind",
    "abs_sum_bound",
    "decide",
    "deriv_bound",
    "eval_ball",
    "float_down",
    "float_up",
    "grid_extremum",
    "hi",
    "ival",
    "lo",
    "round_down",
    "round_up",
    "working_precision",
]
