"""Truncated Fourier expansions."""

from arithmetic.box import TruncationBound
from fourier.series import (
    TruncatedSeries,
    WeightPair,
    add,
    divide,
    ideal_coefficient,
    mul,
    scalar_mul,
    truncate,
    unit_translate,
)

__all__ = [
    "TruncatedSeries",
    "TruncationBound",
    "WeightPair",
    "add",
    "divide",
    "ideal_coefficient",
    "mul",
    "scalar_mul",
    "truncate",
    "unit_translate",
]
