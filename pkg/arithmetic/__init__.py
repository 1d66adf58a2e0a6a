"""Exact arithmetic: the base field, ideals, truncation boxes and coefficient fields."""

from arithmetic.base_field import (
    BaseField,
    FieldElement,
    canonical_tp_generator,
    get_base_field,
    is_totally_positive,
    make_base_field,
)
from arithmetic.box import TruncationBound, bn, enumerate_box, parse_bound
from arithmetic.coeff_field import CoeffElement, CoeffField, compositum
from arithmetic.ideals import (
    PrincipalIdeal,
    factor_ideal,
    ideal_divisors,
    ideals_of_norm,
    is_prime_ideal,
    primes_above,
)

__all__ = [
    "BaseField",
    "FieldElement",
    "canonical_tp_generator",
    "get_base_field",
    "is_totally_positive",
    "make_base_field",
    "TruncationBound",
    "bn",
    "enumerate_box",
    "parse_bound",
    "CoeffElement",
    "CoeffField",
    "compositum",
    "PrincipalIdeal",
    "factor_ideal",
    "ideal_divisors",
    "ideals_of_norm",
    "is_prime_ideal",
    "primes_above",
]
