"""
Certified enclosures of coefficient field elements under complex embeddings.

|σ(c)|² = σ(c·τ(c)) with τ the complex conjugation, which negates every radical
of a negative radicand. c·τ(c) is fixed by τ, so its image is real and can be
enclosed with outward-rounded real intervals.
"""

from typing import List, Optional, Sequence, Tuple

import mpmath
from mpmath import iv

from arithmetic.coeff_field import CoeffElement
from config.settings import settings


def _real_enclosure(c: CoeffElement, signs: Sequence[int]):
    """Interval containing σ(c) for a τ-fixed c."""
    radicands = c.field.radicands
    roots = [iv.sqrt(iv.mpf(abs(r))) for r in radicands]
    total = iv.mpf(0)
    for mask, coefficient in enumerate(c.coords):
        if not coefficient:
            continue
        term = iv.mpf(coefficient.numerator) / coefficient.denominator
        negatives = 0
        for i, root in enumerate(roots):
            if (mask >> i) & 1:
                term = term * root * signs[i]
                if radicands[i] < 0:
                    negatives += 1
        if negatives % 2:
            raise ValueError(f"{c} is not fixed by complex conjugation")
        # i^2 = -1 for each pair of imaginary radicals
        if negatives % 4 == 2:
            term = -term
        total = total + term
    return total


def lower_endpoint(x) -> mpmath.mpf:
    return mpmath.mp.make_mpf(x._mpi_[0])


def upper_endpoint(x) -> mpmath.mpf:
    return mpmath.mp.make_mpf(x._mpi_[1])


def abs_enclosure(c: CoeffElement, signs: Optional[Sequence[int]] = None, dps: Optional[int] = None):
    """Outward-rounded interval containing |σ(c)|, σ given by radical signs."""
    signs = list(signs or [1] * len(c.field.radicands))
    saved = iv.dps
    iv.dps = dps or settings.INTERVAL_DPS
    try:
        if c.is_zero():
            return iv.mpf(0)
        square = _real_enclosure(c * c.complex_conjugate(), signs)
        if lower_endpoint(square) < 0:
            square = iv.mpf([0, square])
        return iv.sqrt(square)
    finally:
        iv.dps = saved


def all_abs_enclosures(c: CoeffElement, dps: Optional[int] = None) -> List[Tuple[Tuple[int, ...], object]]:
    """(signs, |σ(c)| enclosure) over every complex embedding σ."""
    return [(signs, abs_enclosure(c, signs, dps)) for signs in c.field.complex_embeddings()]


def interval_width(x) -> mpmath.mpf:
    return upper_endpoint(x) - lower_endpoint(x)
