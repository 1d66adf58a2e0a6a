"""
Newform expansions from Hecke eigenvalues, and the oldform maps V_{m,b}.

Ideal-indexed coefficients of a normalised eigenform satisfy
    c(ab) = c(a)c(b)                                   (a, b coprime)
    c(q^e) = c(q)c(q^{e-1}) - χ(q)N(q)^{k1-1}c(q^{e-2})  (q ∤ n)
    c(q^e) = c(q)^e                                    (q | n)
and the element-indexed coefficients follow from c_α = c((α))·α2^{-(k1-k2)/2}.
"""

from dataclasses import replace
from typing import Dict, List, Optional, Sequence, Tuple

from arithmetic.box import TruncationBound, enumerate_box
from arithmetic.coeff_field import CoeffElement
from arithmetic.ideals import PrincipalIdeal, factor_ideal, ideal_divisors
from core.exceptions import InsufficientBoundError, InvalidInputError
from core.logging_config import get_logger
from data_io.records import NewformRecord
from fourier.series import TruncatedSeries, element_coefficient, zero_series

logger = get_logger(__name__)


class IdealCoefficients:
    """Memoised c(a) for one newform record."""

    def __init__(self, record: NewformRecord):
        self.record = record
        self._prime_powers: Dict[Tuple[PrincipalIdeal, int], CoeffElement] = {}
        self._cache: Dict[PrincipalIdeal, CoeffElement] = {}

    def _character_factor(self, p: PrincipalIdeal) -> CoeffElement:
        field = self.record.coeff_field
        chi = field.one() if self.record.character is None else self.record.character.evaluate(p, target=field)
        return chi * (p.norm ** (self.record.weight.k1 - 1))

    def prime_power(self, p: PrincipalIdeal, e: int) -> CoeffElement:
        key = (p, e)
        if key in self._prime_powers:
            return self._prime_powers[key]
        field = self.record.coeff_field
        if e == 0:
            value = field.one()
        elif e == 1:
            value = self.record.eigenvalue(p)
        elif p.divides(self.record.level):
            value = self.record.eigenvalue(p) ** e
        else:
            value = self.record.eigenvalue(p) * self.prime_power(p, e - 1) - self._character_factor(
                p
            ) * self.prime_power(p, e - 2)
        self._prime_powers[key] = value
        return value

    def __call__(self, a: PrincipalIdeal) -> CoeffElement:
        if a not in self._cache:
            value = self.record.coeff_field.one()
            for p, e in factor_ideal(a).items():
                value = value * self.prime_power(p, e)
            self._cache[a] = value
        return self._cache[a]


def ideal_coefficient_table(record: NewformRecord, ideals: Sequence[PrincipalIdeal]) -> Dict[PrincipalIdeal, CoeffElement]:
    coefficients = IdealCoefficients(record)
    return {a: coefficients(a) for a in ideals}


def reconstruct_expansion(eigen: NewformRecord, bound: TruncationBound) -> TruncatedSeries:
    """
    The cusp form expansion of a newform on the box.

    Raises:
        MissingEigenvalueError: Some (α) in the box has a prime factor without data
    """
    coefficients = IdealCoefficients(eigen)
    base = eigen.base_field
    template = zero_series(base, eigen.coeff_field, eigen.weight, bound, eigen.character)
    coeffs = {}
    for alpha in enumerate_box(base, bound):
        value = coefficients(PrincipalIdeal.from_element(alpha))
        if value:
            coeffs[alpha] = element_coefficient(template, alpha, value)
    logger.debug("Newform expansion reconstructed", label=eigen.label, bound=bound, terms=len(coeffs))
    return replace(template, coeffs=coeffs)


def oldform_source_bound(target: TruncationBound, b: PrincipalIdeal) -> TruncationBound:
    """Box an expansion must cover for V_{m,b} of it to fill target: (t1/β1, t2/β2)."""
    beta = b.gen
    return TruncationBound(target.b1 / beta, target.b2 / beta.conjugate())


def oldform_map(
    s: TruncatedSeries, b: PrincipalIdeal, target: Optional[TruncationBound] = None
) -> TruncatedSeries:
    """
    V_{m,b}: Σ c_α q^α ↦ Σ c_α q^{βα} on the target box (default: the input box).

    Raises:
        InsufficientBoundError: s does not cover target/β
    """
    target = target or s.bound
    needed = oldform_source_bound(target, b)
    if not needed.fits_in(s.bound):
        raise InsufficientBoundError(needed, s.bound, f"V_b with b = {b}")
    beta = b.gen
    coeffs = {}
    for alpha, value in s.coeffs.items():
        moved = beta * alpha
        if target.contains(moved):
            coeffs[moved] = value
    return replace(s, bound=target, coeffs=coeffs)


def old_space_pairs(n: PrincipalIdeal, m: PrincipalIdeal) -> List[PrincipalIdeal]:
    """Every b | n/m, in increasing order."""
    if not m.divides(n):
        raise InvalidInputError("level", f"{m} does not divide {n}")
    return ideal_divisors(n.quotient(m))


def span_old_space(
    new_bases: Sequence[Tuple[PrincipalIdeal, Sequence[TruncatedSeries]]],
    n: PrincipalIdeal,
    target: Optional[TruncationBound] = None,
) -> List[TruncatedSeries]:
    """All V_{m,b}(f) for f new at a proper divisor m of n and b | n/m; duplicates kept."""
    images: List[TruncatedSeries] = []
    for m, basis in new_bases:
        if m == n:
            continue
        for b in old_space_pairs(n, m):
            for f in basis:
                images.append(oldform_map(f, b, target))
    logger.debug("Old space spanned", level=n, images=len(images))
    return images
