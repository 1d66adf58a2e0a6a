"""
Principal ideals of O_F, stored by their canonical totally positive generator.

Narrow class number one makes every ideal principal with a totally positive
generator, so factorisation, divisors and products are carried out on
generators and then re-canonicalised.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, List, Tuple

from sympy import factorint, integer_nthroot, isprime, legendre_symbol

from arithmetic.base_field import FieldElement, get_base_field
from config.settings import settings
from core.exceptions import InvalidInputError, NarrowClassNumberError, ZeroElementError
from core.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class PrincipalIdeal:
    """The ideal (gen) with gen the canonical totally positive generator."""

    gen: FieldElement
    norm: int

    @classmethod
    def from_element(cls, e: FieldElement) -> "PrincipalIdeal":
        if e.is_zero():
            raise ZeroElementError("ideal generation")
        if not e.is_integral():
            raise InvalidInputError("ideal", f"{e} is not an algebraic integer")
        mu = get_base_field(e.d).canonical_tp_generator(e)
        return cls(mu, int(abs(e.norm())))

    @classmethod
    def from_half(cls, a: int, b: int, d: int) -> "PrincipalIdeal":
        """The ideal generated by (a + b√d)/2."""
        return cls.from_element(FieldElement.from_half(a, b, d))

    @classmethod
    def unit(cls, d: int) -> "PrincipalIdeal":
        return cls(FieldElement.rational(1, d), 1)

    @property
    def d(self) -> int:
        return self.gen.d

    def is_unit(self) -> bool:
        return self.norm == 1

    def __mul__(self, other: "PrincipalIdeal") -> "PrincipalIdeal":
        return PrincipalIdeal.from_element(self.gen * other.gen)

    def __pow__(self, exponent: int) -> "PrincipalIdeal":
        if exponent < 0:
            raise InvalidInputError("exponent", "negative powers of integral ideals are not ideals")
        return PrincipalIdeal.from_element(self.gen ** exponent)

    def divides(self, other: "PrincipalIdeal") -> bool:
        """self | other."""
        if other.norm % self.norm:
            return False
        return (other.gen / self.gen).is_integral()

    def quotient(self, other: "PrincipalIdeal") -> "PrincipalIdeal":
        """self / other, which must be integral."""
        if not other.divides(self):
            raise InvalidInputError("ideal", f"{other} does not divide {self}")
        return PrincipalIdeal.from_element(self.gen / other.gen)

    def half_coords(self) -> Tuple[int, int]:
        return self.gen.half_coords()

    def sort_key(self) -> Tuple:
        return (self.norm, self.gen.x, self.gen.y)

    def __str__(self) -> str:
        return f"({self.gen})"

    __repr__ = __str__


def split_type(p: int, d: int) -> str:
    """'split', 'inert' or 'ramified' for the rational prime p in Q(√d)."""
    disc = get_base_field(d).discriminant
    if disc % p == 0:
        return "ramified"
    if p == 2:
        return "split" if disc % 8 == 1 else "inert"
    return "split" if legendre_symbol(disc % p, p) == 1 else "inert"


def _element_of_norm(p: int, d: int) -> FieldElement:
    half = d % 4 == 1
    scale = 4 if half else 1
    for b in range(1, settings.GENERATOR_SEARCH_LIMIT):
        for target in (scale * p, -scale * p):
            square = target + d * b * b
            if square < 0:
                continue
            a, exact = integer_nthroot(square, 2)
            if not exact:
                continue
            a = int(a)
            if half:
                if (a - b) % 2:
                    continue
                return FieldElement.from_half(a, b, d)
            return FieldElement(a, b, d)
    raise NarrowClassNumberError(d, f"no element of norm +-{p} below the generator search limit")


@lru_cache(maxsize=None)
def _primes_above_cached(p: int, d: int) -> Tuple[PrincipalIdeal, ...]:
    kind = split_type(p, d)
    if kind == "inert":
        return (PrincipalIdeal(FieldElement.rational(p, d), p * p),)
    alpha = _element_of_norm(p, d)
    primes = {PrincipalIdeal.from_element(alpha), PrincipalIdeal.from_element(alpha.conjugate())}
    result = tuple(sorted(primes, key=PrincipalIdeal.sort_key))
    logger.debug("Primes above p", p=p, d=d, kind=kind, primes=list(result))
    return result


def primes_above(p: int, d: int) -> List[PrincipalIdeal]:
    """The prime ideals of O_F over the rational prime p, sorted by canonical generator."""
    if not isprime(p):
        raise InvalidInputError("p", f"{p} is not a rational prime")
    return list(_primes_above_cached(p, d))


def factor_ideal(a: PrincipalIdeal) -> Dict[PrincipalIdeal, int]:
    """Prime factorisation {prime ideal: exponent}, ordered by (norm, generator)."""
    factors: Dict[PrincipalIdeal, int] = {}
    remaining = a
    for p in sorted(factorint(a.norm)):
        for q in primes_above(p, a.d):
            while q.divides(remaining):
                factors[q] = factors.get(q, 0) + 1
                remaining = remaining.quotient(q)
    if remaining.norm != 1:
        raise ArithmeticError(f"factorisation of {a} left cofactor {remaining}")
    return dict(sorted(factors.items(), key=lambda item: item[0].sort_key()))


def is_prime_ideal(q: PrincipalIdeal) -> bool:
    if q.norm == 1:
        return False
    factors = factor_ideal(q)
    return len(factors) == 1 and next(iter(factors.values())) == 1


def rational_prime_below(q: PrincipalIdeal) -> int:
    """The rational prime p with q | (p); q must be prime."""
    if not is_prime_ideal(q):
        raise InvalidInputError("ideal", f"{q} is not prime")
    return min(factorint(q.norm))


def ideal_from_factors(factors: Dict[PrincipalIdeal, int], d: int) -> PrincipalIdeal:
    result = PrincipalIdeal.unit(d)
    for q, e in factors.items():
        if e:
            result = result * q ** e
    return result


def ideal_divisors(a: PrincipalIdeal) -> List[PrincipalIdeal]:
    """All ideal divisors of a, sorted by (norm, generator); (1) first."""
    factors = factor_ideal(a)
    primes = list(factors)
    divisors = []
    for exponents in product(*(range(factors[q] + 1) for q in primes)):
        divisors.append(ideal_from_factors(dict(zip(primes, exponents)), a.d))
    return sorted(divisors, key=PrincipalIdeal.sort_key)


def ideal_gcd(a: PrincipalIdeal, b: PrincipalIdeal) -> PrincipalIdeal:
    fa, fb = factor_ideal(a), factor_ideal(b)
    common = {q: min(e, fb[q]) for q, e in fa.items() if q in fb}
    return ideal_from_factors(common, a.d)


def coprime(a: PrincipalIdeal, b: PrincipalIdeal) -> bool:
    return ideal_gcd(a, b).is_unit()


@lru_cache(maxsize=4096)
def _ideals_of_norm_cached(n: int, d: int) -> Tuple[PrincipalIdeal, ...]:
    # per rational prime power, the ideals of that norm
    local: List[List[PrincipalIdeal]] = []
    for p, e in sorted(factorint(n).items()):
        primes = primes_above(p, d)
        kind = split_type(p, d)
        if kind == "inert":
            if e % 2:
                return ()
            local.append([primes[0] ** (e // 2)])
        elif kind == "ramified":
            local.append([primes[0] ** e])
        else:
            first, second = primes
            local.append([first ** i * second ** (e - i) for i in range(e + 1)])
    result = [PrincipalIdeal.unit(d)]
    for options in local:
        result = [x * y for x in result for y in options]
    return tuple(sorted(result, key=PrincipalIdeal.sort_key))


def ideals_of_norm(n: int, d: int) -> List[PrincipalIdeal]:
    """Every integral ideal of norm n."""
    if n < 1:
        raise InvalidInputError("norm", f"ideal norms are positive, got {n}")
    return list(_ideals_of_norm_cached(n, d))


def primes_up_to(norm_bound: int, d: int) -> List[PrincipalIdeal]:
    """Prime ideals of norm <= norm_bound, sorted by (norm, generator)."""
    found: List[PrincipalIdeal] = []
    for p in range(2, norm_bound + 1):
        if not isprime(p):
            continue
        for q in primes_above(p, d):
            if q.norm <= norm_bound:
                found.append(q)
    return sorted(found, key=PrincipalIdeal.sort_key)
