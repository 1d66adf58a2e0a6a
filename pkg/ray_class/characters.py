"""
Characters of narrow ray class groups.

A character is an exponent vector a in (Q/Z)^m with H·a ∈ Z^m for the Hermite
relation matrix H; its value at a class with log vector v is exp(2πi a·v).
Values live in the cyclotomic subfield Q, Q(√-1) or Q(√-3) of a coefficient
field, so only orders 1, 2, 3, 4 and 6 are representable.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from arithmetic.base_field import FieldElement, get_base_field
from arithmetic.coeff_field import SUPPORTED_ROOT_ORDERS, CoeffElement, CoeffField
from arithmetic.box import TruncationBound, enumerate_box
from arithmetic.ideals import PrincipalIdeal, coprime, ideal_divisors, ideal_gcd
from arithmetic.residues import residue_ring
from core.exceptions import InvalidInputError, NotCoprimeError, UnsupportedCharacterOrderError
from core.logging_config import get_logger
from ray_class.group import GroupElement, LogVector, Modulus, RayClassGroup, build_ray_class_group

logger = get_logger(__name__)


def cyclotomic_field(order: int) -> CoeffField:
    """Smallest multiquadratic field holding the order-th roots of unity."""
    if order in (1, 2):
        return CoeffField(())
    if order == 4:
        return CoeffField((-1,))
    if order in (3, 6):
        return CoeffField((-3,))
    raise UnsupportedCharacterOrderError(order)


@dataclass(frozen=True)
class RayCharacter:
    """A character of a ray class group, stored as exponents on the group's generators."""

    group: RayClassGroup
    exponents: Tuple[Fraction, ...]

    def __post_init__(self):
        exponents = tuple(Fraction(a) % 1 for a in self.exponents)
        if len(exponents) != self.group.rank:
            raise InvalidInputError("exponents", f"expected {self.group.rank}, got {len(exponents)}")
        for row in self.group.relations:
            if sum((r * a for r, a in zip(row, exponents)), Fraction(0)).denominator != 1:
                raise InvalidInputError("exponents", "not trivial on the relation lattice")
        object.__setattr__(self, "exponents", exponents)
        if self.order not in SUPPORTED_ROOT_ORDERS:
            raise UnsupportedCharacterOrderError(self.order)

    @property
    def order(self) -> int:
        return lcm(1, *(a.denominator for a in self.exponents))

    @property
    def modulus(self) -> Modulus:
        return self.group.modulus

    @property
    def value_field(self) -> CoeffField:
        return cyclotomic_field(self.order)

    def is_trivial(self) -> bool:
        return self.order == 1

    # ---- values ----

    def phase(self, log_vector: LogVector) -> Fraction:
        """a·v mod 1."""
        return sum((a * v for a, v in zip(self.exponents, log_vector)), Fraction(0)) % 1

    def _root(self, phase: Fraction, target: Optional[CoeffField] = None) -> CoeffElement:
        field = target or self.value_field
        if phase == 0:
            return field.one()
        value = self.value_field.root_of_unity(phase.denominator, phase.numerator)
        return field.coerce(value) if field != self.value_field else value

    @property
    def values_on_generators(self) -> List[CoeffElement]:
        return [self._root(a) for a in self.exponents]

    def value_at_element(self, element: GroupElement, target: Optional[CoeffField] = None) -> CoeffElement:
        return self._root(self.phase(self.group.log(element)), target)

    def phase_at(self, x: FieldElement) -> Fraction:
        """Phase at the class of (x) with the signs of x, x coprime to the group modulus."""
        return self.phase(self.group.log_element(x))

    def sign_character_values(self) -> Tuple[Optional[int], Optional[int]]:
        """χ(1, -, +) and χ(1, +, -) as ±1, None where the place is not in the modulus."""
        one = residue_ring(self.modulus.finite_part).one()
        values: List[Optional[int]] = []
        for i, element in enumerate([(one, 1, 0), (one, 0, 1)]):
            if not self.modulus.infinite_part[i]:
                values.append(None)
                continue
            values.append(1 if self.phase(self.group.log(element)) == 0 else -1)
        return values[0], values[1]

    # ---- conductor ----

    def _trivial_on_kernel(self, divisor: PrincipalIdeal, places: Sequence[int]) -> bool:
        ring = residue_ring(self.modulus.finite_part)
        sub = residue_ring(divisor)
        one = sub.one()
        for element in self.group.elements():
            residue, s1, s2 = element
            if sub.reduce(ring.element(residue)) != one:
                continue
            signs = (s1, s2)
            if any(signs[i] for i in places):
                continue
            if self.phase(self.group.log(element)) != 0:
                return False
        return True

    @cached_property
    def conductor(self) -> Modulus:
        """Smallest modulus through which the character factors."""
        places = self.modulus.places
        best: Optional[Modulus] = None
        for divisor in ideal_divisors(self.modulus.finite_part):
            for size in range(len(places) + 1):
                for subset in combinations(places, size):
                    candidate = Modulus(divisor, (0 in subset, 1 in subset))
                    if best is not None and candidate.sort_key() >= best.sort_key():
                        continue
                    if self._trivial_on_kernel(divisor, subset):
                        best = candidate
        return best

    # ---- evaluation at ideals ----

    def _coprime_representative(self, a: PrincipalIdeal) -> FieldElement:
        """A totally positive element ≡ gen(a) mod the conductor, coprime to the group modulus."""
        ring = residue_ring(self.modulus.finite_part)
        alpha = a.gen
        if ring.is_unit(ring.reduce(alpha)):
            return alpha
        nu = self.conductor.finite_part.gen
        field = get_base_field(alpha.d)
        size = 4
        while size <= 4 * ring.size + 4:
            for beta in enumerate_box(field, TruncationBound.rational(size, size, alpha.d)):
                candidate = alpha + nu * beta
                if ring.is_unit(ring.reduce(candidate)):
                    return candidate
            size *= 2
        raise ArithmeticError(f"no representative of {a} coprime to {self.modulus}")

    def evaluate(self, a: PrincipalIdeal, target: Optional[CoeffField] = None) -> CoeffElement:
        """χ(a) for a coprime to the conductor's finite part."""
        if not coprime(a, self.conductor.finite_part):
            raise NotCoprimeError(a, self.conductor)
        alpha = self._coprime_representative(a)
        return self._root(self.phase_at(alpha), target)

    def evaluate_or_zero(self, a: PrincipalIdeal, target: Optional[CoeffField] = None) -> CoeffElement:
        """χ(a), extended by zero to ideals sharing a factor with the conductor."""
        if not coprime(a, self.conductor.finite_part):
            return (target or self.value_field).zero()
        return self.evaluate(a, target)

    def phase_of_ideal(self, a: PrincipalIdeal) -> Fraction:
        if not coprime(a, self.conductor.finite_part):
            raise NotCoprimeError(a, self.conductor)
        return self.phase_at(self._coprime_representative(a))

    # ---- arithmetic ----

    def __mul__(self, other: "RayCharacter") -> "RayCharacter":
        return character_product(self, other)

    def __pow__(self, n: int) -> "RayCharacter":
        return character_power(self, n)

    def __str__(self) -> str:
        values = ", ".join(str(v) for v in self.values_on_generators)
        return f"χ[{self.modulus}; order {self.order}; {values}]"

    __repr__ = __str__


# ==================== Construction ====================


def _solutions(relations: Sequence[Sequence[int]]) -> List[Tuple[Fraction, ...]]:
    """All a ∈ (Q/Z)^m with H·a ∈ Z^m, H upper triangular; exactly det(H) of them."""
    m = len(relations)
    partial: List[Tuple[Fraction, ...]] = [()]
    for i in range(m - 1, -1, -1):
        row = relations[i]
        h = row[i]
        grown = []
        for tail in partial:
            offset = sum((row[i + 1 + j] * a for j, a in enumerate(tail)), Fraction(0))
            for t in range(h):
                grown.append(((Fraction(t) - offset) / h % 1,) + tail)
        partial = grown
    return sorted(partial)


@lru_cache(maxsize=64)
def all_characters(group: RayClassGroup) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(_solutions(group.relations))


def _order_of(exponents: Iterable[Fraction]) -> int:
    return lcm(1, *(a.denominator for a in exponents))


def is_totally_odd(chi: RayCharacter) -> bool:
    """Nontrivial on both sign components."""
    return chi.sign_character_values() == (-1, -1)


def enumerate_characters(
    group: RayClassGroup,
    order: Optional[int] = None,
    totally_odd: Optional[bool] = None,
    conductor_divides: Optional[Modulus] = None,
) -> List[RayCharacter]:
    """
    Characters of the group meeting the constraints, in exponent order.

    Characters whose order has no multiquadratic value field are skipped.
    """
    result = []
    skipped = 0
    for exponents in all_characters(group):
        n = _order_of(exponents)
        if n not in SUPPORTED_ROOT_ORDERS:
            skipped += 1
            continue
        if order is not None and n != order:
            continue
        chi = RayCharacter(group, exponents)
        if totally_odd is not None and is_totally_odd(chi) != totally_odd:
            continue
        if conductor_divides is not None and not chi.conductor.divides(conductor_divides):
            continue
        result.append(chi)
    if skipped:
        logger.warning("Characters of unsupported order skipped", modulus=group.modulus, skipped=skipped)
    return result


def trivial_character(group: RayClassGroup) -> RayCharacter:
    return RayCharacter(group, tuple(Fraction(0) for _ in range(group.rank)))


def character_power(chi: RayCharacter, n: int) -> RayCharacter:
    return RayCharacter(chi.group, tuple(a * n for a in chi.exponents))


def character_inverse(chi: RayCharacter) -> RayCharacter:
    return character_power(chi, -1)


def lift_character(chi: RayCharacter, group: RayClassGroup) -> RayCharacter:
    """Pull chi back to a group whose modulus is a multiple of chi's modulus."""
    if group == chi.group:
        return chi
    if not chi.modulus.divides(group.modulus):
        raise InvalidInputError("character", f"{chi.modulus} does not divide {group.modulus}")
    exponents = []
    for representative, (s1, s2) in group.generators:
        phase = chi.phase(chi.group.log(_restrict(chi.group, representative, s1, s2)))
        exponents.append(phase)
    return RayCharacter(group, tuple(exponents))


def _restrict(group: RayClassGroup, x: FieldElement, s1: int, s2: int) -> GroupElement:
    ring = residue_ring(group.modulus.finite_part)
    inf1, inf2 = group.modulus.infinite_part
    return (ring.reduce(x), int(inf1 and s1), int(inf2 and s2))


def character_product(chi: RayCharacter, psi: RayCharacter) -> RayCharacter:
    """χψ on the group of the larger modulus (lcm when neither divides the other)."""
    if chi.group != psi.group:
        if chi.modulus.divides(psi.modulus):
            chi = lift_character(chi, psi.group)
        elif psi.modulus.divides(chi.modulus):
            psi = lift_character(psi, chi.group)
        else:
            finite = _ideal_lcm(chi.modulus.finite_part, psi.modulus.finite_part)
            infinite = tuple(a or b for a, b in zip(chi.modulus.infinite_part, psi.modulus.infinite_part))
            group = build_ray_class_group(Modulus(finite, infinite))
            chi, psi = lift_character(chi, group), lift_character(psi, group)
    return RayCharacter(chi.group, tuple(a + b for a, b in zip(chi.exponents, psi.exponents)))


def _ideal_lcm(a: PrincipalIdeal, b: PrincipalIdeal) -> PrincipalIdeal:
    return (a * b).quotient(ideal_gcd(a, b))


# ==================== Weight compatibility ====================


def check_weight_compatibility(chi: RayCharacter, k1: int, k2: int) -> bool:
    """
    χ_f(u) = sgn(u1)^{-k1} sgn(u2)^{-k2} for u in {-1, ε}, χ_f the finite part
    (the value at the class of u mod n with trivial signs).
    """
    field = get_base_field(chi.modulus.d)
    ring = residue_ring(chi.modulus.finite_part)
    for u in (FieldElement.rational(-1, field.d), field.fundamental_unit):
        phase = chi.phase(chi.group.log((ring.reduce(u), 0, 0)))
        sign1 = u.real_sign() ** (k1 % 2)
        sign2 = u.conjugate().real_sign() ** (k2 % 2)
        expected = Fraction(0) if sign1 * sign2 == 1 else Fraction(1, 2)
        if phase != expected:
            return False
    return True


# ==================== Prescribed values ====================

Constraint = Tuple[Union[PrincipalIdeal, Tuple[FieldElement, int, int]], CoeffElement]


def _matches(value: CoeffElement, expected: CoeffElement) -> bool:
    if value.field == expected.field:
        return value == expected
    if expected.field.contains(value.field):
        return expected.field.coerce(value) == expected
    if value.field.contains(expected.field):
        return value.field.coerce(expected) == value
    return False


def find_character(group: RayClassGroup, constraints: Sequence[Constraint]) -> RayCharacter:
    """
    The unique character of the group with the prescribed values.

    A constraint key is an ideal or (x, s1, s2): the class of x with sign bits.
    """
    ring = residue_ring(group.modulus.finite_part)
    matches = []
    for exponents in all_characters(group):
        if _order_of(exponents) not in SUPPORTED_ROOT_ORDERS:
            continue
        chi = RayCharacter(group, exponents)
        ok = True
        for key, expected in constraints:
            if isinstance(key, PrincipalIdeal):
                value = chi.evaluate(key)
            else:
                x, s1, s2 = key
                value = chi.value_at_element(_restrict(group, x, s1, s2))
            if not _matches(value, expected):
                ok = False
                break
        if ok:
            matches.append(chi)
    if len(matches) != 1:
        raise InvalidInputError(
            "character values",
            f"{len(matches)} characters of {group.modulus} match the prescribed values",
        )
    return matches[0]


def characters_of_modulus(modulus: Modulus, **constraints) -> List[RayCharacter]:
    return enumerate_characters(build_ray_class_group(modulus), **constraints)


def characters_agree(chi: Optional[RayCharacter], psi: Optional[RayCharacter]) -> bool:
    """Equality as characters on ideals; None stands for the trivial character."""
    if chi is None and psi is None:
        return True
    if chi is None:
        return psi.is_trivial()
    if psi is None:
        return chi.is_trivial()
    if chi == psi:
        return True
    return character_product(chi, character_inverse(psi)).is_trivial()


def multiply_optional(chi: Optional[RayCharacter], psi: Optional[RayCharacter]) -> Optional[RayCharacter]:
    if chi is None:
        return psi
    if psi is None:
        return chi
    return character_product(chi, psi)


def inverse_optional(chi: Optional[RayCharacter]) -> Optional[RayCharacter]:
    return None if chi is None else character_inverse(chi)
