"""
Multiquadratic coefficient fields Q(√r1, ..., √rk).

The basis is indexed by bitmasks S ⊆ {1..k}; the symbol b_S is the formal product
of the radicals √r_i for i in S, so b_S * b_T = (prod of r_i over S ∩ T) * b_{S △ T}.
With this orientation the label √(r_i r_j) always means √r_i·√r_j, e.g. √57 is
√-3·√-19 when the radicands are [5, -3, -19].
"""

import numbers
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

import mpmath
from sympy import factorint, integer_nthroot

from core.exceptions import (
    DivisionByZeroError,
    InvalidInputError,
    MissingRadicalError,
    UnsupportedCharacterOrderError,
)

Scalar = Union[int, Fraction]


def _rational(value) -> Optional[Scalar]:
    """Python and sympy integers and rationals as int or Fraction, anything else as None."""
    if isinstance(value, (int, Fraction)):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Rational):
        return Fraction(str(value))
    return None


SUPPORTED_ROOT_ORDERS = (1, 2, 3, 4, 6)


def _squarefree(n: int) -> bool:
    return all(exponent == 1 for exponent in factorint(abs(n)).values())


def _square_class(n: int) -> FrozenSet[int]:
    """Primes of odd exponent in n, with -1 standing for the sign."""
    primes = {p for p, exponent in factorint(abs(n)).items() if exponent % 2}
    return frozenset(primes | ({-1} if n < 0 else set()))


def _express(r: int, radicands: Sequence[int]) -> Optional[int]:
    """Mask S with prod_{i in S} r_i = r up to squares, or None."""
    target = _square_class(r)
    classes = [_square_class(s) for s in radicands]
    for mask in range(1 << len(radicands)):
        found: FrozenSet[int] = frozenset()
        for i, c in enumerate(classes):
            if (mask >> i) & 1:
                found = found ^ c
        if found == target:
            return mask
    return None


@dataclass(frozen=True)
class CoeffField:
    """Q adjoined square roots of squarefree radicands independent modulo squares."""

    radicands: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "radicands", tuple(int(r) for r in self.radicands))
        for i, r in enumerate(self.radicands):
            if r in (0, 1) or not _squarefree(r):
                raise InvalidInputError("radicands", f"{r} is not a squarefree integer other than 0, 1")
            if _express(r, self.radicands[:i]) is not None:
                raise InvalidInputError("radicands", f"√{r} already lies in Q({', '.join(f'√{s}' for s in self.radicands[:i])})")

    @property
    def degree(self) -> int:
        return 1 << len(self.radicands)

    @cached_property
    def _table(self) -> List[Tuple[int, int, int, int]]:
        table = []
        for s in range(self.degree):
            for t in range(self.degree):
                factor = 1
                for i, r in enumerate(self.radicands):
                    if (s >> i) & 1 and (t >> i) & 1:
                        factor *= r
                table.append((s, t, factor, s ^ t))
        return table

    def label(self, mask: int) -> str:
        if mask == 0:
            return "1"
        product = 1
        for i, r in enumerate(self.radicands):
            if (mask >> i) & 1:
                product *= r
        return f"√{product}"

    @property
    def labels(self) -> List[str]:
        return [self.label(mask) for mask in range(self.degree)]

    def index_of(self, radicand: int) -> int:
        try:
            return self.radicands.index(radicand)
        except ValueError:
            raise MissingRadicalError(radicand, list(self.radicands))

    # ---- constructors ----

    def element(self, coords: Sequence[Scalar]) -> "CoeffElement":
        if len(coords) != self.degree:
            raise InvalidInputError("coords", f"expected {self.degree} coordinates, got {len(coords)}")
        return CoeffElement(self, tuple(Fraction(c) for c in coords))

    def scalar(self, value: Scalar) -> "CoeffElement":
        coords = [Fraction(0)] * self.degree
        coords[0] = Fraction(value)
        return CoeffElement(self, tuple(coords))

    def zero(self) -> "CoeffElement":
        return self.scalar(0)

    def one(self) -> "CoeffElement":
        return self.scalar(1)

    def radical_mask(self, radicand: int) -> int:
        """Basis symbol that √radicand is a rational multiple of."""
        mask = _express(radicand, self.radicands)
        if mask is None:
            raise MissingRadicalError(radicand, list(self.radicands))
        return mask

    def contains(self, other: "CoeffField") -> bool:
        return all(_express(r, self.radicands) is not None for r in other.radicands)

    def sqrt_of(self, radicand: int) -> "CoeffElement":
        """
        The principal √radicand as ±b_S/u, where prod_{i in S} r_i = radicand·u².

        The sign makes the value agree with the product of principal roots,
        since √-a·√-b = -√(ab).
        """
        mask = self.radical_mask(radicand)
        chosen = [r for i, r in enumerate(self.radicands) if (mask >> i) & 1]
        product = 1
        for r in chosen:
            product *= abs(r)
        u, _ = integer_nthroot(product // abs(radicand), 2)
        negatives = sum(1 for r in chosen if r < 0) - (1 if radicand < 0 else 0)
        coords = [Fraction(0)] * self.degree
        coords[mask] = Fraction(-1 if negatives % 4 else 1, u)
        return CoeffElement(self, tuple(coords))

    def from_terms(self, terms: Dict[int, Scalar]) -> "CoeffElement":
        """Element from {radicand product label value: coefficient}, e.g. {1: -4, -3: 4}."""
        result = self.zero()
        for product, coefficient in terms.items():
            result = result + self.basis_symbol(product) * coefficient
        return result

    def basis_symbol(self, product: int) -> "CoeffElement":
        """The basis symbol whose label is √product (product 1 is the unit)."""
        for mask in range(self.degree):
            if self.label(mask) == ("1" if product == 1 else f"√{product}"):
                coords = [Fraction(0)] * self.degree
                coords[mask] = Fraction(1)
                return CoeffElement(self, tuple(coords))
        raise MissingRadicalError(product, list(self.radicands))

    def root_of_unity(self, order: int, k: int = 1) -> "CoeffElement":
        """zeta_order^k with zeta_n = exp(2πi/n) under principal square roots."""
        if order not in SUPPORTED_ROOT_ORDERS:
            raise UnsupportedCharacterOrderError(order)
        k %= order
        if order == 1 or k == 0:
            return self.one()
        if order == 2:
            return self.scalar(-1)
        if order == 4:
            zeta = self.sqrt_of(-1)
        else:
            zeta6 = (self.one() + self.sqrt_of(-3)) * Fraction(1, 2)
            zeta = zeta6 if order == 6 else zeta6 * zeta6
        return zeta ** k

    def embed_base(self, e) -> "CoeffElement":
        """Image of a base field element x + y√d."""
        if e.y == 0:
            return self.scalar(e.x)
        return self.scalar(e.x) + self.sqrt_of(e.d) * e.y

    def coerce(self, value: "CoeffElement") -> "CoeffElement":
        """
        Image of an element of a subfield, preserving the principal-root embedding.

        Raises:
            MissingRadicalError: a radical of value's field is not in this one
        """
        if value.field == self:
            return value
        if not set(value.field.radicands) <= set(self.radicands):
            images = [self.sqrt_of(r) for r in value.field.radicands]
            total = self.zero()
            for mask, c in enumerate(value.coords):
                if c == 0:
                    continue
                term = self.scalar(c)
                for i, image in enumerate(images):
                    if (mask >> i) & 1:
                        term = term * image
                total = total + term
            return total
        positions = [self.index_of(r) for r in value.field.radicands]
        coords = [Fraction(0)] * self.degree
        for mask, c in enumerate(value.coords):
            if c == 0:
                continue
            target = 0
            for i, position in enumerate(positions):
                if (mask >> i) & 1:
                    target |= 1 << position
            coords[target] = c
        return CoeffElement(self, tuple(coords))

    def complex_embeddings(self) -> List[Tuple[int, ...]]:
        """All 2^k sign choices; the all-plus choice is embedding 1."""
        k = len(self.radicands)
        return [tuple(-1 if (m >> i) & 1 else 1 for i in range(k)) for m in range(1 << k)]

    def __str__(self) -> str:
        if not self.radicands:
            return "Q"
        return "Q(" + ", ".join(f"√{r}" for r in self.radicands) + ")"


@dataclass(frozen=True)
class CoeffElement:
    """An element of a multiquadratic field, as rational coordinates on the radical basis."""

    field: CoeffField
    coords: Tuple[Fraction, ...]

    def _other(self, other) -> "CoeffElement":
        if isinstance(other, CoeffElement):
            if other.field != self.field:
                return self.field.coerce(other) if self.field.contains(other.field) else NotImplemented
            return other
        scalar = _rational(other)
        if scalar is not None:
            return self.field.scalar(scalar)
        return NotImplemented

    def __add__(self, other) -> "CoeffElement":
        other = self._other(other)
        if other is NotImplemented:
            return other
        return CoeffElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "CoeffElement":
        return CoeffElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other) -> "CoeffElement":
        other = self._other(other)
        if other is NotImplemented:
            return other
        return CoeffElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other) -> "CoeffElement":
        return (-self) + other

    def __mul__(self, other) -> "CoeffElement":
        if not isinstance(other, CoeffElement):
            scalar = _rational(other)
            if scalar is not None:
                return CoeffElement(self.field, tuple(a * scalar for a in self.coords))
        other = self._other(other)
        if other is NotImplemented:
            return other
        out = [Fraction(0)] * self.field.degree
        left, right = self.coords, other.coords
        for s, t, factor, target in self.field._table:
            a = left[s]
            if a:
                b = right[t]
                if b:
                    out[target] += factor * a * b
        return CoeffElement(self.field, tuple(out))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def conjugate(self, i: int) -> "CoeffElement":
        """Automorphism √r_i -> -√r_i."""
        return CoeffElement(
            self.field,
            tuple(-c if (mask >> i) & 1 else c for mask, c in enumerate(self.coords)),
        )

    def galois(self, flip_mask: int) -> "CoeffElement":
        """Automorphism negating every radical in flip_mask."""
        return CoeffElement(
            self.field,
            tuple(-c if bin(mask & flip_mask).count("1") % 2 else c for mask, c in enumerate(self.coords)),
        )

    def complex_conjugate(self) -> "CoeffElement":
        """Complex conjugation, which negates the radicals of negative radicands."""
        mask = sum(1 << i for i, r in enumerate(self.field.radicands) if r < 0)
        return self.galois(mask)

    def inverse(self) -> "CoeffElement":
        if self.is_zero():
            raise DivisionByZeroError(str(self.field))
        numerator = self.field.one()
        denominator = self
        for i in range(len(self.field.radicands)):
            partner = denominator.conjugate(i)
            numerator = numerator * partner
            denominator = denominator * partner
        result = numerator * (1 / denominator.rational())
        if result * self != self.field.one():
            raise ArithmeticError(f"inversion of {self} failed verification")
        return result

    def __truediv__(self, other) -> "CoeffElement":
        scalar = _rational(other)
        if scalar is not None:
            if scalar == 0:
                raise DivisionByZeroError(str(self.field))
            return self * (Fraction(1) / Fraction(scalar))
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "CoeffElement":
        return self.field.scalar(other) * self.inverse()

    def __pow__(self, exponent: int) -> "CoeffElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def sqrt(self) -> Optional["CoeffElement"]:
        """An exact square root in this field, or None."""
        root = _sqrt_in(self.field.radicands, list(self.coords))
        if root is None:
            return None
        return CoeffElement(self.field, tuple(root))

    def to_complex(self, signs: Optional[Sequence[int]] = None) -> mpmath.mpc:
        """Value under the embedding √r_i -> signs[i] * principal sqrt(r_i)."""
        signs = signs or [1] * len(self.field.radicands)
        roots = [s * mpmath.sqrt(mpmath.mpf(r)) for s, r in zip(signs, self.field.radicands)]
        total = mpmath.mpc(0)
        for mask, c in enumerate(self.coords):
            if not c:
                continue
            term = mpmath.mpc(mpmath.mpf(c.numerator) / c.denominator)
            for i, root in enumerate(roots):
                if (mask >> i) & 1:
                    term *= root
            total += term
        return total

    def __str__(self) -> str:
        parts = []
        for mask, c in enumerate(self.coords):
            if not c:
                continue
            label = self.field.label(mask)
            if label == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(label)
            elif c == -1:
                parts.append(f"-{label}")
            else:
                parts.append(f"{c}{label}")
        if not parts:
            return "0"
        return "+".join(parts).replace("+-", "-")

    __repr__ = __str__


def _split(radicands: Sequence[int], coords: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    half = len(coords) // 2
    return coords[:half], coords[half:]


def _mul_in(radicands: Sequence[int], a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    field = CoeffField(tuple(radicands))
    return list((CoeffElement(field, tuple(a)) * CoeffElement(field, tuple(b))).coords)


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num, exact_num = integer_nthroot(q.numerator, 2)
    den, exact_den = integer_nthroot(q.denominator, 2)
    if exact_num and exact_den:
        return Fraction(num, den)
    return None


def _sqrt_in(radicands: Sequence[int], coords: List[Fraction]) -> Optional[List[Fraction]]:
    # z = a + b√r over the subfield without the last radical r
    if not radicands:
        root = _rational_sqrt(coords[0])
        return None if root is None else [root]
    inner = list(radicands[:-1])
    r = radicands[-1]
    a, b = _split(radicands, coords)
    zero = [Fraction(0)] * len(a)
    if not any(b):
        x = _sqrt_in(inner, a)
        if x is not None:
            return x + zero
        y = _sqrt_in(inner, [c / r for c in a])
        if y is not None:
            return zero + y
        return None
    norm = [p - r * q for p, q in zip(_mul_in(inner, a, a), _mul_in(inner, b, b))]
    n = _sqrt_in(inner, norm)
    if n is None:
        return None
    inner_field = CoeffField(tuple(inner))
    for sign in (1, -1):
        x = _sqrt_in(inner, [(p + sign * q) / 2 for p, q in zip(a, n)])
        if x is None or not any(x):
            continue
        x_elem = CoeffElement(inner_field, tuple(x))
        y_elem = CoeffElement(inner_field, tuple(b)) / (x_elem * 2)
        candidate = list(x) + list(y_elem.coords)
        full = CoeffElement(CoeffField(tuple(radicands)), tuple(candidate))
        if full * full == CoeffElement(full.field, tuple(coords)):
            return candidate
    return None


def compositum(*fields: CoeffField) -> CoeffField:
    """
    Smallest field holding all the given ones.

    The first field's radicals keep their positions; a later radicand is appended
    only when it is independent of those collected so far modulo squares, so
    Q(√-3) and Q(√15) give Q(√-3, √15) with √-5 = √-3·√15 / 3 already inside.
    """
    radicands: List[int] = []
    for f in fields:
        for r in f.radicands:
            if _express(r, radicands) is None:
                radicands.append(r)
    return CoeffField(tuple(radicands))
