"""
Truncation boxes: bounds (b1, b2) on the two real embeddings and the totally
positive integers they contain.

Bound coordinates are FieldElements read under embedding 1, so the b(n) family
((5n - n√5)/2, (5n + n√5)/2) and bounds shrunk by Hecke generators stay exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from arithmetic.base_field import BaseField, FieldElement
from core.exceptions import InvalidInputError


@dataclass(frozen=True)
class TruncationBound:
    """Open box embed(alpha, 1) < b1, embed(alpha, 2) < b2."""

    b1: FieldElement
    b2: FieldElement

    def __post_init__(self):
        if self.b1.d != self.b2.d:
            raise InvalidInputError("bound", "coordinates live in different fields")
        if self.b1.real_sign() <= 0 or self.b2.real_sign() <= 0:
            raise InvalidInputError("bound", f"({self.b1}, {self.b2}) must be positive")

    @classmethod
    def rational(cls, b1, b2, d: int) -> "TruncationBound":
        return cls(FieldElement.rational(Fraction(b1), d), FieldElement.rational(Fraction(b2), d))

    @property
    def d(self) -> int:
        return self.b1.d

    def contains(self, alpha: FieldElement) -> bool:
        """True iff both embeddings of alpha are strictly below the bound."""
        return (self.b1 - alpha).real_sign() > 0 and (self.b2 - alpha.conjugate()).real_sign() > 0

    def fits_in(self, other: "TruncationBound") -> bool:
        """Componentwise self <= other."""
        return (other.b1 - self.b1).real_sign() >= 0 and (other.b2 - self.b2).real_sign() >= 0

    def scaled(self, s1: FieldElement, s2: FieldElement) -> "TruncationBound":
        """(b1*s1, b2*s2) with s_i read under embedding 1."""
        return TruncationBound(self.b1 * s1, self.b2 * s2)

    def meet(self, other: "TruncationBound") -> "TruncationBound":
        b1 = self.b1 if (other.b1 - self.b1).real_sign() >= 0 else other.b1
        b2 = self.b2 if (other.b2 - self.b2).real_sign() >= 0 else other.b2
        return TruncationBound(b1, b2)

    def join(self, other: "TruncationBound") -> "TruncationBound":
        b1 = self.b1 if (self.b1 - other.b1).real_sign() >= 0 else other.b1
        b2 = self.b2 if (self.b2 - other.b2).real_sign() >= 0 else other.b2
        return TruncationBound(b1, b2)

    def __str__(self) -> str:
        return f"({self.b1}, {self.b2})"


def bn(n: int, d: int = 5) -> TruncationBound:
    """The bound family b(n) = ((5n - n√5)/2, (5n + n√5)/2) over Q(√5)."""
    if d != 5:
        raise InvalidInputError("bound", "the b(n) family is defined over Q(√5) only")
    if n < 1:
        raise InvalidInputError("bound", f"b(n) needs n >= 1, got {n}")
    return TruncationBound(
        FieldElement(Fraction(5 * n, 2), Fraction(-n, 2), 5),
        FieldElement(Fraction(5 * n, 2), Fraction(n, 2), 5),
    )


def parse_bound(text: str, d: int) -> TruncationBound:
    """Parse 'bn:N' or 'b1,b2' (rationals such as 10 or 7/2)."""
    text = text.strip()
    if text.startswith("bn:"):
        try:
            n = int(text[3:])
        except ValueError:
            raise InvalidInputError("bound", f"bad b(n) shorthand {text!r}")
        return bn(n, d)
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2:
        raise InvalidInputError("bound", f"expected 'b1,b2' or 'bn:N', got {text!r}")
    try:
        return TruncationBound.rational(Fraction(parts[0]), Fraction(parts[1]), d)
    except ValueError:
        raise InvalidInputError("bound", f"bad rational in {text!r}")


def _box_key(alpha: FieldElement) -> Tuple[Fraction, Fraction]:
    return (alpha.trace(), alpha.y)


@lru_cache(maxsize=256)
def _enumerate_cached(d: int, bound: TruncationBound) -> Tuple[FieldElement, ...]:
    half = d % 4 == 1
    limit = (bound.b1 + bound.b2).floor()
    found: List[FieldElement] = []
    # alpha = (a + b√d)/2 has trace a < b1 + b2
    for a in range(1, limit + 1):
        if not half and a % 2:
            continue
        b_max = 0
        while d * (b_max + 1) ** 2 < a * a:
            b_max += 1
        for b in range(-b_max, b_max + 1):
            if half and (a - b) % 2:
                continue
            if not half and b % 2:
                continue
            alpha = FieldElement.from_half(a, b, d)
            if not alpha.is_totally_positive():
                continue
            if bound.contains(alpha):
                found.append(alpha)
    found.sort(key=_box_key)
    return tuple(found)


def enumerate_box(field: BaseField, bound: TruncationBound) -> List[FieldElement]:
    """
    Totally positive alpha in O_F inside the box, sorted by trace then by the
    sqrt(d) coordinate. Zero is not included.
    """
    if bound.d != field.d:
        raise InvalidInputError("bound", f"bound over Q(√{bound.d}) used with {field}")
    return list(_enumerate_cached(field.d, bound))
