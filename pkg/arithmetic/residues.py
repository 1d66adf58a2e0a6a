"""
The residue ring O_F/n for a principal ideal n.

n·O is a full lattice in the integral basis (1, ω). Its Hermite normal form has
rows (c, 0) and (e, f) with c·f = N(n); residues are the pairs (a, b) with
0 <= a < c and 0 <= b < f.
"""

from functools import lru_cache
from math import gcd
from typing import Iterator, List, Tuple

from sympy.core.intfunc import igcdex

from arithmetic.base_field import FieldElement, get_base_field
from arithmetic.ideals import PrincipalIdeal

Residue = Tuple[int, int]


class ResidueRing:
    """O_F/n with canonical residue representatives."""

    def __init__(self, modulus: PrincipalIdeal):
        self.modulus = modulus
        self.d = modulus.d
        self.field = get_base_field(self.d)
        a1, b1 = modulus.gen.integral_coords()
        a2, b2 = (modulus.gen * self.field.omega).integral_coords()
        s, t, g = igcdex(b1, b2)
        s, t, g = int(s), int(t), int(g)
        if g == 0:
            raise ArithmeticError(f"{modulus} does not span a full lattice")
        self.f = abs(g)
        self.c = abs((b2 * a1 - b1 * a2) // g)
        e = s * a1 + t * a2
        if g < 0:
            e = -e
        self.e = e % self.c
        if self.c * self.f != modulus.norm:
            raise ArithmeticError(f"lattice index {self.c * self.f} differs from N({modulus}) = {modulus.norm}")

    @property
    def size(self) -> int:
        return self.c * self.f

    def reduce(self, x: FieldElement) -> Residue:
        """Canonical residue of an integral element."""
        a, b = x.integral_coords()
        k = b // self.f
        a -= k * self.e
        b -= k * self.f
        return (a % self.c, b)

    def element(self, r: Residue) -> FieldElement:
        return self.field.from_integral(r[0], r[1])

    def residues(self) -> Iterator[Residue]:
        """All residues, rational ones first, in increasing order."""
        for b in range(self.f):
            for a in range(self.c):
                yield (a, b)

    def one(self) -> Residue:
        return self.reduce(self.field.one())

    def mul(self, r: Residue, s: Residue) -> Residue:
        return self.reduce(self.element(r) * self.element(s))

    def contains(self, x: FieldElement) -> bool:
        """x ≡ 0 mod n."""
        return self.reduce(x) == (0, 0)

    def is_unit(self, r: Residue) -> bool:
        """(x) + n = O, i.e. the lattice spanned by n·O, x and x·ω has index 1."""
        x = self.element(r)
        vectors = [(self.c, 0), (self.e, self.f), x.integral_coords(), (x * self.field.omega).integral_coords()]
        g = 0
        for i in range(len(vectors)):
            for j in range(i + 1, len(vectors)):
                (p, q), (u, v) = vectors[i], vectors[j]
                g = gcd(g, p * v - q * u)
        return g == 1

    def units(self) -> List[Residue]:
        return [r for r in self.residues() if self.is_unit(r)]

    def __repr__(self) -> str:
        return f"ResidueRing({self.modulus}, hnf=[({self.c},0),({self.e},{self.f})])"


@lru_cache(maxsize=128)
def residue_ring(modulus: PrincipalIdeal) -> ResidueRing:
    return ResidueRing(modulus)
