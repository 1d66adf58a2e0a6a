"""
Narrow ray class groups of F for moduli n·∞1^a·∞2^b.

With narrow class number one the ray class group is
((O/n)^× × {±1}^{places}) / image(O^×). The residue-and-sign group is tabled
explicitly with discrete logs over greedily chosen generators; the relations
of those generators plus the images of -1 and ε are reduced to Hermite form
for character enumeration and to Smith form for the cyclic structure.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

from sympy import Matrix, ZZ
from sympy.core.intfunc import igcdex
from sympy.matrices.normalforms import smith_normal_form

from arithmetic.base_field import FieldElement, get_base_field
from arithmetic.ideals import PrincipalIdeal
from arithmetic.residues import Residue, ResidueRing, residue_ring
from config.settings import settings
from core.exceptions import InvalidInputError, NotCoprimeError, TooLargeError
from core.logging_config import get_logger

logger = get_logger(__name__)

# (residue mod n, sign bit at ∞1, sign bit at ∞2); bit 1 means negative
GroupElement = Tuple[Residue, int, int]
LogVector = Tuple[int, ...]


@dataclass(frozen=True)
class Modulus:
    """n·∞1^inf1·∞2^inf2."""

    finite_part: PrincipalIdeal
    infinite_part: Tuple[bool, bool] = (True, True)

    @classmethod
    def from_half(cls, a: int, b: int, d: int, inf1: bool = True, inf2: bool = True) -> "Modulus":
        return cls(PrincipalIdeal.from_half(a, b, d), (inf1, inf2))

    @property
    def d(self) -> int:
        return self.finite_part.d

    @property
    def places(self) -> Tuple[int, ...]:
        return tuple(i for i, included in enumerate(self.infinite_part) if included)

    def divides(self, other: "Modulus") -> bool:
        if not self.finite_part.divides(other.finite_part):
            return False
        return all(other.infinite_part[i] for i in self.places)

    def sort_key(self) -> Tuple:
        return (self.finite_part.norm, len(self.places), self.finite_part.sort_key(), self.infinite_part)

    def __str__(self) -> str:
        infinite = "".join(f"∞{i + 1}" for i in self.places)
        return f"{self.finite_part}{infinite}"

    __repr__ = __str__


def hermite_rows(rows: List[List[int]], ncols: int) -> List[List[int]]:
    """
    Row Hermite normal form of an integer matrix of full column rank:
    square, upper triangular, positive pivots, entries above a pivot reduced.
    """
    m = [list(row) for row in rows if any(row)]
    out: List[List[int]] = []
    for c in range(ncols):
        active = [row for row in m if row[c]]
        rest = [row for row in m if not row[c]]
        if not active:
            raise ArithmeticError(f"relation lattice is not of full rank at column {c}")
        pivot = active[0]
        for row in active[1:]:
            s, t, g = (int(v) for v in igcdex(pivot[c], row[c]))
            u, v = row[c] // g, pivot[c] // g
            new_pivot = [s * x + t * y for x, y in zip(pivot, row)]
            cleared = [u * x - v * y for x, y in zip(pivot, row)]
            pivot = new_pivot
            if any(cleared):
                rest.append(cleared)
        if pivot[c] < 0:
            pivot = [-x for x in pivot]
        out.append(pivot)
        m = rest
    for i in range(len(out)):
        for j in range(i):
            q = out[j][i] // out[i][i]
            if q:
                out[j] = [x - q * y for x, y in zip(out[j], out[i])]
    return out


@dataclass(frozen=True)
class RayClassGroup:
    """
    The narrow ray class group of a modulus.

    generators are (representative, sign bits) in increasing residue order;
    relations is the upper triangular Hermite basis of the relation lattice.
    """

    modulus: Modulus
    generators: Tuple[Tuple[FieldElement, Tuple[int, int]], ...]
    structure: Tuple[int, ...]
    relations: Tuple[Tuple[int, ...], ...]
    unit_residue_count: int
    _logs: Dict[GroupElement, LogVector] = field(compare=False, hash=False, repr=False)

    @property
    def d(self) -> int:
        return self.modulus.d

    @property
    def order(self) -> int:
        result = 1
        for n in self.structure:
            result *= n
        return result

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def ring(self) -> ResidueRing:
        return residue_ring(self.modulus.finite_part)

    def element_of(self, x: FieldElement) -> GroupElement:
        """Group element of a nonzero integral x coprime to the modulus."""
        ring = self.ring
        residue = ring.reduce(x)
        if not ring.is_unit(residue):
            raise NotCoprimeError(x, self.modulus)
        s1 = int(self.modulus.infinite_part[0] and x.real_sign() < 0)
        s2 = int(self.modulus.infinite_part[1] and x.conjugate().real_sign() < 0)
        return (residue, s1, s2)

    def log(self, element: GroupElement) -> LogVector:
        try:
            return self._logs[element]
        except KeyError:
            raise InvalidInputError("group element", f"{element} is not in the residue group of {self.modulus}")

    def log_element(self, x: FieldElement) -> LogVector:
        """Coordinates of x in (O/n)^× × signs over the tabled generators, not reduced by units."""
        return self.log(self.element_of(x))

    def reduce(self, vector: LogVector) -> LogVector:
        """
        Canonical representative modulo the relation lattice, 0 <= v_i < h_ii.

        Two logs lie in the same ray class exactly when they reduce to the same vector.
        """
        v = list(vector)
        for i, row in enumerate(self.relations):
            q = v[i] // row[i]
            if q:
                v = [x - q * y for x, y in zip(v, row)]
        return tuple(v)

    def class_of(self, x: FieldElement) -> LogVector:
        """Reduced log of the ray class of (x) with the signs of x."""
        return self.reduce(self.log_element(x))

    def log_ideal(self, a: PrincipalIdeal) -> LogVector:
        """Reduced log of the class of a, through its totally positive generator."""
        return self.class_of(a.gen)

    def elements(self) -> List[GroupElement]:
        """Every residue-and-sign element, in table order."""
        return list(self._logs)

    def __str__(self) -> str:
        return f"Cl({self.modulus}) ≅ " + (" × ".join(f"Z/{n}" for n in self.structure) or "1")


def _multiply(ring: ResidueRing, x: GroupElement, y: GroupElement) -> GroupElement:
    return (ring.mul(x[0], y[0]), x[1] ^ y[1], x[2] ^ y[2])


def _table_residue_group(ring: ResidueRing, modulus: Modulus):
    """Greedy generators of (O/n)^× × signs with their triangular relations and a log table."""
    one: GroupElement = (ring.one(), 0, 0)
    candidates: List[GroupElement] = [(r, 0, 0) for r in ring.units()]
    if modulus.infinite_part[0]:
        candidates.append((ring.one(), 1, 0))
    if modulus.infinite_part[1]:
        candidates.append((ring.one(), 0, 1))

    logs: Dict[GroupElement, LogVector] = {one: ()}
    generators: List[GroupElement] = []
    relations: List[List[int]] = []
    for x in candidates:
        if x in logs:
            continue
        # smallest k with x^k already in the subgroup
        power, k = x, 1
        while power not in logs:
            power = _multiply(ring, power, x)
            k += 1
        previous = logs[power]
        m = len(generators)
        relations = [row + [0] for row in relations]
        relations.append([-v for v in previous] + [0] * (m - len(previous)) + [k])
        extended: Dict[GroupElement, LogVector] = {}
        shift = one
        for j in range(k):
            for element, vector in logs.items():
                padded = tuple(vector) + (0,) * (m - len(vector))
                extended[_multiply(ring, shift, element)] = padded + (j,)
            shift = _multiply(ring, shift, x)
        logs = extended
        generators.append(x)
    width = len(generators)
    logs = {element: tuple(vector) + (0,) * (width - len(vector)) for element, vector in logs.items()}
    return generators, relations, logs


def _unit_images(ring: ResidueRing, modulus: Modulus) -> List[GroupElement]:
    field = get_base_field(modulus.d)
    images = []
    for u in (FieldElement.rational(-1, modulus.d), field.fundamental_unit):
        s1 = int(modulus.infinite_part[0] and u.real_sign() < 0)
        s2 = int(modulus.infinite_part[1] and u.conjugate().real_sign() < 0)
        images.append((ring.reduce(u), s1, s2))
    return images


@lru_cache(maxsize=64)
def build_ray_class_group(modulus: Modulus) -> RayClassGroup:
    """
    Build the narrow ray class group of the modulus.

    Raises:
        TooLargeError: If N(n) exceeds the residue enumeration guard
    """
    norm = modulus.finite_part.norm
    if norm > settings.RESIDUE_NORM_GUARD:
        raise TooLargeError(norm, settings.RESIDUE_NORM_GUARD)
    ring = residue_ring(modulus.finite_part)
    generators, relations, logs = _table_residue_group(ring, modulus)
    width = len(generators)
    unit_rows = [list(logs[image]) for image in _unit_images(ring, modulus)]

    if width == 0:
        hermite: List[List[int]] = []
        structure: Tuple[int, ...] = ()
    else:
        hermite = hermite_rows(relations + unit_rows, width)
        snf = smith_normal_form(Matrix(hermite), domain=ZZ)
        structure = tuple(sorted(abs(int(snf[i, i])) for i in range(width) if abs(int(snf[i, i])) > 1))

    group = RayClassGroup(
        modulus=modulus,
        generators=tuple((ring.element(r), (s1, s2)) for r, s1, s2 in generators),
        structure=structure,
        relations=tuple(tuple(row) for row in hermite),
        unit_residue_count=sum(1 for element in logs if element[1] == 0 and element[2] == 0),
        _logs=logs,
    )
    logger.info("Ray class group built", modulus=modulus, structure=list(structure), order=group.order)
    return group
