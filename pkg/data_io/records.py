"""
Domain records built from validated fixture documents.

NewformRecord holds the normalised Hecke eigenvalues of one newform;
SpaceFixture holds a whole space, either as newform records grouped by the
level they are new at or as an explicit basis of truncated expansions.
"""

from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Optional, Tuple

from arithmetic.base_field import BaseField, get_base_field
from arithmetic.box import TruncationBound
from arithmetic.coeff_field import CoeffElement, CoeffField
from arithmetic.ideals import PrincipalIdeal, is_prime_ideal
from core.exceptions import FixtureValidationError, MissingEigenvalueError, NotNormalizedError
from fourier.series import TruncatedSeries, WeightPair
from ray_class.characters import RayCharacter


@dataclass(frozen=True)
class NewformRecord:
    """Normalised eigenvalues c(p) of a newform, keyed by prime ideal; c((1)) = 1."""

    d: int
    level: PrincipalIdeal
    weight: WeightPair
    character: Optional[RayCharacter]
    coeff_field: CoeffField
    eigenvalues: Dict[PrincipalIdeal, CoeffElement] = dataclass_field(hash=False)
    provenance: str = ""
    label: str = ""

    def __post_init__(self):
        unit = PrincipalIdeal.unit(self.d)
        if unit not in self.eigenvalues:
            raise NotNormalizedError("missing c((1))")
        if self.eigenvalues[unit] != self.coeff_field.one():
            raise NotNormalizedError(self.eigenvalues[unit])
        for p, value in self.eigenvalues.items():
            if p != unit and not is_prime_ideal(p):
                raise FixtureValidationError(self.provenance or "<record>", "prime-keys", f"{p} is not prime")
            if value.field != self.coeff_field:
                raise FixtureValidationError(
                    self.provenance or "<record>", "coefficient-field", f"c({p}) lies in {value.field}, not {self.coeff_field}"
                )

    @property
    def base_field(self) -> BaseField:
        return get_base_field(self.d)

    def eigenvalue(self, p: PrincipalIdeal) -> CoeffElement:
        try:
            return self.eigenvalues[p]
        except KeyError:
            raise MissingEigenvalueError(p, self.provenance)

    def primes(self) -> List[PrincipalIdeal]:
        """Prime keys in (norm, generator) order, the unit ideal excluded."""
        return sorted((p for p in self.eigenvalues if not p.is_unit()), key=PrincipalIdeal.sort_key)


@dataclass(frozen=True)
class SpaceFixture:
    """
    A space of cusp forms supplied as data.

    newforms maps each level m | n to the newforms of level m; basis is an
    explicit list of truncated expansions. Exactly one of them is populated.
    """

    d: int
    level: PrincipalIdeal
    weight: WeightPair
    coeff_field: CoeffField
    provenance: str
    newforms: Tuple[Tuple[PrincipalIdeal, Tuple[NewformRecord, ...]], ...] = ()
    basis: Tuple[TruncatedSeries, ...] = ()
    dimension: Optional[int] = None
    bound: Optional[TruncationBound] = None
    character: Optional[RayCharacter] = None

    def __post_init__(self):
        if self.newforms and self.basis:
            raise FixtureValidationError(self.provenance, "space-form", "both newform files and a basis were given")
        for m, _ in self.newforms:
            if not m.divides(self.level):
                raise FixtureValidationError(self.provenance, "newform-level", f"{m} does not divide {self.level}")

    @property
    def is_basis_form(self) -> bool:
        return bool(self.basis)

    @property
    def is_empty(self) -> bool:
        return not self.basis and not any(records for _, records in self.newforms)

    def newforms_at(self, m: PrincipalIdeal) -> Tuple[NewformRecord, ...]:
        for level, records in self.newforms:
            if level == m:
                return records
        return ()
