"""Fixture document schemas: the validated shape of parsed fixture files, before domain objects are built."""

from fractions import Fraction
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

FixtureKind = Literal["newform", "series", "space", "character"]


def _check_rationals(values: List[str]) -> List[str]:
    for value in values:
        try:
            Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"{value!r} is not a rational number")
    return values


class HalfCoordsSchema(BaseModel):
    """An element (a + b√d)/2 of the base field."""

    a: int = Field(..., description="Rational part, doubled")
    b: int = Field(..., description="√d part, doubled")


class CoordsSchema(BaseModel):
    """Rational coordinates on the radical basis of the coefficient field."""

    coords: List[str] = Field(..., min_length=1, description="Coordinates as 'p' or 'p/q'")

    @field_validator("coords")
    @classmethod
    def validate_coords(cls, v: List[str]) -> List[str]:
        return _check_rationals(v)


class CharacterValueSchema(CoordsSchema):
    """χ at the class of a residue with sign bits; s_i is '+' or '-'."""

    residue: HalfCoordsSchema
    s1: Literal["+", "-"] = "+"
    s2: Literal["+", "-"] = "+"


class CharacterDocumentSchema(BaseModel):
    """A ray class character given by prescribed values."""

    d: int = Field(..., description="Base field radicand")
    radicands: List[int] = Field(default_factory=list, description="Radicands of the value field")
    modulus: HalfCoordsSchema
    infinite_part: Tuple[bool, bool] = (True, True)
    values: List[CharacterValueSchema] = Field(..., min_length=1)
    order: Optional[int] = Field(None, ge=1)
    totally_odd: Optional[bool] = None
    provenance: str = Field(..., min_length=1)


class CharacterRefSchema(BaseModel):
    """How a newform, series or space names its character."""

    kind: Literal["trivial", "file", "inline"] = "trivial"
    path: Optional[str] = None
    document: Optional[CharacterDocumentSchema] = None

    @model_validator(mode="after")
    def validate_target(self) -> "CharacterRefSchema":
        if self.kind == "file" and not self.path:
            raise ValueError("character file needs a path")
        if self.kind == "inline" and self.document is None:
            raise ValueError("inline character needs values")
        return self


class EigenvalueSchema(CoordsSchema):
    """c(p) for p = ((a + b√d)/2); (2, 0) is the unit ideal."""

    generator: HalfCoordsSchema


class NewformDocumentSchema(BaseModel):
    """One newform: weight, level, character and normalised Hecke eigenvalues."""

    d: int
    radicands: List[int] = Field(default_factory=list)
    weight: Tuple[int, int]
    level: HalfCoordsSchema
    character: CharacterRefSchema = Field(default_factory=CharacterRefSchema)
    provenance: str = Field(..., min_length=1)
    label: str = ""
    eigenvalues: List[EigenvalueSchema] = Field(..., min_length=1)

    @model_validator(mode="after")
    def validate_eigenvalues(self) -> "NewformDocumentSchema":
        degree = 1 << len(self.radicands)
        for entry in self.eigenvalues:
            if len(entry.coords) != degree:
                raise ValueError(
                    f"eigenvalue at ({entry.generator.a}, {entry.generator.b}) has "
                    f"{len(entry.coords)} coordinates, expected {degree}"
                )
        return self


class CoefficientSchema(CoordsSchema):
    """c_α for α = (a + b√d)/2."""

    index: HalfCoordsSchema


class BoundSchema(BaseModel):
    """Box (x1 + y1√d, x2 + y2√d), both read under embedding 1."""

    x1: str
    y1: str
    x2: str
    y2: str

    @model_validator(mode="after")
    def validate_rationals(self) -> "BoundSchema":
        _check_rationals([self.x1, self.y1, self.x2, self.y2])
        return self


class SeriesBodySchema(BaseModel):
    """Constant term and box coefficients of one truncated expansion."""

    bound: Optional[BoundSchema] = None
    constant: Optional[CoordsSchema] = None
    coefficients: List[CoefficientSchema] = Field(default_factory=list)


class SeriesDocumentSchema(SeriesBodySchema):
    """A truncated Fourier expansion with its metadata."""

    d: int
    radicands: List[int] = Field(default_factory=list)
    weight: Tuple[int, int]
    character: CharacterRefSchema = Field(default_factory=CharacterRefSchema)
    provenance: str = Field(..., min_length=1)

    @model_validator(mode="after")
    def validate_bound(self) -> "SeriesDocumentSchema":
        if self.bound is None:
            raise ValueError("a series needs a bound")
        return self


class NewformFileRefSchema(BaseModel):
    """Newforms of level m, read from another file."""

    path: str
    level: HalfCoordsSchema


class SpaceDocumentSchema(BaseModel):
    """A space of cusp forms: an explicit basis or newform files by level."""

    d: int
    radicands: List[int] = Field(default_factory=list)
    weight: Tuple[int, int]
    level: HalfCoordsSchema
    character: CharacterRefSchema = Field(default_factory=CharacterRefSchema)
    provenance: str = Field(..., min_length=1)
    dimension: Optional[int] = Field(None, ge=0)
    bound: Optional[BoundSchema] = None
    basis: List[SeriesBodySchema] = Field(default_factory=list)
    newform_files: List[NewformFileRefSchema] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_form(self) -> "SpaceDocumentSchema":
        if self.basis and self.newform_files:
            raise ValueError("a space is either a basis or a list of newform files")
        if self.basis and self.bound is None and any(b.bound is None for b in self.basis):
            raise ValueError("basis form needs a bound")
        return self
