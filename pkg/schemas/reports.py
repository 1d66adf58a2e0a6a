"""Report schemas emitted by the command line, as a table or as canonical JSON."""

from typing import List, Optional

from pydantic import BaseModel, Field


class ReportSchema(BaseModel):
    """Fields shared by every report."""

    kind: str = Field(..., description="Subcommand that produced the report")
    field: str = Field(..., description="Base field, e.g. Q(√5)")
    provenance: str = Field("", description="Source of the fixture data the report depends on")


class BoundDiagnosticSchema(BaseModel):
    bound: str
    dim_V: int = Field(..., ge=0)
    dim_V2: int = Field(..., ge=0)
    cm_bound: int = Field(..., ge=0)


class CandidateEigenSchema(BaseModel):
    """T_q on the candidate span."""

    prime: str
    charpoly: List[str] = Field(..., description="det(xI - T_q), constant term first")
    splitting_radicand: Optional[int] = Field(None, description="r with disc = r·s², 1 when the eigenvalues are rational")
    eigenvalues: List[str] = Field(default_factory=list)


class SearchReportSchema(ReportSchema):
    """Outcome of the partial weight one search at the last bound of the schedule."""

    kind: str = "search"
    level: str
    weight: str
    character: str
    hecke_primes: List[str]
    dim_V: int = Field(..., ge=0)
    dim_V2: int = Field(..., ge=0)
    cm_bound: int = Field(..., ge=0)
    cm_bound_note: str = "upper bound for the CM part visible on the box, not an exact count"
    candidates: int = Field(..., ge=0)
    stabilized: bool
    diagnostics: List[BoundDiagnosticSchema] = Field(default_factory=list)
    eigen: Optional[CandidateEigenSchema] = None


class CoefficientEntrySchema(BaseModel):
    index: str
    value: str


class SeriesReportSchema(ReportSchema):
    """A truncated expansion: Eisenstein series or a reconstructed newform."""

    weight: str
    character: Optional[str] = None
    bound: str
    constant: str
    coefficients: List[CoefficientEntrySchema] = Field(default_factory=list)
    l_value: Optional[str] = None
    l_value_numeric: Optional[str] = None
    root_number: Optional[str] = None
    document: str = Field("", description="The expansion in the series fixture format")


class CMTestSchema(BaseModel):
    character: str
    status: str
    witness: Optional[str] = None
    tested: int = Field(..., ge=0)


class CMReportSchema(ReportSchema):
    """Twist test against every candidate quadratic character."""

    kind: str = "cm-test"
    label: str = ""
    level: str
    prime_bound: int
    results: List[CMTestSchema] = Field(default_factory=list)
    note: str = "CM_compatible means no witness below the prime bound, not that the form has CM"


class CertificationReportSchema(ReportSchema):
    """Holomorphy certificate for a candidate."""

    kind: str = "verify"
    status: str
    power: int
    rank: Optional[int] = None
    dimension: Optional[int] = None
    span_dimension: Optional[int] = None
    combination: List[str] = Field(default_factory=list)


class RamanujanEntrySchema(BaseModel):
    prime: str
    norm: int
    status: str
    bound: Optional[str] = None
    min_margin: Optional[str] = None
    width: Optional[str] = None


class RamanujanReportSchema(ReportSchema):
    kind: str = "check-ramanujan"
    label: str = ""
    weight: str
    norm_bound: int
    entries: List[RamanujanEntrySchema] = Field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(entry.status in ("pass", "skipped") for entry in self.entries)


class CoefficientRowSchema(BaseModel):
    generator: str
    norm: int
    value: str


class CoefficientTableSchema(ReportSchema):
    """Normalised c(p) by prime, with radical basis labels."""

    kind: str = "table1"
    label: str = ""
    level: str
    weight: str
    coeff_field: str
    rows: List[CoefficientRowSchema] = Field(default_factory=list)
