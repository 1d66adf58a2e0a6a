"""
Report emission: domain results to report schemas, then to a fixed-width
table or canonical JSON.
"""

from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from arithmetic.base_field import get_base_field
from cm.twists import CMResult
from core.exceptions import InvalidInputError
from core.logging_config import get_logger
from data_io.fixtures import dump_series
from data_io.records import NewformRecord
from eisenstein.lvalues import LValue
from fourier.series import TruncatedSeries
from schemas.reports import (
    BoundDiagnosticSchema,
    CandidateEigenSchema,
    CertificationReportSchema,
    CMReportSchema,
    CMTestSchema,
    CoefficientEntrySchema,
    CoefficientRowSchema,
    CoefficientTableSchema,
    RamanujanEntrySchema,
    RamanujanReportSchema,
    ReportSchema,
    SearchReportSchema,
    SeriesReportSchema,
)
from search.algorithm import SearchReport
from search.certify import Certified, CertificationResult, InjectivityFailure
from search.ramanujan import RamanujanEntry, normalized_coefficient_table

logger = get_logger(__name__)

FORMATS = ("table", "structured")


def _num(x, digits: int = 12) -> str:
    return f"{x:.{digits}g}" if isinstance(x, float) else str(x)


# ==================== Builders ====================


def search_report(report: SearchReport) -> SearchReportSchema:
    inp = report.input
    return SearchReportSchema(
        field=str(get_base_field(inp.d)),
        provenance=report.provenance,
        level=str(inp.level),
        weight=str(inp.weight),
        character=str(inp.character),
        hecke_primes=[str(p) for p in inp.primes],
        dim_V=report.dim_V,
        dim_V2=report.dim_V2,
        cm_bound=report.cm_bound,
        candidates=len(report.candidates),
        stabilized=report.stabilized,
        diagnostics=[
            BoundDiagnosticSchema(bound=str(e.bound), dim_V=e.dim_V, dim_V2=e.dim_V2, cm_bound=e.cm_bound)
            for e in report.diagnostics
        ],
        eigen=_candidate_eigen(report),
    )


def _candidate_eigen(report: SearchReport) -> Optional[CandidateEigenSchema]:
    diag = report.diagonalization
    if diag is None:
        return None
    return CandidateEigenSchema(
        prime=str(report.input.hecke_prime),
        charpoly=[str(c) for c in diag.charpoly],
        splitting_radicand=diag.splitting_radicand if len(diag.matrix) > 1 else 1,
        eigenvalues=[str(v) for v in diag.eigenvalues],
    )


def series_report(
    kind: str, s: TruncatedSeries, provenance: str, lvalue: Optional[LValue] = None
) -> SeriesReportSchema:
    coefficients = [
        CoefficientEntrySchema(index=str(alpha), value=str(s.coeffs[alpha])) for alpha in s.indices() if alpha in s.coeffs
    ]
    return SeriesReportSchema(
        kind=kind,
        field=str(s.field),
        provenance=provenance,
        weight=str(s.weight),
        character=str(s.character) if s.character is not None else None,
        bound=str(s.bound),
        constant=str(s.constant),
        coefficients=coefficients,
        l_value=str(lvalue.value) if lvalue else None,
        l_value_numeric=_num(lvalue.numeric) if lvalue and lvalue.numeric is not None else None,
        root_number=_num(lvalue.root_number) if lvalue and lvalue.root_number is not None else None,
        document=dump_series(s, provenance),
    )


def cm_report(eigen: NewformRecord, prime_bound: int, results: Sequence[CMResult]) -> CMReportSchema:
    return CMReportSchema(
        field=str(eigen.base_field),
        provenance=eigen.provenance,
        label=eigen.label,
        level=str(eigen.level),
        prime_bound=prime_bound,
        results=[
            CMTestSchema(
                character=str(r.character),
                status=r.status,
                witness=str(r.witness) if r.witness is not None else None,
                tested=len(r.tested),
            )
            for r in results
        ],
    )


def certification_report(result: CertificationResult, power: int, field: str, provenance: str) -> CertificationReportSchema:
    if isinstance(result, Certified):
        return CertificationReportSchema(
            field=field,
            provenance=provenance,
            status=result.status,
            power=power,
            combination=[str(c) for c in result.coefficients],
        )
    if isinstance(result, InjectivityFailure):
        return CertificationReportSchema(
            field=field, provenance=provenance, status=result.status, power=power, rank=result.rank, dimension=result.dimension
        )
    return CertificationReportSchema(
        field=field, provenance=provenance, status=result.status, power=power, span_dimension=result.span_dimension
    )


def ramanujan_report(eigen: NewformRecord, norm_bound: int, entries: Sequence[RamanujanEntry]) -> RamanujanReportSchema:
    return RamanujanReportSchema(
        field=str(eigen.base_field),
        provenance=eigen.provenance,
        label=eigen.label,
        weight=str(eigen.weight),
        norm_bound=norm_bound,
        entries=[
            RamanujanEntrySchema(
                prime=str(e.prime),
                norm=e.norm,
                status=e.status,
                bound=_num(e.bound) if e.bound is not None else None,
                min_margin=_num(e.min_margin) if e.min_margin is not None else None,
                width=_num(e.width, 3) if e.width is not None else None,
            )
            for e in entries
        ],
    )


def coefficient_table(eigen: NewformRecord) -> CoefficientTableSchema:
    return CoefficientTableSchema(
        field=str(eigen.base_field),
        provenance=eigen.provenance,
        label=eigen.label,
        level=str(eigen.level),
        weight=str(eigen.weight),
        coeff_field=str(eigen.coeff_field),
        rows=[CoefficientRowSchema(generator=r.generator, norm=r.norm, value=r.value) for r in normalized_coefficient_table(eigen)],
    )


# ==================== Rendering ====================


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return lines


def _header(report: ReportSchema, extra: Sequence[Tuple[str, str]]) -> List[str]:
    pairs = [("report", report.kind), ("field", report.field)] + list(extra)
    if report.provenance:
        pairs.append(("provenance", report.provenance))
    width = max(len(key) for key, _ in pairs)
    return [f"{key.ljust(width)}  {value}" for key, value in pairs]


def render_table(report: ReportSchema) -> str:
    """Human-readable fixed-width rendering of any report."""
    if isinstance(report, SearchReportSchema):
        lines = _header(
            report,
            [
                ("level", report.level),
                ("weight", report.weight),
                ("character", report.character),
                ("hecke primes", ", ".join(report.hecke_primes)),
                ("dim V", str(report.dim_V)),
                ("dim V2", str(report.dim_V2)),
                ("cm bound", f"{report.cm_bound} ({report.cm_bound_note})"),
                ("candidates", str(report.candidates)),
                ("stabilized", "yes" if report.stabilized else "no"),
            ],
        )
        lines += [""] + _table(
            ["bound", "dim V", "dim V2", "cm bound"],
            [[d.bound, str(d.dim_V), str(d.dim_V2), str(d.cm_bound)] for d in report.diagnostics],
        )
        if report.eigen:
            eigen = report.eigen
            radicand = "-" if eigen.splitting_radicand is None else str(eigen.splitting_radicand)
            lines += [""] + _table(
                ["hecke prime", "charpoly", "splits by √", "eigenvalues"],
                [[eigen.prime, ", ".join(eigen.charpoly), radicand, ", ".join(eigen.eigenvalues) or "-"]],
            )
    elif isinstance(report, SeriesReportSchema):
        # the series document is itself the table form
        return report.document
    elif isinstance(report, CMReportSchema):
        lines = _header(report, [("label", report.label), ("level", report.level), ("prime bound", str(report.prime_bound))])
        lines += [""] + _table(
            ["character", "status", "witness", "primes tested"],
            [[r.character, r.status, r.witness or "-", str(r.tested)] for r in report.results],
        )
        lines += ["", report.note]
    elif isinstance(report, CertificationReportSchema):
        extra = [("status", report.status), ("power", str(report.power))]
        if report.rank is not None:
            extra.append(("rank", f"{report.rank} of {report.dimension}"))
        if report.span_dimension is not None:
            extra.append(("span dimension", str(report.span_dimension)))
        if report.combination:
            extra.append(("combination", ", ".join(report.combination)))
        lines = _header(report, extra)
    elif isinstance(report, RamanujanReportSchema):
        lines = _header(report, [("label", report.label), ("weight", report.weight), ("norm bound", str(report.norm_bound))])
        lines += [""] + _table(
            ["prime", "norm", "status", "bound", "min margin", "width"],
            [
                [e.prime, str(e.norm), e.status, e.bound or "-", e.min_margin or "-", e.width or "-"]
                for e in report.entries
            ],
        )
    elif isinstance(report, CoefficientTableSchema):
        lines = _header(
            report,
            [("label", report.label), ("level", report.level), ("weight", report.weight), ("coefficients", report.coeff_field)],
        )
        lines += [""] + _table(["p", "N(p)", "c(p)"], [[r.generator, str(r.norm), r.value] for r in report.rows])
    else:
        raise InvalidInputError("report", f"no table layout for {type(report).__name__}")
    return "\n".join(lines) + "\n"


def render_report(report: ReportSchema, fmt: str = "table") -> str:
    if fmt == "table":
        return render_table(report)
    if fmt == "structured":
        return report.model_dump_json(indent=2) + "\n"
    raise InvalidInputError("format", f"expected one of {', '.join(FORMATS)}, got {fmt!r}")


def emit_report(report: ReportSchema, path: Optional[Union[str, Path]] = None, fmt: str = "table") -> str:
    """Render the report and write it to path when given; returns the rendered text."""
    text = render_report(report, fmt)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
        logger.info("Report written", kind=report.kind, path=path, format=fmt)
    return text
