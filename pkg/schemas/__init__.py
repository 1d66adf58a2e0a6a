"""
Pydantic schemas for fixture documents and emitted reports.
"""

from schemas.fixtures import (
    BoundSchema,
    CharacterDocumentSchema,
    CharacterRefSchema,
    NewformDocumentSchema,
    SeriesDocumentSchema,
    SpaceDocumentSchema,
)
from schemas.reports import (
    CertificationReportSchema,
    CMReportSchema,
    CoefficientTableSchema,
    RamanujanReportSchema,
    ReportSchema,
    SearchReportSchema,
    SeriesReportSchema,
)

__all__ = [
    "BoundSchema",
    "CharacterDocumentSchema",
    "CharacterRefSchema",
    "NewformDocumentSchema",
    "SeriesDocumentSchema",
    "SpaceDocumentSchema",
    "ReportSchema",
    "SearchReportSchema",
    "SeriesReportSchema",
    "CMReportSchema",
    "CertificationReportSchema",
    "RamanujanReportSchema",
    "CoefficientTableSchema",
]
