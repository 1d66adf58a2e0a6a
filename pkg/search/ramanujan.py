"""
Ramanujan bound diagnostic: |σ(c(p))| <= 2·N(p)^{(k1-1)/2} at every complex
embedding σ of the coefficient field, certified with outward-rounded intervals.
"""

from dataclasses import dataclass, field
from typing import List, Optional

import mpmath
from mpmath import iv

from arithmetic.ideals import PrincipalIdeal, primes_up_to
from arithmetic.intervals import abs_enclosure, interval_width, lower_endpoint, upper_endpoint
from config.settings import settings
from core.logging_config import get_logger
from data_io.records import NewformRecord

logger = get_logger(__name__)

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
SKIPPED = "skipped"


@dataclass
class RamanujanEntry:
    """One prime of the diagnostic; margins are certified lower bounds of bound - |σ(c(p))|."""

    prime: PrincipalIdeal
    norm: int
    status: str
    bound: Optional[float] = None
    margins: List[float] = field(default_factory=list)
    width: Optional[float] = None

    @property
    def min_margin(self) -> Optional[float]:
        return min(self.margins) if self.margins else None


@dataclass
class CoefficientRow:
    generator: str
    norm: int
    value: str


def ramanujan_bound(norm: int, k1: int):
    """2·N^{(k1-1)/2} as an interval."""
    return iv.mpf(2) * iv.sqrt(iv.mpf(norm)) ** (k1 - 1)


def ramanujan_check(eigen: NewformRecord, norm_bound: int, dps: Optional[int] = None) -> List[RamanujanEntry]:
    """
    Check every prime of norm <= norm_bound; primes dividing the level are skipped.

    Raises:
        MissingEigenvalueError: a prime away from the level has no eigenvalue
    """
    dps = dps or settings.INTERVAL_DPS
    entries: List[RamanujanEntry] = []
    saved = iv.dps
    iv.dps = dps
    try:
        for p in primes_up_to(norm_bound, eigen.d):
            if p.divides(eigen.level):
                entries.append(RamanujanEntry(p, p.norm, SKIPPED))
                continue
            value = eigen.eigenvalue(p)
            bound = ramanujan_bound(p.norm, eigen.weight.k1)
            margins = []
            widths = []
            status = PASS
            for signs in value.field.complex_embeddings():
                margin = bound - abs_enclosure(value, signs, dps)
                margins.append(float(lower_endpoint(margin)))
                widths.append(interval_width(margin))
                if upper_endpoint(margin) < 0:
                    status = FAIL
                elif lower_endpoint(margin) < 0 and status != FAIL:
                    status = INCONCLUSIVE
            entries.append(
                RamanujanEntry(
                    prime=p,
                    norm=p.norm,
                    status=status,
                    bound=float(mpmath.mpf(upper_endpoint(bound))),
                    margins=margins,
                    width=float(max(widths)),
                )
            )
            if status != PASS:
                logger.warning("Ramanujan bound not certified", prime=p, status=status)
    finally:
        iv.dps = saved
    logger.info(
        "Ramanujan check finished",
        label=eigen.label,
        primes=len(entries),
        failures=sum(1 for e in entries if e.status == FAIL),
    )
    return entries


def normalized_coefficient_table(eigen: NewformRecord) -> List[CoefficientRow]:
    """(generator, norm, c(p)) for every prime of the record, by norm."""
    return [CoefficientRow(str(p.gen), p.norm, str(eigen.eigenvalues[p])) for p in eigen.primes()]
