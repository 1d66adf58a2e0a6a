"""
Hecke matrices on spans of truncated expansions, and eigenbases of small spans.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from sympy import factorint

from arithmetic.coeff_field import CoeffElement, CoeffField
from arithmetic.ideals import PrincipalIdeal
from arithmetic.linalg import charpoly, express_in_span, nullspace, rank, transpose
from core.exceptions import InvalidInputError, RankDeficientError
from core.logging_config import get_logger
from fourier.series import TruncatedSeries, coefficient_vector, linear_combination, truncate
from hecke.operators import HeckeContext, apply_T

logger = get_logger(__name__)


@dataclass
class Diagonalization:
    """T_q on a span of dimension <= 2, with eigenvectors when they are rational over the coefficient field."""

    matrix: List[List[CoeffElement]]
    charpoly: List[CoeffElement]
    discriminant: Optional[CoeffElement] = None
    splitting_radicand: Optional[int] = None
    eigenvalues: List[CoeffElement] = field(default_factory=list)
    eigenvectors: List[TruncatedSeries] = field(default_factory=list)

    @property
    def split(self) -> bool:
        return len(self.eigenvalues) == len(self.matrix)


def hecke_matrix(basis: Sequence[TruncatedSeries], ctx: HeckeContext, q: PrincipalIdeal) -> List[List[CoeffElement]]:
    """
    M with T_q f_j = Σ_i M[i][j] f_i, solved exactly on the shrunken box.

    Raises:
        RankDeficientError: the basis is dependent on the shrunken box
        InvalidInputError: T_q leaves the span
    """
    if not basis:
        return []
    images = [apply_T(ctx, q, f) for f in basis]
    box = images[0].bound
    columns = [coefficient_vector(truncate(f, box)) for f in basis]
    found = rank(columns)
    if found < len(columns):
        raise RankDeficientError(found, len(columns), box)
    matrix_columns = []
    for image in images:
        coordinates = express_in_span(columns, coefficient_vector(image))
        if coordinates is None:
            raise InvalidInputError("basis", f"the span is not stable under T_{q} on {box}")
        matrix_columns.append(coordinates)
    return transpose(matrix_columns)


def characteristic_polynomial(matrix: Sequence[Sequence[CoeffElement]]) -> List[CoeffElement]:
    """det(xI - M), coefficients from the constant term up."""
    return charpoly([list(row) for row in matrix])


def splitting_radical(disc: CoeffElement, candidates: Sequence[int] = ()) -> Optional[int]:
    """1 when disc is a square in its field, r when disc·r is (so disc = r·s^2), else None."""
    if disc.sqrt() is not None:
        return 1
    for r in candidates:
        if (disc * r).sqrt() is not None:
            return r
    return None


def small_radicands(limit: int = 100) -> List[int]:
    """Squarefree r ≠ 0, 1 with |r| <= limit, by |r| and negative first."""
    found = [-1]
    for n in range(2, limit + 1):
        if all(exponent == 1 for exponent in factorint(n).values()):
            found.extend([-n, n])
    return found


def diagonalize(
    basis: Sequence[TruncatedSeries],
    ctx: HeckeContext,
    q: PrincipalIdeal,
    candidates: Sequence[int] = (),
) -> Diagonalization:
    """
    Eigenvalues and eigenvectors of T_q on a span of dimension 1 or 2.

    When the discriminant has no square root in the coefficient field the
    result reports the radicand from candidates that splits it, and no eigenvectors.
    """
    if not 1 <= len(basis) <= 2:
        raise InvalidInputError("basis", f"diagonalisation is implemented for dimension 1 or 2, got {len(basis)}")
    matrix = hecke_matrix(basis, ctx, q)
    poly = characteristic_polynomial(matrix)
    result = Diagonalization(matrix=matrix, charpoly=poly)
    coeff_field: CoeffField = basis[0].coeff_field

    if len(basis) == 1:
        result.eigenvalues = [matrix[0][0]]
        result.eigenvectors = [basis[0]]
        return result

    c0, c1 = poly[0], poly[1]
    disc = c1 * c1 - c0 * 4
    result.discriminant = disc
    result.splitting_radicand = splitting_radical(disc, candidates)
    root = disc.sqrt()
    if root is None:
        logger.info("Hecke matrix does not split over the coefficient field", prime=q, field=coeff_field)
        return result
    for sign in (1, -1):
        value = (-c1 + root * sign) / 2
        shifted = [
            [entry - value if i == j else entry for j, entry in enumerate(row)] for i, row in enumerate(matrix)
        ]
        kernel = nullspace(shifted)
        if not kernel:
            continue
        result.eigenvalues.append(value)
        result.eigenvectors.append(linear_combination(kernel[0], list(basis)))
        if root.is_zero():
            break
    logger.info("Hecke matrix diagonalised", prime=q, eigenvalues=result.eigenvalues)
    return result
