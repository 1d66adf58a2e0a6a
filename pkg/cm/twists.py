"""
Complex multiplication checks through quadratic twists.

An eigenform has CM by the quadratic extension attached to a totally odd
quadratic character ε exactly when c(p)ε(p) = c(p) for all p away from the
level and the conductor, so any prime with ε(p) = -1 and c(p) != 0 refutes it.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from arithmetic.ideals import PrincipalIdeal, coprime, is_prime_ideal, primes_up_to
from arithmetic.linalg import nullspace, rank
from core.logging_config import get_logger
from data_io.records import NewformRecord
from fourier.series import TruncatedSeries
from ray_class.characters import RayCharacter, enumerate_characters
from ray_class.group import Modulus, build_ray_class_group

logger = get_logger(__name__)

CM_COMPATIBLE = "CM_compatible"
NOT_CM = "NotCM"


@dataclass
class CMResult:
    """Outcome of the twist test. CM_compatible only means no witness below the bound."""

    status: str
    character: RayCharacter
    prime_bound: int
    witness: Optional[PrincipalIdeal] = None
    tested: List[PrincipalIdeal] = field(default_factory=list)

    @property
    def is_cm_compatible(self) -> bool:
        return self.status == CM_COMPATIBLE


def cm_twist_candidates(level: PrincipalIdeal) -> List[RayCharacter]:
    """Totally odd quadratic characters of conductor dividing level·∞1∞2."""
    modulus = Modulus(level, (True, True))
    group = build_ray_class_group(modulus)
    return enumerate_characters(group, order=2, totally_odd=True, conductor_divides=modulus)


def cm_test(eigen: NewformRecord, epsilon: RayCharacter, prime_bound: int) -> CMResult:
    """
    First prime p (by norm, then generator) with ε(p) = -1 and c(p) != 0.

    Raises:
        MissingEigenvalueError: A prime with ε(p) = -1 has no eigenvalue
    """
    excluded = eigen.level * epsilon.conductor.finite_part
    tested = []
    for p in primes_up_to(prime_bound, eigen.d):
        if not coprime(p, excluded):
            continue
        tested.append(p)
        if epsilon.evaluate(p).rational() != -1:
            continue
        if eigen.eigenvalue(p):
            logger.info("CM refuted", label=eigen.label, character=epsilon, witness=p)
            return CMResult(NOT_CM, epsilon, prime_bound, witness=p, tested=tested)
    logger.info("No CM witness below bound", label=eigen.label, character=epsilon, prime_bound=prime_bound)
    return CMResult(CM_COMPATIBLE, epsilon, prime_bound, tested=tested)


def cm_functionals(space: Sequence[TruncatedSeries], epsilon: RayCharacter, level: PrincipalIdeal):
    """Box indices α with (α) prime, coprime to level·cond(ε) and ε((α)) = -1."""
    bound = space[0].bound
    excluded = level * epsilon.conductor.finite_part
    indices = []
    for alpha in space[0].indices():
        a = PrincipalIdeal.from_element(alpha)
        if a.is_unit() or not is_prime_ideal(a) or not coprime(a, excluded):
            continue
        if epsilon.evaluate(a).rational() == -1:
            indices.append(alpha)
    logger.debug("CM functionals selected", character=epsilon, bound=bound, count=len(indices))
    return indices


def cm_upper_bound(space: Sequence[TruncatedSeries], level: PrincipalIdeal) -> int:
    """
    Dimension of the sum over candidate ε of the subspaces killed by every
    c_α with (α) an ε-inert prime; an upper bound for the CM part visible on the box.
    """
    if not space:
        return 0
    candidates = cm_twist_candidates(level)
    if not candidates:
        return 0
    zero = space[0].coeff_field.zero()
    kernels = []
    for epsilon in candidates:
        indices = cm_functionals(space, epsilon, level)
        # rows: functionals; columns: basis elements
        rows = [[f.coefficient(alpha) for f in space] for alpha in indices]
        kernels.extend(nullspace(rows, len(space), zero))
    bound = rank(kernels) if kernels else 0
    logger.info("CM upper bound computed", level=level, candidates=len(candidates), bound=bound)
    return bound
