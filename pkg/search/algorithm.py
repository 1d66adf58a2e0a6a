"""
The partial weight one search.

Given a weight [k,1], a squarefree level n and a totally odd character χ:
  1. expand a basis of S_{[k+1,2]}(Γ0(n)) from fixture data (newforms and oldforms),
  2. divide it by E_{1,χ^{-1}} to get the ratio space V(B) of weight [k,1] and character χ,
  3. intersect V(B) with T_q V(B) on the shrunken box,
  4. compare the dimension left with the detectable CM part,
  5. diagonalise T_q on whatever exceeds it.
Anything beyond the CM bound is a candidate holomorphic form of weight [k,1].
"""

from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from arithmetic.box import TruncationBound
from arithmetic.coeff_field import compositum
from arithmetic.ideals import PrincipalIdeal, factor_ideal, is_prime_ideal, primes_up_to
from arithmetic.linalg import intersect_spans, rank
from cm.twists import cm_upper_bound
from config.settings import settings
from core.exceptions import (
    InsufficientBoundError,
    InvalidInputError,
    MetadataMismatchError,
    PW1Exception,
    RankDeficientError,
)
from core.logging_config import get_logger
from data_io.records import SpaceFixture
from eisenstein.series import eisenstein_series
from fourier.series import (
    TruncatedSeries,
    WeightPair,
    change_coeff_field,
    coefficient_vector,
    divide,
    from_vector,
    truncate,
)
from hecke.newforms import oldform_source_bound, old_space_pairs, reconstruct_expansion, span_old_space
from hecke.operators import HeckeContext, apply_T, hecke_output_bound, required_source_bound
from hecke.spectral import Diagonalization, diagonalize, small_radicands
from ray_class.characters import RayCharacter, character_inverse, check_weight_compatibility
from ray_class.group import Modulus

logger = get_logger(__name__)


@dataclass(frozen=True)
class SearchInput:
    """One run of the search: (k, n, χ, B) and the Hecke prime."""

    weight: WeightPair
    level: PrincipalIdeal
    character: RayCharacter
    bound: TruncationBound
    hecke_prime: PrincipalIdeal
    extra_primes: Tuple[PrincipalIdeal, ...] = ()
    iterations: int = 1

    def __post_init__(self):
        if self.weight.k1 % 2 == 0 or self.weight.k2 % 2 == 0:
            raise InvalidInputError("weight", f"{self.weight} must have odd entries")
        if any(e > 1 for e in factor_ideal(self.level).values()):
            raise InvalidInputError("level", f"{self.level} is not squarefree")
        if not self.character.conductor.divides(Modulus(self.level, (True, True))):
            raise InvalidInputError("character", f"conductor {self.character.conductor} does not divide {self.level}∞1∞2")
        if not check_weight_compatibility(self.character, self.weight.k1, self.weight.k2):
            raise InvalidInputError("character", f"{self.character} is incompatible with weight {self.weight}")
        for q in (self.hecke_prime,) + tuple(self.extra_primes):
            if not is_prime_ideal(q):
                raise InvalidInputError("hecke_prime", f"{q} is not prime")
        if self.iterations < 1:
            raise InvalidInputError("iterations", "at least one Hecke intersection is needed")

    @property
    def d(self) -> int:
        return self.level.d

    @property
    def primes(self) -> Tuple[PrincipalIdeal, ...]:
        return (self.hecke_prime,) + tuple(self.extra_primes)

    @property
    def context(self) -> HeckeContext:
        return HeckeContext(self.level, self.weight, self.character)


@dataclass
class BoundDiagnostic:
    """Dimensions recorded at one bound of the rerun schedule."""

    bound: TruncationBound
    dim_V: int
    dim_V2: int
    cm_bound: int


@dataclass
class SearchReport:
    """Result of a search over a bound schedule; the dimensions are those at the last bound."""

    input: SearchInput
    dim_V: int
    dim_V2: int
    cm_bound: int
    candidates: List[TruncatedSeries] = field(default_factory=list)
    diagnostics: List[BoundDiagnostic] = field(default_factory=list)
    stabilized: bool = True
    provenance: str = ""
    diagonalization: Optional[Diagonalization] = None

    @property
    def has_candidates(self) -> bool:
        return bool(self.candidates)

    @property
    def eigenforms(self) -> List[TruncatedSeries]:
        """Candidate eigenforms for the Hecke prime, when they split over the coefficient field."""
        return list(self.diagonalization.eigenvectors) if self.diagonalization else []


# ==================== Space construction ====================


def search_source_bound(
    bound: TruncationBound, primes: Sequence[PrincipalIdeal], iterations: int = 1
) -> TruncationBound:
    """Box on which V must be known so that every nested T_p image still covers bound."""
    source = bound
    for _ in range(iterations):
        widened = source
        for p in primes:
            widened = widened.join(required_source_bound(source, [p]))
        source = widened
    return source


def space_expansions(fixture: SpaceFixture, bound: TruncationBound) -> List[TruncatedSeries]:
    """A spanning list of the fixture's space on the box: new forms at n, then V_{m,b} images."""
    coeff_field = fixture.coeff_field
    if fixture.is_basis_form:
        return [change_coeff_field(truncate(s, bound), coeff_field) for s in fixture.basis]

    expansions: List[TruncatedSeries] = []
    for record in fixture.newforms_at(fixture.level):
        expansions.append(change_coeff_field(reconstruct_expansion(record, bound), coeff_field))

    old_bases = []
    for m, records in fixture.newforms:
        if m == fixture.level or not records:
            continue
        source = bound
        for b in old_space_pairs(fixture.level, m):
            source = source.join(oldform_source_bound(bound, b))
        old_bases.append(
            (m, [change_coeff_field(reconstruct_expansion(record, source), coeff_field) for record in records])
        )
    expansions.extend(span_old_space(old_bases, fixture.level, bound))
    return expansions


def build_ratio_space(inp: SearchInput, fixture: SpaceFixture) -> List[TruncatedSeries]:
    """
    V(B): the space of weight [k+1,2] divided by E_{1,χ^{-1}}, on the box the
    Hecke step needs.

    Raises:
        RankDeficientError: the truncated space has rank below its dimension
    """
    if fixture.is_empty:
        logger.info("Empty space fixture", level=inp.level, provenance=fixture.provenance)
        return []
    expected_weight = inp.weight + WeightPair(1, 1)
    if fixture.weight != expected_weight:
        raise MetadataMismatchError("weight", fixture.weight, expected_weight)

    big = search_source_bound(inp.bound, inp.primes, inp.iterations)
    expansions = space_expansions(fixture, big)
    dimension = fixture.dimension if fixture.dimension is not None else len(expansions)
    found = rank([coefficient_vector(g) for g in expansions])
    if found < dimension:
        raise RankDeficientError(found, dimension, big)

    psi = character_inverse(inp.character)
    coeff_field = compositum(fixture.coeff_field, psi.value_field)
    eisenstein = eisenstein_series(psi, big, coeff_field)
    ratio = [divide(change_coeff_field(g, coeff_field), eisenstein) for g in expansions]
    logger.info("Ratio space built", level=inp.level, bound=big, dimension=found)
    return ratio


# ==================== Hecke intersection ====================


def intersect_with_hecke(
    V: Sequence[TruncatedSeries],
    ctx: HeckeContext,
    q: PrincipalIdeal,
    extra_primes: Sequence[PrincipalIdeal] = (),
    iterations: int = 1,
) -> List[TruncatedSeries]:
    """
    V ∩ T_q V ∩ T_q' V ... on the common shrunken box, repeated iterations times.

    Raises:
        InsufficientBoundError: the box is too small for the Hecke operators
    """
    current = list(V)
    primes = [q] + list(extra_primes)
    for step in range(iterations):
        if not current:
            return []
        box = current[0].bound
        for p in primes:
            box = box.meet(hecke_output_bound(current[0].bound, p))
        template = truncate(current[0], box)
        vectors = [coefficient_vector(truncate(f, box)) for f in current]
        for p in primes:
            images = [coefficient_vector(apply_T(ctx, p, f, target=box)) for f in current]
            vectors = intersect_spans(vectors, images)
            if not vectors:
                break
        current = [from_vector(template, v) for v in vectors]
        logger.info("Hecke intersection computed", step=step + 1, bound=box, dimension=len(current))
    return current


def extract_eigenforms(
    candidates: Sequence[TruncatedSeries], ctx: HeckeContext, q: PrincipalIdeal
) -> Optional[Diagonalization]:
    """
    T_q on the candidate span. None when the span is larger than 2 or the box
    is too small for one more T_q.
    """
    if not candidates:
        return None
    if len(candidates) > 2:
        logger.warning("Candidate space not diagonalised", dimension=len(candidates))
        return None
    try:
        return diagonalize(candidates, ctx, q, small_radicands())
    except (InsufficientBoundError, InvalidInputError, RankDeficientError) as e:
        logger.warning("Candidate space not diagonalised", prime=q, error=e.to_dict())
        return None


# ==================== Driver ====================


def run_search(
    inp: SearchInput,
    fixture: SpaceFixture,
    schedule: Optional[Sequence[TruncationBound]] = None,
) -> SearchReport:
    """Run the search at every bound of the schedule and report the last one."""
    schedule = list(schedule) if schedule else [inp.bound]
    ctx = inp.context
    diagnostics: List[BoundDiagnostic] = []
    candidates: List[TruncatedSeries] = []
    for bound in schedule:
        run = replace(inp, bound=bound)
        V = build_ratio_space(run, fixture)
        dim_V = rank([coefficient_vector(f) for f in V]) if V else 0
        V2 = intersect_with_hecke(V, ctx, run.hecke_prime, run.extra_primes, run.iterations)
        cm_bound = cm_upper_bound(V2, run.level)
        diagnostics.append(BoundDiagnostic(bound, dim_V, len(V2), cm_bound))
        candidates = V2 if len(V2) > cm_bound else []

    dims = [entry.dim_V2 for entry in diagnostics]
    stabilized = len(set(dims)) == 1
    if any(later > earlier for earlier, later in zip(dims, dims[1:])):
        logger.warning("Intersection dimension grew with the bound", dims=dims)
    elif not stabilized:
        logger.warning("Intersection dimension has not stabilised", dims=dims)
    last = diagnostics[-1]
    diagonalization = extract_eigenforms(candidates, ctx, inp.hecke_prime)
    logger.info(
        "Search finished",
        level=inp.level,
        weight=inp.weight,
        dim_V=last.dim_V,
        dim_V2=last.dim_V2,
        cm_bound=last.cm_bound,
        stabilized=stabilized,
    )
    return SearchReport(
        input=replace(inp, bound=last.bound),
        dim_V=last.dim_V,
        dim_V2=last.dim_V2,
        cm_bound=last.cm_bound,
        candidates=candidates,
        diagnostics=diagnostics,
        stabilized=stabilized,
        provenance=fixture.provenance,
        diagonalization=diagonalization,
    )


def default_hecke_prime(d: int) -> PrincipalIdeal:
    """The prime of smallest norm."""
    return primes_up_to(16, d)[0]


def sweep_levels(
    weight: WeightPair,
    levels: Sequence[PrincipalIdeal],
    character_for_level: Callable[[PrincipalIdeal], Optional[RayCharacter]],
    fixtures_for_level: Callable[[PrincipalIdeal], Optional[SpaceFixture]],
    schedule: Sequence[TruncationBound],
    hecke_prime: Optional[PrincipalIdeal] = None,
) -> Dict[PrincipalIdeal, SearchReport]:
    """Run the search at each level that has both a character and a fixture."""
    reports: Dict[PrincipalIdeal, SearchReport] = {}
    for level in levels:
        character = character_for_level(level)
        fixture = fixtures_for_level(level)
        if character is None or fixture is None:
            logger.info("Level skipped", level=level, character=character is not None, fixture=fixture is not None)
            continue
        try:
            inp = SearchInput(
                weight=weight,
                level=level,
                character=character,
                bound=schedule[0],
                hecke_prime=hecke_prime or default_hecke_prime(level.d),
                iterations=settings.HECKE_ITERATIONS,
            )
        except InvalidInputError as e:
            logger.info("Level skipped", level=level, reason=e.message)
            continue
        try:
            reports[level] = run_search(inp, fixture, schedule)
        except PW1Exception as e:
            logger.error("Search failed at level", level=level, error=e.to_dict())
            raise
    return reports
