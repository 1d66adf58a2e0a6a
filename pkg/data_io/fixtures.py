"""
Line-oriented fixture files: newform eigenvalues, truncated series, spaces and characters.

    pw1 newform 1
    # comments run to the end of the line
    field 5
    radicands -3 -19
    weight 5 1
    level 28 0
    character file chi_mod7.txt
    provenance Hilbert modular forms database, level 14
    eigen 2 0 : 1 0 0 0
    eigen 4 0 : -4 4 0 0

Tokens are parsed here; the shape is validated by schemas.fixtures; domain
objects (records, series, characters) are built last. Every failure names
the source and either a line (FixtureParseError) or an invariant
(FixtureValidationError).
"""

from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from arithmetic.base_field import FieldElement, get_base_field
from arithmetic.box import TruncationBound
from arithmetic.coeff_field import CoeffElement, CoeffField, compositum
from arithmetic.ideals import PrincipalIdeal
from arithmetic.linalg import rank
from core.exceptions import FixtureParseError, FixtureValidationError, NotNormalizedError, PW1Exception
from core.logging_config import get_logger
from data_io.records import NewformRecord, SpaceFixture
from fourier.series import TruncatedSeries, WeightPair, coefficient_vector, truncate
from ray_class.characters import RayCharacter, find_character, is_totally_odd
from ray_class.group import Modulus, build_ray_class_group
from schemas.fixtures import (
    BoundSchema,
    CharacterDocumentSchema,
    CharacterRefSchema,
    NewformDocumentSchema,
    SeriesBodySchema,
    SeriesDocumentSchema,
    SpaceDocumentSchema,
)

logger = get_logger(__name__)

FORMAT_VERSION = "1"
KINDS = ("newform", "series", "space", "character")

PathLike = Union[str, Path]


class SeriesFixture(NamedTuple):
    series: TruncatedSeries
    provenance: str


# ==================== Tokenising ====================


class _Line(NamedTuple):
    number: int
    key: str
    args: List[str]
    coords: Optional[List[str]]
    rest: str


def _lines(text: str) -> List[_Line]:
    """Significant lines as (number, keyword, arguments, coordinates after ':', raw remainder)."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        tokens = head.split() or [""]
        rest = line[len(tokens[0]):].strip()
        lines.append(_Line(number, tokens[0], tokens[1:], tail.split() if sep else None, rest))
    return lines


class _Reader:
    """Cursor over the significant lines of one document."""

    def __init__(self, text: str, source: str):
        self.source = source
        self.lines = _lines(text)
        self.position = 0

    def error(self, line: _Line, field: str, reason: str) -> FixtureParseError:
        return FixtureParseError(self.source, line.number, field, reason)

    def __iter__(self) -> Iterator[_Line]:
        while self.position < len(self.lines):
            line = self.lines[self.position]
            self.position += 1
            yield line

    def header(self, expected: Optional[str] = None) -> str:
        if not self.lines:
            raise FixtureParseError(self.source, 0, "header", "empty document")
        line = self.lines[0]
        self.position = 1
        if line.key != "pw1" or len(line.args) != 2:
            raise self.error(line, "header", "expected 'pw1 <kind> 1'")
        kind, version = line.args
        if kind not in KINDS:
            raise self.error(line, "header", f"unknown document kind {kind!r}")
        if version != FORMAT_VERSION:
            raise self.error(line, "header", f"unsupported format version {version}")
        if expected and kind != expected:
            raise self.error(line, "header", f"expected a {expected} document, found {kind}")
        return kind

    def ints(self, line: _Line, count: int, field: str) -> List[int]:
        if len(line.args) != count:
            raise self.error(line, field, f"expected {count} integers, got {len(line.args)}")
        try:
            return [int(token) for token in line.args]
        except ValueError:
            raise self.error(line, field, f"expected integers, got {' '.join(line.args)}")

    def coords(self, line: _Line, field: str) -> List[str]:
        if not line.coords:
            raise self.error(line, field, "expected ': <coordinates>'")
        for token in line.coords:
            try:
                Fraction(token)
            except (ValueError, ZeroDivisionError):
                raise self.error(line, field, f"{token!r} is not a rational number")
        return line.coords


def _half(a: int, b: int) -> Dict[str, int]:
    return {"a": a, "b": b}


# ==================== Keyed lines ====================


def _common_key(reader: _Reader, line: _Line, raw: Dict[str, Any]) -> bool:
    """Lines shared by every document kind; False when the keyword is not one of them."""
    if line.key == "field":
        raw["d"] = reader.ints(line, 1, "field")[0]
    elif line.key == "radicands":
        raw["radicands"] = reader.ints(line, len(line.args), "radicands")
    elif line.key == "weight":
        raw["weight"] = tuple(reader.ints(line, 2, "weight"))
    elif line.key == "level":
        raw["level"] = _half(*reader.ints(line, 2, "level"))
    elif line.key == "provenance":
        if not line.rest:
            raise reader.error(line, "provenance", "provenance must not be empty")
        raw["provenance"] = line.rest
    elif line.key == "label":
        raw["label"] = line.rest
    elif line.key == "dimension":
        raw["dimension"] = reader.ints(line, 1, "dimension")[0]
    elif line.key == "bound":
        if len(line.args) != 4:
            raise reader.error(line, "bound", "expected 'bound x1 y1 x2 y2'")
        raw["bound"] = dict(zip(("x1", "y1", "x2", "y2"), line.args))
    elif line.key == "character":
        raw["character"] = _character_ref(reader, line, raw)
    else:
        return False
    return True


def _character_ref(reader: _Reader, line: _Line, outer: Dict[str, Any]) -> Dict[str, Any]:
    if line.args == ["trivial"]:
        return {"kind": "trivial"}
    if len(line.args) == 2 and line.args[0] == "file":
        return {"kind": "file", "path": line.args[1]}
    if line.args == ["inline"]:
        body: Dict[str, Any] = {"values": []}
        for inner in reader:
            if inner.key == "end":
                body.setdefault("d", outer.get("d"))
                body.setdefault("provenance", outer.get("provenance", "inline"))
                return {"kind": "inline", "document": body}
            if not _character_key(reader, inner, body):
                raise reader.error(inner, inner.key, "unexpected line in an inline character")
        raise reader.error(line, "character", "inline character has no 'end'")
    raise reader.error(line, "character", "expected 'trivial', 'file <path>' or 'inline'")


def _character_key(reader: _Reader, line: _Line, raw: Dict[str, Any]) -> bool:
    if line.key == "modulus":
        a, b, inf1, inf2 = reader.ints(line, 4, "modulus")
        if inf1 not in (0, 1) or inf2 not in (0, 1):
            raise reader.error(line, "modulus", "infinite places are flagged 0 or 1")
        raw["modulus"] = _half(a, b)
        raw["infinite_part"] = (bool(inf1), bool(inf2))
    elif line.key == "value":
        if len(line.args) != 4 or line.args[2] not in ("+", "-") or line.args[3] not in ("+", "-"):
            raise reader.error(line, "value", "expected 'value a b s1 s2 : coords' with signs + or -")
        try:
            a, b = int(line.args[0]), int(line.args[1])
        except ValueError:
            raise reader.error(line, "value", "residue coordinates must be integers")
        raw["values"].append(
            {"residue": _half(a, b), "s1": line.args[2], "s2": line.args[3], "coords": reader.coords(line, "value")}
        )
    elif line.key == "order":
        raw["order"] = reader.ints(line, 1, "order")[0]
    elif line.key == "totally-odd":
        if line.args not in (["yes"], ["no"]):
            raise reader.error(line, "totally-odd", "expected yes or no")
        raw["totally_odd"] = line.args == ["yes"]
    elif line.key == "radicands":
        raw["radicands"] = reader.ints(line, len(line.args), "radicands")
    elif line.key == "field":
        raw["d"] = reader.ints(line, 1, "field")[0]
    elif line.key == "provenance":
        raw["provenance"] = line.rest
    else:
        return False
    return True


def _series_key(reader: _Reader, line: _Line, raw: Dict[str, Any]) -> bool:
    if line.key == "constant":
        if line.args:
            raise reader.error(line, "constant", "expected 'constant : coords'")
        raw["constant"] = {"coords": reader.coords(line, "constant")}
    elif line.key == "coeff":
        a, b = reader.ints(line, 2, "coeff")
        raw.setdefault("coefficients", []).append({"index": _half(a, b), "coords": reader.coords(line, "coeff")})
    elif line.key == "bound":
        return _common_key(reader, line, raw)
    else:
        return False
    return True


# ==================== Schema validation ====================


def _validate(schema, raw: Dict[str, Any], source: str):
    try:
        return schema.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "document"
        raise FixtureValidationError(source, where, first["msg"])


def parse_character_document(text: str, source: str = "<character>") -> CharacterDocumentSchema:
    reader = _Reader(text, source)
    reader.header("character")
    raw: Dict[str, Any] = {"values": []}
    for line in reader:
        if not _character_key(reader, line, raw):
            raise reader.error(line, line.key, "unknown keyword")
    return _validate(CharacterDocumentSchema, raw, source)


def parse_newform_documents(text: str, source: str = "<newform>") -> List[NewformDocumentSchema]:
    """One document per `record … end` block; top-level keys are defaults for every block."""
    reader = _Reader(text, source)
    reader.header("newform")
    defaults: Dict[str, Any] = {}
    blocks: List[Dict[str, Any]] = []
    current = defaults
    for line in reader:
        if line.key == "record":
            if current is not defaults:
                raise reader.error(line, "record", "nested record block")
            current = {"eigenvalues": []}
            blocks.append(current)
        elif line.key == "end":
            if current is defaults:
                raise reader.error(line, "end", "'end' outside a record block")
            current = defaults
        elif line.key == "eigen":
            a, b = reader.ints(line, 2, "eigen")
            current.setdefault("eigenvalues", []).append({"generator": _half(a, b), "coords": reader.coords(line, "eigen")})
        elif not _common_key(reader, line, current):
            raise reader.error(line, line.key, "unknown keyword")
    if current is not defaults:
        raise FixtureParseError(source, len(text.splitlines()), "record", "record block has no 'end'")
    if not blocks:
        blocks = [{}]
    documents = []
    for block in blocks:
        merged = {key: value for key, value in defaults.items() if key != "eigenvalues"}
        merged.update(block)
        if "eigenvalues" not in block:
            merged["eigenvalues"] = defaults.get("eigenvalues", [])
        documents.append(_validate(NewformDocumentSchema, merged, source))
    return documents


def parse_series_document(text: str, source: str = "<series>") -> SeriesDocumentSchema:
    reader = _Reader(text, source)
    reader.header("series")
    raw: Dict[str, Any] = {}
    for line in reader:
        if not _series_key(reader, line, raw) and not _common_key(reader, line, raw):
            raise reader.error(line, line.key, "unknown keyword")
    return _validate(SeriesDocumentSchema, raw, source)


def parse_space_document(text: str, source: str = "<space>") -> SpaceDocumentSchema:
    reader = _Reader(text, source)
    reader.header("space")
    raw: Dict[str, Any] = {"basis": [], "newform_files": []}
    block: Optional[Dict[str, Any]] = None
    for line in reader:
        if block is not None:
            if line.key == "end":
                raw["basis"].append(block)
                block = None
            elif not _series_key(reader, line, block):
                raise reader.error(line, line.key, "unexpected line in a basis block")
        elif line.key == "basis":
            block = {}
        elif line.key == "newform-file":
            if len(line.args) != 3:
                raise reader.error(line, "newform-file", "expected 'newform-file <path> <a> <b>'")
            try:
                a, b = int(line.args[1]), int(line.args[2])
            except ValueError:
                raise reader.error(line, "newform-file", "level coordinates must be integers")
            raw["newform_files"].append({"path": line.args[0], "level": _half(a, b)})
        elif not _common_key(reader, line, raw):
            raise reader.error(line, line.key, "unknown keyword")
    if block is not None:
        raise FixtureParseError(source, len(text.splitlines()), "basis", "basis block has no 'end'")
    return _validate(SpaceDocumentSchema, raw, source)


# ==================== Domain objects ====================


def _element(field: CoeffField, coords: Sequence[str], source: str, where: str) -> CoeffElement:
    if len(coords) != field.degree:
        raise FixtureValidationError(source, "coordinate-length", f"{where}: {len(coords)} coordinates for {field}")
    return field.element([Fraction(c) for c in coords])


def _bound(schema: BoundSchema, d: int) -> TruncationBound:
    try:
        return TruncationBound(
            FieldElement(Fraction(schema.x1), Fraction(schema.y1), d),
            FieldElement(Fraction(schema.x2), Fraction(schema.y2), d),
        )
    except PW1Exception as e:
        raise FixtureValidationError("<bound>", "bound", e.message)


def _ideal(a: int, b: int, d: int, source: str) -> PrincipalIdeal:
    try:
        return PrincipalIdeal.from_half(a, b, d)
    except PW1Exception as e:
        raise FixtureValidationError(source, "integral-generator", f"({a}, {b}): {e.message}")


def build_character(document: CharacterDocumentSchema, source: str = "<character>") -> RayCharacter:
    """
    The unique character with the document's prescribed values.

    Raises:
        FixtureValidationError: no or several characters match, or order/parity disagree
    """
    d = document.d
    modulus = Modulus(_ideal(document.modulus.a, document.modulus.b, d, source), tuple(document.infinite_part))
    group = build_ray_class_group(modulus)
    value_field = CoeffField(tuple(document.radicands))
    constraints = []
    for entry in document.values:
        x = FieldElement.from_half(entry.residue.a, entry.residue.b, d)
        key = (x, int(entry.s1 == "-"), int(entry.s2 == "-"))
        constraints.append((key, _element(value_field, entry.coords, source, "value")))
    try:
        chi = find_character(group, constraints)
    except PW1Exception as e:
        raise FixtureValidationError(source, "character-values", e.message)
    if document.order is not None and chi.order != document.order:
        raise FixtureValidationError(source, "order", f"declared {document.order}, found {chi.order}")
    if document.totally_odd is not None and is_totally_odd(chi) != document.totally_odd:
        raise FixtureValidationError(source, "totally-odd", f"declared {document.totally_odd}")
    logger.debug("Character loaded", source=source, modulus=modulus, order=chi.order)
    return chi


def resolve_character(ref: CharacterRefSchema, base_dir: Path, source: str) -> Optional[RayCharacter]:
    if ref.kind == "trivial":
        return None
    if ref.kind == "inline":
        return build_character(ref.document, source)
    return load_character(base_dir / ref.path)


def build_newform(document: NewformDocumentSchema, character: Optional[RayCharacter], source: str) -> NewformRecord:
    """
    Raises:
        FixtureValidationError: c((1)) missing, duplicate or non-integral primes
        NotNormalizedError: c((1)) != 1
    """
    d = document.d
    coeff_field = CoeffField(tuple(document.radicands))
    unit = PrincipalIdeal.unit(d)
    eigenvalues: Dict[PrincipalIdeal, CoeffElement] = {}
    for entry in document.eigenvalues:
        a, b = entry.generator.a, entry.generator.b
        p = unit if (a, b) == (2, 0) else _ideal(a, b, d, source)
        if p in eigenvalues:
            raise FixtureValidationError(source, "distinct-primes", f"{p} is listed twice")
        eigenvalues[p] = _element(coeff_field, entry.coords, source, f"eigen {a} {b}")
    if unit not in eigenvalues:
        raise FixtureValidationError(source, "normalized", "c((1)) is missing")
    try:
        return NewformRecord(
            d=d,
            level=_ideal(document.level.a, document.level.b, d, source),
            weight=WeightPair(*document.weight),
            character=character,
            coeff_field=coeff_field,
            eigenvalues=eigenvalues,
            provenance=document.provenance,
            label=document.label,
        )
    except (FixtureValidationError, NotNormalizedError):
        raise
    except PW1Exception as e:
        raise FixtureValidationError(source, "record", e.message)


def build_series(
    body: SeriesBodySchema,
    d: int,
    coeff_field: CoeffField,
    weight: WeightPair,
    character: Optional[RayCharacter],
    source: str,
    default_bound: Optional[BoundSchema] = None,
) -> TruncatedSeries:
    field = get_base_field(d)
    bound = _bound(body.bound or default_bound, d)
    constant = _element(coeff_field, body.constant.coords, source, "constant") if body.constant else coeff_field.zero()
    coeffs: Dict[FieldElement, CoeffElement] = {}
    for entry in body.coefficients:
        alpha = FieldElement.from_half(entry.index.a, entry.index.b, d)
        if alpha in coeffs:
            raise FixtureValidationError(source, "distinct-indices", f"c_{alpha} is listed twice")
        coeffs[alpha] = _element(coeff_field, entry.coords, source, f"coeff {entry.index.a} {entry.index.b}")
    try:
        return TruncatedSeries(field, coeff_field, weight, character, bound, constant, coeffs)
    except PW1Exception as e:
        raise FixtureValidationError(source, "in-box", e.message)


# ==================== Loaders ====================


def _read(path: PathLike) -> Tuple[str, Path]:
    path = Path(path)
    try:
        return path.read_text(encoding="utf-8"), path
    except UnicodeDecodeError as e:
        raise FixtureParseError(str(path), 0, "encoding", f"not UTF-8 at byte {e.start}")
    except OSError as e:
        raise FixtureParseError(str(path), 0, "file", str(e))


def parse_character(text: str, source: str = "<character>") -> RayCharacter:
    return build_character(parse_character_document(text, source), source)


def load_character(path: PathLike) -> RayCharacter:
    text, path = _read(path)
    return parse_character(text, str(path))


def parse_newforms(text: str, source: str = "<newform>", base_dir: Optional[Path] = None) -> List[NewformRecord]:
    base_dir = base_dir or Path(".")
    records = []
    for document in parse_newform_documents(text, source):
        character = resolve_character(document.character, base_dir, source)
        records.append(build_newform(document, character, source))
    logger.info("Newforms loaded", source=source, records=len(records))
    return records


def load_newforms(path: PathLike) -> List[NewformRecord]:
    """
    Raises:
        FixtureParseError: a line does not parse (line and field located)
        FixtureValidationError: a named invariant fails
    """
    text, path = _read(path)
    return parse_newforms(text, str(path), path.parent)


def parse_series(text: str, source: str = "<series>", base_dir: Optional[Path] = None) -> SeriesFixture:
    document = parse_series_document(text, source)
    character = resolve_character(document.character, base_dir or Path("."), source)
    series = build_series(
        document, document.d, CoeffField(tuple(document.radicands)), WeightPair(*document.weight), character, source
    )
    return SeriesFixture(series, document.provenance)


def load_series(path: PathLike) -> SeriesFixture:
    text, path = _read(path)
    return parse_series(text, str(path), path.parent)


def parse_space(text: str, source: str = "<space>", base_dir: Optional[Path] = None) -> SpaceFixture:
    """
    Basis-form spaces must have full rank on their common box.

    Raises:
        FixtureValidationError: rank, level or weight invariants fail
    """
    base_dir = base_dir or Path(".")
    document = parse_space_document(text, source)
    d = document.d
    weight = WeightPair(*document.weight)
    level = _ideal(document.level.a, document.level.b, d, source)
    character = resolve_character(document.character, base_dir, source)
    coeff_field = CoeffField(tuple(document.radicands))

    basis: List[TruncatedSeries] = []
    for body in document.basis:
        basis.append(build_series(body, d, coeff_field, weight, character, source, document.bound))
    bound = _bound(document.bound, d) if document.bound else None
    if basis:
        common = bound or basis[0].bound
        for s in basis:
            common = common.meet(s.bound)
        found = rank([coefficient_vector(truncate(s, common)) for s in basis])
        expected = document.dimension if document.dimension is not None else len(basis)
        if found < expected or found < len(basis):
            raise FixtureValidationError(source, "rank", f"rank {found} on {common}, expected {expected}")
        bound = common

    grouped: Dict[PrincipalIdeal, List[NewformRecord]] = {}
    for ref in document.newform_files:
        m = _ideal(ref.level.a, ref.level.b, d, source)
        for record in load_newforms(base_dir / ref.path):
            if record.level != m:
                raise FixtureValidationError(source, "newform-level", f"{ref.path} holds level {record.level}, not {m}")
            if record.weight != weight:
                raise FixtureValidationError(source, "weight", f"{ref.path} has weight {record.weight}, not {weight}")
            coeff_field = compositum(coeff_field, record.coeff_field)
            grouped.setdefault(m, []).append(record)

    fixture = SpaceFixture(
        d=d,
        level=level,
        weight=weight,
        coeff_field=coeff_field,
        provenance=document.provenance,
        newforms=tuple((m, tuple(records)) for m, records in sorted(grouped.items(), key=lambda kv: kv[0].sort_key())),
        basis=tuple(basis),
        dimension=document.dimension,
        bound=bound,
        character=character,
    )
    logger.info(
        "Space loaded",
        source=source,
        level=level,
        weight=weight,
        basis=len(basis),
        newform_levels=len(grouped),
    )
    return fixture


def load_space(path: PathLike) -> SpaceFixture:
    text, path = _read(path)
    return parse_space(text, str(path), path.parent)


def find_space(directory: PathLike, d: int, level: PrincipalIdeal, weight: WeightPair) -> Optional[SpaceFixture]:
    """The first space document in directory (sorted by name) matching field, level and weight."""
    directory = Path(directory)
    if not directory.is_dir():
        return None
    for path in sorted(directory.glob("*.txt")):
        text, path = _read(path)
        lines = _lines(text)
        if not lines or lines[0].key != "pw1" or lines[0].args[:1] != ["space"]:
            continue
        document = parse_space_document(text, str(path))
        if document.d != d or WeightPair(*document.weight) != weight:
            continue
        if _ideal(document.level.a, document.level.b, d, str(path)) != level:
            continue
        return parse_space(text, str(path), path.parent)
    logger.info("No space fixture found", directory=directory, level=level, weight=weight)
    return None


# ==================== Canonical output ====================


def _coords(value: CoeffElement) -> str:
    return " ".join(str(c) for c in value.coords)


def _radicands_line(field: CoeffField) -> List[str]:
    return ["radicands " + " ".join(str(r) for r in field.radicands)] if field.radicands else []


def _character_lines(chi: Optional[RayCharacter], provenance: str) -> List[str]:
    if chi is None:
        return ["character trivial"]
    return ["character inline"] + ["  " + line for line in _character_body(chi)] + ["end"]


def _character_body(chi: RayCharacter) -> List[str]:
    a, b = chi.modulus.finite_part.half_coords()
    inf1, inf2 = (int(flag) for flag in chi.modulus.infinite_part)
    lines = _radicands_line(chi.value_field) + [f"modulus {a} {b} {inf1} {inf2}"]
    for (representative, (s1, s2)), value in zip(chi.group.generators, chi.values_on_generators):
        x, y = representative.half_coords()
        lines.append(f"value {x} {y} {'-' if s1 else '+'} {'-' if s2 else '+'} : {_coords(value)}")
    lines.append(f"order {chi.order}")
    lines.append(f"totally-odd {'yes' if is_totally_odd(chi) else 'no'}")
    return lines


def dump_character(chi: RayCharacter, provenance: str) -> str:
    lines = ["pw1 character 1", f"field {chi.modulus.d}"] + _character_body(chi) + [f"provenance {provenance}"]
    return "\n".join(lines) + "\n"


def _bound_line(bound: TruncationBound) -> str:
    return f"bound {bound.b1.x} {bound.b1.y} {bound.b2.x} {bound.b2.y}"


def _series_body(s: TruncatedSeries) -> List[str]:
    lines = [_bound_line(s.bound), f"constant : {_coords(s.constant)}"]
    for alpha in s.indices():
        if alpha in s.coeffs:
            a, b = alpha.half_coords()
            lines.append(f"coeff {a} {b} : {_coords(s.coeffs[alpha])}")
    return lines


def dump_series(s: TruncatedSeries, provenance: str) -> str:
    lines = ["pw1 series 1", f"field {s.field.d}"] + _radicands_line(s.coeff_field)
    lines.append(f"weight {s.weight.k1} {s.weight.k2}")
    lines += _character_lines(s.character, provenance)
    lines.append(f"provenance {provenance}")
    lines += _series_body(s)
    return "\n".join(lines) + "\n"


def _newform_body(record: NewformRecord) -> List[str]:
    a, b = record.level.half_coords()
    lines = [f"weight {record.weight.k1} {record.weight.k2}", f"level {a} {b}"]
    lines += _character_lines(record.character, record.provenance)
    lines.append(f"provenance {record.provenance}")
    if record.label:
        lines.append(f"label {record.label}")
    lines.append(f"eigen 2 0 : {_coords(record.coeff_field.one())}")
    for p in record.primes():
        x, y = p.half_coords()
        lines.append(f"eigen {x} {y} : {_coords(record.eigenvalues[p])}")
    return lines


def dump_newforms(records: Sequence[NewformRecord]) -> str:
    """One record inline; several as record blocks sharing field and radicands."""
    if not records:
        raise FixtureValidationError("<dump>", "records", "nothing to write")
    first = records[0]
    lines = ["pw1 newform 1", f"field {first.d}"] + _radicands_line(first.coeff_field)
    if len(records) == 1:
        lines += _newform_body(first)
    else:
        for record in records:
            if record.coeff_field != first.coeff_field:
                raise FixtureValidationError("<dump>", "coefficient-field", "records in one file share radicands")
            lines += ["record"] + ["  " + line for line in _newform_body(record)] + ["end"]
    return "\n".join(lines) + "\n"


def dump_space(space: SpaceFixture, newform_paths: Optional[Dict[PrincipalIdeal, str]] = None) -> str:
    """Basis-form spaces inline; new-space form needs a file name per level."""
    a, b = space.level.half_coords()
    lines = ["pw1 space 1", f"field {space.d}"] + _radicands_line(space.coeff_field)
    lines += [f"weight {space.weight.k1} {space.weight.k2}", f"level {a} {b}"]
    lines += _character_lines(space.character, space.provenance)
    lines.append(f"provenance {space.provenance}")
    if space.dimension is not None:
        lines.append(f"dimension {space.dimension}")
    if space.bound is not None:
        lines.append(_bound_line(space.bound))
    for s in space.basis:
        lines += ["basis"] + ["  " + line for line in _series_body(s)] + ["end"]
    for m, _ in space.newforms:
        if not newform_paths or m not in newform_paths:
            raise FixtureValidationError("<dump>", "newform-file", f"no file name given for level {m}")
        x, y = m.half_coords()
        lines.append(f"newform-file {newform_paths[m]} {x} {y}")
    return "\n".join(lines) + "\n"
