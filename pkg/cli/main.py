"""
Command-line entry point.

    pw1 search --level 14 --char chi_mod14.txt --weight 5,1 --fixtures fixtures/
    pw1 eisenstein --char chi_mod7.txt --bound 3,3
    pw1 reconstruct --newform level14.txt --bound bn:4
    pw1 cm-test --newform level14.txt --prime-bound 11
    pw1 verify --candidate f.txt --power 3 --high-space high.txt --aux-space aux.txt --hecke-prime 4,0
    pw1 check-ramanujan --newform level14.txt --norm-bound 50
    pw1 table1 --newform level14.txt

Generators are an integer n for (n) or 'a,b' for ((a + b√d)/2). Reports go to
stdout (or --output), logs to stderr. Exit codes: 0 success, 1 domain error,
2 usage error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from arithmetic.box import TruncationBound, parse_bound
from arithmetic.ideals import PrincipalIdeal
from cm.twists import cm_test, cm_twist_candidates
from config.settings import settings, split_schedule
from core.exceptions import FixtureValidationError, InvalidInputError, PW1Exception
from core.logging_config import configure_logging, get_logger
from data_io.fixtures import find_space, load_character, load_newforms, load_series, load_space
from data_io.records import NewformRecord
from data_io.reports import (
    FORMATS,
    certification_report,
    cm_report,
    coefficient_table,
    emit_report,
    ramanujan_report,
    search_report,
    series_report,
)
from eisenstein.lvalues import compute_L0
from eisenstein.series import eisenstein_series
from fourier.series import WeightPair
from hecke.newforms import reconstruct_expansion
from search.algorithm import SearchInput, default_hecke_prime, run_search
from search.certify import certify_holomorphic
from search.ramanujan import ramanujan_check

logger = get_logger(__name__)


# ==================== Argument parsing ====================


def parse_generator(text: str, d: int) -> PrincipalIdeal:
    """'n' for (n), 'a,b' for ((a + b√d)/2)."""
    try:
        if "," in text:
            a, b = (int(part) for part in text.split(","))
            return PrincipalIdeal.from_half(a, b, d)
        return PrincipalIdeal.from_half(2 * int(text), 0, d)
    except ValueError:
        raise InvalidInputError("generator", f"expected 'n' or 'a,b', got {text!r}")


def parse_schedule(text: Optional[str], d: int) -> List[TruncationBound]:
    """--bounds when given, else the configured schedule."""
    entries = split_schedule(text) if text is not None else settings.bound_schedule
    return [parse_bound(entry, d) for entry in entries]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pw1",
        description="Search for and certify partial weight one Hilbert modular forms.",
    )
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], default=None)

    reporting = argparse.ArgumentParser(add_help=False)
    reporting.add_argument("--format", choices=FORMATS, default="table")
    reporting.add_argument("--output", type=Path, default=None, help="write the report here instead of stdout")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    search = sub.add_parser("search", parents=[reporting], help="run the partial weight one search")
    search.add_argument("--field", type=int, default=settings.BASE_FIELD_D)
    search.add_argument("--level", required=True)
    search.add_argument("--char", required=True, type=Path)
    search.add_argument("--weight", required=True)
    search.add_argument("--bounds", default=None, help="';'-separated 'bn:N' or 'b1,b2'; defaults to PW1_BOUND_SCHEDULE")
    search.add_argument("--hecke-prime", default=None)
    search.add_argument("--extra-prime", action="append", default=[])
    search.add_argument("--iterations", type=int, default=settings.HECKE_ITERATIONS)
    search.add_argument("--fixtures", type=Path, default=Path(settings.FIXTURES))
    search.add_argument("--space", type=Path, default=None, help="space fixture, instead of searching --fixtures")

    eis = sub.add_parser("eisenstein", parents=[reporting], help="E_{1,ψ} truncated to a bound")
    eis.add_argument("--char", required=True, type=Path)
    eis.add_argument("--bound", required=True)
    eis.add_argument("--no-check", action="store_true", help="skip the numeric L-value cross-check")

    rec = sub.add_parser("reconstruct", parents=[reporting], help="expansion of a newform from its eigenvalues")
    rec.add_argument("--newform", required=True, type=Path)
    rec.add_argument("--bound", required=True)
    rec.add_argument("--label", default=None)

    cm = sub.add_parser("cm-test", parents=[reporting], help="twist test for complex multiplication")
    cm.add_argument("--newform", required=True, type=Path)
    cm.add_argument("--level", default=None, help="level for the twist candidates; defaults to the record's level")
    cm.add_argument("--prime-bound", required=True, type=int)
    cm.add_argument("--label", default=None)

    verify = sub.add_parser("verify", parents=[reporting], help="holomorphy certificate for a candidate")
    verify.add_argument("--candidate", required=True, type=Path)
    verify.add_argument("--power", required=True, type=int)
    verify.add_argument("--high-space", required=True, type=Path)
    verify.add_argument("--aux-space", required=True, type=Path)
    verify.add_argument("--hecke-prime", required=True)

    ram = sub.add_parser("check-ramanujan", parents=[reporting], help="certified Ramanujan bound check")
    ram.add_argument("--newform", required=True, type=Path)
    ram.add_argument("--norm-bound", required=True, type=int)
    ram.add_argument("--label", default=None)

    table = sub.add_parser("table1", parents=[reporting], help="normalised coefficient table")
    table.add_argument("--newform", required=True, type=Path)
    table.add_argument("--label", default=None)

    return parser


def _select(records: Sequence[NewformRecord], label: Optional[str], source: Path) -> NewformRecord:
    if label is None:
        return records[0]
    for record in records:
        if record.label == label:
            return record
    raise InvalidInputError("label", f"no record labelled {label!r} in {source}")


# ==================== Commands ====================


def cmd_search(args):
    chi = load_character(args.char)
    d = chi.modulus.d
    if d != args.field:
        raise InvalidInputError("field", f"character is over Q(√{d}), not Q(√{args.field})")
    level = parse_generator(args.level, d)
    weight = WeightPair.parse(args.weight)
    schedule = parse_schedule(args.bounds, d)
    if not schedule:
        raise InvalidInputError("bounds", "the schedule is empty")
    if args.space is not None:
        fixture = load_space(args.space)
    else:
        fixture = find_space(args.fixtures, d, level, weight + WeightPair(1, 1))
        if fixture is None:
            raise FixtureValidationError(
                str(args.fixtures), "space-fixture", f"no space of weight {weight + WeightPair(1, 1)} at level {level}"
            )
    inp = SearchInput(
        weight=weight,
        level=level,
        character=chi,
        bound=schedule[0],
        hecke_prime=parse_generator(args.hecke_prime, d) if args.hecke_prime else default_hecke_prime(d),
        extra_primes=tuple(parse_generator(p, d) for p in args.extra_prime),
        iterations=args.iterations,
    )
    return search_report(run_search(inp, fixture, schedule))


def cmd_eisenstein(args):
    psi = load_character(args.char)
    bound = parse_bound(args.bound, psi.modulus.d)
    lvalue = compute_L0(psi, check=not args.no_check)
    s = eisenstein_series(psi, bound, lvalue=lvalue)
    return series_report("eisenstein", s, f"E_1 of {psi} from {args.char.name}", lvalue)


def cmd_reconstruct(args):
    record = _select(load_newforms(args.newform), args.label, args.newform)
    s = reconstruct_expansion(record, parse_bound(args.bound, record.d))
    return series_report("reconstruct", s, record.provenance)


def cmd_cm_test(args):
    record = _select(load_newforms(args.newform), args.label, args.newform)
    level = parse_generator(args.level, record.d) if args.level else record.level
    results = [cm_test(record, epsilon, args.prime_bound) for epsilon in cm_twist_candidates(level)]
    return cm_report(record, args.prime_bound, results)


def cmd_verify(args):
    candidate = load_series(args.candidate)
    high = load_space(args.high_space)
    aux = load_space(args.aux_space)
    q = parse_generator(args.hecke_prime, candidate.series.field.d)
    result = certify_holomorphic(candidate.series, args.power, high, aux, q)
    provenance = "; ".join(p for p in (candidate.provenance, high.provenance, aux.provenance) if p)
    return certification_report(result, args.power, str(candidate.series.field), provenance)


def cmd_check_ramanujan(args):
    record = _select(load_newforms(args.newform), args.label, args.newform)
    return ramanujan_report(record, args.norm_bound, ramanujan_check(record, args.norm_bound))


def cmd_table1(args):
    return coefficient_table(_select(load_newforms(args.newform), args.label, args.newform))


COMMANDS = {
    "search": cmd_search,
    "eisenstein": cmd_eisenstein,
    "reconstruct": cmd_reconstruct,
    "cm-test": cmd_cm_test,
    "verify": cmd_verify,
    "check-ramanujan": cmd_check_ramanujan,
    "table1": cmd_table1,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2

    configure_logging(args.log_level or settings.LOG_LEVEL)
    try:
        report = COMMANDS[args.command](args)
        text = emit_report(report, args.output, args.format)
    except PW1Exception as e:
        logger.error("Command failed", command=args.command, error=e.error_code)
        print(json.dumps(e.to_dict(), ensure_ascii=False, sort_keys=True), file=sys.stderr)
        return 1
    if args.output is None:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
