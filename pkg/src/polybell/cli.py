"""Command-line front end: tables, series expansions, identity checks,
micro-benchmarks and OEIS cross-referencing.

Exit codes: 0 success, 1 usage error, 2 verification failure (or a failed
benchmark cross-check), 3 network failure.  Output is JSON by default
(exact values as text, see output.py) or CSV via --format csv; `verify`
emits one compact JSON object per line so reports stream.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import bell, output, verify
from .bench import MIN_ORDER as BENCH_MIN_ORDER
from .bench import WORKLOADS, run_bench
from .config import Settings, load_settings
from .oeis import (
    TRANSFORMS,
    OeisFixtureError,
    OeisNetworkError,
    OeisQuery,
    lookup,
)
from .ring import MultiPoly, as_fraction
from .series import TruncatedSeries
from .special import KIND_FIRST, KIND_SECOND, derangements, stirling_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_NETWORK = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit(2); we want exit 1
        raise UsageError(message)


# -- shared argument handling -------------------------------------------------


def _parse_rational(text: str, flag: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise UsageError(f"{flag} expects an exact rational like 3 or -7/2, got {text!r}")


_K_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def _parse_k_range(text: str) -> tuple[int, ...]:
    match = _K_RANGE_RE.match(text)
    if not match:
        raise UsageError(f"--k-range expects A..B, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise UsageError(f"--k-range bounds out of order: {text!r}")
    return tuple(range(lo, hi + 1))


def _parse_terms(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise UsageError(f"--terms expects comma-separated integers, got {text!r}")


def _emit(document: dict, fmt: str) -> None:
    if fmt == "csv":
        sys.stdout.write(output.to_csv(document))
    else:
        print(output.to_json(document))


def _resolve_settings(args: argparse.Namespace) -> Settings:
    overrides: dict[str, object] = {"format": getattr(args, "format", None)}
    if getattr(args, "fixtures", None) is not None:
        overrides["fixtures_dir"] = args.fixtures
    if getattr(args, "timeout_ms", None) is not None:
        overrides["timeout_ms"] = args.timeout_ms
    settings = load_settings(overrides)
    if settings.format not in ("json", "csv"):
        raise UsageError(f"unknown format {settings.format!r}")
    return settings


# -- table --------------------------------------------------------------------

TABLE_ALIASES = {"bell": "classical_bell"}
STIRLING_TABLES = {
    "stirling1": (KIND_FIRST, False),
    "stirling2": (KIND_SECOND, False),
    "deg_stirling1": (KIND_FIRST, True),
    "deg_stirling2": (KIND_SECOND, True),
}
TABLE_FAMILY_CHOICES = tuple(
    sorted(
        set(bell.FAMILIES)
        | set(STIRLING_TABLES)
        | set(TABLE_ALIASES)
        | {"derangement"}
    )
)


def _specialize(value, at_lambda: Fraction | None, at_x: Fraction | None):
    if isinstance(value, MultiPoly) and (at_lambda is not None or at_x is not None):
        return value.subs(lam=at_lambda, x=at_x)
    return value


def cmd_table(args: argparse.Namespace) -> int:
    settings = _resolve_settings(args)
    family = TABLE_ALIASES.get(args.family, args.family)
    at_lambda = None if args.at_lambda is None else _parse_rational(args.at_lambda, "--at-lambda")
    at_x = None if args.at_x is None else _parse_rational(args.at_x, "--at-x")
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")

    records = []
    if family in STIRLING_TABLES:
        kind, degenerate = STIRLING_TABLES[family]
        if args.k is not None:
            raise UsageError(f"--k does not apply to {family}")
        if at_x is not None:
            raise UsageError(f"--at-x does not apply to {family}")
        if at_lambda is not None and not degenerate:
            raise UsageError(f"--at-lambda does not apply to classical {family}")
        table = stirling_table(kind, degenerate, args.max_n)
        for n in range(args.max_n + 1):
            for k in range(n + 1):
                records.append(
                    output.table_record(
                        n, _specialize(table.value(n, k), at_lambda, None), k=k
                    )
                )
    elif family == "derangement":
        if args.k is not None or at_lambda is not None or at_x is not None:
            raise UsageError("derangement takes no --k/--at-lambda/--at-x")
        for n, value in enumerate(derangements(args.max_n).values):
            records.append(output.table_record(n, value, egf_position=n))
    else:
        if family in bell.POLY_FAMILIES:
            if args.k is None:
                raise UsageError(f"{family} needs --k (polylogarithm index)")
            fam = bell.BellFamilyId(family, args.k)
        else:
            if args.k is not None:
                raise UsageError(f"--k does not apply to {family}")
            fam = bell.BellFamilyId(family)
        if at_lambda is not None and family not in bell.DEGENERATE_FAMILIES:
            raise UsageError(f"--at-lambda does not apply to classical {family}")
        start = 1 if family in bell.SECOND_KIND_FAMILIES else 0
        if args.max_n < start:
            raise UsageError(f"{family} starts at n = {start}; --max-n too small")
        for n in range(start, args.max_n + 1):
            value = bell.family_value(fam, n).value
            records.append(
                output.table_record(
                    n, _specialize(value, at_lambda, at_x), egf_position=n
                )
            )

    document = output.table_document(
        family=family,
        max_n=args.max_n,
        records=records,
        k=args.k,
        at_lambda=at_lambda,
        at_x=at_x,
    )
    _emit(document, settings.format)
    return EXIT_OK


# -- series ---------------------------------------------------------------------

# expr id -> (builder, has_x, degenerate, needs_k, description)
SERIES_EXPRS: dict[str, tuple[Callable, bool, bool, bool, str]] = {
    "eq4": (bell.gf_bell_polys, True, False, False, "exp(x*(exp(t)-1))"),
    "eq9": (bell.gf_deg_bell_polys, True, True, False, "e_lam^x(e_lam(t)-1)"),
    "eq13": (bell.gf_bell_numbers, False, False, False, "exp(exp(t)-1)-1"),
    "eq15": (bell.gf_bell2_numbers, False, False, False, "log(1+log(1+t))"),
    "eq19": (bell.gf_bell2_polys, True, False, False, "log(1+x*log(1+t))"),
    "eq26": (bell.gf_deg_bell_numbers, False, True, False, "e_lam(e_lam(t)-1)-1"),
    "eq28": (bell.gf_deg_bell2_numbers, False, True, False, "log_lam(1+log_lam(1+t))"),
    "eq32": (bell.gf_deg_bell2_polys, True, True, False, "log_lam(1+x*log_lam(1+t))"),
    "eq36": (bell.gf_poly_bell2, True, False, True, "Li_k(-x*log(1-t))"),
    "eq40": (bell.gf_deg_poly_bell2, True, True, True, "Li_{k,lam}(-x*log_lam(1-t))"),
}


def cmd_series(args: argparse.Namespace) -> int:
    settings = _resolve_settings(args)
    if args.expr not in SERIES_EXPRS:
        raise UsageError(f"unknown series id {args.expr!r}")
    builder, has_x, degenerate, needs_k, _ = SERIES_EXPRS[args.expr]
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    at_lambda = None if args.at_lambda is None else _parse_rational(args.at_lambda, "--at-lambda")
    at_x = None if args.at_x is None else _parse_rational(args.at_x, "--at-x")
    if needs_k and args.k is None:
        raise UsageError(f"{args.expr} needs --k (polylogarithm index)")
    if not needs_k and args.k is not None:
        raise UsageError(f"--k does not apply to {args.expr}")
    if at_x is not None and not has_x:
        raise UsageError(f"--at-x does not apply to {args.expr}")
    if at_lambda is not None and not degenerate:
        raise UsageError(f"--at-lambda does not apply to {args.expr}")

    series: TruncatedSeries = (
        builder(args.k, args.order) if needs_k else builder(args.order)
    )
    rows = []
    for n in range(args.order + 1):
        ogf = _specialize(series.coefficient(n), at_lambda, at_x)
        egf = _specialize(series.egf_term(n), at_lambda, at_x)
        rows.append(output.series_row(n, ogf, egf))
    document = output.series_document(
        expr=args.expr,
        order=args.order,
        rows=rows,
        k=args.k,
        at_lambda=at_lambda,
        at_x=at_x,
    )
    _emit(document, settings.format)
    return EXIT_OK


# -- verify ---------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    settings = _resolve_settings(args)
    k_range = (
        verify.K_RANGE_DEFAULT if args.k_range is None else _parse_k_range(args.k_range)
    )
    requested: list[str] = []
    if args.all:
        requested = list(verify.CHECK_ALL_IDS)
    else:
        for chunk in args.ids or []:
            requested.extend(part for part in chunk.split(",") if part)
        if not requested:
            raise UsageError("select checks: pass ids, --ids, or --all")
        unknown = [t for t in requested if t not in verify.THEOREM_IDS]
        if unknown:
            raise UsageError(f"unknown theorem ids: {', '.join(unknown)}")
    # Canonical order regardless of how the selection was spelled.
    ordered = [t for t in verify.THEOREM_IDS if t in set(requested)]

    all_passed = True
    first_csv = True
    for theorem in ordered:
        try:
            report = verify.check(theorem, max_n=args.max_n, k_range=k_range)
        except ValueError as exc:
            raise UsageError(str(exc))
        document = output.verify_document(report)
        if settings.format == "csv":
            sys.stdout.write(output.to_csv(document, include_header=first_csv))
            first_csv = False
        else:
            print(json.dumps(document))
        all_passed = all_passed and report.passed
    return EXIT_OK if all_passed else EXIT_VERIFY


# -- bench ------------------------------------------------------------------------


def cmd_bench(args: argparse.Namespace) -> int:
    settings = _resolve_settings(args)
    if args.order < BENCH_MIN_ORDER:
        raise UsageError(f"--order must be >= {BENCH_MIN_ORDER}")
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    try:
        report = run_bench(args.workload, args.order, args.reps)
    except AssertionError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    _emit(output.bench_document(report), settings.format)
    return EXIT_OK


# -- oeis ---------------------------------------------------------------------------


def cmd_oeis(args: argparse.Namespace) -> int:
    settings = _resolve_settings(args)
    try:
        query = OeisQuery(terms=_parse_terms(args.terms), transform=args.transform)
    except ValueError as exc:
        raise UsageError(str(exc))
    try:
        result = lookup(query, settings, live=args.live)
    except OeisFixtureError as exc:
        raise UsageError(str(exc))
    _emit(output.oeis_document(result), settings.format)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(
        prog="polybell",
        description=(
            "Exact tables, series expansions, identity verification and "
            "benchmarks for second-kind Bell, poly-Bell and degenerate "
            "Bell families."
        ),
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add_format(p: _Parser) -> None:
        p.add_argument(
            "--format",
            choices=("json", "csv"),
            default=None,
            help="output format (default json; POLYBELL_FORMAT overrides)",
        )

    table = sub.add_parser("table", help="emit a family or triangle as rows")
    table.add_argument("family", choices=TABLE_FAMILY_CHOICES)
    table.add_argument("--max-n", type=int, required=True)
    table.add_argument("--k", type=int, default=None, help="polylogarithm index")
    table.add_argument("--at-lambda", default=None, help="specialize lam (exact P/Q)")
    table.add_argument("--at-x", default=None, help="specialize x (exact P/Q)")
    add_format(table)
    table.set_defaults(handler=cmd_table)

    series = sub.add_parser("series", help="expand one named generating function")
    series.add_argument("expr", help="series id, eq4/eq9/eq13/eq15/eq19/eq26/eq28/eq32/eq36/eq40")
    series.add_argument("--order", type=int, required=True)
    series.add_argument("--k", type=int, default=None, help="polylogarithm index")
    series.add_argument("--at-lambda", default=None)
    series.add_argument("--at-x", default=None)
    add_format(series)
    series.set_defaults(handler=cmd_series)

    ver = sub.add_parser("verify", help="check identities, one JSON report per line")
    ver.add_argument("ids", nargs="*", help="theorem ids (comma lists allowed)")
    ver.add_argument("--ids", dest="ids_flag", default=None, help=argparse.SUPPRESS)
    ver.add_argument("--all", action="store_true", help="run the full corrected suite")
    ver.add_argument("--max-n", type=int, default=None)
    ver.add_argument("--k-range", default=None, help="polylog indices A..B")
    add_format(ver)
    ver.set_defaults(handler=cmd_verify)

    bench = sub.add_parser("bench", help="time composition/reversion workloads")
    bench.add_argument("workload", choices=WORKLOADS)
    bench.add_argument("--order", type=int, required=True)
    bench.add_argument("--reps", type=int, default=1)
    add_format(bench)
    bench.set_defaults(handler=cmd_bench)

    oeis = sub.add_parser("oeis", help="advisory sequence lookup (fixtures or live)")
    oeis.add_argument("--terms", required=True, help="comma-separated integers (>= 4)")
    oeis.add_argument("--transform", choices=TRANSFORMS, default="none")
    oeis.add_argument("--fixtures", default=None, help="directory of recorded responses")
    oeis.add_argument("--timeout-ms", type=int, default=None)
    oeis.add_argument("--live", action="store_true", help="allow network access")
    add_format(oeis)
    oeis.set_defaults(handler=cmd_oeis)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "handler"):
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        if getattr(args, "ids_flag", None):
            args.ids = list(args.ids or []) + args.ids_flag.split(",")
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OeisNetworkError as exc:
        print(f"network error: {exc}", file=sys.stderr)
        return EXIT_NETWORK


if __name__ == "__main__":
    sys.exit(main())
