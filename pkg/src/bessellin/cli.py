"""Batch command-line front end.

Three subcommands:

* ``coeffs``  - emit the linearization coefficient table for one (n, m),
  symbolically or evaluated at a rational point.
* ``verify``  - run the identity verification suites over an (n, m)
  grid and report every check.
* ``reduce``  - evaluate both sides of the 3F2 -> 2F1 reduction identity
  at one (n, m, k, a) tuple.

Exit codes: 0 all checks passed, 1 at least one identity violation,
2 usage error.  Rationals cross the boundary as ``p/q`` strings in both
directions; no floats are ever printed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from .hypergeom import (
    DomainError,
    reduction_2f1_lower,
    reduction_2f1_upper,
    reduction_3f2_sum,
    reduction_branches,
)
from .linearization import LinTable, linearize
from .polynomials import BiLaurent
from .report import NOTE, summarize
from .suites import run_suite

__all__ = ["main"]

DEFAULT_CAP = 16
_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a rational literal (expected e.g. 3, -2, 5/7)"
        )
    if "/" in text and int(text.split("/")[1]) == 0:
        raise argparse.ArgumentTypeError(f"{text!r} has a zero denominator")
    return Fraction(text)


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be nonnegative")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bessellin",
        description="Exact linearization coefficients of Bessel polynomial "
        "products, with machine verification of their identities.",
    )
    parser.add_argument(
        "--cap",
        type=_nonnegative,
        default=DEFAULT_CAP,
        help=f"hard cap on degrees and grid bounds (default {DEFAULT_CAP})",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    coeffs = commands.add_parser(
        "coeffs", help="emit the coefficient table for one (n, m)"
    )
    coeffs.add_argument("--n", type=_nonnegative, required=True)
    coeffs.add_argument("--m", type=_nonnegative, required=True)
    coeffs.add_argument("--a1", type=_rational, help="evaluate at a1 (with --a2)")
    coeffs.add_argument("--a2", type=_rational, help="evaluate at a2 (with --a1)")
    coeffs.add_argument(
        "--format", choices=("text", "json", "csv"), default="text"
    )

    verify = commands.add_parser("verify", help="run verification suites on a grid")
    verify.add_argument(
        "--suite",
        choices=("all", "recurrence", "oracle", "berg-vignat", "hypergeometric"),
        default="all",
    )
    verify.add_argument("--max-n", type=_nonnegative, default=6)
    verify.add_argument("--max-m", type=_nonnegative, default=6)
    verify.add_argument("--jobs", type=int, default=1, help="worker process count")
    verify.add_argument(
        "--format", choices=("text", "json", "csv"), default="text"
    )

    reduce_cmd = commands.add_parser(
        "reduce", help="evaluate both sides of the series reduction identity"
    )
    reduce_cmd.add_argument("--n", type=_nonnegative, required=True)
    reduce_cmd.add_argument("--m", type=_nonnegative, required=True)
    reduce_cmd.add_argument("--k", type=_nonnegative, required=True)
    reduce_cmd.add_argument("--a", type=_rational, required=True)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    bounds = [
        getattr(args, name)
        for name in ("n", "m", "max_n", "max_m")
        if getattr(args, name, None) is not None
    ]
    for value in bounds:
        if value > args.cap:
            parser.error(
                f"bound {value} exceeds the hard cap {args.cap}; raise it with --cap"
            )
    if args.command == "coeffs" and (args.a1 is None) != (args.a2 is None):
        parser.error("--a1 and --a2 must be given together")
    if args.command == "verify" and args.jobs < 1:
        parser.error("--jobs must be at least 1")
    if args.command == "reduce" and args.k > args.n + args.m:
        parser.error(f"--k must be at most n+m = {args.n + args.m}")


def _term_payload(value: BiLaurent) -> list[dict]:
    return [
        {"e1": e1, "e2": e2, "num": str(coeff.numerator), "den": str(coeff.denominator)}
        for (e1, e2), coeff in value.terms()
    ]


def _table_payload(table: LinTable) -> dict:
    return {
        "n": table.n,
        "m": table.m,
        "coeffs": [
            {"k": k, "terms": _term_payload(coeff)}
            for k, coeff in enumerate(table.coeffs)
        ],
    }


def dump_json(payload) -> str:
    """Canonical JSON writer: fixed key order, indent 2, no floats."""
    return json.dumps(payload, indent=2)


def _cmd_coeffs(args) -> int:
    table = linearize(args.n, args.m, engine="oracle")
    if args.a1 is not None:
        values = [coeff.substitute(args.a1, args.a2) for coeff in table.coeffs]
        table = LinTable(
            n=table.n,
            m=table.m,
            coeffs=tuple(
                BiLaurent.constant(v) if v else BiLaurent.zero() for v in values
            ),
            engine=table.engine,
        )
    if args.format == "json":
        print(dump_json(_table_payload(table)))
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["k", "e1", "e2", "num", "den"])
        for k, coeff in enumerate(table.coeffs):
            for (e1, e2), value in coeff.terms():
                writer.writerow([k, e1, e2, value.numerator, value.denominator])
        sys.stdout.write(out.getvalue())
    else:
        for k, coeff in enumerate(table.coeffs):
            print(f"beta[{k}] = {coeff.render()}")
    return 0


def _cmd_verify(args) -> int:
    records = run_suite(args.suite, args.max_n, args.max_m, jobs=args.jobs)
    summary = summarize(records)
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "max_n": args.max_n,
            "max_m": args.max_m,
            "records": [
                {
                    "check": r.check,
                    "n": r.n,
                    "m": r.m,
                    "k": r.k,
                    "where": r.where,
                    "status": r.status,
                    "detail": r.detail,
                }
                for r in records
            ],
            "counts": {
                "total": summary.total,
                "pass": summary.passed,
                "fail": summary.failed,
                "pole-convention-notes": summary.notes,
            },
        }
        print(dump_json(payload))
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["check", "n", "m", "k", "where", "status", "detail"])
        for r in records:
            writer.writerow([r.check, r.n, r.m, r.k, r.where, r.status, r.detail])
        sys.stdout.write(out.getvalue())
    else:
        for record in records:
            print(record.render())
        print(
            f"summary: {summary.total} checks, {summary.passed} pass, "
            f"{summary.failed} fail, {summary.notes} pole-convention-notes"
        )
    return 1 if summary.failed else 0


def _cmd_reduce(args) -> int:
    try:
        rhs = reduction_3f2_sum(args.n, args.m, args.k, args.a)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    exit_code = 0
    for branch in reduction_branches(args.n, args.m, args.k):
        side = reduction_2f1_upper if branch == "upper" else reduction_2f1_lower
        try:
            lhs = side(args.n, args.m, args.k, args.a)
        except DomainError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        if lhs == rhs:
            verdict = "equal"
        elif branch == "lower":
            verdict = f"not equal ({NOTE})"
        else:
            verdict = "NOT EQUAL"
            exit_code = 1
        print(f"branch={branch} lhs={lhs} rhs={rhs} verdict={verdict}")
    return exit_code


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        if args.command == "coeffs":
            return _cmd_coeffs(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_reduce(args)
    except BrokenPipeError:  # downstream pager closed early
        return 0


if __name__ == "__main__":
    sys.exit(main())
