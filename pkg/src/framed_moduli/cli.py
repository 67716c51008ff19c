"""Command-line front end: compute, enumerate, and verify.

Exit codes: 0 on success, 1 when a verification finds mismatches, 2 on
malformed input.  Output on stdout is deterministic for identical
invocations; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from .characters import full_character, morse_index_direct, reduced_character
from .fixed_locus import (
    ChernData,
    FixedComponent,
    FullFixedPoint,
    SurfaceParams,
    enumerate_components,
    enumerate_full_fixed_points,
    is_admissible,
)
from .partitions import Partition
from .poincare import (
    euler_characteristic,
    euler_generating_function,
    poincare_polynomial,
)
from .verify import ORACLES

_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class CliError(Exception):
    """Malformed input; reported on stderr with exit code 2."""


def parse_rational(text: str) -> Fraction:
    """Parse 'a' or 'a/b' exactly; decimal notation is rejected."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise CliError(f"not a rational number: {text!r} (use a or a/b)")
    return Fraction(text)


def _surface(args) -> SurfaceParams:
    try:
        return SurfaceParams(args.p, stacky=args.stacky)
    except ValueError as err:
        raise CliError(str(err)) from None


def _chern(args, params: SurfaceParams) -> ChernData:
    c1 = parse_rational(args.c1)
    n = parse_rational(args.n)
    if c1.denominator != 1 and not params.stacky:
        raise CliError("fractional --c1 requires --stacky")
    if params.p % c1.denominator != 0:
        raise CliError(f"--c1 denominator must divide p={params.p}")
    try:
        return ChernData(args.r, c1, n)
    except ValueError as err:
        raise CliError(str(err)) from None


def _parse_kvec(text: str, r: int, params: SurfaceParams) -> tuple[Fraction, ...]:
    parts = [parse_rational(piece) for piece in text.split(",")]
    if len(parts) != r:
        raise CliError(f"--kvec needs {r} entries, got {len(parts)}")
    for k in parts:
        if k.denominator != 1 and not params.stacky:
            raise CliError("fractional --kvec entries require --stacky")
        if params.p % k.denominator != 0:
            raise CliError(f"--kvec denominators must divide p={params.p}")
    return tuple(parts)


def _parse_tableaux(text: str, r: int, flag: str) -> tuple[Partition, ...]:
    try:
        rows = json.loads(text)
        tabs = tuple(Partition(row) for row in rows)
    except (json.JSONDecodeError, TypeError, ValueError) as err:
        raise CliError(f"{flag} must be a JSON list of partitions: {err}") from None
    if len(tabs) != r:
        raise CliError(f"{flag} needs {r} partitions, got {len(tabs)}")
    return tabs


def _emit_csv(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def cmd_poincare(args) -> int:
    params = _surface(args)
    chern = _chern(args, params)
    if not is_admissible(params, chern):
        print(
            f"warning: empty moduli space for p={params.p} r={chern.r} "
            f"c1={chern.k} n={chern.n}",
            file=sys.stderr,
        )
    poly = poincare_polynomial(params, chern, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps(poly.as_json()))
    elif args.format == "csv":
        _emit_csv(["exp", "coeff"], [[e, str(poly.coeffs[e])] for e in sorted(poly.coeffs)])
    else:
        print(poly.render())
    return 0


def cmd_euler(args) -> int:
    params = _surface(args)
    chern = _chern(args, params)
    value = euler_characteristic(params, chern, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps({"euler": str(value)}))
    elif args.format == "csv":
        _emit_csv(["euler"], [[str(value)]])
    else:
        print(value)
    return 0


def cmd_components(args) -> int:
    params = _surface(args)
    chern = _chern(args, params)
    if args.full:
        items = enumerate_full_fixed_points(params, chern)
    else:
        items = enumerate_components(params, chern)
    payload = []
    for item in items:
        entry = item.as_json()
        if args.index:
            if isinstance(item, FullFixedPoint):
                report = morse_index_direct(
                    full_character(params, item).specialize_diagonal()
                )
            else:
                report = morse_index_direct(reduced_character(params, item))
            entry["index"] = {
                "negative": report.negative_count,
                "zero_diagonal": report.zero_diagonal_count,
                "positive": report.positive_count,
            }
        payload.append(entry)
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv":
        header = ["kvec", "tableaux"] + (
            ["negative", "zero_diagonal", "positive"] if args.index else []
        )
        if args.full:
            header[1:2] = ["tableaux_p1", "tableaux_p2"]
        rows = []
        for entry in payload:
            row = [json.dumps(entry["kvec"])]
            if args.full:
                row += [json.dumps(entry["tableaux_p1"]), json.dumps(entry["tableaux_p2"])]
            else:
                row.append(json.dumps(entry["tableaux"]))
            if args.index:
                idx = entry["index"]
                row += [idx["negative"], idx["zero_diagonal"], idx["positive"]]
            rows.append(row)
        _emit_csv(header, rows)
    else:
        for entry in payload:
            print(json.dumps(entry))
    return 0


def cmd_character(args) -> int:
    params = _surface(args)
    kvec = _parse_kvec(args.kvec, args.r, params)
    if args.reduced:
        if args.tableaux_p1 or args.tableaux_p2:
            raise CliError("--reduced uses --tableaux, not the per-point variants")
        if args.tableaux:
            tabs = _parse_tableaux(args.tableaux, args.r, "--tableaux")
        else:
            tabs = tuple(Partition() for _ in range(args.r))
        comp = FixedComponent(kvec, tabs)
        ch = reduced_character(params, comp)
        derived_n = comp.discriminant(params.p)
    else:
        if args.tableaux:
            raise CliError("full characters use --tableaux-p1/--tableaux-p2")
        default = json.dumps([[]] * args.r)
        tabs1 = _parse_tableaux(args.tableaux_p1 or default, args.r, "--tableaux-p1")
        tabs2 = _parse_tableaux(args.tableaux_p2 or default, args.r, "--tableaux-p2")
        point = FullFixedPoint(kvec, tabs1, tabs2)
        ch = full_character(params, point)
        derived_n = point.discriminant(params.p)
    if args.n is not None:
        stated = parse_rational(args.n)
        if stated != derived_n:
            raise CliError(
                f"stated discriminant {stated} does not match the box-count "
                f"identity value {derived_n}"
            )
    report = morse_index_direct(ch.specialize_diagonal())
    if args.format == "json":
        payload = ch.as_json()
        payload["n"] = str(derived_n)
        payload["index"] = {
            "negative": report.negative_count,
            "zero_diagonal": report.zero_diagonal_count,
            "positive": report.positive_count,
        }
        print(json.dumps(payload))
    elif args.format == "csv":
        _emit_csv(
            ["alpha", "beta", "t1", "t2", "mult"],
            [[t.alpha, t.beta, t.t1, t.t2, m] for t, m in ch.terms()],
        )
    else:
        for t, m in ch.terms():
            print(f"alpha={t.alpha} beta={t.beta} t1={t.t1} t2={t.t2} mult={m}")
        print(f"n={derived_n}")
        print(
            f"index: negative={report.negative_count} "
            f"zero_diagonal={report.zero_diagonal_count} "
            f"positive={report.positive_count}"
        )
    return 0


def cmd_series(args) -> int:
    params = _surface(args)
    order = parse_rational(args.max_order)
    if order < 0:
        raise CliError("--max-order must be nonnegative")
    series = euler_generating_function(params, args.r, order, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps(series.as_json()))
    elif args.format == "csv":
        _emit_csv(
            ["q_num", "q_den", "z_num", "z_den", "coeff"],
            [list(row) for row in series.csv_rows()],
        )
    else:
        print(series.render())
    return 0


def cmd_verify(args) -> int:
    runner = ORACLES[args.oracle]
    kwargs = {}
    if args.oracle in ("hilbert", "p-independence"):
        kwargs = {"max_n": args.max_n or 8, "max_p": args.max_p or 4}
    elif args.oracle == "grassmannian":
        kwargs = {"max_r": args.max_r or 5, "max_p": args.max_p or 3}
    elif args.oracle == "theta":
        kwargs = {
            "max_order": parse_rational(args.max_order) if args.max_order else 5,
            "max_r": args.max_r or 2,
            "max_p": args.max_p or 3,
        }
    else:
        kwargs = {
            "max_n": args.max_n or 4,
            "max_r": args.max_r or 3,
            "max_p": args.max_p or 3,
        }
    report = runner(**kwargs)
    print(f"elapsed: {report.elapsed:.2f}s", file=sys.stderr)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "oracle": report.oracle,
                    "cases": report.cases,
                    "mismatches": report.mismatches,
                }
            )
        )
    else:
        print(f"oracle={report.oracle} cases={report.cases} mismatches={len(report.mismatches)}")
        for line in report.mismatches:
            print(f"MISMATCH {line}")
    return 0 if report.ok else 1


def _add_common(sub, *, chern: bool, jobs: bool = False) -> None:
    sub.add_argument("--p", type=int, required=True, help="degree of the ruled surface")
    sub.add_argument("--r", type=int, required=True, help="rank of the framed sheaves")
    sub.add_argument("--stacky", action="store_true", help="allow Chern denominators dividing p")
    if chern:
        sub.add_argument("--c1", required=True, help="first Chern coefficient, a or a/b")
        sub.add_argument("--n", required=True, help="discriminant, a or a/b")
    if jobs:
        sub.add_argument("--jobs", type=int, default=1, help="worker threads for the component sum")
    sub.add_argument(
        "--format", choices=("text", "json", "csv"), default="text", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framed-moduli",
        description="Exact fixed-point enumeration, Poincare polynomials and "
        "Euler-characteristic series for framed sheaves on ruled surfaces.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("poincare", help="Poincare polynomial of a moduli space")
    _add_common(sub, chern=True, jobs=True)
    sub.set_defaults(handler=cmd_poincare)

    sub = commands.add_parser("euler", help="Euler characteristic of a moduli space")
    _add_common(sub, chern=True, jobs=True)
    sub.set_defaults(handler=cmd_euler)

    sub = commands.add_parser("components", help="list the torus-fixed data")
    _add_common(sub, chern=True)
    sub.add_argument("--full", action="store_true", help="isolated fixed points instead of components")
    sub.add_argument("--index", action="store_true", help="attach Morse index data")
    sub.set_defaults(handler=cmd_components)

    sub = commands.add_parser("character", help="tangent character of one fixed datum")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--stacky", action="store_true")
    sub.add_argument("--kvec", required=True, help="comma-separated Chern coefficients")
    sub.add_argument("--reduced", action="store_true", help="one-parameter character of a component")
    sub.add_argument("--tableaux", help="JSON partitions for --reduced, e.g. [[2,1],[]]")
    sub.add_argument("--tableaux-p1", dest="tableaux_p1", help="JSON partitions at the first chart")
    sub.add_argument("--tableaux-p2", dest="tableaux_p2", help="JSON partitions at the second chart")
    sub.add_argument("--n", help="optional discriminant to check against the datum")
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub.set_defaults(handler=cmd_character)

    sub = commands.add_parser("series", help="Euler-characteristic generating series")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--stacky", action="store_true")
    sub.add_argument("--max-order", dest="max_order", required=True, help="q-order truncation, a or a/b")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub.set_defaults(handler=cmd_series)

    sub = commands.add_parser("verify", help="run a built-in cross-check suite")
    sub.add_argument("oracle", choices=sorted(ORACLES))
    sub.add_argument("--max-n", dest="max_n", type=int)
    sub.add_argument("--max-r", dest="max_r", type=int)
    sub.add_argument("--max-p", dest="max_p", type=int)
    sub.add_argument("--max-order", dest="max_order")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
