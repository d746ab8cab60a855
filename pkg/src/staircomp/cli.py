"""Command-line interface: coefficient tables, verification runs, totals.

Exit codes: 0 on success, 1 when a verification detects a mismatch, 2 for
usage errors.  The json and csv formats are stable for machine parsing;
the text format is aligned for humans and makes no stability promise.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb
from typing import Callable

from . import genfun, oracle
from .determinants import inner_block_det, numerator_det, denominator_det, top_block_det
from .series import DEFAULT_TRUNC, TriSeries

VERIFY_TRUNC = 14


class UsageError(Exception):
    """Bad flag combination detected after parsing."""


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="staircomp",
        description="Exact staircase-pattern statistics for integer compositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser(
        "table",
        help="emit nonzero coefficients (a, b, s, count) of the master series",
    )
    table.add_argument("--m", type=_positive_int, required=True, help="staircase window length")
    table.add_argument("--max-n", type=_positive_int, required=True, help="largest total a to include")
    table.add_argument("--trunc", type=_positive_int, help="series truncation order (default max(20, max-n))")
    table.add_argument("--format", choices=("json", "csv", "text"), default="text")
    table.add_argument("--output", help="write to this path instead of stdout")

    verify = sub.add_parser(
        "verify",
        help="run the cross-checks between formulas and brute-force enumeration",
    )
    verify.add_argument("--m", type=_positive_int, required=True)
    verify.add_argument("--max-n", type=_positive_int, required=True, help="largest total covered by enumeration")
    verify.add_argument("--trunc", type=_positive_int, help="series truncation order (default max(14, max-n))")
    verify.add_argument("--enum-cap", type=_positive_int, default=oracle.MAX_ENUM_N,
                        help="enumeration cap override")

    corollary = sub.add_parser(
        "corollary",
        help="total staircase windows over all compositions of n with a given part count",
    )
    corollary.add_argument("--n", type=_positive_int, required=True)
    corollary.add_argument("--parts", type=_positive_int, required=True)
    corollary.add_argument("--m", type=_positive_int, required=True)
    corollary.add_argument("--check", action="store_true",
                           help="also enumerate and fail on disagreement")
    corollary.add_argument("--enum-cap", type=_positive_int, default=oracle.MAX_ENUM_N)

    orc = sub.add_parser(
        "oracle",
        help="brute-force histogram (b, s, count) for the compositions of n",
    )
    orc.add_argument("--n", type=_positive_int, required=True)
    orc.add_argument("--m", type=_positive_int, required=True)
    orc.add_argument("--format", choices=("json", "csv", "text"), default="text")
    orc.add_argument("--output", help="write to this path instead of stdout")
    orc.add_argument("--enum-cap", type=_positive_int, default=oracle.MAX_ENUM_N)

    dump = sub.add_parser(
        "series-dump",
        help="serialize a computed series as JSON",
    )
    dump.add_argument("--m", type=_positive_int, required=True)
    dump.add_argument("--trunc", type=_positive_int, default=DEFAULT_TRUNC)
    dump.add_argument(
        "--kind",
        choices=("gf", "gf-q1", "total-gf", "numerator-det", "denominator-det"),
        default="gf",
    )
    dump.add_argument("--output", help="write to this path instead of stdout")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers: dict[str, Callable[[argparse.Namespace], int]] = {
        "table": cmd_table,
        "verify": cmd_verify,
        "corollary": cmd_corollary,
        "oracle": cmd_oracle,
        "series-dump": cmd_series_dump,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


# -- commands -----------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> int:
    trunc = _table_trunc(args.trunc, args.max_n)
    gf = genfun.staircase_gf(args.m, trunc)
    rows = [
        (a, b, s, c)
        for (a, b, s), c in gf.terms()
        if 1 <= a <= args.max_n
    ]
    _emit(_render_rows(rows, ("a", "b", "s", "count"), args.format), args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n > args.enum_cap:
        raise UsageError(
            f"--max-n {args.max_n} exceeds the enumeration cap {args.enum_cap}"
        )
    trunc = _table_trunc(args.trunc, args.max_n, default=VERIFY_TRUNC)
    failures = 0
    for name, check in (
        ("closed form vs enumeration", _check_gf_vs_oracle),
        ("Cramer path vs closed form", _check_cramer),
        ("block determinant recurrences vs closed forms", _check_block_dets),
        ("window totals: formula vs enumeration", _check_totals),
        ("q = 1 marginals", _check_marginals),
    ):
        problem = check(args.m, args.max_n, trunc, args.enum_cap)
        if problem is None:
            print(f"PASS {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {problem}")
    print(f"{5 - failures}/5 checks passed (m={args.m}, max_n={args.max_n}, trunc={trunc})")
    return 1 if failures else 0


def cmd_corollary(args: argparse.Namespace) -> int:
    value = genfun.total_staircases(args.n, args.parts, args.m)
    print(value)
    if not args.check:
        return 0
    if args.n > args.enum_cap:
        raise UsageError(f"--n {args.n} exceeds the enumeration cap {args.enum_cap}")
    reference = oracle.total_staircases(args.n, args.parts, args.m, cap=args.enum_cap)
    print(f"oracle {reference}")
    if reference != value:
        print(
            f"MISMATCH formula {value} != oracle {reference} "
            f"at n={args.n}, parts={args.parts}, m={args.m}",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.n > args.enum_cap:
        raise UsageError(f"--n {args.n} exceeds the enumeration cap {args.enum_cap}")
    hist = oracle.staircase_histogram(args.n, args.m, cap=args.enum_cap)
    rows = [(b, s, c) for (b, s), c in sorted(hist.counts.items())]
    _emit(_render_rows(rows, ("b", "s", "count"), args.format), args.output)
    return 0


def cmd_series_dump(args: argparse.Namespace) -> int:
    producers: dict[str, Callable[[int, int], TriSeries]] = {
        "gf": genfun.staircase_gf,
        "gf-q1": genfun.gf_at_q1,
        "total-gf": genfun.total_staircases_gf,
        "numerator-det": numerator_det,
        "denominator-det": denominator_det,
    }
    series = producers[args.kind](args.m, args.trunc)
    _emit(json.dumps(series.to_json_obj(), indent=2) + "\n", args.output)
    return 0


# -- verify checks ------------------------------------------------------------
# Each returns None when the check holds, or a short description of the
# first disagreement found.


def _check_gf_vs_oracle(m, max_n, trunc, cap):
    gf = genfun.staircase_gf(m, trunc)
    for a in range(1, max_n + 1):
        hist = oracle.staircase_histogram(a, m, cap=cap)
        got = {(b, s): c for (aa, b, s), c in gf.terms() if aa == a}
        problem = _first_diff(a, got, hist.counts)
        if problem:
            return problem
    return None


def _check_cramer(m, max_n, trunc, cap):
    closed = genfun.staircase_gf(m, trunc)
    cramer = genfun.staircase_gf_cramer(m, trunc)
    if closed == cramer:
        return None
    left = dict(closed.terms())
    right = dict(cramer.terms())
    for key in sorted(set(left) | set(right)):
        if left.get(key, 0) != right.get(key, 0):
            a, b, s = key
            return (
                f"first difference at (a={a}, b={b}, s={s}): "
                f"closed {left.get(key, 0)} vs Cramer {right.get(key, 0)}"
            )
    return "series disagree"


def _check_block_dets(m, max_n, trunc, cap):
    for k in range(0, m + 2):
        if top_block_det(k, trunc, "closed") != top_block_det(k, trunc, "recurrence"):
            return f"top block size {k}: closed form differs from recurrence"
    for k in range(-1, m + 2):
        if inner_block_det(k, trunc, "closed") != inner_block_det(k, trunc, "recurrence"):
            return f"inner block size {k}: closed form differs from recurrence"
    return None


def _check_totals(m, max_n, trunc, cap):
    for n in range(1, max_n + 1):
        for parts in range(1, n + 1):
            formula = genfun.total_staircases(n, parts, m)
            brute = oracle.total_staircases(n, parts, m, cap=cap)
            if formula != brute:
                return (
                    f"n={n}, parts={parts}: formula {formula} vs enumeration {brute}"
                )
    return None


def _check_marginals(m, max_n, trunc, cap):
    gf = genfun.gf_at_q1(m, trunc)
    for a in range(1, trunc + 1):
        for b in range(0, trunc + 2):
            want = comb(a - 1, b - 1) if 1 <= b <= a else 0
            got = gf.coeff(a, b, 0)
            if got != want:
                return f"(a={a}, b={b}): marginal {got}, binomial {want}"
    return None


def _first_diff(a, got, want):
    for key in sorted(set(got) | set(want)):
        g, w = got.get(key, 0), want.get(key, 0)
        if g != w:
            b, s = key
            return f"(a={a}, b={b}, s={s}): series {g} vs enumeration {w}"
    return None


# -- output helpers -----------------------------------------------------------


def _table_trunc(trunc, max_n, default=DEFAULT_TRUNC):
    if trunc is None:
        return max(default, max_n)
    if trunc < max_n:
        raise UsageError(f"--trunc {trunc} is below --max-n {max_n}")
    return trunc


def _render_rows(rows, header, fmt):
    if fmt == "json":
        payload = [
            {**dict(zip(header[:-1], row[:-1])), header[-1]: str(row[-1])}
            for row in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [
        max(len(name), *(len(str(row[i])) for row in rows)) if rows else len(name)
        for i, name in enumerate(header)
    ]
    lines = ["  ".join(name.rjust(w) for name, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
