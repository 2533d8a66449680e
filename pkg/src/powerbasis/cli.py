"""Command-line front end.

Exit codes: 0 Generator, 1 NotGenerator, 2 Unknown, 64 usage or parse error.
``survey``, ``density`` and ``xcheck`` exit 0 on success.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import arith
from .density import (
    bound_linear_family,
    bound_nminus1_family,
    heuristic_linear_bound,
    heuristic_nm1_bound,
)
from .monogenic import Family, Outcome, certify_generator, theorem_check
from .polynomial import ParseError, parse_polynomial
from .survey import CSV_HEADER, FAMILY_NAMES, empirical_survey, survey_family
from .xcheck import REGRESSION_CORPUS, cross_check, random_cross_check

EXIT_USAGE = 64
EXIT_CODES = {Outcome.GENERATOR: 0, Outcome.NOT_GENERATOR: 1, Outcome.UNKNOWN: 2}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers 'a,b', got {text!r}") from None
    return a, b


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="powerbasis", description="Power integral bases for trinomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = sub.add_parser("check", help="certify one polynomial")
    src = check.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help='polynomial text, e.g. "x^5+2x+2"')
    src.add_argument("--family", choices=[f.value for f in Family])
    check.add_argument("--coeffs", type=_pair, help="family coefficients a,b")
    check.add_argument("--effort", type=int, default=arith.DEFAULT_EFFORT)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--json", action="store_true")

    survey = sub.add_parser("survey", help="count generators over a coefficient range")
    survey.add_argument("--family", required=True, help=f"one of {', '.join(FAMILY_NAMES)}")
    survey.add_argument("--fixed", type=int, help="the constant c of nm1-cd")
    survey.add_argument("--degree", type=int, help="degree of nm1-cd (default 5)")
    survey.add_argument("--min", type=int, required=True)
    survey.add_argument("--max", type=int, required=True)
    survey.add_argument("--min2", type=int)
    survey.add_argument("--max2", type=int)
    survey.add_argument("--seed", type=int, default=0)
    survey.add_argument("--jobs", type=int, default=1)
    survey.add_argument("--irreducible-only", action="store_true", help="percentages among irreducible members")
    survey.add_argument("--out", default="-")

    density = sub.add_parser("density", help="closed-form density lower bounds")
    density.add_argument("--family", required=True, choices=["linear-bb", "nm1"])
    density.add_argument("-n", type=int, required=True)
    density.add_argument("--c", type=int)
    density.add_argument("--heuristic", action="store_true", help="also print the independence heuristic")

    xcheck = sub.add_parser("xcheck", help="compare the Ore and Dedekind tests")
    xcheck.add_argument("--count", type=int, default=1000)
    xcheck.add_argument("--degree-max", type=int, default=6)
    xcheck.add_argument("--coeff-max", type=int, default=30)
    xcheck.add_argument("--seed", type=int, default=0)
    xcheck.add_argument("--corpus", action="store_true", help="also run the fixed regression corpus")
    return parser


def run_check(args, out) -> int:
    if args.poly is not None:
        if args.coeffs is not None:
            raise UsageError("--coeffs goes with --family")
        f = parse_polynomial(args.poly)
        theorem = None
    else:
        if args.coeffs is None:
            raise UsageError("--family needs --coeffs")
        family = Family(args.family)
        f = family.polynomial(*args.coeffs)
        theorem = theorem_check(family, *args.coeffs, effort=args.effort)
    if not f.is_monic() or f.degree < 2:
        raise UsageError("need a monic polynomial of degree >= 2")
    try:
        verdict = certify_generator(f, args.effort, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        record = verdict.to_record()
        if theorem is not None:
            record["theorem"] = {
                "applies": theorem.applies,
                "monogenic": theorem.monogenic.value,
                "failing_condition": theorem.failing_condition,
            }
        out.write(json.dumps(record, sort_keys=True) + "\n")
    else:
        out.write(f"{verdict.outcome.value}\n")
        out.write(f"  polynomial   {verdict.polynomial}\n")
        out.write(f"  irreducible  {verdict.irreducible}\n")
        out.write(f"  discriminant {verdict.discriminant}\n")
        for r in verdict.tested_primes:
            agree = "" if r.agreement else "  (engines disagree)"
            out.write(f"  p={r.p}: {'divides' if r.divides_index else 'does not divide'} the index{agree}\n")
        if verdict.unknown_cofactor > 1:
            out.write(f"  unfactored cofactor {verdict.unknown_cofactor}\n")
        if theorem is not None:
            note = f" ({theorem.failing_condition})" if theorem.failing_condition else ""
            out.write(f"  closed form  {theorem.monogenic.value}{note}\n")
    return EXIT_CODES[verdict.outcome]


def run_survey(args, out) -> int:
    try:
        family = survey_family(args.family, fixed=args.fixed, degree=args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ranges = [(args.min, args.max)]
    if family.dimension == 2:
        lo2 = args.min if args.min2 is None else args.min2
        hi2 = args.max if args.max2 is None else args.max2
        ranges.append((lo2, hi2))
    elif args.min2 is not None or args.max2 is not None:
        raise UsageError(f"{args.family} takes a single range")
    if any(lo > hi for lo, hi in ranges):
        raise UsageError("empty range")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    row = empirical_survey(family, ranges, args.seed, args.jobs, irreducible_only=args.irreducible_only)
    if args.out == "-":
        _write_csv(out, row)
    else:
        with open(args.out, "w", newline="") as fh:
            _write_csv(fh, row)
    return 0


def _write_csv(fh, row) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerow(row.csv_fields())


def run_density(args, out) -> int:
    try:
        if args.family == "linear-bb":
            bounds = [("bound", bound_linear_family(args.n))]
            if args.heuristic:
                bounds.append(("heuristic", heuristic_linear_bound(args.n)))
        else:
            if args.c is None:
                raise UsageError("nm1 needs --c")
            bounds = [("bound", bound_nminus1_family(args.n, args.c))]
            if args.heuristic:
                bounds.append(("heuristic", heuristic_nm1_bound(args.n, args.c)))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for label, value in bounds:
        out.write(f"{label} {value.approx:.6f}  = {value}\n")
    return 0


def run_xcheck(args, out) -> int:
    if args.count < 0 or args.degree_max < 2 or args.coeff_max < 1:
        raise UsageError("need --count >= 0, --degree-max >= 2, --coeff-max >= 1")
    reports = [random_cross_check(args.count, args.degree_max, args.coeff_max, args.seed)]
    if args.corpus:
        reports.append(cross_check([parse_polynomial(s) for s in REGRESSION_CORPUS], seed=args.seed))
    status = 0
    for report in reports:
        out.write(
            f"polynomials {report.polynomials} primes {report.primes_tested} "
            f"incomplete {report.incomplete_factorizations} disagreements {len(report.disagreements)}\n"
        )
        for poly, p, ore, ded in report.disagreements:
            out.write(f"COUNTEREXAMPLE {poly} p={p} ore={ore} dedekind={ded}\n")
            status = 1
    return status


COMMANDS = {"check": run_check, "survey": run_survey, "density": run_density, "xcheck": run_xcheck}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
