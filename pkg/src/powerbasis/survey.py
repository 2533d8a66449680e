"""Empirical monogenicity surveys over trinomial families.

Every parameter tuple is certified independently, so a survey splits its
range into blocks, counts each block (possibly in worker processes) and sums
the counts.  Sums are order independent, so the result does not depend on
the number of workers.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from typing import Iterator

from .arith import TriState
from .monogenic import Family, Outcome, certify_generator, theorem_check
from .polynomial import IntPolynomial, irreducibility_certificate, trinomial

CSV_HEADER = (
    "family",
    "param_range",
    "total",
    "irreducible",
    "theta_generator",
    "pct_generator",
    "hypothesis_ok",
    "pct_hypothesis",
)
BLOCK_SIZE = 256


@dataclass(frozen=True)
class SurveyFamily:
    """A one- or two-parameter trinomial family.

    ``kind`` is one of ``"two"`` (``x^n + u x^k + v``), ``"bb"``
    (``x^n + b x^k + b``, with ``k`` 1 or ``n - 1``) or ``"cd"``
    (``x^n + c x^(n-1) + c d`` with fixed c).
    """

    name: str
    degree: int
    middle: int
    kind: str
    fixed: int | None = None

    @property
    def dimension(self) -> int:
        return 2 if self.kind == "two" else 1

    @property
    def theorem(self) -> Family | None:
        for fam in Family:
            if fam.degree == self.degree and fam.middle == self.middle:
                return fam
        return None

    def coefficients(self, params: tuple[int, ...]) -> tuple[int, int]:
        if self.kind == "two":
            return params[0], params[1]
        if self.kind == "bb":
            return params[0], params[0]
        return self.fixed, self.fixed * params[0]

    def polynomial(self, params: tuple[int, ...]) -> IntPolynomial:
        return trinomial(self.degree, self.middle, *self.coefficients(params))

    def describe(self) -> str:
        n, k = self.degree, self.middle
        lead = f"x^{n}"
        mid = "x" if k == 1 else f"x^{k}"
        if self.kind == "two":
            u, v = ("a", "b") if k == 1 else ("c", "d")
            return f"{lead}+{u}{mid}+{v}"
        if self.kind == "bb":
            u = "b" if k == 1 else "c"
            return f"{lead}+{u}{mid}+{u}"
        c = self.fixed
        sign = "+" if c >= 0 else "-"
        return f"{lead}{sign}{abs(c)}{mid}{sign}{abs(c)}d"


_NAMED = {
    "quintic-linear": (5, 1, "two"),
    "sextic-linear": (6, 1, "two"),
    "quintic-nm1": (5, 4, "two"),
    "sextic-nm1": (6, 5, "two"),
    "quintic-bb": (5, 1, "bb"),
    "sextic-bb": (6, 1, "bb"),
    "quintic-cc": (5, 4, "bb"),
    "sextic-cc": (6, 5, "bb"),
}
_FIXED_C = re.compile(r"(quintic|sextic)-c(-?\d+)")
FAMILY_NAMES = tuple(_NAMED) + ("nm1-cd",)


def survey_family(name: str, *, fixed: int | None = None, degree: int | None = None) -> SurveyFamily:
    """Look up a family by name.

    ``nm1-cd`` needs ``fixed`` (the constant c) and takes ``degree`` (default 5);
    ``quintic-c4`` style names are shorthand for it.
    """
    if name in _NAMED:
        n, k, kind = _NAMED[name]
        return SurveyFamily(name, n, k, kind)
    m = _FIXED_C.fullmatch(name)
    if m:
        degree, fixed = (5 if m[1] == "quintic" else 6), int(m[2])
        name = "nm1-cd"
    if name == "nm1-cd":
        if fixed is None:
            raise ValueError("nm1-cd needs a fixed c")
        n = 5 if degree is None else degree
        if n < 3:
            raise ValueError("degree must be at least 3")
        return SurveyFamily(name, n, n - 1, "cd", fixed)
    raise ValueError(f"unknown family {name!r}")


@dataclass(frozen=True)
class Counts:
    total: int = 0
    irreducible: int = 0
    theta_generator: int = 0
    hypothesis_satisfied: int = 0
    unknown: int = 0
    engine_disagreements: int = 0
    theorem_conflicts: int = 0

    def __add__(self, other: "Counts") -> "Counts":
        return Counts(*(getattr(self, f.name) + getattr(other, f.name) for f in fields(self)))


def percent(count: int, denominator: int) -> str:
    """``100 * count / denominator`` rounded half-up to two decimals."""
    if denominator == 0:
        return "0.00"
    hundredths = (20000 * count + denominator) // (2 * denominator)
    return f"{hundredths // 100}.{hundredths % 100:02d}"


@dataclass(frozen=True)
class SurveyRow:
    family: str
    param_range: str
    counts: Counts
    irreducible_only: bool = False

    @property
    def denominator(self) -> int:
        return self.counts.irreducible if self.irreducible_only else self.counts.total

    @property
    def pct_generator(self) -> str:
        return percent(self.counts.theta_generator, self.denominator)

    @property
    def pct_hypothesis(self) -> str:
        return percent(self.counts.hypothesis_satisfied, self.denominator)

    def csv_fields(self) -> list[str]:
        c = self.counts
        return [
            self.family,
            self.param_range,
            str(c.total),
            str(c.irreducible),
            str(c.theta_generator),
            self.pct_generator,
            str(c.hypothesis_satisfied),
            self.pct_hypothesis,
        ]


def survey_one(family: SurveyFamily, params: tuple[int, ...], seed: int = 0) -> Counts:
    f = family.polynomial(params)
    if not irreducibility_certificate(f).irreducible:
        return Counts(total=1)
    verdict = certify_generator(f, seed=seed, irreducible=True)
    generator = verdict.outcome is Outcome.GENERATOR
    hypothesis = conflict = False
    if family.theorem is not None:
        check = theorem_check(family.theorem, *family.coefficients(params), irreducible=True)
        hypothesis = check.monogenic is TriState.TRUE
        if verdict.outcome is not Outcome.UNKNOWN and check.monogenic is not TriState.UNKNOWN:
            conflict = (check.monogenic is TriState.TRUE) != generator
    return Counts(
        total=1,
        irreducible=1,
        theta_generator=int(generator),
        hypothesis_satisfied=int(hypothesis),
        unknown=int(verdict.outcome is Outcome.UNKNOWN),
        engine_disagreements=int(not verdict.engines_agree),
        theorem_conflicts=int(conflict),
    )


def _survey_block(args) -> Counts:
    family, block, seed = args
    total = Counts()
    for params in block:
        total = total + survey_one(family, params, seed)
    return total


def _blocks(ranges: list[tuple[int, int]]) -> Iterator[list[tuple[int, ...]]]:
    if len(ranges) == 1:
        lo, hi = ranges[0]
        for start in range(lo, hi + 1, BLOCK_SIZE):
            yield [(b,) for b in range(start, min(start + BLOCK_SIZE, hi + 1))]
    else:
        (lo, hi), (lo2, hi2) = ranges
        for u in range(lo, hi + 1):
            yield [(u, v) for v in range(lo2, hi2 + 1)]


def format_range(ranges: list[tuple[int, int]]) -> str:
    return "x".join(f"[{lo},{hi}]" for lo, hi in ranges)


def empirical_survey(
    family: SurveyFamily,
    ranges: list[tuple[int, int]],
    seed: int = 0,
    worker_count: int = 1,
    *,
    irreducible_only: bool = False,
) -> SurveyRow:
    """Count irreducible and generator members of ``family`` over ``ranges``.

    ``ranges`` holds one inclusive ``(lo, hi)`` pair per family parameter.
    """
    if len(ranges) != family.dimension:
        raise ValueError(f"{family.name} takes {family.dimension} range(s)")
    if any(lo > hi for lo, hi in ranges):
        raise ValueError("empty range")
    jobs = [(family, block, seed) for block in _blocks(ranges)]
    if worker_count <= 1:
        parts = map(_survey_block, jobs)
        counts = sum(parts, Counts())
    else:
        with ProcessPoolExecutor(max_workers=worker_count) as pool:
            counts = sum(pool.map(_survey_block, jobs, chunksize=4), Counts())
    return SurveyRow(family.describe(), format_range(ranges), counts, irreducible_only)
