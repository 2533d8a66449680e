"""Differential testing of the Ore and Dedekind index tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import arith
from .dedekind import _dedekind_from_factors
from .polygon import _ore_from_factors
from .polynomial import IntPolynomial, irreducibility_certificate, modp, render
from .polynomial.dense import discriminant_coeffs

# worked examples from the family analyses, one per case that needs a
# non-linear or repeated factor
REGRESSION_CORPUS = (
    "x^2+3",
    "x^5+2x+2",
    "x^5+2x+4",
    "x^5+5x+31",
    "x^5+4x^4+8",
    "x^5+x+3",
    "x^5+10x+6",
    "x^5+4x+2",
    "x^6+4",
    "x^6+2x+3",
    "x^6+3x+1",
    "x^6+3x+10",
    "x^6+9x+2",
    "x^6+2x^5+3",
    "x^6+3x^5+1",
    "x^6+3x^5+10",
    "x^5+5x^4+4",
    "x^5+2x^4+3",
)


@dataclass
class CrossCheckReport:
    polynomials: int = 0
    primes_tested: int = 0
    incomplete_factorizations: int = 0
    disagreements: list[tuple[str, int, bool, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def random_monic_irreducible(rng: random.Random, degree_min: int, degree_max: int, coeff_max: int) -> IntPolynomial:
    """Uniform degree, uniform lower coefficients, rejection on reducibility."""
    while True:
        n = rng.randint(degree_min, degree_max)
        f = IntPolynomial([rng.randint(-coeff_max, coeff_max) for _ in range(n)] + [1])
        if discriminant_coeffs(f.coeffs) and irreducibility_certificate(f).irreducible:
            return f


def random_eisenstein(rng: random.Random, p: int, degree_min: int, degree_max: int, coeff_max: int) -> IntPolynomial:
    n = rng.randint(degree_min, degree_max)
    span = max(1, coeff_max // p)
    a0 = p * rng.choice([k for k in range(-span, span + 1) if k % p])
    lower = [p * rng.randint(-span, span) for _ in range(1, n)]
    return IntPolynomial([a0, *lower, 1])


def compare_engines(f: IntPolynomial, primes, seed: int = 0) -> list[tuple[int, bool, bool]]:
    """``(p, ore, dedekind)`` for each prime, sharing one factorization mod p."""
    out = []
    for p in primes:
        _, factors = modp.factor_coeffs_mod_p(f.coeffs, p, seed)
        out.append((p, _ore_from_factors(f.coeffs, p, factors), _dedekind_from_factors(f.coeffs, p, factors)))
    return out


def cross_check(polys, *, seed: int = 0, effort: int = arith.DEFAULT_EFFORT) -> CrossCheckReport:
    """Compare both engines on every prime whose square divides the discriminant.

    Primes hidden in an unfactored cofactor are not tested; such cases are
    counted in ``incomplete_factorizations``.
    """
    report = CrossCheckReport()
    for f in polys:
        report.polynomials += 1
        fac = arith.factorize(discriminant_coeffs(f.coeffs), effort, seed=seed)
        if not fac.complete:
            report.incomplete_factorizations += 1
        for p, ore, ded in compare_engines(f, [p for p, e in fac.factors if e >= 2], seed):
            report.primes_tested += 1
            if ore != ded:
                report.disagreements.append((render(f), p, ore, ded))
    return report


def random_cross_check(
    count: int, degree_max: int, coeff_max: int, seed: int, *, degree_min: int = 2
) -> CrossCheckReport:
    rng = random.Random(seed)
    polys = (random_monic_irreducible(rng, degree_min, degree_max, coeff_max) for _ in range(count))
    return cross_check(polys, seed=seed)
