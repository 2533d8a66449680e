"""Density constants for square-free values and the family lower bounds.

A :class:`DensityValue` keeps its exact structure: a sum of terms
``rational * (6/pi^2)**e`` where the rational part is a finite product of
Euler factors.  Floating values come from a 50-digit evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .arith import TriState, factorize, is_squarefree

PRECISION_DIGITS = 50


@dataclass(frozen=True)
class DensityTerm:
    coefficient: Fraction
    zeta_power: int = 0  # power of 6/pi^2
    euler_factors: tuple[tuple[int, Fraction], ...] = ()

    @property
    def rational(self) -> Fraction:
        out = self.coefficient
        for _, factor in self.euler_factors:
            out *= factor
        return out

    def evaluate(self) -> mpmath.mpf:
        with mpmath.workdps(PRECISION_DIGITS):
            base = 6 / mpmath.pi**2
            r = self.rational
            return mpmath.mpf(r.numerator) / r.denominator * base**self.zeta_power

    def describe(self) -> str:
        parts = []
        if self.coefficient != 1 or not (self.zeta_power or self.euler_factors):
            parts.append(str(self.coefficient))
        if self.zeta_power == 1:
            parts.append("(6/pi^2)")
        elif self.zeta_power:
            parts.append(f"(6/pi^2)^{self.zeta_power}")
        parts.extend(f"[{f}]_{p}" for p, f in self.euler_factors)
        return "*".join(parts)


@dataclass(frozen=True)
class DensityValue:
    terms: tuple[DensityTerm, ...]

    def evaluate(self) -> mpmath.mpf:
        with mpmath.workdps(PRECISION_DIGITS):
            return mpmath.fsum(t.evaluate() for t in self.terms)

    @property
    def approx(self) -> float:
        return float(self.evaluate())

    def zeta_polynomial(self) -> dict[int, Fraction]:
        """Rational coefficient of each power of 6/pi^2."""
        out: dict[int, Fraction] = {}
        for t in self.terms:
            out[t.zeta_power] = out.get(t.zeta_power, Fraction(0)) + t.rational
        return {k: v for k, v in sorted(out.items()) if v}

    def __str__(self) -> str:
        return " + ".join(t.describe() for t in self.terms).replace("+ -", "- ")

    def __float__(self) -> float:
        return self.approx


def _primes(n: int) -> list[int]:
    return factorize(abs(n)).primes() if abs(n) > 1 else []


def _euler(primes, factor) -> tuple[tuple[int, Fraction], ...]:
    return tuple((p, factor(p)) for p in primes)


def _inv_one_minus_sq(p: int) -> Fraction:
    return Fraction(p * p, p * p - 1)


def _coprime(p: int) -> Fraction:
    return Fraction(p, p + 1)


def prachar_density(m: int, k: int) -> DensityValue:
    """Density of square-free integers congruent to ``m`` mod ``k``."""
    if k < 1:
        raise ValueError("modulus must be >= 1")
    if math.gcd(m, k) != 1:
        raise ValueError(f"gcd({m}, {k}) != 1")
    return DensityValue((DensityTerm(Fraction(1, k), 1, _euler(_primes(k), _inv_one_minus_sq)),))


def coprime_squarefree_density(k: int) -> DensityValue:
    """Density of square-free integers coprime to ``k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return DensityValue((DensityTerm(Fraction(1), 1, _euler(_primes(k), _coprime)),))


def bound_linear_family(n: int) -> DensityValue:
    """Lower bound on the density of ``b`` with ``x^n + bx + b`` monogenic."""
    if n <= 2:
        raise ValueError("need n > 2")
    return DensityValue(
        (
            DensityTerm(Fraction(1), 1),
            DensityTerm(Fraction(-1)),
            DensityTerm(Fraction(1), 1, _euler(_primes(n - 1), _inv_one_minus_sq)),
        )
    )


def _check_c(c: int) -> None:
    if c in (0, 1, -1):
        raise ValueError("c must not be 0 or +-1")
    if is_squarefree(c) is not TriState.TRUE:
        raise ValueError(f"c={c} is not square-free")


def bound_nminus1_family(n: int, c: int) -> DensityValue:
    """Lower bound on the density of ``d`` with ``x^n + cx^(n-1) + cd`` monogenic."""
    if n <= 2:
        raise ValueError("need n > 2")
    _check_c(c)
    return DensityValue(
        (
            DensityTerm(Fraction(1), 1, _euler(_primes(c), _coprime)),
            DensityTerm(Fraction(1), 1, _euler(_primes(n), _inv_one_minus_sq)),
            DensityTerm(Fraction(-1)),
        )
    )


def heuristic_linear_bound(n: int) -> DensityValue:
    """Bound for ``x^n + bx + b`` if the two square-free events were independent."""
    if n <= 2:
        raise ValueError("need n > 2")
    # (6/pi^2)^2 = 36/pi^4; see the decisions ledger on the printed constant
    return DensityValue((DensityTerm(Fraction(1), 2, _euler(_primes(n - 1), _inv_one_minus_sq)),))


def heuristic_nm1_bound(n: int, c: int) -> DensityValue:
    if n <= 2:
        raise ValueError("need n > 2")
    _check_c(c)
    factors = _euler(_primes(c), _coprime) + _euler(_primes(n), _inv_one_minus_sq)
    return DensityValue((DensityTerm(Fraction(1), 2, factors),))


def heuristic_independence_bounds(n: int, c: int | None) -> tuple[DensityValue, DensityValue]:
    if c is None:
        raise ValueError("the n-1 family bound needs c")
    return heuristic_linear_bound(n), heuristic_nm1_bound(n, c)
