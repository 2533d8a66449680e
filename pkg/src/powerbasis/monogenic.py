"""Certifying that a root of a monic polynomial generates a power integral basis.

Since ``disc(f) = disc(K) * [O_K : Z[theta]]**2``, only primes whose square
divides ``disc(f)`` can divide the index; each such prime is settled by the
Ore polygon test and by Dedekind's criterion, and the two must agree.

The closed-form checkers cover ``x^5 + ax + b``, ``x^6 + ax + b``,
``x^5 + cx^4 + d`` and ``x^6 + cx^5 + d``: when a cofactor of the
discriminant is square-free, the only candidate primes are those listed in
each checker, and each is settled by a congruence condition.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from typing import Callable

from . import arith
from .arith import TriState
from .dedekind import _dedekind_from_factors
from .polygon import _ore_from_factors
from .polynomial import modp
from .polynomial.dense import IntPolynomial, discriminant_coeffs, divrem_monic, render, trinomial
from .polynomial.rational import irreducibility_certificate

log = logging.getLogger(__name__)


class Outcome(enum.Enum):
    GENERATOR = "Generator"
    NOT_GENERATOR = "NotGenerator"
    UNKNOWN = "Unknown"


class Method(enum.Enum):
    ORE = "Ore"
    DEDEKIND = "Dedekind"
    BOTH = "Both"


@dataclass(frozen=True)
class PrimeTestResult:
    p: int
    divides_index: bool
    method: Method = Method.BOTH
    agreement: bool = True


@dataclass(frozen=True)
class MonogenicityVerdict:
    """Result of :func:`certify_generator`.

    Reducible inputs carry ``outcome=UNKNOWN`` with no tested primes and
    ``unknown_cofactor=1``; the cofactor rule applies to irreducible inputs.
    """

    polynomial: IntPolynomial
    irreducible: bool
    discriminant: int
    tested_primes: tuple[PrimeTestResult, ...]
    outcome: Outcome
    unknown_cofactor: int = 1

    @property
    def witnesses(self) -> list[int]:
        return [r.p for r in self.tested_primes if r.divides_index]

    @property
    def engines_agree(self) -> bool:
        return all(r.agreement for r in self.tested_primes)

    def to_record(self) -> dict:
        """JSON-ready record; big integers are decimal strings."""
        return {
            "poly": render(self.polynomial),
            "irreducible": self.irreducible,
            "disc": str(self.discriminant),
            "primes": [
                {"p": r.p, "divides_index": r.divides_index, "methods_agree": r.agreement}
                for r in self.tested_primes
            ],
            "outcome": self.outcome.value,
            "unknown_cofactor": str(self.unknown_cofactor),
        }


def check_prime(f: IntPolynomial, p: int, method: Method = Method.BOTH, *, seed: int = 0) -> PrimeTestResult:
    """Run the Ore and/or Dedekind test at ``p`` on one shared factorization."""
    c = f.coeffs
    _, factors = modp.factor_coeffs_mod_p(c, p, seed)
    if method is Method.ORE:
        return PrimeTestResult(p, _ore_from_factors(c, p, factors), method)
    if method is Method.DEDEKIND:
        return PrimeTestResult(p, _dedekind_from_factors(c, p, factors), method)
    ore = _ore_from_factors(c, p, factors)
    ded = _dedekind_from_factors(c, p, factors)
    if ore != ded:
        log.error("engines disagree on %s at p=%d: ore=%s dedekind=%s", render(c), p, ore, ded)
    return PrimeTestResult(p, ore, method, ore == ded)


def certify_generator(
    f: IntPolynomial,
    effort: int = arith.DEFAULT_EFFORT,
    *,
    seed: int = 0,
    method: Method = Method.BOTH,
    irreducible: bool | None = None,
) -> MonogenicityVerdict:
    """Decide whether ``Z[theta]`` is the maximal order for a root of ``f``.

    ``irreducible`` may be passed when the caller already knows it.
    """
    if not f.is_monic() or f.degree < 2:
        raise ValueError("need a monic polynomial of degree >= 2")
    disc = discriminant_coeffs(f.coeffs)
    if disc == 0:
        raise ValueError("not squarefree as a polynomial")
    if irreducible is None:
        irreducible = irreducibility_certificate(f, disc).irreducible
    if not irreducible:
        return MonogenicityVerdict(f, False, disc, (), Outcome.UNKNOWN, 1)

    fac = arith.factorize(disc, effort, seed=seed)
    results = tuple(check_prime(f, p, method, seed=seed) for p, e in fac.factors if e >= 2)
    unknown = 1
    if not fac.complete:
        # a square-free leftover cannot contain an index prime
        if arith.cofactor_squarefree(fac.cofactor, seed=seed) is not TriState.TRUE:
            unknown = fac.cofactor
    if any(r.divides_index for r in results):
        outcome = Outcome.NOT_GENERATOR
    elif unknown > 1:
        outcome = Outcome.UNKNOWN
    else:
        outcome = Outcome.GENERATOR
    return MonogenicityVerdict(f, True, disc, results, outcome, unknown)


# -- closed-form family checkers ---------------------------------------------

class Family(enum.Enum):
    QUINTIC_LINEAR = "quintic-linear"  # x^5 + a x + b
    SEXTIC_LINEAR = "sextic-linear"  # x^6 + a x + b
    QUINTIC_NM1 = "quintic-nm1"  # x^5 + c x^4 + d
    SEXTIC_NM1 = "sextic-nm1"  # x^6 + c x^5 + d

    @property
    def degree(self) -> int:
        return 5 if self in (Family.QUINTIC_LINEAR, Family.QUINTIC_NM1) else 6

    @property
    def middle(self) -> int:
        return 1 if self in (Family.QUINTIC_LINEAR, Family.SEXTIC_LINEAR) else self.degree - 1

    def polynomial(self, u: int, v: int) -> IntPolynomial:
        return trinomial(self.degree, self.middle, u, v)


def _hypothesis_terms(family: Family, u: int, v: int) -> tuple[int, int]:
    if family is Family.QUINTIC_LINEAR:
        return 2**8 * u**5, 5**5 * v**4
    if family is Family.SEXTIC_LINEAR:
        return 6**6 * v**5, -(5**5) * u**6
    if family is Family.QUINTIC_NM1:
        return 5**5 * v, 2**8 * u**5
    return 6**6 * v, -(5**5) * u**6


def hypothesis_quantity(family: Family, coeffs: tuple[int, int]) -> int:
    """``(X + Y) / gcd(X, Y)``, the discriminant cofactor that must be square-free."""
    X, Y = _hypothesis_terms(family, *coeffs)
    if X + Y == 0:
        raise ValueError("degenerate family member")
    return (X + Y) // math.gcd(X, Y)


# Residues (mod 25) of b making 5 divide the index of x^5 + ax + b, 5 | a, 5 ∤ b.
def quintic_linear_bad_b(a: int) -> set[int]:
    return {(1 + a) % 25, (7 + 2 * a) % 25, (18 + 3 * a) % 25, (24 + 4 * a) % 25}


# (a, b) mod 9 making 3 divide the index of x^6 + ax + b (3 | a, 3 ∤ b); the
# same set governs (c, d) for x^6 + cx^5 + d.
SEXTIC_MOD9_BAD = frozenset({(0, 1), (0, 8), (3, 2), (3, 5), (6, 2), (6, 5)})

# Residues of c + d (mod 25) making 5 divide the index of x^5 + cx^4 + d.
QUINTIC_NM1_BAD_SUM = frozenset({1, 7, 18, 24})


def sextic_linear_bad_a(b: int) -> set[int]:
    """Residues (mod 25) of a making 5 divide the index of x^6 + ax + b, 5 | b."""
    return {(1 - 4 * b) % 25, (7 + 3 * b) % 25, (18 + 2 * b) % 25, (24 + 4 * b) % 25}


@dataclass(frozen=True)
class TheoremCheck:
    applies: bool
    monogenic: TriState
    failing_condition: str | None = None
    hypothesis_squarefree: TriState = field(default=TriState.UNKNOWN, compare=False)


def _prime_divisors(n: int) -> list[int]:
    return arith.factorize(n).primes() if n else []


def _quintic_linear_failure(a: int, b: int) -> str | None:
    for p in _prime_divisors(math.gcd(2 * a, 5 * b)):
        if a % p == 0 and b % p == 0:
            if b % (p * p) == 0:
                return f"p={p}: p^2 divides b"
        elif p == 2:
            if (a + b) % 4 != 1:
                return "p=2: a+b not 1 mod 4"
        elif p == 5:
            if b % 25 in quintic_linear_bad_b(a):
                return "p=5: b in {1+a, 7+2a, 18+3a, 24+4a} mod 25"
    return None


def _sextic_linear_failure(a: int, b: int) -> str | None:
    for p in _prime_divisors(math.gcd(6 * b, 5 * a)):
        if a % p == 0 and b % p == 0:
            if b % (p * p) == 0:
                return f"p={p}: p^2 divides b"
        elif p == 2:
            if (a + b) % 4 != 1:
                return "p=2: a+b not 1 mod 4"
        elif p == 3:
            if (a % 9, b % 9) in SEXTIC_MOD9_BAD:
                return "p=3: (a, b) mod 9 in the exceptional set"
        elif p == 5:
            if a % 25 in sextic_linear_bad_a(b):
                return "p=5: a in {1-4b, 7+3b, 18+2b, 24+4b} mod 25"
    return None


def _quintic_nm1_failure(c: int, d: int) -> str | None:
    if d and arith.is_squarefree(d) is TriState.FALSE:
        return "d is not square-free"
    if c % 5 == 0 and d % 5 and (c + d) % 25 in QUINTIC_NM1_BAD_SUM:
        return "p=5: c+d in {1, 7, 18, 24} mod 25"
    return None


def _sextic_nm1_failure(c: int, d: int) -> str | None:
    if d and arith.is_squarefree(d) is TriState.FALSE:
        return "d is not square-free"
    if c % 2 == 0 and d % 2 and (c + d) % 4 != 1:
        return "p=2: c+d not 1 mod 4"
    if c % 3 == 0 and d % 3 and (c % 9, d % 9) in SEXTIC_MOD9_BAD:
        return "p=3: (c, d) mod 9 in the exceptional set"
    return None


_FAILURES: dict[Family, Callable[[int, int], str | None]] = {
    Family.QUINTIC_LINEAR: _quintic_linear_failure,
    Family.SEXTIC_LINEAR: _sextic_linear_failure,
    Family.QUINTIC_NM1: _quintic_nm1_failure,
    Family.SEXTIC_NM1: _sextic_nm1_failure,
}


def theorem_check(
    family: Family,
    u: int,
    v: int,
    *,
    irreducible: bool | None = None,
    effort: int = arith.DEFAULT_EFFORT,
) -> TheoremCheck:
    """Closed-form verdict for one family member.

    A failed congruence condition is conclusive (``monogenic=FALSE``) on its
    own; a positive verdict additionally needs the square-free hypothesis.
    """
    f = family.polynomial(u, v)
    if irreducible is None:
        irreducible = irreducibility_certificate(f).irreducible
    if not irreducible:
        return TheoremCheck(False, TriState.UNKNOWN, "reducible")
    squarefree = arith.is_squarefree(hypothesis_quantity(family, (u, v)), effort)
    failure = _FAILURES[family](u, v)
    applies = squarefree is TriState.TRUE
    if failure is not None:
        return TheoremCheck(applies, TriState.FALSE, failure, squarefree)
    if applies:
        return TheoremCheck(True, TriState.TRUE, None, squarefree)
    return TheoremCheck(False, TriState.UNKNOWN, "hypothesis quantity not square-free", squarefree)


def theorem_quintic_linear(a: int, b: int, **kw) -> TheoremCheck:
    return theorem_check(Family.QUINTIC_LINEAR, a, b, **kw)


def theorem_sextic_linear(a: int, b: int, **kw) -> TheoremCheck:
    return theorem_check(Family.SEXTIC_LINEAR, a, b, **kw)


def theorem_quintic_nm1(c: int, d: int, **kw) -> TheoremCheck:
    return theorem_check(Family.QUINTIC_NM1, c, d, **kw)


def theorem_sextic_nm1(c: int, d: int, **kw) -> TheoremCheck:
    return theorem_check(Family.SEXTIC_NM1, c, d, **kw)


# -- re-deriving the congruence tables -----------------------------------------
#
# p divides the index iff some factor phi with exponent >= 2 in f mod p has
# p^2 dividing every coefficient of f mod phi (lift).  For linear phi = x - r
# this says a root of f mod p^2 lies over the multiple root r, which is what
# hensel_lift_roots enumerates; nonlinear phi use the remainder directly.

def local_index_divisible(f: IntPolynomial, p: int) -> bool:
    c = f.coeffs
    _, factors = modp.factor_coeffs_mod_p(c, p)
    repeated = [phi for phi, e in factors if e >= 2]
    if not repeated:
        return False
    lifted_roots = None
    for phi in repeated:
        if len(phi) == 2:
            if lifted_roots is None:
                lifted_roots = arith.hensel_lift_roots(c, p, 2)
            r = -phi[0] % p
            if any(x % p == r for x in lifted_roots):
                return True
        else:
            _, a0 = divrem_monic(c, phi)
            if all(x % (p * p) == 0 for x in a0):
                return True
    return False


def _roots_off_p(coeffs, p: int) -> set[int]:
    return {r for r in arith.hensel_lift_roots(coeffs, p, 2) if r % p}


def derive_quintic_linear_mod25() -> set[tuple[int, int]]:
    """(a, b) mod 25 with 5 | a, 5 ∤ b and 25 | b^5 + ab - b."""
    # a_0 of the (x+b)-development is -b^5 - ab + b: roots of -x^5 + (1-a)x
    return {(a, b) for a in range(0, 25, 5) for b in _roots_off_p([0, 1 - a, 0, 0, 0, -1], 5)}


def derive_quintic_nm1_mod25() -> set[tuple[int, int]]:
    """(c, d) mod 25 with 5 | c, 5 ∤ d and 25 | cd^4 + d - d^5."""
    return {(c, d) for c in range(0, 25, 5) for d in _roots_off_p([0, 1, 0, 0, c, -1], 5)}


def derive_sextic_linear_mod25() -> set[tuple[int, int]]:
    """(a, b) mod 25 with 5 ∤ a, 5 | b and 25 | a^6 - a^2 + b."""
    return {(a, b) for b in range(0, 25, 5) for a in _roots_off_p([b, 0, -1, 0, 0, 0, 1], 5)}


def derive_mod9_set(family: Family) -> set[tuple[int, int]]:
    """(u, v) mod 9 with 3 | u, 3 ∤ v where 3 divides the index (sextic families)."""
    if family not in (Family.SEXTIC_LINEAR, Family.SEXTIC_NM1):
        raise ValueError("mod-9 conditions exist only for the sextic families")
    return {
        (u, v)
        for u in (0, 3, 6)
        for v in range(9)
        if v % 3 and local_index_divisible(family.polynomial(u, v), 3)
    }


def derive_mod4_set(family: Family) -> set[tuple[int, int]]:
    """Residue pairs mod 4 (in the 2-adic case of each theorem) where 2 divides
    the index."""
    if family is Family.QUINTIC_LINEAR:
        pairs = [(a, b) for a in (1, 3) for b in (0, 2)]
    elif family in (Family.SEXTIC_LINEAR, Family.SEXTIC_NM1):
        pairs = [(u, v) for u in (0, 2) for v in (1, 3)]
    else:
        raise ValueError("no 2-adic condition for this family")
    return {(u, v) for u, v in pairs if local_index_divisible(family.polynomial(u, v), 2)}
