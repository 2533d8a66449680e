"""Irreducibility of monic integer polynomials over Q.

Fast paths first (zero constant term, Eisenstein, rational roots), then the
Zassenhaus method: factor modulo a prime not dividing the discriminant,
Hensel-lift past the Mignotte bound and try subset products as true
divisors.  Factor-degree patterns modulo several primes are intersected
while the prime is being chosen; an empty intersection proves
irreducibility without lifting.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .. import arith
from . import modp
from .dense import (
    Coeffs,
    IntPolynomial,
    content,
    derivative,
    discriminant_coeffs,
    divrem_monic,
    evaluate,
    exact_div_scalar,
    mul,
    pseudo_rem,
    sub,
    trim,
)

ZASSENHAUS_PRIMES = 25


@dataclass(frozen=True)
class IrreducibilityResult:
    irreducible: bool
    reason: str
    factor: IntPolynomial | None = None
    cofactor: IntPolynomial | None = None


def _eisenstein_prime(f: Sequence[int]) -> int | None:
    g = content(f[:-1])
    if g < 2:
        return None
    fac = arith.factorize(g)
    for p in fac.primes():
        if f[0] % (p * p):
            return p
    return None


def eisenstein_prime(f: IntPolynomial) -> int | None:
    """A prime at which monic ``f`` is Eisenstein, if any."""
    return _eisenstein_prime(f.coeffs)


def _rational_root(f: Sequence[int]) -> int | None:
    a0 = f[0]
    if a0 == 0:
        return 0
    fac = arith.factorize(a0, effort=20_000)
    if not fac.complete:
        return None
    for d in arith.divisors(fac):
        for r in (d, -d):
            if evaluate(f, r) == 0:
                return r
    return None


def _primitive_gcd(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    """Primitive gcd over Z[x] via pseudo-remainders (small degrees only)."""
    a, b = trim(a), trim(b)
    while b:
        r = pseudo_rem(a, b)
        a = b
        b = exact_div_scalar(r, content(r)) if r else ()
    a = exact_div_scalar(a, content(a))
    return a if a[-1] > 0 else tuple(-c for c in a)


def _mignotte_bound(f: Sequence[int]) -> int:
    n = len(f) - 1
    norm = math.isqrt(sum(c * c for c in f)) + 1
    return math.comb(n, n // 2) * norm


def _symmetric(c: Sequence[int], m: int) -> Coeffs:
    half = m // 2
    return trim([x % m - m if x % m > half else x % m for x in c])


def hensel_lift_pair(F: Sequence[int], g: Coeffs, h: Coeffs, p: int, k: int) -> tuple[Coeffs, Coeffs]:
    """Lift ``F = g*h (mod p)`` to ``mod p**k``; ``g`` and ``h`` monic, coprime.

    Linear lifting, one power of ``p`` per step.
    """
    one, s, t = modp.ext_gcd(g, h, p)
    if one != (1,):
        raise ValueError("factors not coprime mod p")
    G, H = list(g), list(h)
    pj = p
    for _ in range(k - 1):
        err = sub(F, mul(G, H))
        e = trim([(c // pj) % p for c in err])
        if any(c % pj for c in err):
            raise ArithmeticError("Hensel invariant broken")
        # t*e = q*g + dg ; dh = s*e + q*h   (mod p)
        q, dg = modp.divmod_(modp.mul(t, e, p), g, p)
        dh = modp.add(modp.mul(s, e, p), modp.mul(q, h, p), p)
        G = list(_pad_add(G, dg, pj))
        H = list(_pad_add(H, dh, pj))
        pj *= p
    mod = pj
    return tuple(c % mod for c in G), tuple(c % mod for c in H)


def _pad_add(a: Sequence[int], b: Sequence[int], scale: int) -> Coeffs:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] += scale * c
    return tuple(out)


def hensel_lift_factors(f: Sequence[int], factors: list[Coeffs], p: int, k: int) -> list[Coeffs]:
    """Lift a full factorization of square-free monic ``f`` mod ``p`` to ``p**k``."""
    lifted = []
    rest = tuple(f)
    mod = p**k
    remaining = list(factors)
    while len(remaining) > 1:
        g = remaining.pop(0)
        h: Coeffs = (1,)
        for other in remaining:
            h = modp.mul(h, other, p)
        G, H = hensel_lift_pair(rest, g, h, p, k)
        lifted.append(G)
        rest = tuple(c % mod for c in H)
    lifted.append(tuple(c % mod for c in rest))
    return lifted


def _subset_sums(pattern: list[int]) -> set[int]:
    sums = {0}
    for d in pattern:
        sums |= {s + d for s in sums}
    return sums


def irreducibility_certificate(f: IntPolynomial, disc: int | None = None) -> IrreducibilityResult:
    """Decide irreducibility of monic ``f``; reducible answers carry a witness
    factorization ``f = factor * cofactor``."""
    c = f.coeffs
    n = len(c) - 1
    if n < 1:
        raise ValueError("irreducibility of a constant is undefined")
    if c[-1] != 1:
        raise ValueError("polynomial must be monic")
    if n == 1:
        return IrreducibilityResult(True, "linear")

    def split(g: Coeffs, reason: str) -> IrreducibilityResult:
        q, r = divrem_monic(c, g)
        if r:
            raise ArithmeticError("witness does not divide")
        return IrreducibilityResult(False, reason, IntPolynomial(g), IntPolynomial(q))

    if c[0] == 0:
        return split((0, 1), "zero constant term")
    p = _eisenstein_prime(c)
    if p is not None:
        return IrreducibilityResult(True, f"Eisenstein at {p}")
    root = _rational_root(c)
    if root is not None:
        return split((-root, 1), "rational root")
    if n <= 3:
        return IrreducibilityResult(True, "no rational root, degree <= 3")

    if disc is None:
        disc = discriminant_coeffs(c)
    if disc == 0:
        g = _primitive_gcd(c, derivative(c))
        return split(g, "repeated factor")

    possible = set(range(1, n))
    best: tuple[int, int] | None = None  # (number of factors, prime)
    tried = 0
    for q in arith.SMALL_PRIMES:
        if tried == ZASSENHAUS_PRIMES:
            break
        if disc % q == 0:
            continue
        tried += 1
        pattern = modp.degree_pattern(c, q)
        possible &= _subset_sums(pattern)
        if not possible:
            return IrreducibilityResult(True, "factor degree patterns incompatible")
        if best is None or len(pattern) < best[0]:
            best = (len(pattern), q)
        if len(pattern) == 1:
            return IrreducibilityResult(True, f"irreducible mod {q}")
    assert best is not None
    return _zassenhaus(c, best[1], possible, split)


def _zassenhaus(c: Coeffs, p: int, possible: set[int], split) -> IrreducibilityResult:
    n = len(c) - 1
    _, pairs = modp.factor_coeffs_mod_p(c, p)
    factors = [phi for phi, _ in pairs]
    bound = 2 * _mignotte_bound(c) + 1
    k = 1
    while p**k <= bound:
        k += 1
    mod = p**k
    lifted = hensel_lift_factors(c, factors, p, k)
    r = len(lifted)
    for size in range(1, r // 2 + 1):
        for subset in itertools.combinations(range(r), size):
            deg = sum(len(lifted[i]) - 1 for i in subset)
            if deg not in possible and n - deg not in possible:
                continue
            g: Coeffs = (1,)
            for i in subset:
                g = tuple(x % mod for x in mul(g, lifted[i]))
            g = _symmetric(g, mod)
            _, rem = divrem_monic(c, g)
            if not rem:
                return split(g, f"Zassenhaus recombination mod {p}^{k}")
    return IrreducibilityResult(True, f"Zassenhaus: no recombination mod {p}^{k}")


def is_irreducible_over_Q(f: IntPolynomial) -> bool:
    return irreducibility_certificate(f).irreducible
