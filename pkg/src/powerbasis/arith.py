"""Integer arithmetic: valuations, primality, factorization, square-free tests.

Integers are plain Python ``int`` objects (arbitrary precision).  Everything
here is a pure function of its arguments; randomized routines take an
explicit ``seed``.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from typing import Iterable

TRIAL_BOUND = 100_000
DEFAULT_EFFORT = 200_000
MR_ROUNDS = 40

# The first 13 primes are a deterministic Miller-Rabin witness set below this.
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# trial division checks the cofactor for primality once it passes this prime
_EARLY_PRIME_CHECK = 1000


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, v in enumerate(flags) if v]


SMALL_PRIMES: tuple[int, ...] = tuple(_sieve(TRIAL_BOUND))


class TriState(enum.Enum):
    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"

    @classmethod
    def of(cls, value: bool) -> "TriState":
        return cls.TRUE if value else cls.FALSE


@dataclass(frozen=True)
class Factorization:
    """``unit * cofactor * prod(p**e)`` reproduces the factored integer.

    ``cofactor`` is 1 when ``complete``; otherwise it is the product of the
    composite pieces Pollard rho could not split within the effort budget.
    """

    unit: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1
    complete: bool = True

    def value(self) -> int:
        out = self.unit * self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]


def valuation(n: int, p: int) -> int:
    """Largest ``e`` with ``p**e`` dividing ``n``."""
    if n == 0:
        raise ValueError("valuation of zero undefined")
    if p < 2:
        raise ValueError(f"invalid prime {p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _miller_rabin(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, *, seed: int = 0) -> bool:
    """Miller-Rabin, deterministic below 3.3e24, seeded random rounds above."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_LIMIT:
        return all(_miller_rabin(n, a, d, s) for a in _MR_WITNESSES)
    rng = random.Random(seed)
    return all(_miller_rabin(n, rng.randrange(2, n - 1), d, s) for _ in range(MR_ROUNDS))


def integer_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << -(-n.bit_length() // k)  # overestimate
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def perfect_power(n: int) -> tuple[int, int] | None:
    """Return ``(r, k)`` with ``r**k == n`` and ``k >= 2`` maximal, or None."""
    if n < 4:
        return None
    best = None
    for k in range(2, n.bit_length() + 1):
        r = integer_root(n, k)
        if r < 2:
            break
        if r**k == n:
            best = (r, k)
    return best


def pollard_brent(n: int, budget: int, rng: random.Random) -> tuple[int | None, int]:
    """Find a nontrivial factor of composite odd ``n``.

    Returns ``(factor or None, iterations spent)``.
    """
    spent = 0
    m = 128
    while spent < budget:
        y, c = rng.randrange(1, n), rng.randrange(1, n)
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            spent += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g, spent
    return None, spent


def _factor_parts(
    n: int, effort: int, seed: int, trial_bound: int
) -> tuple[int, dict[int, int], list[int]]:
    """Shared core: unit, prime exponents, unsplit composite pieces."""
    if n == 0:
        raise ValueError("cannot factor zero")
    unit = -1 if n < 0 else 1
    m = abs(n)
    found: dict[int, int] = {}
    exhausted = True
    for p in SMALL_PRIMES:
        if p >= trial_bound:
            break
        if p * p > m:
            exhausted = False
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
        if p == _EARLY_PRIME_CHECK and m > 1 and is_prime(m, seed=seed):
            exhausted = False
            break
    if m == 1:
        return unit, found, []
    if not exhausted or m < trial_bound * trial_bound:
        found[m] = found.get(m, 0) + 1
        return unit, found, []

    rng = random.Random(seed)
    budget = effort
    pieces: list[int] = []
    stack = [(m, 1)]
    while stack:
        c, mult = stack.pop()
        if is_prime(c, seed=seed):
            found[c] = found.get(c, 0) + mult
            continue
        pw = perfect_power(c)
        if pw is not None:
            stack.append((pw[0], mult * pw[1]))
            continue
        d, spent = pollard_brent(c, budget, rng) if budget > 0 else (None, 0)
        budget -= spent
        if d is None:
            pieces.extend([c] * mult)
            continue
        stack.append((d, mult))
        stack.append((c // d, mult))

    # pieces may still carry primes found elsewhere
    leftover = []
    for c in pieces:
        for p in list(found):
            while c % p == 0:
                c //= p
                found[p] += 1
        if c > 1 and is_prime(c, seed=seed):
            found[c] = found.get(c, 0) + 1
        elif c > 1:
            leftover.append(c)
    return unit, found, leftover


def factorize(
    n: int,
    effort: int = DEFAULT_EFFORT,
    *,
    seed: int = 0,
    trial_bound: int = TRIAL_BOUND,
) -> Factorization:
    """Trial division below ``trial_bound``, then Brent's rho for at most
    ``effort`` iterations.  An exhausted budget leaves a composite cofactor."""
    unit, found, pieces = _factor_parts(n, effort, seed, trial_bound)
    cofactor = math.prod(pieces)
    return Factorization(
        unit=unit,
        factors=tuple(sorted(found.items())),
        cofactor=cofactor,
        complete=cofactor == 1,
    )


def is_squarefree(
    n: int,
    effort: int = DEFAULT_EFFORT,
    *,
    seed: int = 0,
    trial_bound: int = TRIAL_BOUND,
) -> TriState:
    if n == 0:
        raise ValueError("square-freeness of zero undefined")
    _, found, pieces = _factor_parts(n, effort, seed, trial_bound)
    if any(e > 1 for e in found.values()):
        return TriState.FALSE
    return _pieces_squarefree(pieces, trial_bound, seed)


def _pieces_squarefree(pieces: list[int], trial_bound: int, seed: int) -> TriState:
    # every piece is composite with all prime factors >= trial_bound
    result = TriState.TRUE
    for i, c in enumerate(pieces):
        if any(math.gcd(c, other) > 1 for other in pieces[i + 1 :]):
            return TriState.FALSE
        if perfect_power(c) is not None:
            return TriState.FALSE
        if c >= trial_bound**3:
            result = TriState.UNKNOWN
    return result


def cofactor_squarefree(
    cofactor: int, *, seed: int = 0, trial_bound: int = TRIAL_BOUND
) -> TriState:
    """Square-freeness of an unsplit cofactor left behind by :func:`factorize`."""
    if cofactor == 1:
        return TriState.TRUE
    return _pieces_squarefree([cofactor], trial_bound, seed)


def divisors(fac: Factorization) -> list[int]:
    """Positive divisors from a complete factorization."""
    if not fac.complete:
        raise ValueError("divisors need a complete factorization")
    out = [1]
    for p, e in fac.factors:
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def _poly_eval_mod(coeffs: Iterable[int], x: int, m: int) -> int:
    acc = 0
    for c in reversed(list(coeffs)):
        acc = (acc * x + c) % m
    return acc


def hensel_lift_roots(f, p: int, k: int) -> set[int]:
    """All roots of ``f`` modulo ``p**k``.

    Simple roots lift uniquely by a Newton step; roots where the derivative
    vanishes mod ``p`` are branched exhaustively over the next digit.
    ``f`` is an IntPolynomial or a coefficient sequence (lowest degree first).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    coeffs = list(getattr(f, "coeffs", f))
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    roots = {r for r in range(p) if _poly_eval_mod(coeffs, r, p) == 0}
    modulus = p
    for _ in range(k - 1):
        nxt = modulus * p
        lifted = set()
        for r in roots:
            d = _poly_eval_mod(deriv, r, p)
            if d:
                # r' = r - f(r)/f'(r), exact mod p^(j+1)
                fr = _poly_eval_mod(coeffs, r, nxt)
                t = (-(fr // modulus) * pow(d, -1, p)) % p
                lifted.add(r + t * modulus)
            else:
                for t in range(p):
                    cand = r + t * modulus
                    if _poly_eval_mod(coeffs, cand, nxt) == 0:
                        lifted.add(cand)
        roots = lifted
        modulus = nxt
    return roots
