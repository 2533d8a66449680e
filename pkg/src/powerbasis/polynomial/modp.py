"""Polynomials over Z/mZ and factorization over prime fields.

Factorization runs square-free decomposition, distinct-degree splitting and
Cantor-Zassenhaus equal-degree splitting.  Output order is canonical (by
degree, then coefficients), so results do not depend on the random seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..arith import is_prime
from .dense import Coeffs, IntPolynomial, trim


# -- coefficient-list helpers, all results reduced into [0, p) -------------

def reduce(a: Iterable[int], p: int) -> Coeffs:
    return trim([c % p for c in a])


def add(a: Sequence[int], b: Sequence[int], p: int) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(a: Sequence[int], b: Sequence[int], p: int) -> Coeffs:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def mul(a: Sequence[int], b: Sequence[int], p: int) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_(a: Sequence[int], b: Sequence[int], p: int) -> tuple[Coeffs, Coeffs]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = len(b) - 1
    r = list(a)
    if len(r) - 1 < db:
        return (), trim(r)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            c = c * inv % p
            q[i - db] = c
            base = i - db
            for j in range(db):
                r[base + j] = (r[base + j] - c * b[j]) % p
        r[i] = 0
    return trim(q), trim([c % p for c in r[:db]])


def rem(a: Sequence[int], b: Sequence[int], p: int) -> Coeffs:
    return divmod_(a, b, p)[1]


def monic(a: Sequence[int], p: int) -> Coeffs:
    if not a:
        return ()
    inv = pow(a[-1], -1, p)
    return tuple(c * inv % p for c in a)


def gcd(a: Sequence[int], b: Sequence[int], p: int) -> Coeffs:
    """Monic gcd (zero polynomial only when both inputs are zero)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def ext_gcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[Coeffs, Coeffs, Coeffs]:
    """``(g, s, t)`` with ``s*a + t*b = g`` monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return (), (), ()
    inv = pow(r0[-1], -1, p)
    return (
        tuple(c * inv % p for c in r0),
        tuple(c * inv % p for c in s0),
        tuple(c * inv % p for c in t0),
    )


def powmod(base: Sequence[int], e: int, m: Sequence[int], p: int) -> Coeffs:
    out: Coeffs = (1,) if len(m) > 1 else ()
    b = rem(base, m, p)
    while e:
        if e & 1:
            out = rem(mul(out, b, p), m, p)
        e >>= 1
        if e:
            b = rem(mul(b, b, p), m, p)
    return out


def derivative(a: Sequence[int], p: int) -> Coeffs:
    return trim([i * a[i] % p for i in range(1, len(a))])


# -- public types -----------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ModPolynomial:
    """Polynomial over Z/mZ with residues in ``[0, modulus)``."""

    modulus: int
    coeffs: Coeffs

    def __init__(self, modulus: int, coeffs: Iterable[int] = ()):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", reduce(coeffs, modulus))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lift(self) -> IntPolynomial:
        """Canonical lift with coefficients in ``[0, modulus)``."""
        return IntPolynomial(self.coeffs)

    def symmetric_lift(self) -> IntPolynomial:
        """Lift with coefficients in ``(-m/2, m/2]``."""
        m = self.modulus
        return IntPolynomial([c - m if c > m // 2 else c for c in self.coeffs])

    def _check(self, other: "ModPolynomial"):
        if self.modulus != other.modulus:
            raise ValueError("moduli differ")

    def __add__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        return ModPolynomial(self.modulus, add(self.coeffs, other.coeffs, self.modulus))

    def __sub__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        return ModPolynomial(self.modulus, sub(self.coeffs, other.coeffs, self.modulus))

    def __mul__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        return ModPolynomial(self.modulus, mul(self.coeffs, other.coeffs, self.modulus))

    def __pow__(self, e: int) -> "ModPolynomial":
        out: Coeffs = (1,)
        for _ in range(e):
            out = mul(out, self.coeffs, self.modulus)
        return ModPolynomial(self.modulus, out)

    def __str__(self) -> str:
        from .dense import render

        return f"{render(self.coeffs)} (mod {self.modulus})"


@dataclass(frozen=True)
class FactorListModP:
    """``unit * prod(phi**e)`` with each ``phi`` monic irreducible over F_p."""

    p: int
    unit: int
    factors: tuple[tuple[ModPolynomial, int], ...]

    def expand(self) -> ModPolynomial:
        out: Coeffs = (self.unit,)
        for phi, e in self.factors:
            for _ in range(e):
                out = mul(out, phi.coeffs, self.p)
        return ModPolynomial(self.p, out)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def reduce_mod(f: IntPolynomial, m: int) -> ModPolynomial:
    if m < 2:
        raise ValueError("modulus must be >= 2")
    return ModPolynomial(m, f.coeffs)


# -- factorization ----------------------------------------------------------

def squarefree_decomposition(f: Sequence[int], p: int) -> list[tuple[Coeffs, int]]:
    """Monic ``f`` as a product of ``g_i ** e_i`` with ``g_i`` square-free."""
    out: list[tuple[Coeffs, int]] = []
    f = monic(f, p)
    c = gcd(f, derivative(f, p), p)
    w = divmod_(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        fac = divmod_(w, y, p)[0]
        if len(fac) > 1:
            out.append((fac, i))
        w = y
        c = divmod_(c, y, p)[0]
        i += 1
    if len(c) > 1:
        # c is a p-th power: take the p-th root coefficientwise (Frobenius is
        # the identity on F_p)
        root = tuple(c[j] for j in range(0, len(c), p))
        out.extend((g, e * p) for g, e in squarefree_decomposition(root, p))
    return out


def distinct_degree(f: Sequence[int], p: int) -> list[tuple[Coeffs, int]]:
    """Split square-free monic ``f`` into products of same-degree irreducibles."""
    out = []
    f = tuple(f)
    x = (0, 1)
    h = x
    d = 1
    while len(f) - 1 >= 2 * d:
        h = powmod(h, p, f, p)
        g = gcd(sub(h, x, p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_(f, g, p)[0]
            h = rem(h, f, p)
        d += 1
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def degree_pattern(f: Sequence[int], p: int) -> list[int]:
    """Degrees of the irreducible factors of square-free ``f`` mod ``p``."""
    pattern = []
    for g, d in distinct_degree(monic(f, p), p):
        pattern.extend([d] * ((len(g) - 1) // d))
    return sorted(pattern)


def equal_degree(f: Coeffs, d: int, p: int, rng: random.Random) -> list[Coeffs]:
    """Cantor-Zassenhaus: split ``f``, a product of degree-``d`` irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # trace map F_{2^d} -> F_2
            t = a
            b = a
            for _ in range(d - 1):
                t = rem(mul(t, t, p), f, p)
                b = add(b, t, p)
        else:
            b = sub(powmod(a, (p**d - 1) // 2, f, p), (1,), p)
        g = gcd(b, f, p)
        if 1 < len(g) < len(f):
            h = divmod_(f, g, p)[0]
            return equal_degree(g, d, p, rng) + equal_degree(h, d, p, rng)


def factor_coeffs_mod_p(f: Sequence[int], p: int, seed: int = 0) -> tuple[int, list[tuple[Coeffs, int]]]:
    """Leading unit and sorted ``(monic irreducible, exponent)`` pairs."""
    f = reduce(f, p)
    if not f:
        raise ValueError("polynomial vanishes mod p")
    unit = f[-1]
    rng = random.Random(seed)
    exps: dict[Coeffs, int] = {}
    for g, e in squarefree_decomposition(f, p):
        for block, d in distinct_degree(g, p):
            for phi in equal_degree(block, d, p, rng):
                exps[phi] = exps.get(phi, 0) + e
    factors = sorted(exps.items(), key=lambda item: (len(item[0]), item[0][::-1]))
    return unit, factors


def factor_mod_p(f: ModPolynomial | IntPolynomial, p: int | None = None, *, seed: int = 0) -> FactorListModP:
    """Complete factorization of ``f`` over F_p."""
    if isinstance(f, ModPolynomial):
        if p is None:
            p = f.modulus
        elif p != f.modulus:
            raise ValueError("p does not match the polynomial's modulus")
    if p is None or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    unit, factors = factor_coeffs_mod_p(f.coeffs, p, seed)
    return FactorListModP(
        p=p,
        unit=unit,
        factors=tuple((ModPolynomial(p, phi), e) for phi, e in factors),
    )


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin-style test: ``f | x^(p^n) - x`` and no smaller-field gcd."""
    f = monic(reduce(f, p), p)
    n = len(f) - 1
    if n < 1:
        return False
    x = rem((0, 1), f, p)
    h = x
    powers = [x]
    for _ in range(n):
        h = powmod(h, p, f, p)
        powers.append(h)
    if sub(powers[n], x, p):
        return False
    for q in _prime_divisors(n):
        if len(gcd(sub(powers[n // q], x, p), f, p)) > 1:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
