"""Dense univariate polynomials over Z.

Coefficient tuples run lowest degree first with no trailing zeros; the zero
polynomial is the empty tuple.  The low-level helpers work on plain
sequences so the hot loops in the index tests avoid object overhead;
:class:`IntPolynomial` wraps them for the public API.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

Coeffs = tuple[int, ...]


def trim(c: Sequence[int]) -> Coeffs:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def add(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def mul(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def scale(a: Sequence[int], k: int) -> Coeffs:
    return trim([k * c for c in a])


def power(a: Sequence[int], e: int) -> Coeffs:
    out: Coeffs = (1,)
    base = tuple(a)
    while e:
        if e & 1:
            out = mul(out, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return out


def derivative(a: Sequence[int]) -> Coeffs:
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def divrem_monic(f: Sequence[int], g: Sequence[int]) -> tuple[Coeffs, Coeffs]:
    """Quotient and remainder of ``f`` by monic ``g``; exact over Z."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if g[-1] != 1:
        raise ValueError("divisor must be monic")
    dg = len(g) - 1
    r = list(f)
    if len(r) - 1 < dg:
        return (), trim(r)
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            q[i - dg] = c
            base = i - dg
            for j in range(dg):
                r[base + j] -= c * g[j]
            r[i] = 0
    return trim(q), trim(r[:dg])


def pseudo_rem(f: Sequence[int], g: Sequence[int]) -> Coeffs:
    """Pseudo-remainder: ``lc(g)**(deg f - deg g + 1) * f mod g``."""
    dg = len(g) - 1
    lc = g[-1]
    r = list(f)
    delta = len(r) - 1 - dg
    if delta < 0:
        return trim(r)
    for _ in range(delta + 1):
        if len(r) - 1 < dg:
            r = [lc * c for c in r]
            continue
        c = r[-1]
        shift = len(r) - 1 - dg
        r = [lc * x for x in r]
        for j in range(dg + 1):
            r[shift + j] -= c * g[j]
        r = list(trim(r))
    return trim(r)


def exact_div_scalar(a: Sequence[int], k: int) -> Coeffs:
    out = []
    for c in a:
        q, rem = divmod(c, k)
        if rem:
            raise ArithmeticError(f"{c} not divisible by {k}")
        out.append(q)
    return trim(out)


@dataclass(frozen=True, slots=True)
class IntPolynomial:
    """Polynomial with integer coefficients, lowest degree first."""

    coeffs: Coeffs

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", trim([int(c) for c in coeffs]))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        return IntPolynomial(add(self.coeffs, _coeffs(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return IntPolynomial(sub(self.coeffs, _coeffs(other)))

    def __rsub__(self, other):
        return IntPolynomial(sub(_coeffs(other), self.coeffs))

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(scale(self.coeffs, other))
        return IntPolynomial(mul(self.coeffs, _coeffs(other)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        return IntPolynomial(power(self.coeffs, e))

    def __call__(self, x: int) -> int:
        return evaluate(self.coeffs, x)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(derivative(self.coeffs))

    def content(self) -> int:
        return content(self.coeffs)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


def _coeffs(p) -> Sequence[int]:
    if isinstance(p, IntPolynomial):
        return p.coeffs
    if isinstance(p, int):
        return trim([p])
    return trim(p)


def poly_divrem(f: IntPolynomial, g: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """``f = q*g + r`` with ``deg r < deg g``; ``g`` must be monic."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if not g.is_monic():
        raise ValueError("divisor must be monic")
    q, r = divrem_monic(f.coeffs, g.coeffs)
    return IntPolynomial(q), IntPolynomial(r)


def resultant_coeffs(a: Sequence[int], b: Sequence[int]) -> int:
    """Resultant by the subresultant algorithm (Collins/Brown, as in Cohen 3.3.7)."""
    A, B = trim(a), trim(b)
    if not A or not B:
        raise ValueError("resultant with the zero polynomial")
    ca, cb = content(A), content(B)
    A = exact_div_scalar(A, ca)
    B = exact_div_scalar(B, cb)
    # content() is nonnegative, so the unit factors stay in A and B
    t = ca ** (len(B) - 1) * cb ** (len(A) - 1)
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 == 1 and (len(B) - 1) % 2 == 1:
            s = -1
    g = h = 1
    while len(B) - 1 > 0:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        R = pseudo_rem(A, B)
        if not R:
            return 0
        A = B
        divisor = g * h**delta
        B = exact_div_scalar(R, divisor)
        g = A[-1]
        if delta == 0:
            h = h
        elif delta == 1:
            h = g
        else:
            h = _exact(g**delta, h ** (delta - 1))
    da = len(A) - 1
    if da == 0:
        hh = 1
    else:
        hh = _exact(B[-1] ** da, h ** (da - 1))
    return s * t * hh


def _exact(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact division in subresultant chain")
    return q


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant with the zero polynomial")
    return resultant_coeffs(f.coeffs, g.coeffs)


def discriminant_coeffs(f: Sequence[int]) -> int:
    n = len(f) - 1
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    if f[-1] != 1:
        raise ValueError("discriminant implemented for monic polynomials")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant_coeffs(f, derivative(f))


def discriminant(f: IntPolynomial) -> int:
    """``(-1)**(n(n-1)/2) * Res(f, f')`` for monic ``f`` of degree ``n >= 2``."""
    return discriminant_coeffs(f.coeffs)


def trinomial_discriminant(n: int, k: int, a: int, b: int) -> int:
    """Closed-form discriminant of ``x**n + a*x**k + b`` (Greenfield-Drucker)."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got n={n}, k={k}")
    d = math.gcd(n, k)
    N, K = n // d, k // d
    sign = -1 if (n * n - n) // 2 % 2 else 1
    inner = n**N * b ** (N - K) - (-1) ** N * (n - k) ** (N - K) * k**K * a**N
    return sign * b ** (k - 1) * inner**d


def trinomial(n: int, k: int, a: int, b: int) -> IntPolynomial:
    """``x**n + a*x**k + b``."""
    c = [0] * (n + 1)
    c[n] = 1
    c[k] += a
    c[0] += b
    return IntPolynomial(c)


def render(f: IntPolynomial | Sequence[int], var: str = "x") -> str:
    """Canonical text, highest degree first, e.g. ``x^5+2x+2``."""
    coeffs = f.coeffs if isinstance(f, IntPolynomial) else trim(f)
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + var + (f"^{i}" if i > 1 else "")
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out
