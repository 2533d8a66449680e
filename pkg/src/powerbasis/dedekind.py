"""Dedekind's index criterion.

With ``f = prod phi_i**e_i (mod p)`` for monic lifts ``phi_i`` and
``d = (f - prod phi_i**e_i) / p``, the prime ``p`` divides the index of
``Z[theta]`` iff ``gcd(phi_i**(e_i - 1), d) != 1`` in F_p[x] for some ``i``.
Because each ``phi_i`` is irreducible this is the same as ``phi_i | d`` for
some ``i`` with ``e_i >= 2``; both forms are available.
"""

from __future__ import annotations

from typing import Sequence

from .arith import is_prime
from .polynomial import modp
from .polynomial.dense import IntPolynomial, exact_div_scalar, mul, power, sub


def dedekind_remainder(c: Sequence[int], factors, p: int) -> tuple[int, ...]:
    """``(f - prod phi**e) / p`` over Z, reduced mod ``p``."""
    prod: tuple[int, ...] = (1,)
    for phi, e in factors:
        prod = mul(prod, power(phi, e))
    diff = sub(c, prod)
    try:
        d = exact_div_scalar(diff, p)
    except ArithmeticError as exc:
        raise ArithmeticError("lifts do not match f mod p") from exc
    return modp.reduce(d, p)


def _dedekind_from_factors(c: Sequence[int], p: int, factors, literal_gcd: bool = False) -> bool:
    d = dedekind_remainder(c, factors, p)
    for phi, e in factors:
        if e < 2:
            continue
        phi_bar = modp.reduce(phi, p)
        if literal_gcd:
            g = modp.gcd(_power_mod(phi_bar, e - 1, p), d, p)
            if g != (1,):
                return True
        elif not modp.rem(d, phi_bar, p):
            return True
    return False


def _power_mod(a: Sequence[int], e: int, p: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(e):
        out = modp.mul(out, a, p)
    return out


def _symmetric_lift(phi: Sequence[int], p: int) -> tuple[int, ...]:
    return tuple(c - p if c > p // 2 else c for c in phi)


def dedekind_p_divides_index(
    f: IntPolynomial,
    p: int,
    *,
    seed: int = 0,
    literal_gcd: bool = False,
    symmetric_lifts: bool = False,
) -> bool:
    """True iff ``p`` divides the index of ``Z[theta]``; ``f`` monic irreducible.

    ``literal_gcd`` switches to the gcd form of the criterion and
    ``symmetric_lifts`` lifts factors into ``(-p/2, p/2]`` instead of
    ``[0, p)``; neither changes the verdict.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not f.is_monic():
        raise ValueError("polynomial must be monic")
    _, factors = modp.factor_coeffs_mod_p(f.coeffs, p, seed)
    if symmetric_lifts:
        factors = [(_symmetric_lift(phi, p), e) for phi, e in factors]
    return _dedekind_from_factors(f.coeffs, p, factors, literal_gcd)
