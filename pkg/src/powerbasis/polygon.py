"""phi-adic developments, principal phi-polygons and the Ore index test.

For a prime ``p`` and a monic lift ``phi`` of an irreducible factor of
``f mod p``, ``f = sum a_i(x) * phi(x)**i`` with ``deg a_i < deg phi``.  The
principal polygon is the negative-slope part of the lower convex hull of the
points ``(i, v_p(a_i))``; ``p`` divides the index of ``Z[theta]`` exactly when
some polygon has a lattice point with positive coordinates on or under it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import is_prime
from .polynomial.dense import IntPolynomial, add, divrem_monic, mul
from .polynomial.modp import factor_coeffs_mod_p

# v_p(0); kept out of integer arithmetic, only compared
INFINITY = math.inf


@dataclass(frozen=True)
class PhiDevelopment:
    phi: IntPolynomial
    coefficients: tuple[IntPolynomial, ...]

    def reconstruct(self) -> IntPolynomial:
        out: tuple[int, ...] = ()
        phi_power: tuple[int, ...] = (1,)
        for a in self.coefficients:
            out = add(out, mul(a.coeffs, phi_power))
            phi_power = mul(phi_power, self.phi.coeffs)
        return IntPolynomial(out)

    def valuation_points(self, p: int) -> list["ValuationPoint"]:
        return [ValuationPoint(i, poly_valuation(a.coeffs, p)) for i, a in enumerate(self.coefficients)]


@dataclass(frozen=True)
class ValuationPoint:
    abscissa: int
    ordinate: int | float  # INFINITY when the coefficient vanishes

    @property
    def finite(self) -> bool:
        return self.ordinate != INFINITY


@dataclass(frozen=True)
class PrincipalPolygon:
    """Vertices ``(i, v)`` of the negative-slope lower hull, left to right."""

    vertices: tuple[tuple[int, int], ...]

    @property
    def sides(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def slopes(self) -> list[Fraction]:
        return [Fraction(y2 - y1, x2 - x1) for (x1, y1), (x2, y2) in self.sides]

    @property
    def length(self) -> int:
        return self.vertices[-1][0] - self.vertices[0][0]

    def height_at(self, x: int) -> Fraction:
        if len(self.vertices) == 1 and x == self.vertices[0][0]:
            return Fraction(self.vertices[0][1])
        for (x1, y1), (x2, y2) in self.sides:
            if x1 <= x <= x2:
                return y1 + Fraction((y2 - y1) * (x - x1), x2 - x1)
        raise ValueError(f"abscissa {x} outside the polygon")


def poly_valuation(coeffs: Sequence[int], p: int) -> int | float:
    """min v_p over the coefficients, INFINITY for the zero polynomial."""
    best: int | float = INFINITY
    for c in coeffs:
        if c:
            v = 0
            while c % p == 0:
                c //= p
                v += 1
                if v >= best:
                    break
            if v < best:
                best = v
                if best == 0:
                    return 0
    return best


def phi_adic_coefficients(f: Sequence[int], phi: Sequence[int]) -> list[tuple[int, ...]]:
    if not phi or phi[-1] != 1:
        raise ValueError("phi must be monic")
    if len(phi) < 2:
        raise ValueError("phi must have degree >= 1")
    out = []
    rest = tuple(f)
    while rest:
        rest, r = divrem_monic(rest, phi)
        out.append(r)
    return out


def phi_adic_development(f: IntPolynomial, phi: IntPolynomial) -> PhiDevelopment:
    if phi.degree > f.degree:
        raise ValueError("deg phi exceeds deg f")
    coeffs = phi_adic_coefficients(f.coeffs, phi.coeffs)
    return PhiDevelopment(phi, tuple(IntPolynomial(a) for a in coeffs))


def lower_polygon(points: Sequence[tuple[int, int | float]]) -> PrincipalPolygon:
    """Principal polygon of ``(abscissa, ordinate)`` points; infinite ordinates
    are ignored."""
    pts = sorted((i, v) for i, v in points if v != INFINITY)
    if not pts:
        raise ValueError("all valuation points are infinite")
    if pts[0][0] != 0:
        raise ValueError("phi divides f exactly: a_0 vanishes")
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        if hull and hull[-1][0] == pt[0]:
            continue
        hull.append(pt)
    # keep the part up to the first vertex at the minimal ordinate
    low = min(v for _, v in hull)
    end = next(k for k, (_, v) in enumerate(hull) if v == low)
    return PrincipalPolygon(tuple(hull[: end + 1]))


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def principal_polygon(dev: PhiDevelopment, p: int) -> PrincipalPolygon:
    return lower_polygon([(pt.abscissa, pt.ordinate) for pt in dev.valuation_points(p)])


def phi_index(polygon: PrincipalPolygon) -> int:
    """Lattice points ``(m, n)`` with ``m, n > 0`` on or under the polygon."""
    total = 0
    for (x1, y1), (x2, y2) in polygon.sides:
        dx = x2 - x1
        for x in range(x1 + 1, x2 + 1):
            total += (y1 * dx + (y2 - y1) * (x - x1)) // dx
    return total


def ore_p_divides_index(f: IntPolynomial, p: int, *, seed: int = 0) -> bool:
    """True iff ``p`` divides the index of ``Z[theta]`` in the maximal order."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not f.is_monic() or f.degree < 2:
        raise ValueError("need a monic polynomial of degree >= 2")
    return _ore_coeffs(f.coeffs, p, seed)


def _ore_coeffs(c: Sequence[int], p: int, seed: int = 0) -> bool:
    _, factors = factor_coeffs_mod_p(c, p, seed)
    return _ore_from_factors(c, p, factors)


def _ore_from_factors(c: Sequence[int], p: int, factors) -> bool:
    for phi, e in factors:
        if e < 2:
            continue
        dev = phi_adic_coefficients(c, phi)
        points = [(i, poly_valuation(a, p)) for i, a in enumerate(dev)]
        if phi_index(lower_polygon(points)) > 0:
            return True
    return False

