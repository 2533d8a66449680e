import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from powerbasis.dedekind import dedekind_p_divides_index, dedekind_remainder
from powerbasis.polygon import (
    INFINITY,
    PrincipalPolygon,
    lower_polygon,
    ore_p_divides_index,
    phi_adic_development,
    phi_index,
    poly_valuation,
    principal_polygon,
)
from powerbasis.polynomial import IntPolynomial, parse_polynomial
from powerbasis.polynomial.modp import factor_coeffs_mod_p
from powerbasis.xcheck import random_eisenstein, random_monic_irreducible

from oracles import brute_phi_index

X, Y = sympy.symbols("x y")


def random_points(rng):
    length = rng.randint(1, 10)
    vals = [rng.randint(0, 20)] + [rng.choice([INFINITY] + list(range(21))) for _ in range(length)]
    return list(enumerate(vals))


def brute_p_divides_index(f: IntPolynomial, p: int) -> bool:
    """p divides the index iff some g(theta)/p with 0 <= g_i < p, g != 0, is integral.

    Integrality is read off the characteristic polynomial Res_y(f(y), x - g(y)/p).
    """
    fy = sum(c * Y**i for i, c in enumerate(f.coeffs))
    for g in itertools.product(range(p), repeat=f.degree):
        if any(g):
            h = sum(sympy.Rational(gi, p) * Y**i for i, gi in enumerate(g))
            charpoly = sympy.Poly(sympy.resultant(fy, X - h, Y), X)
            if all(c.is_integer for c in charpoly.all_coeffs()):
                return True
    return False


def test_development_example():
    f = parse_polynomial("x^6+2x+3")
    phi = parse_polynomial("x^2+x+1")
    dev = phi_adic_development(f, phi)
    assert dev.reconstruct() == f
    assert all(a.degree < 2 for a in dev.coefficients)


@given(
    st.lists(st.integers(-30, 30), min_size=2, max_size=9).map(lambda c: IntPolynomial(c + [1])),
    st.lists(st.integers(-5, 5), min_size=0, max_size=3).map(lambda c: IntPolynomial(c + [1])),
)
def test_development_reconstructs(f, phi):
    if phi.degree < 1 or phi.degree > f.degree:
        return
    dev = phi_adic_development(f, phi)
    assert dev.reconstruct() == f
    assert all(a.degree < phi.degree for a in dev.coefficients)


def test_polygon_examples():
    # Eisenstein: one side from (0, 1) to (n, 0)
    poly = lower_polygon([(0, 1), (1, 3), (2, INFINITY), (5, 0)])
    assert poly.vertices == ((0, 1), (5, 0))
    assert phi_index(poly) == 0
    poly = lower_polygon([(0, 2), (1, 1), (2, 0)])
    assert poly.vertices == ((0, 2), (2, 0))
    assert phi_index(poly) == 1
    poly = lower_polygon([(0, 4), (1, 1), (3, 0)])
    assert poly.vertices == ((0, 4), (1, 1), (3, 0))
    assert poly.slopes() == [-3, Fraction(-1, 2)]
    assert phi_index(poly) == 1


def test_polygon_errors():
    with pytest.raises(ValueError):
        lower_polygon([(0, INFINITY), (1, INFINITY)])
    with pytest.raises(ValueError):
        lower_polygon([(0, INFINITY), (1, 0)])


def test_poly_valuation():
    assert poly_valuation((), 5) == INFINITY
    assert poly_valuation((25, 50, 0), 5) == 2
    assert poly_valuation((3, 25), 5) == 0


def test_phi_index_matches_brute_force_seeded():
    rng = random.Random(2024)
    for _ in range(1000):
        points = random_points(rng)
        assert phi_index(lower_polygon(points)) == brute_phi_index(points)


@settings(max_examples=200)
@given(st.lists(st.one_of(st.integers(0, 20), st.just(INFINITY)), min_size=1, max_size=10), st.integers(0, 20))
def test_phi_index_matches_brute_force(rest, a0):
    points = list(enumerate([a0, *rest]))
    poly = lower_polygon(points)
    assert phi_index(poly) == brute_phi_index(points)
    slopes = poly.slopes()
    assert all(s < 0 for s in slopes)
    assert slopes == sorted(slopes)
    # every point lies on or above the polygon within its span
    for i, v in points:
        if v != INFINITY and i <= poly.vertices[-1][0]:
            assert v >= poly.height_at(i)


# -- index divisibility -----------------------------------------------------

@pytest.mark.parametrize(
    "text,p,divides",
    [
        ("x^2+3", 2, True),
        ("x^5+2", 2, False),
        ("x^5+2x+4", 2, True),
        ("x^5+5x+31", 5, True),
        ("x^5+4x^4+8", 2, True),
        ("x^5+2x+2", 2, False),
        ("x^6+2x^5+3", 2, False),
    ],
)
def test_both_engines_examples(text, p, divides):
    f = parse_polynomial(text)
    assert ore_p_divides_index(f, p) is divides
    assert dedekind_p_divides_index(f, p) is divides
    assert dedekind_p_divides_index(f, p, literal_gcd=True) is divides
    assert dedekind_p_divides_index(f, p, symmetric_lifts=True) is divides
    assert brute_p_divides_index(f, p) is divides


def test_engines_reject_bad_input():
    with pytest.raises(ValueError):
        ore_p_divides_index(parse_polynomial("x^2+3"), 4)
    with pytest.raises(ValueError):
        dedekind_p_divides_index(parse_polynomial("2x^2+3"), 2)


def test_dedekind_remainder_requires_matching_lifts():
    with pytest.raises(ArithmeticError):
        dedekind_remainder((3, 0, 1), [((0, 1), 2)], 2)


def test_engines_match_brute_integrality_oracle():
    rng = random.Random(11)
    for _ in range(60):
        f = random_monic_irreducible(rng, 2, 4, 12)
        disc = int(sympy.discriminant(sympy.Poly(list(reversed(f.coeffs)), X)))
        for p in sympy.primefactors(disc):
            if disc % (p * p) or p**f.degree > 256:
                continue
            expected = brute_p_divides_index(f, p)
            assert ore_p_divides_index(f, p) is expected, (f, p)
            assert dedekind_p_divides_index(f, p) is expected, (f, p)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5, 7]))
def test_eisenstein_never_divides_index(seed, p):
    f = random_eisenstein(random.Random(seed), p, 2, 8, 50)
    assert not ore_p_divides_index(f, p)
    assert not dedekind_p_divides_index(f, p)
    _, factors = factor_coeffs_mod_p(f.coeffs, p)
    dev = phi_adic_development(f, IntPolynomial(factors[0][0]))
    assert principal_polygon(dev, p).slopes() == [Fraction(-1, f.degree)]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_dedekind_lift_independent(seed):
    rng = random.Random(seed)
    f = random_monic_irreducible(rng, 2, 7, 40)
    for p in (2, 3, 5, 7):
        verdicts = {
            dedekind_p_divides_index(f, p),
            dedekind_p_divides_index(f, p, symmetric_lifts=True),
            dedekind_p_divides_index(f, p, literal_gcd=True),
            dedekind_p_divides_index(f, p, seed=seed),
            ore_p_divides_index(f, p),
        }
        assert len(verdicts) == 1


def test_principal_polygon_type():
    dev = phi_adic_development(parse_polynomial("x^2+3"), parse_polynomial("x+1"))
    poly = principal_polygon(dev, 2)
    assert isinstance(poly, PrincipalPolygon)
    assert phi_index(poly) == 1
