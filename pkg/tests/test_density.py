import math
import random
from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from powerbasis.density import (
    DensityTerm,
    DensityValue,
    bound_linear_family,
    bound_nminus1_family,
    coprime_squarefree_density,
    heuristic_independence_bounds,
    heuristic_linear_bound,
    heuristic_nm1_bound,
    prachar_density,
)

PI2 = math.pi**2
PI4 = math.pi**4


def test_prachar_examples():
    assert prachar_density(1, 1).approx == pytest.approx(6 / PI2, abs=1e-12)
    assert prachar_density(1, 4).approx == pytest.approx(2 / PI2, abs=1e-12)
    with pytest.raises(ValueError):
        prachar_density(2, 4)
    with pytest.raises(ValueError):
        prachar_density(1, 0)


def test_coprime_examples():
    assert coprime_squarefree_density(1).approx == pytest.approx(6 / PI2, abs=1e-12)
    assert coprime_squarefree_density(2).approx == pytest.approx(4 / PI2, abs=1e-12)
    assert coprime_squarefree_density(6).approx == pytest.approx(3 / PI2, abs=1e-12)


def test_linear_bound_examples():
    assert bound_linear_family(5).approx == pytest.approx(14 / PI2 - 1, abs=1e-12)
    assert bound_linear_family(7).approx == pytest.approx(15 / PI2 - 1, abs=1e-12)
    assert bound_linear_family(5).zeta_polynomial() == {0: -1, 1: Fraction(7, 3)}
    with pytest.raises(ValueError):
        bound_linear_family(2)


def test_nm1_bound_examples():
    assert bound_nminus1_family(5, 2).approx == pytest.approx(41 / (4 * PI2) - 1, abs=1e-12)
    for c in (0, 1, -1, 4, 12):
        with pytest.raises(ValueError):
            bound_nminus1_family(5, c)


def test_heuristic_examples():
    b1, b2 = heuristic_independence_bounds(5, 2)
    assert b2.approx == pytest.approx(25 / PI4, abs=1e-12)
    assert b1.approx == pytest.approx((36 / PI4) * 4 / 3, abs=1e-12)
    with pytest.raises(ValueError):
        heuristic_independence_bounds(5, None)


def test_linear_bound_uniform():
    for n in range(3, 101):
        assert bound_linear_family(n).approx > 0.2158


def test_heuristic_b1_range():
    for n in range(3, 101):
        assert 27 / PI4 <= heuristic_linear_bound(n).approx <= 6 / PI2


def test_heuristic_b2_upper_bound():
    rng = random.Random(7)
    pool = [k for k in range(-500, 501) if abs(k) > 1 and max(sympy.factorint(abs(k)).values()) == 1]
    for _ in range(100):
        n, c = rng.randint(3, 100), rng.choice(pool)
        assert heuristic_nm1_bound(n, c).approx <= 72 / PI4


def test_nm1_thresholds():
    # one prime factor: infimum over n reached at c = 2 with n prime and large
    assert bound_nminus1_family(97, 2).approx == pytest.approx(0.013, abs=1e-3)
    assert bound_nminus1_family(97, 35).approx == pytest.approx(0.051, abs=1e-3)
    for n in range(3, 101):
        for c in (2, 3, 5, 7, 97):
            assert bound_nminus1_family(n, c).approx > 0.013
        for c in (35, 55, 77, 143):
            assert bound_nminus1_family(n, c).approx > 0.051


def test_approx_matches_high_precision():
    value = bound_nminus1_family(30, 385)
    with mpmath.workdps(60):
        exact = (6 / mpmath.pi**2) * (
            mpmath.mpf(5) / 6 * mpmath.mpf(7) / 8 * mpmath.mpf(11) / 12
            + mpmath.mpf(4) / 3 * mpmath.mpf(9) / 8 * mpmath.mpf(25) / 24
        ) - 1
    assert abs(value.approx - float(exact)) < 1e-12
    assert abs(value.evaluate() - exact) < mpmath.mpf(10) ** -45


@given(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13]), min_size=1, max_size=6, unique=True), st.randoms())
def test_euler_factor_order_irrelevant(primes, rnd):
    factors = [(p, Fraction(p * p, p * p - 1)) for p in primes]
    shuffled = factors[:]
    rnd.shuffle(shuffled)
    a = DensityValue((DensityTerm(Fraction(1), 1, tuple(factors)),))
    b = DensityValue((DensityTerm(Fraction(1), 1, tuple(shuffled)),))
    assert abs(a.approx - b.approx) < 1e-12


def test_sieve_density_sanity():
    # square-free integers congruent to 1 mod 4 below 2e5
    limit = 200000
    count = sum(1 for n in range(1, limit, 4) if all(n % (d * d) for d in range(3, math.isqrt(n) + 1, 2)))
    assert count / limit == pytest.approx(prachar_density(1, 4).approx, abs=2e-3)


def test_str_shows_structure():
    assert str(bound_nminus1_family(5, 2)) == "(6/pi^2)*[2/3]_2 + (6/pi^2)*[25/24]_5 - 1"
