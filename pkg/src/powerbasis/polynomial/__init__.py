"""Univariate polynomials over Z and Z/mZ."""

from .dense import (
    IntPolynomial,
    discriminant,
    poly_divrem,
    render,
    resultant,
    trinomial,
    trinomial_discriminant,
)
from .modp import (
    FactorListModP,
    ModPolynomial,
    factor_mod_p,
    is_irreducible_mod_p,
    reduce_mod,
)
from .parsing import ParseError, parse_polynomial
from .rational import (
    IrreducibilityResult,
    eisenstein_prime,
    irreducibility_certificate,
    is_irreducible_over_Q,
)

__all__ = [
    "FactorListModP",
    "IntPolynomial",
    "IrreducibilityResult",
    "ModPolynomial",
    "ParseError",
    "discriminant",
    "eisenstein_prime",
    "factor_mod_p",
    "irreducibility_certificate",
    "is_irreducible_mod_p",
    "is_irreducible_over_Q",
    "parse_polynomial",
    "poly_divrem",
    "reduce_mod",
    "render",
    "resultant",
    "trinomial",
    "trinomial_discriminant",
]
