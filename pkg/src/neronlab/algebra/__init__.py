"""Exact arithmetic: finite fields, polynomials, rational functions, places."""
from .field import FqField, GF, is_prime
from .poly import Poly, poly_gcd
from .ratfunc import (
    INFINITY,
    ZERO,
    Place,
    PoleError,
    RatFunc,
    residue_at,
    substitute,
    to_local,
    valuation,
)
from .roots import (
    ExtensionCapError,
    extend_for_splitting,
    irreducible_factor_degrees,
    lift_poly,
    roots_in_field,
)
from .parse import ParseError, parse_coefficients, parse_element, parse_ratfunc

__all__ = [
    "FqField", "GF", "is_prime", "Poly", "poly_gcd", "RatFunc", "Place", "ZERO", "INFINITY",
    "PoleError", "valuation", "residue_at", "substitute", "to_local", "roots_in_field",
    "extend_for_splitting", "irreducible_factor_degrees", "lift_poly", "ExtensionCapError",
    "ParseError", "parse_ratfunc", "parse_element", "parse_coefficients",
]
