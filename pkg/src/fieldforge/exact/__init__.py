"""Exact arithmetic: rationals, Q(sqrt -2), univariate polynomials, smooth splitting."""

from __future__ import annotations

from fractions import Fraction as BigRat

from .poly import (
    UniPoly,
    bareiss_det,
    compose_mod,
    poly_disc,
    resultant,
    sylvester_resultant,
)
from .quad import QuadElem
from .smooth import (
    SmoothFactorization,
    is_prime,
    perfect_power_exponent,
    primes_in_range,
    primes_up_to,
    smooth_factor,
    valuation,
)

__all__ = [
    "BigRat",
    "QuadElem",
    "SmoothFactorization",
    "UniPoly",
    "bareiss_det",
    "compose_mod",
    "is_prime",
    "perfect_power_exponent",
    "poly_disc",
    "primes_in_range",
    "primes_up_to",
    "resultant",
    "smooth_factor",
    "sylvester_resultant",
    "valuation",
]
