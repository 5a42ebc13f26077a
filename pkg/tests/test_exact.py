from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fieldforge.exact import (
    QuadElem,
    UniPoly,
    bareiss_det,
    compose_mod,
    is_prime,
    perfect_power_exponent,
    poly_disc,
    primes_in_range,
    primes_up_to,
    resultant,
    smooth_factor,
    sylvester_resultant,
    valuation,
)
from fieldforge.exact.quad import format_s_unit
from fieldforge.ratexpr import RatExprError, format_rat, parse_rat

X = UniPoly.x()

small_ints = st.integers(min_value=-30, max_value=30)
polys = st.lists(small_ints, min_size=2, max_size=7).map(UniPoly).filter(lambda p: p.degree >= 1)
rat_polys = st.lists(
    st.fractions(min_value=-20, max_value=20, max_denominator=9), min_size=2, max_size=6
).map(UniPoly).filter(lambda p: p.degree >= 1)


class TestPolyDisc:
    def test_quadratic(self):
        assert poly_disc(X**2 - 1) == 4

    def test_degree_eight_from_scaled_trinomial(self):
        f = X**8 + 2**5 * X**3 + 2**3 * 3
        assert poly_disc(f) == -(2**45) * 3**5 * 79**2

    def test_cubic_oracle(self):
        # -4p^3 - 27q^2 for x^3 + p x + q
        assert poly_disc(X**3 + X + 1) == -31

    @given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 20))
    def test_quadratic_formula(self, b, c, a):
        assert poly_disc(UniPoly((c, b, a))) == b * b - 4 * a * c

    @given(st.integers(-40, 40), st.integers(-40, 40))
    def test_depressed_cubic_formula(self, p, q):
        assert poly_disc(UniPoly((q, p, 0, 1))) == -4 * p**3 - 27 * q**2

    @given(st.lists(st.integers(-9, 9), min_size=2, max_size=6))
    def test_product_of_root_differences(self, roots):
        f = UniPoly.from_roots(roots)
        want = 1
        for a, b in itertools.combinations(roots, 2):
            want *= (a - b) ** 2
        assert poly_disc(f) == want

    def test_rejects_constants(self):
        with pytest.raises(ValueError):
            poly_disc(UniPoly((3,)))


class TestResultant:
    def test_linear(self):
        assert resultant(X - 2, X - 3) == -1

    def test_common_root(self):
        assert resultant(X**2 + 1, X**2 + 1) == 0

    def test_quadratics(self):
        assert resultant(X**2 - 2, X**2 - 3) == 1

    @given(polys, polys)
    def test_matches_sylvester_determinant(self, f, g):
        assert resultant(f, g) == sylvester_resultant(f, g)

    @given(rat_polys, rat_polys)
    def test_rational_matches_sylvester(self, f, g):
        assert resultant(f, g) == sylvester_resultant(f, g)

    @given(polys, polys)
    def test_swap_sign(self, f, g):
        sign = (-1) ** (f.degree * g.degree)
        assert resultant(f, g) == sign * resultant(g, f)

    @given(polys, polys, polys)
    def test_multiplicative(self, f, g, h):
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)

    def test_bareiss_small(self):
        assert bareiss_det([[2, 0], [0, 3]]) == 6
        assert bareiss_det([[0, 1], [1, 0]]) == -1
        assert bareiss_det([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3


class TestComposeMod:
    def test_square_mod_square(self):
        assert compose_mod(X**2, X + 1, X**2) == 2 * X + 1

    @given(polys)
    def test_self_reduction_is_zero(self, f):
        assert compose_mod(f, X, f).is_zero()

    def test_cube_mod_quadratic(self):
        # (x+1)^3 = x^3 + 3x^2 + 3x + 1, with x^2 -> 2 gives 5x + 7
        assert compose_mod(X**3, X + 1, X**2 - 2) == 5 * X + 7

    @given(polys, polys, polys)
    def test_agrees_with_compose_then_reduce(self, g, y, f):
        assert compose_mod(g, y, f) == g.compose(y) % f


class TestUniPoly:
    @given(polys, polys)
    def test_divmod_reconstructs(self, f, g):
        q, r = f.divmod(g)
        assert q * g + r == f
        assert r.is_zero() or r.degree < g.degree

    @given(polys, polys)
    def test_gcd_divides(self, f, g):
        d = f.gcd(g)
        assert (f % d).is_zero() and (g % d).is_zero()

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=5), st.integers(1, 3))
    def test_squarefree_decomposition_reconstructs(self, roots, k):
        f = UniPoly.from_roots(roots) ** k * 3
        prod = UniPoly((1,))
        for g, m in f.squarefree_decomposition():
            prod = prod * g**m
        assert prod.monic() == f.monic()

    def test_text_round_trip(self):
        f = UniPoly((Fraction(-1, 3), 0, 5, 2))
        assert UniPoly.from_text(f.to_text()) == f

    def test_immutable(self):
        with pytest.raises(AttributeError):
            X.coeffs = (1,)

    def test_quadratic_coefficients(self):
        w = QuadElem.sqrt_d()
        f = UniPoly((w, 1))
        g = f * f.conjugate()
        assert g.is_rational() and g == X**2 + 2


class TestQuad:
    def test_sqrt_squares_to_minus_two(self):
        w = QuadElem.sqrt_d()
        assert w * w == -2

    @given(st.fractions(max_denominator=20), st.fractions(max_denominator=20))
    def test_norm_multiplicative_and_inverse(self, a, b):
        z = QuadElem(a, b)
        if z:
            assert z * z.inverse() == 1
            assert (z * z).norm() == z.norm() ** 2

    def test_format_s_unit(self):
        assert format_s_unit(Fraction(-(2**520) * 3**459)) == "-2^520*3^459"
        w = QuadElem.sqrt_d()
        assert format_s_unit(2**3 * (1 + w) ** 4) == "2^3*(1+w)^4"


class TestSmooth:
    def test_pure_unit(self):
        sf = smooth_factor(1728, (2, 3))
        assert (sf.sign, sf.smooth_part, sf.cofactor) == (1, {2: 6, 3: 3}, 1)

    def test_negative_with_cofactor(self):
        sf = smooth_factor(-2 * 79**2, (2, 3))
        assert (sf.sign, sf.smooth_part, sf.cofactor) == (-1, {2: 1}, 6241)

    def test_prime_cofactor(self):
        sf = smooth_factor(79, (2, 3))
        assert (sf.sign, sf.smooth_part, sf.cofactor) == (1, {}, 79)

    @given(st.integers(-(10**12), 10**12).filter(bool))
    def test_reconstruct(self, n):
        assert smooth_factor(n, (2, 3, 5)).reconstruct() == n

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            smooth_factor(0, (2, 3))

    def test_perfect_power(self):
        assert perfect_power_exponent(79**2) == 2
        assert perfect_power_exponent(2**12) == 12
        assert perfect_power_exponent(10) in (None, 1)

    def test_primes(self):
        assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert primes_in_range(10, 20) == [11, 13, 17, 19]
        assert all(is_prime(p) for p in primes_up_to(1000))
        assert sum(map(is_prime, range(1000))) == 168
        assert valuation(2**5 * 3, 2) == 5


class TestRatExpr:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("-23^3", Fraction(-12167)),
            ("13^3*1201^3/3^8*11^8", Fraction(13**3 * 1201**3, 3**8 * 11**8)),
            ("2*5^5/3^2", Fraction(6250, 9)),
            ("−17^3/2^7", Fraction(-4913, 128)),
        ],
    )
    def test_parse(self, text, value):
        assert parse_rat(text) == value

    @pytest.mark.parametrize("text", ["", "2/0", "x", "1//2", "3^", "0"])
    def test_malformed(self, text):
        with pytest.raises(RatExprError):
            parse_rat(text)

    @given(st.fractions(max_denominator=10**6).filter(bool))
    def test_round_trip(self, q):
        assert parse_rat(format_rat(q)) == q
