from __future__ import annotations

import copy
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fieldforge.covers import (
    BiPoly,
    CoverError,
    catalog,
    conj_double,
    disc_shape_compute,
    get_cover,
    load_catalog,
    power_cycle_type,
    specialize,
    trinomial_cover,
)
from fieldforge.covers.catalog import CatalogError, raw_catalog
from fieldforge.exact import UniPoly, primes_in_range
from fieldforge.frobenius import partition

X = UniPoly.x()
RECORDED_RATIONAL = ["f6", "f10", "f9a", "f18", "f26a", "f27a", "f27b", "f27c", "f28"]


class TestCatalog:
    def test_names(self):
        names = {c.name for c in catalog()}
        assert {"f6", "f10", "f9a", "f3", "f18", "f13a", "f26a", "f13b", "f13c",
                "f27a", "f27b", "f27c", "f27d", "f28", "f26b", "f26c"} <= names

    def test_f10(self):
        c = get_cover("f10")
        assert c.degree == 10 and c.genus == 0
        assert c.lambdas == ((3, 3, 3, 1), (2, 2, 2, 2, 2), (8, 1, 1))

    def test_f27d(self):
        c = get_cover("f27d")
        assert c.lambdas == ((9, 9, 9), (2,) * 10 + (1,) * 7, (4,) * 6 + (1,) * 3)

    @pytest.mark.parametrize("c", catalog(), ids=lambda c: c.name)
    def test_riemann_hurwitz_and_partitions(self, c):
        assert all(sum(lam) == c.degree for lam in c.lambdas)
        assert c.riemann_hurwitz_ok()
        assert c.genus == (1 if c.name == "f9a" else 0)

    @pytest.mark.parametrize("c", [c for c in catalog() if not c.auxiliary], ids=lambda c: c.name)
    def test_t_degree_at_most_two(self, c):
        assert c.f.tdeg <= 2 * (2 if c.name in ("f26b", "f26c") else 1)

    def test_unknown_cover(self):
        with pytest.raises(KeyError):
            get_cover("f99")

    def test_riemann_hurwitz_violation_is_fatal(self):
        data = copy.deepcopy(raw_catalog())
        rec = next(r for r in data["covers"] if r["name"] == "f10")
        rec["genus"] = 1
        with pytest.raises(CatalogError, match="f10"):
            load_catalog(validate=False, data=data)

    def test_edited_expression_fails_checksum(self):
        data = copy.deepcopy(raw_catalog())
        rec = next(r for r in data["covers"] if r["name"] == "f6")
        rec["expr"] = rec["expr"].replace("3", "5", 1)
        with pytest.raises(CatalogError, match="f6"):
            load_catalog(validate=False, data=data)


class TestTrinomial:
    def test_six_one_star(self):
        assert trinomial_cover(6, 1).form("star") == BiPoly.parse("x^6 - 6*t*x + 5*t")

    def test_nine_four_star(self):
        assert trinomial_cover(9, 4).form("star") == BiPoly.parse("4*x^9 - 9*t^4*x^4 + 5*t^7")

    def test_thirtytwo_five_star(self):
        assert trinomial_cover(32, 5).form("star") == BiPoly.parse("5*x^32 - 32*t^11*x^5 + 27*t^13")

    def test_canonical_form(self):
        assert trinomial_cover(6, 1).f == BiPoly.parse("x^6 - t*(6*x - 5)")

    def test_rejects_non_coprime(self):
        with pytest.raises(CoverError):
            trinomial_cover(6, 2)

    def test_swap_warns(self):
        with pytest.warns(UserWarning):
            c = trinomial_cover(9, 5)
        assert c.name == "trinomial:9,4"

    def test_no_star_for_degree_two(self):
        c = trinomial_cover(2, 1)
        with pytest.raises(CoverError):
            c.form("star")

    @pytest.mark.parametrize("N,m", [(5, 2), (6, 1), (7, 3), (8, 3), (9, 4), (10, 3)])
    def test_closed_form_disc_shape(self, N, m):
        c = trinomial_cover(N, m)
        assert disc_shape_compute(c).same_as(c.disc_shape)

    @pytest.mark.parametrize("N,m,tau", [(6, 1, Fraction(-2)), (8, 3, Fraction(9, 8)), (9, 4, Fraction(-1, 8)), (7, 2, Fraction(4, 3))])
    def test_forms_share_frobenius(self, N, m, tau):
        """Canonical and star forms give the same partitions at 50 good primes."""
        c = trinomial_cover(N, m)
        f = specialize(c, tau).poly
        g = specialize(c, tau, form="star").poly
        primes = [p for p in primes_in_range(5, 2000) if p not in c.bad_set]
        random.Random(N * 100 + m).shuffle(primes)
        checked = 0
        for p in primes:
            a, b = partition(f, p), partition(g, p)
            if a.ramified or b.ramified or a.lc_divisible or b.lc_divisible:
                continue
            assert a.parts == b.parts, p
            checked += 1
            if checked == 50:
                break
        assert checked == 50


class TestSpecialize:
    def test_cuspidal_nine(self):
        alg = specialize(trinomial_cover(9, 1), 1, form="star")
        assert alg.poly == X**9 - 9 * X + 8
        assert not alg.separable
        sept = UniPoly((8, 7, 6, 5, 4, 3, 2, 1))
        assert sorted(alg.poly.squarefree_decomposition(), key=lambda gk: gk[1]) == [(sept, 1), (X - 1, 2)]

    def test_cuspidal_six(self):
        alg = specialize(trinomial_cover(6, 1), 1, form="star")
        assert alg.poly == X**6 - 6 * X + 5
        assert alg.poly == (X - 1) ** 2 * UniPoly((5, 4, 3, 2, 1))

    def test_f10_at_one(self):
        alg = specialize(get_cover("f10"), 1)
        parts = [(g.degree, k) for g, k in alg.poly.squarefree_decomposition() if g.degree]
        assert parts == [(5, 2)]

    @given(st.fractions(min_value=-1000, max_value=1000, max_denominator=1000).filter(lambda q: q not in (0, 1)),
           st.sampled_from(["f6", "f10", "f9a", "f18"]))
    @settings(max_examples=60)
    def test_primitive_positive(self, tau, name):
        alg = specialize(get_cover(name), tau)
        coeffs = alg.poly.int_coeffs()
        from math import gcd

        g = 0
        for c in coeffs:
            g = gcd(g, int(c))
        assert g == 1 and alg.poly.lc > 0 and alg.poly.degree == get_cover(name).degree

    def test_quadratic_field_cover_needs_doubling(self):
        with pytest.raises(CoverError):
            specialize(get_cover("f13b"), 2)


class TestDiscShapes:
    def test_f10(self):
        s = disc_shape_compute(get_cover("f10"))
        assert (s.delta, s.a, s.b, s.c) == (-(2**99) * 3**42, 6, 5, UniPoly((1,)))

    def test_f6(self):
        s = disc_shape_compute(get_cover("f6"))
        assert (s.delta, s.a, s.b, s.c) == (2**13 * 3**6, 4, 2, UniPoly((1,)))

    def test_f9a_cubic(self):
        c = get_cover("f9a")
        s = disc_shape_compute(c).canonical()
        assert (s.a, s.b, s.c.degree) == (6, 4, 3)
        assert s.c == c.disc_shape.c.monic()

    @pytest.mark.parametrize("name", RECORDED_RATIONAL)
    def test_matches_recorded(self, name):
        c = get_cover(name)
        assert disc_shape_compute(c).same_as(c.disc_shape)

    @pytest.mark.xfail(strict=True, reason="recorded D27d lacks the minus sign forced by the recorded f27d")
    def test_f27d_matches_recorded(self):
        c = get_cover("f27d")
        assert disc_shape_compute(c).same_as(c.disc_shape)

    def test_f27d_up_to_sign(self):
        c = get_cover("f27d")
        got, want = disc_shape_compute(c).canonical(), c.disc_shape.canonical()
        assert (got.delta, got.a, got.b, got.c) == (-want.delta, want.a, want.b, want.c)

    def test_f13c_matches_recorded(self):
        c = get_cover("f13c")
        assert disc_shape_compute(c).same_as(c.disc_shape)

    @pytest.mark.xfail(strict=True, reason="recorded D13b line duplicates D13c")
    def test_f13b_matches_recorded(self):
        c = get_cover("f13b")
        assert disc_shape_compute(c).same_as(c.disc_shape)

    @pytest.mark.parametrize("name", RECORDED_RATIONAL + ["f27d", "f18"])
    def test_delta_supported_on_bad_set(self, name):
        c = get_cover(name)
        d = disc_shape_compute(c).canonical().delta
        n = abs(d.numerator) * d.denominator
        for p in c.bad_set:
            while n % p == 0:
                n //= p
        assert n == 1

    def test_plain_discriminant_convention(self):
        scaled = disc_shape_compute(get_cover("f28"))
        plain = disc_shape_compute(get_cover("f28"), scaled=False)
        assert scaled.canonical().delta == plain.canonical().delta * 3**7


class TestConjDouble:
    @pytest.mark.parametrize("src,dst", [("f13b", "f26b"), ("f13c", "f26c")])
    def test_doubles_match_catalog(self, src, dst):
        d = conj_double(get_cover(src))
        assert d.is_rational() and d.f == get_cover(dst).f and d.degree == 26

    def test_rational_cover_squares(self):
        c = get_cover("f6")
        assert conj_double(c).f == c.f * c.f


class TestPowerCycleType:
    def test_identity(self):
        assert power_cycle_type((8, 1, 1), 8) == (1,) * 10

    def test_square_of_eight_cycle(self):
        assert power_cycle_type((8, 1, 1), 2) == (4, 4, 1, 1)

    def test_transposition(self):
        assert power_cycle_type((2,) + (1,) * 6, 2) == (1,) * 8

    @given(st.lists(st.integers(1, 12), min_size=1, max_size=6), st.integers(0, 60))
    def test_preserves_degree(self, parts, i):
        assert sum(power_cycle_type(parts, i)) == sum(parts)
