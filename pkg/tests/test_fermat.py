from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from fieldforge.fermat import (
    INF,
    S23,
    AbcTriple,
    Signature,
    TableLoadError,
    all_elements,
    base_change_2,
    base_change_3,
    base_change_4,
    embedded_tables,
    load_tables,
    max_signature,
    member,
    normalize,
    orbit_index,
    parse_triple,
    qualifies,
    reachable_table_orbits,
    s3_orbit,
    search,
    star_count,
    tau_of,
    triple_of,
)

from .oracles import brute_force_search

EX10 = (-2 * 5**5, 79**2, 3**2)
EX34 = (3**5, -(2**2) * 61**2, 11**4)


def sig(text: str) -> Signature:
    return Signature.parse(text)


def triples_strategy():
    @st.composite
    def build(draw):
        a = draw(st.integers(1, 10**6))
        b = draw(st.integers(1, 10**6))
        signs = draw(st.sampled_from([(1, 1), (1, -1), (-1, 1)]))
        A, B = signs[0] * a, signs[1] * b
        assume(A + B != 0)
        return normalize(A, B, -(A + B))

    return build()


class TestNormalize:
    def test_already_normal(self):
        assert tuple(normalize(2, -3, 1)) == (2, -3, 1)

    def test_scaled(self):
        assert tuple(normalize(-4, 6, -2)) == (2, -3, 1)

    def test_large(self):
        assert tuple(normalize(*EX10)) == EX10

    def test_rejects_nonzero_sum(self):
        with pytest.raises(ValueError):
            normalize(1, 1, 1)

    def test_rejects_cusp(self):
        with pytest.raises(ValueError):
            normalize(1, -1, 0)

    @given(triples_strategy())
    def test_invariants(self, t):
        A, B, C = t
        assert A + B + C == 0
        assert sum(v > 0 for v in t) == 2
        from math import gcd

        assert gcd(A, B) == gcd(B, C) == gcd(A, C) == 1


class TestTau:
    def test_tau_of(self):
        assert tau_of(normalize(2, -3, 1)) == -2

    def test_triple_of_half(self):
        assert tuple(triple_of(Fraction(1, 2))) == (1, 1, -2)

    def test_triple_of_large(self):
        t = triple_of(Fraction(2 * 5**5, 9))
        assert tuple(t) == EX10 or tuple(-v for v in t) == EX10

    @given(triples_strategy())
    def test_round_trip(self, t):
        assert triple_of(tau_of(t)) == t

    def test_cusps_rejected(self):
        for tau in (0, 1):
            with pytest.raises(ValueError):
                triple_of(tau)


class TestSignatures:
    def test_all_units(self):
        assert max_signature(normalize(2, -3, 1)) == Signature(INF, INF, INF)

    def test_eq34_triple(self):
        assert max_signature(normalize(*EX34)) == Signature(INF, 2, 4)

    def test_section10_triple(self):
        assert max_signature(normalize(*EX10)) == Signature(5, 2, INF)

    def test_member(self):
        t = normalize(2, -3, 1)
        for s in ("2,3,8", "3,3,4", "inf,inf,inf", "7,11,13"):
            assert member(t, sig(s))
        big = normalize(*EX10)
        assert not member(big, sig("inf,2,inf"))
        assert member(big, sig("5,2,inf"))
        assert member(normalize(1, 1, -2), sig("2,3,inf"))

    def test_qualifies(self):
        assert qualifies(normalize(1, 1, -2))
        assert not qualifies(normalize(*EX10))
        assert qualifies(normalize(2, -3, 1))

    @given(
        triples_strategy(),
        st.tuples(*[st.sampled_from([2, 3, 4, 6, 8, 9, 12, INF])] * 3),
        st.tuples(*[st.sampled_from([1, 2, 3])] * 3),
    )
    def test_member_monotone_in_divisibility(self, t, big, shrink):
        fine = Signature(*big)
        coarse = Signature(*(v if v is INF or v % k else v // k for v, k in zip(big, shrink)))
        assert coarse.divides(fine)
        if member(t, fine):
            assert member(t, coarse)


class TestOrbits:
    def test_three_element_orbit(self):
        assert set(s3_orbit(triple_of(-1)).taus()) == {Fraction(-1), Fraction(2), Fraction(1, 2)}

    def test_six_element_orbit(self):
        want = {Fraction(v) for v in (-2, 3, Fraction(-1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 2))}
        assert set(s3_orbit(triple_of(-2)).taus()) == want

    @given(triples_strategy())
    def test_orbit_closed_and_sized(self, t):
        rec = s3_orbit(t)
        taus = set(rec.taus())
        assert len(rec.elements) == (3 if taus == {Fraction(-1), Fraction(2), Fraction(1, 2)} else 6)
        for u in rec.triples():
            assert s3_orbit(u).representative == rec.representative
        assert rec.representative == min(rec.triples(), key=AbcTriple.sort_key)


class TestBaseChange:
    def test_cubic(self):
        got = base_change_3(normalize(*EX34))
        assert got == normalize(-(13**3) * 1201**3, 2**2 * 61**2 * 12697**2, 3**8 * 11**8)

    def test_quadratic(self):
        got = base_change_2(normalize(3**3 * 79**3, -2 * 7**3 * 29**3, 43**4))
        assert got == normalize(2**3 * 3**3 * 7**3 * 29**3 * 79**3, -(109**2) * 275623**2, 43**8)

    def test_quadratic_hits_cusp(self):
        with pytest.raises(ValueError):
            base_change_2(normalize(1, 1, -2))

    @given(triples_strategy(), st.sampled_from([base_change_2, base_change_3, base_change_4]))
    def test_images_sum_to_zero(self, t, f):
        try:
            image = f(t)
        except ValueError:
            return  # landed on a cusp
        assert sum(image) == 0

    def test_reaches_73_orbits(self):
        assert len(reachable_table_orbits()) >= 73


class TestTables:
    def test_counts(self):
        recs = embedded_tables()
        assert len(recs) == 101
        assert sum(r.source.startswith("block 1") for r in recs) == 56

    def test_known_entries(self):
        reps = {r.representative for r in embedded_tables()}
        big = s3_orbit(normalize(-2 * 184211**2, 4079**3, 3)).representative
        assert big in reps
        assert s3_orbit(normalize(1, 1, -2)).representative in reps

    def test_all_qualify(self):
        assert all(qualifies(t) for t in all_elements())

    def test_t23inf(self):
        s = sig("2,3,inf")
        assert star_count(s) == 81
        orbits = {r.representative for r in embedded_tables() if any(member(t, s) for t in r.triples())}
        assert len(orbits) == 56

    @pytest.mark.parametrize(
        "text,count",
        [("2,3,8", 99), ("2,3,9", 87), ("2,3,18", 81), ("2,4,8", 45), ("2,4,9", 45),
         ("2,9,12", 35), ("3,3,4", 39), ("3,3,8", 27), ("3,4,8", 24)],
    )
    def test_star_counts(self, text, count):
        assert star_count(sig(text)) == count

    @given(st.tuples(*[st.sampled_from([2, 3, 4, 6, 8, 9, 12, 18, INF])] * 3))
    def test_star_count_permutation_invariant(self, entries):
        counts = {star_count(Signature(*p)) for p in permutations(entries)}
        assert len(counts) == 1

    def test_orbit_index_covers_everything(self):
        idx = orbit_index()
        assert set(idx.values()) == set(range(1, 102))
        assert len(idx) == len(all_elements())

    def test_bad_row_is_named(self):
        with pytest.raises(TableLoadError, match="2 3 1"):
            load_tables("[block 1]\n2 3 1\n")

    def test_parse_triple(self):
        assert parse_triple("-2*184211^2 4079^3 3") == normalize(-2 * 184211**2, 4079**3, 3)


class TestSearch:
    def test_tiny_bound(self):
        got = set(search(S23, 10))
        for t in [(1, 1, -2), (2, 1, -3), (3, 1, -4), (8, 1, -9)]:
            assert normalize(*t) in got

    def test_bound_two(self):
        got = search(S23, 2)
        assert {t.tau for t in got} == {Fraction(-1), Fraction(2), Fraction(1, 2)}

    @pytest.mark.parametrize("bound", [10, 100, 2000, 20000])
    def test_matches_brute_force(self, bound):
        assert {tuple(t) for t in search(S23, bound)} == brute_force_search(bound)

    def test_threads_do_not_change_output(self):
        assert search(S23, 10**5, threads=4) == search(S23, 10**5, threads=1)

    @given(st.integers(2, 3000), st.integers(2, 3000))
    def test_monotone_in_bound(self, b1, b2):
        b1, b2 = sorted((b1, b2))
        assert set(search(S23, b1)) <= set(search(S23, b2))

    def test_sorted_output(self):
        got = search(S23, 10**4)
        assert got == sorted(got, key=AbcTriple.sort_key)

    def test_bad_bound(self):
        with pytest.raises(ValueError):
            search(S23, 1)
