from __future__ import annotations

import copy
from fractions import Fraction

import pytest

from fieldforge.covers.catalog import checksum, raw_catalog
from fieldforge.covers.model import BiPoly
from fieldforge.exact import UniPoly
from fieldforge.verify import (
    BASECHANGE_CASES,
    CHECKS,
    check_basechange,
    check_catalog,
    check_cuspidal,
    check_disc_shapes,
    check_hecke,
    check_iso_27,
    check_scaled_trinomials,
    hecke_value,
    iso27_data,
    report,
    run_suite,
)

X = UniPoly.x()


class TestBaseChange:
    def test_passes(self):
        assert check_basechange().passed

    def test_perturbed_exponent_fails(self):
        name, k, src, want = BASECHANGE_CASES[0]
        bad_src = (3**5, -(2**2) * 61**2 * 2, 11**4 - 2**3 * 61**2 + 3**5 * 0)
        # keep the sum zero so the triple itself stays valid
        bad_src = (bad_src[0], bad_src[1], -(bad_src[0] + bad_src[1]))
        r = check_basechange([(name, k, bad_src, want)])
        assert not r.passed and name in r.detail


class TestScaledTrinomials:
    def test_passes(self):
        r = check_scaled_trinomials()
        assert r.passed, r.detail

    def test_wrong_point_fails(self):
        assert not check_scaled_trinomials(tau=Fraction(2 * 5**5, 7)).passed


class TestCuspidal:
    def test_passes(self):
        assert check_cuspidal().passed


class TestDiscShapes:
    def test_reports_only_the_two_known_misprints(self):
        r = check_disc_shapes()
        assert not r.passed
        failing = sorted(part.split(":")[0] for part in r.detail.split("; "))
        assert failing == ["f13b", "f27d"]
        assert "-2^520*3^459" in r.detail

    def test_rational_covers_listed_for_the_invariant(self):
        from fieldforge.covers import get_cover

        names = ["f6", "f10", "f9a", "f18", "f26a", "f27a", "f27b", "f27c", "f28"]
        assert check_disc_shapes([get_cover(n) for n in names]).passed


class TestHecke:
    def test_passes(self):
        r = check_hecke()
        assert r.passed and "13" in r.detail

    def test_chain_pair(self):
        assert hecke_value(Fraction(-(2**9) * 5**3, 3**2), Fraction(-(73**3), 2**15 * 3**2)) == 0

    def test_cm_point(self):
        t = Fraction(-(17**3), 2**7)
        assert hecke_value(t, t) == 0

    def test_symmetric(self):
        s, t = Fraction(-(2**9) * 5**3, 3**2), Fraction(-(73**3), 2**15 * 3**2)
        assert hecke_value(t, s) == 0

    def test_random_pair_fails(self):
        r = check_hecke([(Fraction(3, 7), Fraction(-11, 5))])
        assert not r.passed and "3/7" in r.detail


class TestIso27:
    def test_passes(self):
        assert check_iso_27().passed

    def test_identity_map_fails(self):
        assert not check_iso_27(X).passed

    def test_scaled_map_fails(self):
        _, y, _ = iso27_data()
        r = check_iso_27(y * 2)
        assert not r.passed and "nonzero" in r.detail


class TestCatalogCheck:
    def test_passes(self):
        assert check_catalog().passed

    def test_corrupted_coefficient_names_the_cover(self):
        data = copy.deepcopy(raw_catalog())
        rec = next(r for r in data["covers"] if r["name"] == "f10")
        f = BiPoly.parse(rec["expr"], rec["param"])
        bumped = f + BiPoly([UniPoly.monomial(1, 1)])  # x -> x + 1 in the t^0 row
        rec["expr"] = bumped.to_text(rec["param"])
        rec["sha256"] = checksum(bumped, rec["param"])  # a consistent typo, not a stale checksum
        results = run_suite("all", data=data)
        failed = [r for r in results if not r.passed and r.check_id == "catalog"]
        assert failed and "f10" in failed[0].detail


class TestSuite:
    def test_ids_sorted(self):
        assert [r.check_id for r in run_suite()] == sorted(CHECKS)

    def test_idempotent(self):
        assert report(run_suite()) == report(run_suite())

    def test_single(self):
        assert [r.check_id for r in run_suite("hecke")] == ["hecke"]

    def test_unknown(self):
        with pytest.raises(KeyError):
            run_suite("nope")

    def test_everything_but_disc_shapes_passes(self):
        results = {r.check_id: r.passed for r in run_suite()}
        assert results.pop("disc_shapes") is False
        assert all(results.values())
