"""Exact checks of the closed-form identities carried as data.

Every check returns a :class:`CheckResult`; a failed identity is a result,
never an exception, and its ``detail`` shows the offending difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..covers.catalog import CatalogError, catalog, constants, get_cover, load_catalog
from ..covers.model import BiPoly, CoverError, disc_shape_compute
from ..covers.trinomial import trinomial_cover
from ..exact.quad import format_s_unit
from ..exact.poly import UniPoly, compose_mod, poly_disc
from ..fermat.tables import TableLoadError, load_tables
from ..fermat.triples import BASE_CHANGES, normalize
from ..frobenius.core import factor_mod_p
from ..ramify import prime_drop
from ..ratexpr import parse_rat


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check_id": self.check_id, "passed": self.passed, "detail": self.detail}


def _x_poly(text: str) -> UniPoly:
    return BiPoly.parse(text).at(0)


def _short(p: UniPoly, k: int = 3) -> str:
    """Degree and leading coefficients of a (nonzero) difference polynomial."""
    lead = ", ".join(str(c) for c in reversed(p.coeffs[-k:]))
    return f"degree {p.degree}, leading coefficients [{lead}]"


# Base change

BASECHANGE_CASES: tuple[tuple[str, int, tuple[int, int, int], tuple[int, int, int]], ...] = (
    (
        "cubic",
        3,
        (3**5, -(2**2) * 61**2, 11**4),
        (-(13**3) * 1201**3, 2**2 * 61**2 * 12697**2, 3**8 * 11**8),
    ),
    (
        "quadratic",
        2,
        (3**3 * 79**3, -2 * 7**3 * 29**3, 43**4),
        (2**3 * 3**3 * 7**3 * 29**3 * 79**3, -(109**2) * 275623**2, 43**8),
    ),
)


def check_basechange(cases=None) -> CheckResult:
    """The two recorded base-change images of specific triples."""
    bad = []
    for name, k, src, want in cases or BASECHANGE_CASES:
        try:
            got = BASE_CHANGES[k](normalize(*src))
            expected = normalize(*want)
        except ValueError as exc:
            bad.append(f"{name}: {exc}")
            continue
        if got != expected:
            bad.append(f"{name}: f{k}{src} = {tuple(got)}, recorded {tuple(expected)}")
    return CheckResult("basechange", not bad, "; ".join(bad) or f"{len(cases or BASECHANGE_CASES)} identities hold")


# Scaled trinomials


def scaled_trinomial(item: dict, tau: Fraction) -> UniPoly:
    """``scale * f*_{N,m}(tau, c x)`` for a data item."""
    cover = trinomial_cover(int(item["N"]), int(item["m"]))
    g = cover.form("star").at(tau)
    return g.compose(UniPoly((0, parse_rat(item["x"])))) * parse_rat(item["scale"])


def _mod79_shape_ok(poly: UniPoly) -> tuple[bool, str]:
    fac = factor_mod_p(poly, 79)
    squares = [(g, k) for g, k in fac if k > 1]
    ok = len(squares) == 1 and squares[0][1] == 2 and squares[0][0].degree == 1
    shape = " ".join(f"{g.degree}^{k}" if k > 1 else str(g.degree) for g, k in fac)
    return ok, shape


def check_scaled_trinomials(items=None, tau=None) -> CheckResult:
    """Scaled star trinomials at ``2*5^5/3^2``: identity, discriminant, mod-79 shape, prime drop at 5."""
    consts = constants()
    items = items if items is not None else consts["scaled_trinomials"]
    tau = Fraction(tau) if tau is not None else parse_rat(consts["scaled_trinomial_tau"])
    bad, good = [], []
    for item in items:
        name = item["id"]
        lhs = scaled_trinomial(item, tau)
        rhs = _x_poly(item["rhs"])
        if lhs != rhs:
            bad.append(f"{name}: lhs - rhs has {_short(lhs - rhs)}")
            continue
        d = poly_disc(rhs)
        want = parse_rat(item["disc"])
        if d != want:
            bad.append(f"{name}: disc = {d}, recorded {want}")
            continue
        ok, shape = _mod79_shape_ok(rhs)
        if not ok:
            bad.append(f"{name}: mod 79 factor degrees {shape}, expected one linear factor squared")
            continue
        # 5 divides N m (N - m) in each case; the prime-drop rule must predict 5 unramified,
        # and a polynomial discriminant prime to 5 confirms it.
        if not prime_drop(int(item["N"]), int(item["m"]), tau, 5) or d.numerator % 5 == 0:
            bad.append(f"{name}: prime-drop prediction at 5 disagrees with the discriminant")
            continue
        good.append(name)
    return CheckResult("scaled_trinomials", not bad, "; ".join(bad) or f"{len(good)} scaled trinomials verified")


# Cuspidal factorizations


def check_cuspidal() -> CheckResult:
    """Star trinomials (9,1) and (6,1) at t = 1, and the degree-10 cover at t = 1."""
    cons = constants()["cuspidal"]
    bad = []
    sq = UniPoly((-1, 1)) ** 2
    for (N, m), key in (((9, 1), "septic"), ((6, 1), "quartic")):
        got = trinomial_cover(N, m).form("star").at(1)
        want = sq * _x_poly(cons[key])
        if got != want:
            bad.append(f"({N},{m}) at t=1: difference has {_short(got - want)}")
    f10 = get_cover("f10").f.at(1)
    parts = f10.squarefree_decomposition()
    mults = sorted((g.degree, k) for g, k in parts if g.degree > 0)
    if mults != [(5, 2)]:
        bad.append(f"f10 at t=1: squarefree decomposition (degree, multiplicity) = {mults}, expected [(5, 2)]")
    return CheckResult("cuspidal", not bad, "; ".join(bad) or "3 cuspidal factorizations verified")


# Discriminant shapes


def check_disc_shapes(covers=None) -> CheckResult:
    """Recomputed ``lc * disc`` shape against every recorded shape in the catalog."""
    bad, n = [], 0
    for c in covers if covers is not None else catalog():
        if c.disc_shape is None:
            continue
        n += 1
        try:
            got = disc_shape_compute(c)
        except CoverError as exc:
            bad.append(f"{c.name}: {exc}")
            continue
        if not got.same_as(c.disc_shape):
            g, w = got.canonical(), c.disc_shape.canonical()
            bad.append(
                f"{c.name}: computed {format_s_unit(g.delta)} t^{g.a} (t-1)^{g.b}, "
                f"recorded {format_s_unit(w.delta)} t^{w.a} (t-1)^{w.b}"
                + ("" if g.c == w.c else ", residual factors differ")
            )
    return CheckResult("disc_shapes", not bad, "; ".join(bad) or f"{n} shapes match")


# Hecke correspondence


def hecke_polynomial() -> BiPoly:
    """``h_P(s, t)`` as a polynomial in ``s`` with coefficients in ``t`` (read as ``x``)."""
    return BiPoly.parse(constants()["hecke_hP"].replace("t", "x"), "s")


def hecke_value(sigma, tau) -> Fraction:
    return hecke_polynomial().at(Fraction(sigma))(Fraction(tau))


def hecke_pairs() -> list[tuple[Fraction, Fraction]]:
    c = constants()
    rows = c["hecke_pairs"] + c["hecke_cm_points"]
    return [(parse_rat(a, allow_zero=True), parse_rat(b, allow_zero=True)) for a, b in rows]


def check_hecke(pairs=None) -> CheckResult:
    """``h_P`` vanishes at every recorded related pair and at both CM points."""
    h = hecke_polynomial()
    pairs = pairs if pairs is not None else hecke_pairs()
    bad = []
    for s, t in pairs:
        v = h.at(Fraction(s))(Fraction(t))
        if v != 0:
            bad.append(f"h_P({s}, {t}) = {v}")
    return CheckResult("hecke", not bad, "; ".join(bad) or f"h_P vanishes at all {len(pairs)} pairs")


# The degree-27 isomorphism


def iso27_data() -> tuple[UniPoly, UniPoly, UniPoly]:
    """``(f_target(tau', x), y(x), f_source(tau, x))`` from the data file."""
    d = constants()["iso27"]
    src = get_cover(d["source"]).f.at(parse_rat(d["source_tau"]))
    tgt = get_cover(d["target"]).f.at(parse_rat(d["target_tau"]))
    den = int(d["y_denominator"])
    y = UniPoly([Fraction(int(c), den) for c in d["y_coefficients"]])
    return tgt, y, src


def check_iso_27(y: UniPoly | None = None) -> CheckResult:
    """``f27d(32/81, y(x)) = 0`` in ``Q[x]/f27b(-48, x)`` for the recorded ``y``."""
    tgt, y0, src = iso27_data()
    y = y0 if y is None else y
    r = compose_mod(tgt, y, src)
    if r.is_zero():
        return CheckResult("iso27", True, "f27d(32/81, y) = 0 modulo f27b(-48, x)")
    return CheckResult("iso27", False, f"remainder is nonzero: {_short(r)}")


# Embedded data


def check_catalog(data: dict | None = None) -> CheckResult:
    """Load-time validation of the orbit tables and the cover catalog."""
    try:
        n_orbits = len(load_tables())
        covers = load_catalog(validate=True, data=data)
    except (TableLoadError, CatalogError, CoverError, ValueError) as exc:
        return CheckResult("catalog", False, str(exc))
    return CheckResult("catalog", True, f"{n_orbits} orbits and {len(covers)} covers validated")


CHECKS = {
    "basechange": check_basechange,
    "catalog": check_catalog,
    "cuspidal": check_cuspidal,
    "disc_shapes": check_disc_shapes,
    "hecke": check_hecke,
    "iso27": check_iso_27,
    "scaled_trinomials": check_scaled_trinomials,
}


def run_suite(suite: str = "all", data: dict | None = None) -> list[CheckResult]:
    """Run one check or all of them, ordered by ``check_id``.

    With ``data`` (a parsed replacement for the catalog file) the catalog
    check validates that instead, which is how corrupted data is exercised.
    """
    if suite != "all" and suite not in CHECKS:
        raise KeyError(f"unknown check {suite!r}; known: all, {', '.join(sorted(CHECKS))}")
    ids = sorted(CHECKS) if suite == "all" else [suite]
    out = []
    for cid in ids:
        if cid == "catalog":
            out.append(check_catalog(data))
        else:
            out.append(CHECKS[cid]())
    return out


def report(results: list[CheckResult]) -> dict:
    return {"passed": all(r.passed for r in results), "checks": [r.to_json() for r in results]}


__all__ = [
    "BASECHANGE_CASES",
    "CHECKS",
    "CheckResult",
    "check_basechange",
    "check_catalog",
    "check_cuspidal",
    "check_disc_shapes",
    "check_hecke",
    "check_iso_27",
    "check_scaled_trinomials",
    "hecke_pairs",
    "hecke_polynomial",
    "hecke_value",
    "iso27_data",
    "report",
    "run_suite",
    "scaled_trinomial",
]
