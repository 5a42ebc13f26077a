"""Loading and validating the embedded cover catalog."""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import replace
from functools import lru_cache
from importlib import resources

from ..exact.expr import parse_poly
from ..exact.poly import UniPoly
from ..fermat.triples import Signature
from .model import (
    BiPoly,
    Cover,
    CoverError,
    DiscShape,
    conj_double,
    disc_shape_compute,
    normalize_partition,
)
from .trinomial import trinomial_cover


class CatalogError(CoverError):
    pass


def _data_text() -> str:
    return resources.files(__package__).joinpath("data/catalog.json").read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def raw_catalog() -> dict:
    """The parsed data file (covers, doubled covers, recorded constants)."""
    return json.loads(_data_text())


def constants() -> dict:
    return raw_catalog()["constants"]


def checksum(f: BiPoly, param: str) -> str:
    return hashlib.sha256(f.to_text(param).encode()).hexdigest()


def parse_param_poly(text: str, param: str) -> UniPoly:
    """A polynomial in the parameter alone (no ``x``)."""
    sp = parse_poly(text, param)
    if any(j for _, j in sp):
        raise CatalogError(f"expected a polynomial in {param} only: {text!r}")
    if not sp:
        return UniPoly()
    k = max(i for i, _ in sp)
    return UniPoly([sp.get((i, 0), 0) for i in range(k + 1)])


def _recorded_shape(rec: dict) -> DiscShape:
    s = rec["shape"]
    delta = parse_param_poly(s["delta"], rec["param"])
    if delta.degree != 0:
        raise CatalogError(f"{rec['name']}: recorded delta is not a constant")
    c = parse_param_poly(s["c"], rec["param"])
    return DiscShape(delta.lc, int(s["a"]), int(s["b"]), c)


def _cover_from_record(rec: dict) -> Cover:
    name = rec["name"]
    try:
        f = BiPoly.parse(rec["expr"], rec["param"])
    except ValueError as exc:
        raise CatalogError(f"{name}: {exc}") from exc
    if checksum(f, rec["param"]) != rec["sha256"]:
        raise CatalogError(f"{name}: checksum mismatch; the stored expression was edited")
    lambdas = tuple(normalize_partition(lam) for lam in rec["lambdas"])
    if f.xdeg != rec["degree"] or any(sum(lam) != f.xdeg for lam in lambdas):
        raise CatalogError(f"{name}: cycle types are not partitions of N = {f.xdeg}")
    sig = rec.get("star_signature")
    cover = Cover(
        name=name,
        degree=f.xdeg,
        f=f,
        lambdas=lambdas,
        class_labels=tuple(rec.get("class_labels", ("", "", ""))),
        bad_set=tuple(rec["bad_set"]),
        disc_shape=_recorded_shape(rec),
        monodromy_group=rec.get("monodromy_group", ""),
        galois_group=rec.get("galois_group", ""),
        genus=int(rec.get("genus", 0)),
        components=int(rec.get("components", 1)),
        base=rec["param"],
        field=rec.get("field", "Q"),
        star_signature=Signature.parse(sig) if sig else None,
        auxiliary=bool(rec.get("auxiliary", False)),
        notes=rec.get("notes", ""),
    )
    if not cover.riemann_hurwitz_ok():
        raise CatalogError(f"{name}: Riemann-Hurwitz fails for lambdas {lambdas} with genus {cover.genus}")
    return cover


def validate_structure(c: Cover) -> DiscShape:
    """Recompute the discriminant shape and check ``a``, ``b`` against the record.

    A non-square residual factor or a wrong root multiplicity at a cusp is the
    typical signature of a mistyped coefficient.
    """
    got = disc_shape_compute(c)
    want = c.disc_shape
    if want is not None and (got.a, got.b, got.c.degree) != (want.a, want.b, want.c.degree):
        raise CatalogError(
            f"{c.name}: discriminant shape t^{got.a} (t-1)^{got.b} c^2 with deg c = {got.c.degree}, "
            f"record says t^{want.a} (t-1)^{want.b} with deg c = {want.c.degree}"
        )
    return got


def load_catalog(validate: bool = True, data: dict | None = None) -> list[Cover]:
    """Build every cover from the data file (or from ``data``, a parsed replacement)."""
    if data is None:
        data = raw_catalog()
    covers = [_cover_from_record(rec) for rec in data["covers"]]
    by_name = {c.name: c for c in covers}
    for rec in data.get("doubles", []):
        src = by_name.get(rec["source"])
        if src is None:
            raise CatalogError(f"{rec['name']}: unknown source cover {rec['source']!r}")
        d = conj_double(src, rec["name"])
        sig = rec.get("star_signature")
        d = replace(d, star_signature=Signature.parse(sig) if sig else None, notes=f"{src.name} times its conjugate")
        if not d.riemann_hurwitz_ok():
            raise CatalogError(f"{d.name}: Riemann-Hurwitz fails after doubling")
        covers.append(d)
    if validate:
        for c in covers:
            if c.disc_shape is not None:
                validate_structure(c)
    return covers


@lru_cache(maxsize=1)
def _catalog() -> tuple[Cover, ...]:
    return tuple(load_catalog())


def catalog() -> list[Cover]:
    """Every embedded cover, validated once per process."""
    return list(_catalog())


_TRINOMIAL = re.compile(r"^trinomial:(\d+),(\d+)$")


def get_cover(name: str) -> Cover:
    """Look up an embedded cover or build ``trinomial:N,m``."""
    m = _TRINOMIAL.match(name.strip())
    if m:
        return trinomial_cover(int(m.group(1)), int(m.group(2)))
    for c in _catalog():
        if c.name == name:
            return c
    raise KeyError(f"unknown cover {name!r}")


def cover_names() -> list[str]:
    return [c.name for c in _catalog()]


def cover_to_json(c: Cover) -> dict:
    def poly_rows(f: BiPoly | None):
        if f is None:
            return None
        return [t.to_json() for t in f.terms]

    return {
        "name": c.name,
        "degree": c.degree,
        "base": c.base,
        "field": c.field,
        "f": poly_rows(c.f),
        "f_star": poly_rows(c.f_star),
        "lambdas": [list(lam) for lam in c.lambdas],
        "class_labels": list(c.class_labels),
        "bad_set": list(c.bad_set),
        "disc_shape": c.disc_shape.to_json() if c.disc_shape is not None else None,
        "monodromy_group": c.monodromy_group,
        "galois_group": c.galois_group,
        "genus": c.genus,
        "components": c.components,
        "star_signature": c.star_signature.to_json() if c.star_signature else None,
        "auxiliary": c.auxiliary,
        "notes": c.notes,
    }


__all__ = [
    "CatalogError",
    "catalog",
    "checksum",
    "constants",
    "cover_names",
    "cover_to_json",
    "get_cover",
    "load_catalog",
    "parse_param_poly",
    "raw_catalog",
    "validate_structure",
]
