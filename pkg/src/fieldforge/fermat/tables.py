"""The embedded 101 orbit representatives and derived counts."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .triples import (
    BASE_CHANGES,
    PERMS,
    S23,
    AbcTriple,
    OrbitRecord,
    Signature,
    member,
    parse_triple,
    qualifies,
    s3_orbit,
    triple_of,
)


class TableLoadError(RuntimeError):
    pass


def _rows(text: str) -> list[tuple[str, int, str]]:
    """``(section, line_number, row_text)`` for every data row."""
    out = []
    section = ""
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if s.startswith("["):
            section = s.strip("[]").strip()
            continue
        out.append((section, lineno, s))
    return out


def load_tables(text: str | None = None) -> list[OrbitRecord]:
    """Parse and validate the table file; every failure names the offending row."""
    if text is None:
        text = resources.files(__package__).joinpath("data/tables.txt").read_text(encoding="utf-8")
    records = []
    seen: dict[AbcTriple, str] = {}
    for section, lineno, row in _rows(text):
        where = f"tables.txt line {lineno} ({section}): {row!r}"
        try:
            t = parse_triple(row)
        except ValueError as exc:
            raise TableLoadError(f"{where}: {exc}") from exc
        if not qualifies(t, S23):
            raise TableLoadError(f"{where}: triple does not qualify over S = {{2,3}}")
        rec = s3_orbit(t, S23, source=section)
        if rec.representative in seen:
            raise TableLoadError(f"{where}: orbit already listed as {seen[rec.representative]}")
        seen[rec.representative] = row
        records.append(rec)
    return records


@lru_cache(maxsize=1)
def embedded_tables() -> tuple[OrbitRecord, ...]:
    return tuple(load_tables())


def all_elements(records=None) -> list[AbcTriple]:
    records = embedded_tables() if records is None else records
    return [t for rec in records for t in rec.triples()]


def star_set(sig: Signature, records=None) -> list[Fraction]:
    """Sorted distinct tau over the embedded orbits whose triple lies in ``T_sig``."""
    taus = {t.tau for t in all_elements(records) if member(t, sig, S23)}
    return sorted(taus)


def star_count(sig: Signature, records=None) -> int:
    return len(star_set(sig, records))


def base_change_closure(seed: AbcTriple, records=None, max_rounds: int = 50) -> set[AbcTriple]:
    """Orbit representatives reachable from ``seed`` by base change and cusp permutation.

    Every element of every reached orbit is fed through each base-change map;
    images that qualify over S = {2,3} are kept. Iterates to a fixed point.
    """
    reached: dict[AbcTriple, OrbitRecord] = {}
    frontier = [s3_orbit(seed)]
    for _ in range(max_rounds):
        fresh = []
        for rec in frontier:
            if rec.representative in reached:
                continue
            reached[rec.representative] = rec
            for t in rec.triples():
                for f in BASE_CHANGES.values():
                    try:
                        img = f(t)
                    except ValueError:
                        continue
                    if qualifies(img, S23):
                        fresh.append(s3_orbit(img))
        if not fresh:
            break
        frontier = fresh
    return set(reached)


def reachable_table_orbits(records=None) -> set[AbcTriple]:
    records = embedded_tables() if records is None else records
    reps = {rec.representative for rec in records}
    return reps & base_change_closure(triple_of(-2))


def orbit_index(records=None) -> dict[Fraction, int]:
    """Map every tau of the embedded orbits to its 1-based orbit id."""
    records = embedded_tables() if records is None else records
    out = {}
    for i, rec in enumerate(records, 1):
        for tau in rec.taus():
            out[tau] = i
    return out


__all__ = [
    "PERMS",
    "TableLoadError",
    "all_elements",
    "base_change_closure",
    "embedded_tables",
    "load_tables",
    "orbit_index",
    "reachable_table_orbits",
    "star_count",
    "star_set",
]
