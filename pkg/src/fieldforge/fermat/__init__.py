"""ABC triples over S-units, signatures, S3 orbits, base change and bounded search."""

from .search import search
from .tables import (
    TableLoadError,
    all_elements,
    base_change_closure,
    embedded_tables,
    load_tables,
    orbit_index,
    reachable_table_orbits,
    star_count,
    star_set,
)
from .triples import (
    BASE_CHANGES,
    INF,
    S23,
    AbcTriple,
    OrbitRecord,
    Signature,
    base_change_2,
    base_change_3,
    base_change_4,
    format_component,
    max_signature,
    member,
    normalize,
    parse_component,
    parse_triple,
    qualifies,
    qualifying_signature,
    s3_orbit,
    tau_of,
    tau_orbit,
    triple_of,
)

__all__ = [
    "BASE_CHANGES",
    "INF",
    "S23",
    "AbcTriple",
    "OrbitRecord",
    "Signature",
    "TableLoadError",
    "all_elements",
    "base_change_2",
    "base_change_3",
    "base_change_4",
    "base_change_closure",
    "embedded_tables",
    "format_component",
    "load_tables",
    "max_signature",
    "member",
    "normalize",
    "orbit_index",
    "parse_component",
    "parse_triple",
    "qualifies",
    "qualifying_signature",
    "reachable_table_orbits",
    "s3_orbit",
    "search",
    "star_count",
    "star_set",
    "tau_of",
    "tau_orbit",
    "triple_of",
]
