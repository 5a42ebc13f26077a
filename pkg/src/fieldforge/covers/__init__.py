"""Three-point cover catalog, specialization and discriminant shapes."""

from .catalog import catalog, constants, cover_names, cover_to_json, get_cover, load_catalog
from .model import (
    BiPoly,
    Cover,
    CoverError,
    DiscShape,
    SpecializedAlgebra,
    conj_double,
    disc_shape_compute,
    format_partition,
    power_cycle_type,
    specialize,
)
from .trinomial import trinomial_cover

__all__ = [
    "BiPoly",
    "Cover",
    "CoverError",
    "DiscShape",
    "SpecializedAlgebra",
    "catalog",
    "conj_double",
    "constants",
    "cover_names",
    "cover_to_json",
    "disc_shape_compute",
    "format_partition",
    "get_cover",
    "load_catalog",
    "power_cycle_type",
    "specialize",
    "trinomial_cover",
]
