"""Exact verification of the closed-form identities carried as data."""

from .checks import (
    BASECHANGE_CASES,
    CHECKS,
    CheckResult,
    check_basechange,
    check_catalog,
    check_cuspidal,
    check_disc_shapes,
    check_hecke,
    check_iso_27,
    check_scaled_trinomials,
    hecke_pairs,
    hecke_polynomial,
    hecke_value,
    iso27_data,
    report,
    run_suite,
    scaled_trinomial,
)

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
