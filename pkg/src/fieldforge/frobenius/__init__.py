"""Factorization over prime fields and Frobenius-class bookkeeping."""

from .classes import CLASS_TABLE, COSET_NAMES, ClassMatch, ClassTableRow, lookup, pgl29_class, sign_pair
from .core import (
    INDISTINGUISHABLE,
    FactorPartition,
    FrobeniusError,
    ModpFactorization,
    distinguish,
    element_order,
    factor_mod_p,
    fingerprint,
    jacobi,
    partition,
)

__all__ = [
    "CLASS_TABLE",
    "COSET_NAMES",
    "INDISTINGUISHABLE",
    "ClassMatch",
    "ClassTableRow",
    "FactorPartition",
    "FrobeniusError",
    "ModpFactorization",
    "distinguish",
    "element_order",
    "factor_mod_p",
    "fingerprint",
    "jacobi",
    "lookup",
    "partition",
    "pgl29_class",
    "sign_pair",
]
