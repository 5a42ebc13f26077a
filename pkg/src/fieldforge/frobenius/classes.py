"""Frobenius classes in PGammaL_2(9) for specializations of the degree-10 cover."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..covers.catalog import get_cover
from ..covers.model import specialize
from .core import FactorPartition, FrobeniusError, jacobi, partition


@dataclass(frozen=True)
class ClassTableRow:
    atlas_label: str
    coset: tuple[int, int]
    partition: FactorPartition
    class_size: int


COSET_NAMES: dict[tuple[int, int], str] = {
    (1, 1): "A6",
    (-1, -1): "S6 - A6",
    (1, -1): "PGL2(9) - PSL2(9)",
    (-1, 1): "M10 - M'10",
}


def _row(label: str, coset: tuple[int, int], parts: tuple[int, ...], size: int) -> ClassTableRow:
    return ClassTableRow(label, coset, FactorPartition(parts), size)


# Atlas labels are opaque identifiers; the table lists one class per
# (coset, partition) pair, which is all the Frobenius data can see.
CLASS_TABLE: tuple[ClassTableRow, ...] = (
    _row("1A", (1, 1), (1,) * 10, 1),
    _row("2A", (1, 1), (2, 2, 2, 2, 1, 1), 45),
    _row("3AB", (1, 1), (3, 3, 3, 1), 80),
    _row("4A", (1, 1), (4, 4, 1, 1), 90),
    _row("5AB", (1, 1), (5, 5), 144),
    _row("2BC", (-1, -1), (2, 2, 2, 1, 1, 1, 1), 30),
    _row("4B", (-1, -1), (4, 4, 2), 90),
    _row("6AB", (-1, -1), (6, 3, 1), 240),
    _row("2D", (1, -1), (2, 2, 2, 2, 2), 36),
    _row("8AB", (1, -1), (8, 1, 1), 180),
    _row("10AB", (1, -1), (10,), 144),
    _row("4C", (-1, 1), (4, 4, 1, 1), 180),
    _row("8CD", (-1, 1), (8, 2), 180),
)

GROUP_ORDER = 1440


@dataclass(frozen=True)
class ClassMatch:
    """Result of a class lookup; ``label`` is None when no row matches."""

    coset: tuple[int, int]
    partition: FactorPartition
    label: str | None

    @property
    def matched(self) -> bool:
        return self.label is not None

    def to_json(self) -> dict:
        return {
            "coset": list(self.coset),
            "coset_name": COSET_NAMES[self.coset],
            "partition": list(self.partition.parts),
            "label": self.label if self.label is not None else "no-match",
        }


def lookup(coset: tuple[int, int], part: FactorPartition) -> ClassMatch:
    if coset not in COSET_NAMES:
        raise FrobeniusError(f"sign pair {coset} is not a coset of PSL2(9)")
    for row in CLASS_TABLE:
        if row.coset == coset and row.partition.parts == part.parts:
            return ClassMatch(coset, part, row.atlas_label)
    return ClassMatch(coset, part, None)


def sign_pair(tau, p: int) -> tuple[int, int]:
    """``((2/p), (2(1 - tau)/p))`` for ``p`` prime to the numerator and denominator of ``1 - tau``."""
    tau = Fraction(tau)
    one_minus = 1 - tau
    # (a/b | p) = (a b | p) when p does not divide b.
    return jacobi(2, p), jacobi(2 * one_minus.numerator * one_minus.denominator, p)


def pgl29_class(tau, p: int, seed: int | None = None) -> ClassMatch:
    """Frobenius class at ``p`` of the specialization of the degree-10 cover at ``tau``."""
    tau = Fraction(tau)
    p = int(p)
    if p < 5:
        raise FrobeniusError("the class table needs p >= 5")
    if tau in (0, 1):
        raise FrobeniusError(f"tau = {tau} is a cusp")
    one_minus = 1 - tau
    if any(v % p == 0 for v in (tau.numerator, tau.denominator, one_minus.numerator)):
        raise FrobeniusError(f"p = {p} divides tau or tau - 1")
    poly = specialize(get_cover("f10"), tau).poly
    part = partition(poly, p, seed)
    if part.ramified:
        raise FrobeniusError(f"specialization at {tau} is not squarefree mod {p}")
    return lookup(sign_pair(tau, p), part)
