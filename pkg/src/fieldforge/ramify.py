"""p-adic placement of a specialization point and the resulting ramification.

The base ``P^1_t`` minus the cusps splits p-adically into a generic piece
(empty for ``p = 2``) and annuli ``T^{c,i}`` shrinking toward each cusp
``c``. For tame primes the ramification class of the specialized algebra is
read off from the cusp's cycle type; for trinomial covers a closed formula
also handles the wild primes dividing ``N m r`` in most regions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .covers.model import Cover, CoverError, power_cycle_type
from .exact.smooth import is_prime, valuation
from .fermat.triples import triple_of

CUSPS: tuple[str, str, str] = ("0", "1", "inf")


class RamifyError(ValueError):
    pass


@dataclass(frozen=True)
class RegionClass:
    """Either the generic piece or the annulus ``T^{c,i}`` at cusp ``c``."""

    kind: str
    cusp: str | None = None
    level: int | None = None

    def __post_init__(self):
        if self.kind == "generic":
            if self.cusp is not None or self.level is not None:
                raise RamifyError("the generic region has no cusp or level")
        elif self.kind == "cusp":
            if self.cusp not in CUSPS or self.level is None or self.level < 1:
                raise RamifyError(f"bad cusp region ({self.cusp}, {self.level})")
        else:
            raise RamifyError(f"unknown region kind {self.kind!r}")

    @property
    def is_generic(self) -> bool:
        return self.kind == "generic"

    def __str__(self):
        return "generic" if self.is_generic else f"T^({self.cusp},{self.level})"

    def to_json(self) -> dict:
        if self.is_generic:
            return {"kind": "generic"}
        return {"kind": "cusp", "cusp": self.cusp, "level": self.level}


def _check_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p):
        raise RamifyError(f"{p} is not prime")
    return p


def _check_tau(tau) -> Fraction:
    tau = Fraction(tau)
    if tau in (0, 1):
        raise RamifyError(f"tau = {tau} is a cusp")
    return tau


def ord_triple(tau, p: int) -> tuple[int, int, int]:
    """``(ord_p A, ord_p B, ord_p C)`` for the coprime triple with ``tau = -A/C``."""
    tau, p = _check_tau(tau), _check_prime(p)
    t = triple_of(tau)
    return valuation(t.A, p), valuation(t.B, p), valuation(t.C, p)


def region(tau, p: int) -> RegionClass:
    ords = ord_triple(tau, p)
    for cusp, i in zip(CUSPS, ords):
        if i > 0:
            return RegionClass("cusp", cusp, i)
    return RegionClass("generic")


def tame_class(c: Cover, tau, p: int) -> tuple[int, ...]:
    """Cycle type of the ramification class at ``p`` of the specialization at ``tau``."""
    p = _check_prime(p)
    if p in c.bad_set:
        raise CoverError(f"wild prime: formula inapplicable (p = {p} is in the bad set of {c.name})")
    return _class_at(c.lambdas, c.degree, tau, p)


def _class_at(lambdas, N: int, tau, p: int) -> tuple[int, ...]:
    reg = region(tau, p)
    if reg.is_generic:
        return (1,) * N
    return power_cycle_type(lambdas[CUSPS.index(reg.cusp)], reg.level)


def tame_disc_exp(c: Cover, tau, p: int) -> int:
    """``ord_p`` of the algebra discriminant at a tame prime: ``N`` minus the number of orbits."""
    return c.degree - len(tame_class(c, tau, p))


# Trinomial covers X_{N,m}: f = m^m x^N - t (N x - r)^m, r = N - m.


def _rows(p: int, cusp: str, values) -> dict[tuple[int, str, int], tuple[int, ...]]:
    return {(p, cusp, i): tuple(v) if isinstance(v, tuple) else (v,) for i, v in enumerate(values, 1)}


# Observed ord_p d(tau) for X_{6,1} at the wild primes, by (p, cusp, level);
# the generic region is keyed (p, "gen", 0). These come from numerical
# experiment, not a theorem, and are reported only where neither the closed
# formula nor the prime-drop rule applies.
ADVISORY_6_1: dict[tuple[int, str, int], tuple[int, ...]] = {
    **_rows(2, "0", [11, (6, 8), 9, (6, 8), 11, (0, 6), 11, (4, 8), 9, (4, 8)]),
    **_rows(2, "1", [7, (4, 6)]),
    **_rows(2, "inf", [10, (4, 6), 6, 6, 6, 0, 4, 4, 4, 4]),
    (3, "gen", 0): (6,),
    **_rows(3, "0", [11, 10, (3, 7), 10, 11, (2, 6), 11, 10]),
    **_rows(3, "1", [(5, 7), 6, 3, 4]),
    **_rows(3, "inf", [10, 8, 6, 6, 6, 0, 4, 4, 4, 4]),
    (5, "gen", 0): (3, 5),
    **_rows(5, "0", [8, 7, 6, 5, 0, 5, 4, 3, 4, 5]),
    **_rows(5, "1", [6, 3, 2]),
    **_rows(5, "inf", [9, 9, 9, 9, (3, 5)]),
}


@dataclass(frozen=True)
class DiscExponent:
    """A predicted ``ord_p`` of the algebra discriminant, or ``"uncovered"``.

    ``source`` says which rule produced ``value``. When ``value`` is
    ``"uncovered"``, ``advisory`` may list experimentally observed values;
    these are non-normative.
    """

    value: int | str
    source: str
    advisory: tuple[int, ...] = field(default=())

    @property
    def covered(self) -> bool:
        return self.value != "uncovered"

    def to_json(self) -> dict:
        out: dict = {"value": self.value, "source": self.source}
        if self.advisory:
            out["advisory"] = list(self.advisory)
            out["advisory_note"] = "observed values, non-normative"
        return out


def _check_trinomial(N: int, m: int) -> tuple[int, int, int]:
    N, m = int(N), int(m)
    if not N > m >= 1 or gcd(N, m) != 1:
        raise RamifyError(f"trinomial needs N > m >= 1 with gcd(N, m) = 1, got ({N},{m})")
    return N, m, N - m


def _wild_factor(N: int, m: int, r: int, p: int) -> tuple[str, int, int]:
    """Which of ``N, m, r`` the prime divides, and to what power."""
    for name, k in (("N", N), ("m", m), ("r", r)):
        if k % p == 0:
            return name, k, valuation(k, p)
    return "", 0, 0


def _formula(N: int, m: int, r: int, p: int, v: int) -> int | None:
    """The closed formula for ``ord_p d_{N,m}(tau)`` with ``v = ord_p tau != 0``; None if not covered."""
    which, k, e = _wild_factor(N, m, r, p)
    if e == 0:
        return m - gcd(m, v) + r - gcd(r, v) if v < 0 else N - gcd(N, v)
    kept = v % p != 0  # primed intervals drop multiples of p
    if which == "N":
        if v < -N * e:
            # The shift is v + Ne (not v - Ne): only this matches exact field discriminants.
            s = v + N * e
            return m - gcd(m, s) + r - gcd(r, s)
        if v < 0:
            return N * (e + 1) - gcd(N, v) + v if kept else None
        return N * (e + 1) - gcd(N, v) if kept else None
    other = r if which == "m" else m
    if v > k * e:
        return N - gcd(N, v - k * e)
    if not kept:
        return None
    base = k * (e + 1) - gcd(k, v) + other - gcd(other, k * e - v)
    return base if v < 0 else base - v


def _drop_level(N: int, m: int, r: int, p: int) -> tuple[str, int, int]:
    """Cusp, first level and period of the levels where ``p | N m r`` becomes unramified."""
    which, k, e = _wild_factor(N, m, r, p)
    if e == 0:
        raise RamifyError(f"tame prime: use tame_disc_exp (p = {p} does not divide N m r = {N * m * r})")
    if which == "N":
        return "inf", N * e, m * r
    return "0", k * e, N


def prime_drop(N: int, m: int, tau, p: int) -> bool:
    """Whether ``p | N m r`` is unramified in the specialization ``K_{N,m,tau}``.

    For ``p^e || k`` this happens exactly when ``tau`` lies at level
    ``k e + j * period`` (``j >= 0``) of the cusp paired with ``k``: cusp 0 for
    ``k`` in ``{m, r}`` with period ``N``, cusp infinity for ``k = N`` with
    period ``m r``. The first level is the classical prime-dropping case; the
    later ones are where the closed formula evaluates to zero.
    """
    N, m, r = _check_trinomial(N, m)
    p = _check_prime(p)
    cusp, first, period = _drop_level(N, m, r, p)
    reg = region(tau, p)
    if reg.is_generic or reg.cusp != cusp:
        return False
    return reg.level >= first and (reg.level - first) % period == 0


def trinomial_disc_exp(N: int, m: int, tau, p: int) -> DiscExponent:
    """``ord_p`` of the discriminant of ``Q_p[x]/f_{N,m}(tau, x)`` where known in closed form."""
    N, m, r = _check_trinomial(N, m)
    tau, p = _check_tau(tau), _check_prime(p)
    v = valuation(tau.numerator, p) - valuation(tau.denominator, p)
    e = valuation(N * m * r, p)
    if e == 0:
        if v == 0:
            # Generic or near cusp 1: outside the formula, but p is tame.
            lam = ((N,), (2,) + (1,) * (N - 2), (m, r))
            return DiscExponent(N - len(_class_at(lam, N, tau, p)), "tame")
        return DiscExponent(_formula(N, m, r, p, v), "formula")
    if v != 0:
        val = _formula(N, m, r, p, v)
        if val is not None:
            return DiscExponent(val, "formula")
    if prime_drop(N, m, tau, p):
        return DiscExponent(0, "prime-drop")
    advisory: tuple[int, ...] = ()
    if (N, m) == (6, 1):
        reg = region(tau, p)
        key = (p, "gen", 0) if reg.is_generic else (p, reg.cusp, reg.level)
        advisory = ADVISORY_6_1.get(key, ())
    return DiscExponent("uncovered", "none", advisory)


__all__ = [
    "ADVISORY_6_1",
    "CUSPS",
    "DiscExponent",
    "RamifyError",
    "RegionClass",
    "ord_triple",
    "prime_drop",
    "region",
    "tame_class",
    "tame_disc_exp",
    "trinomial_disc_exp",
]
