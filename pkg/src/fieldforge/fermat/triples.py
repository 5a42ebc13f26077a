"""Normalized ABC triples, signatures, S3 orbits and base-change maps."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from gmpy2 import iroot

from ..exact.smooth import perfect_power_exponent, smooth_factor

S23 = (2, 3)


class _Infinity:
    """The signature entry ``inf``: every positive integer divides it."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def entry_divides(a, b) -> bool:
    """``a | b`` on positive integers extended by ``k | inf`` and ``inf | inf``."""
    if b is INF:
        return True
    if a is INF:
        return False
    return b % a == 0


def parse_entry(text: str):
    t = text.strip().lower()
    if t in ("inf", "infinity", "∞", "oo"):
        return INF
    v = int(t)
    if v < 1:
        raise ValueError(f"signature entries must be positive: {text!r}")
    return v


@dataclass(frozen=True)
class Signature:
    p: object
    q: object
    r: object

    def __iter__(self):
        return iter((self.p, self.q, self.r))

    def divides(self, other: Signature) -> bool:
        return all(entry_divides(a, b) for a, b in zip(self, other))

    def reciprocal_sum(self) -> Fraction:
        return sum((Fraction(0) if e is INF else Fraction(1, e) for e in self), Fraction(0))

    def is_hyperbolic(self) -> bool:
        return self.reciprocal_sum() < 1

    def permuted(self, perm: tuple[int, int, int]) -> Signature:
        e = tuple(self)
        return Signature(*(e[i] for i in perm))

    @classmethod
    def parse(cls, text: str) -> Signature:
        parts = [p for p in re.split(r"[,\s]+", text.strip().strip("()")) if p]
        if len(parts) != 3:
            raise ValueError(f"signature needs three entries: {text!r}")
        return cls(*(parse_entry(p) for p in parts))

    def __str__(self):
        return f"({self.p},{self.q},{self.r})"

    def to_json(self) -> list[str]:
        return [str(e) for e in self]


@dataclass(frozen=True, order=True)
class AbcTriple:
    """Coprime ``A + B + C = 0`` with all parts nonzero and exactly two positive."""

    A: int
    B: int
    C: int

    def __post_init__(self):
        a, b, c = self.A, self.B, self.C
        if a + b + c != 0:
            raise ValueError(f"triple does not sum to zero: {a} + {b} + {c}")
        if a == 0 or b == 0 or c == 0:
            raise ValueError("triple has a zero component")
        if gcd(gcd(a, b), c) != 1:
            raise ValueError("triple is not coprime; use normalize()")
        if sum(1 for v in (a, b, c) if v > 0) != 2:
            raise ValueError("triple must have exactly two positive components")

    def __iter__(self):
        return iter((self.A, self.B, self.C))

    @property
    def height(self) -> int:
        return max(abs(self.A), abs(self.B), abs(self.C))

    def sort_key(self):
        return (tuple(sorted((abs(self.A), abs(self.B), abs(self.C)))), (self.A, self.B, self.C))

    @property
    def tau(self) -> Fraction:
        return Fraction(-self.A, self.C)

    def __str__(self):
        return f"{self.A} {self.B} {self.C}"


def normalize(A: int, B: int, C: int) -> AbcTriple:
    A, B, C = int(A), int(B), int(C)
    if A + B + C != 0:
        raise ValueError(f"components do not sum to zero: {A} + {B} + {C}")
    if A == 0 or B == 0 or C == 0:
        raise ValueError("zero component (tau at a cusp)")
    g = gcd(gcd(A, B), C)
    A, B, C = A // g, B // g, C // g
    if sum(1 for v in (A, B, C) if v > 0) != 2:
        A, B, C = -A, -B, -C
    return AbcTriple(A, B, C)


def tau_of(t: AbcTriple) -> Fraction:
    return t.tau


def triple_of(tau) -> AbcTriple:
    """The normalized triple with ``tau = -A/C``, namely ``(n, d - n, -d)`` for ``tau = n/d``."""
    tau = Fraction(tau)
    if tau in (0, 1):
        raise ValueError(f"tau = {tau} is a cusp")
    n, d = tau.numerator, tau.denominator
    return normalize(n, d - n, -d)


def max_signature(t: AbcTriple, S=S23) -> Signature:
    entries = []
    for v in t:
        cof = smooth_factor(v, S).cofactor
        k = perfect_power_exponent(cof)
        entries.append(INF if k is None else k)
    return Signature(*entries)


def member(t: AbcTriple, sig: Signature, S=S23) -> bool:
    return sig.divides(max_signature(t, S))


def _s_part(k, S) -> object:
    if k is INF:
        return INF
    return smooth_factor(k, S).smooth_value()


def qualifying_signature(t: AbcTriple, S=S23) -> Signature:
    """The largest signature below ``max_signature`` whose finite entries are S-smooth."""
    return Signature(*(_s_part(k, S) for k in max_signature(t, S)))


def qualifies(t: AbcTriple, S=S23) -> bool:
    # Maximizing each entry minimizes 1/p + 1/q + 1/r, so it suffices to test
    # the S-smooth part of the maximal signature.
    return qualifying_signature(t, S).is_hyperbolic()


# Permutations of (A, B, C) and the matching action on tau = -A/C.
PERMS: tuple[tuple[int, int, int], ...] = (
    (0, 1, 2),
    (1, 0, 2),
    (2, 1, 0),
    (0, 2, 1),
    (1, 2, 0),
    (2, 0, 1),
)


def permute(t: AbcTriple, perm: tuple[int, int, int]) -> AbcTriple:
    v = (t.A, t.B, t.C)
    return normalize(*(v[i] for i in perm))


def tau_orbit(tau) -> set[Fraction]:
    tau = Fraction(tau)
    return {
        tau,
        1 - tau,
        1 / tau,
        1 / (1 - tau),
        tau / (tau - 1),
        (tau - 1) / tau,
    }


@dataclass(frozen=True)
class OrbitRecord:
    representative: AbcTriple
    elements: tuple[tuple[AbcTriple, Fraction], ...]
    max_signature: Signature
    source: str = ""

    def taus(self) -> list[Fraction]:
        return [tau for _, tau in self.elements]

    def triples(self) -> list[AbcTriple]:
        return [t for t, _ in self.elements]


def s3_orbit(t: AbcTriple, S=S23, source: str = "") -> OrbitRecord:
    elems = {permute(t, p) for p in PERMS}
    ordered = sorted(elems, key=AbcTriple.sort_key)
    rep = ordered[0]
    return OrbitRecord(
        representative=rep,
        elements=tuple((e, e.tau) for e in ordered),
        max_signature=max_signature(rep, S),
        source=source,
    )


def base_change_2(t: AbcTriple) -> AbcTriple:
    A, B, C = t
    return normalize(4 * A * B, (2 * A + C) ** 2, -(C**2))


def base_change_3(t: AbcTriple) -> AbcTriple:
    A, B, C = t
    return normalize((4 * A + C) ** 3, (8 * A - C) ** 2 * B, -27 * A * C**2)


def base_change_4(t: AbcTriple) -> AbcTriple:
    A, B, C = t
    return normalize(B * (9 * A + C) ** 3, (27 * A**2 + 18 * A * C - C**2) ** 2, 64 * A * C**3)


BASE_CHANGES = {2: base_change_2, 3: base_change_3, 4: base_change_4}


# Triple text form

_FACTOR = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_component(text: str) -> int:
    """Parse a signed monomial product such as ``-2^3*17^2`` or a plain decimal."""
    s = text.strip().replace("·", "*").replace("−", "-")
    sign = 1
    if s[:1] in "+-":
        sign = -1 if s[0] == "-" else 1
        s = s[1:]
    if not s:
        raise ValueError(f"empty component in {text!r}")
    value = 1
    for factor in s.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise ValueError(f"malformed factor {factor!r} in {text!r}")
        value *= int(m.group(1)) ** int(m.group(2) or 1)
    return sign * value


def parse_triple(text: str) -> AbcTriple:
    """Parse ``"A B C"``; the triple is normalized."""
    parts = text.split()
    if len(parts) != 3:
        raise ValueError(f"expected three components: {text!r}")
    return normalize(*(parse_component(p) for p in parts))


def format_component(v: int, S=S23) -> str:
    """Signed monomial form with S-primes split off, e.g. ``-2^3*17^2``."""
    sf = smooth_factor(v, S)
    parts = []
    for p in sorted(sf.smooth_part):
        e = sf.smooth_part[p]
        parts.append(f"{p}^{e}" if e > 1 else str(p))
    if sf.cofactor != 1 or not parts:
        k = perfect_power_exponent(sf.cofactor) if sf.cofactor > 1 else None
        if k and k > 1:
            parts.append(f"{int(iroot(sf.cofactor, k)[0])}^{k}")
        else:
            parts.append(str(sf.cofactor))
    return ("-" if sf.sign < 0 else "") + "*".join(parts)
