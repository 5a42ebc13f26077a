"""Factorization partitions over F_p, fingerprints and field distinguishing."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from math import lcm

import gmpy2

from ..exact import zpoly
from ..exact.poly import UniPoly
from ..exact.smooth import is_prime
from . import gfp


class FrobeniusError(ValueError):
    pass


def _int_coeffs(f) -> list[int]:
    if isinstance(f, UniPoly):
        if not f.is_integral():
            raise FrobeniusError("expected a polynomial with integer coefficients")
        return [int(c) for c in f.int_coeffs()]
    return [int(c) for c in f]


def _check_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p):
        raise FrobeniusError(f"{p} is not prime")
    return p


@dataclass(frozen=True)
class ModpFactorization:
    """Factorization of ``f mod p`` as ``lc * prod g_i^{k_i}`` with monic ``g_i``.

    ``dropped`` is the degree lost when ``p`` divides the leading coefficient;
    those roots sit at infinity and are not among ``factors``.
    """

    p: int
    lc: int
    factors: tuple[tuple[UniPoly, int], ...]
    dropped: int = 0

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def lc_divisible(self) -> bool:
        return self.dropped > 0

    def product(self) -> list[int]:
        """``lc * prod g^k`` reduced mod ``p`` (constant term first)."""
        out = [self.lc % self.p]
        for g, k in self.factors:
            gi = [int(c) for c in g.int_coeffs()]
            for _ in range(k):
                out = gfp.mul(out, gi, self.p)
        return out


def factor_mod_p(f, p: int, seed: int | None = None) -> ModpFactorization:
    """Complete factorization of an integer polynomial over F_p.

    Equal-degree splitting is randomized; ``seed`` (default from
    :func:`gfp.default_seed`) fixes it. The multiset of factors does not
    depend on the seed.
    """
    p = _check_prime(p)
    coeffs = _int_coeffs(f)
    n = len(gfp.trim(coeffs[:])) - 1
    a = gfp.reduce_mod(coeffs, p)
    if not a:
        raise FrobeniusError(f"polynomial vanishes identically mod {p}")
    lc = a[-1]
    facs = gfp.factor_monic(gfp.monic(a, p), p, seed)
    return ModpFactorization(p, lc, tuple((UniPoly(g), k) for g, k in facs), n - gfp.deg(a))


@dataclass(frozen=True)
class FactorPartition:
    """Degrees of the irreducible factors mod ``p``, repeated by multiplicity.

    ``ramified`` marks a non-squarefree reduction. ``lc_divisible`` marks a
    prime dividing the leading coefficient; the roots at infinity then count
    as a degree-1 factor of the reversed polynomial.
    """

    parts: tuple[int, ...]
    ramified: bool = False
    lc_divisible: bool = False

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted((int(k) for k in self.parts), reverse=True)))

    @classmethod
    def of(cls, *parts: int) -> FactorPartition:
        return cls(parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __str__(self):
        out = []
        for k in sorted(set(self.parts), reverse=True):
            c = self.parts.count(k)
            out.append(f"{k}^{c}" if c > 1 else str(k))
        text = " ".join(out) or "-"
        return text + (" (ramified)" if self.ramified else "")

    def to_json(self) -> dict:
        out: dict = {"parts": list(self.parts), "ramified": self.ramified}
        if self.lc_divisible:
            out["lc_divisible"] = True
        return out


def partition(f, p: int, seed: int | None = None) -> FactorPartition:
    fac = factor_mod_p(f, p, seed)
    parts = [len(g.coeffs) - 1 for g, k in fac for _ in range(k)]
    ramified = any(k > 1 for _, k in fac) or fac.dropped > 1
    if fac.dropped:
        parts.extend([1] * fac.dropped)
    return FactorPartition(tuple(parts), ramified, fac.dropped > 0)


def jacobi(a: int, n: int) -> int:
    n = int(n)
    if n <= 0 or n % 2 == 0:
        raise FrobeniusError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    return int(gmpy2.jacobi(int(a), n))


def element_order(part: FactorPartition) -> int:
    """Order of a permutation with cycle type ``part``."""
    if part.ramified:
        raise FrobeniusError("ramified reduction has no Frobenius cycle type")
    return reduce(lcm, part.parts, 1)


def fingerprint(f, primes, workers: int = 1, seed: int | None = None) -> dict[int, FactorPartition]:
    """Factorization partition at each prime; a reduction that vanishes is recorded as ramified."""
    coeffs = _int_coeffs(f)

    def one(p: int) -> tuple[int, FactorPartition]:
        try:
            return p, partition(coeffs, p, seed)
        except FrobeniusError:
            return p, FactorPartition((), ramified=True)

    ps = [_check_prime(p) for p in primes]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pairs = list(pool.map(one, ps))
    else:
        pairs = [one(p) for p in ps]
    return dict(sorted(pairs))


INDISTINGUISHABLE = "indistinguishable"


def distinguish(f, g, primes, seed: int | None = None) -> int | str:
    """Least prime, coprime to both discriminants, where the partitions differ."""
    a, b = _int_coeffs(f), _int_coeffs(g)
    if len(gfp.trim(a[:])) != len(gfp.trim(b[:])):
        raise FrobeniusError("distinguish needs polynomials of equal degree")
    da, db = int(zpoly.discriminant(a)), int(zpoly.discriminant(b))
    bad = da * db * a[-1] * b[-1]
    for p in sorted({_check_prime(p) for p in primes}):
        if bad % p == 0:
            continue
        if partition(a, p, seed).parts != partition(b, p, seed).parts:
            return p
    return INDISTINGUISHABLE
