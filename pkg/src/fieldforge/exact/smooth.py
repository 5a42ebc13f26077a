"""S-smooth splitting of integers and a few prime utilities."""

from __future__ import annotations

from dataclasses import dataclass, field

import gmpy2
import numpy as np


@dataclass(frozen=True)
class SmoothFactorization:
    """``n == sign * cofactor * prod(p**e for p, e in smooth_part.items())``."""

    sign: int
    smooth_part: dict[int, int] = field(default_factory=dict)
    cofactor: int = 1

    def smooth_value(self) -> int:
        out = 1
        for p, e in self.smooth_part.items():
            out *= p**e
        return out

    def reconstruct(self) -> int:
        return self.sign * self.cofactor * self.smooth_value()

    def is_unit(self) -> bool:
        """True when the input was divisible only by the listed primes."""
        return self.cofactor == 1


def smooth_factor(n: int, primes) -> SmoothFactorization:
    if n == 0:
        raise ValueError("cannot factor zero")
    sign = -1 if n < 0 else 1
    m = gmpy2.mpz(abs(n))
    part: dict[int, int] = {}
    for p in primes:
        m, e = gmpy2.remove(m, p) if m > 1 else (m, 0)
        if e:
            part[int(p)] = int(e)
    return SmoothFactorization(sign, part, int(m))


def perfect_power_exponent(n: int) -> int | None:
    """Largest ``k`` with ``n == y**k`` for an integer ``y >= 2``; ``None`` for ``n == 1``.

    ``n`` must be positive. Works by trial roots over prime exponents, so no
    integer factorization is needed.
    """
    if n < 1:
        raise ValueError("expected a positive integer")
    if n == 1:
        return None
    k = 1
    m = gmpy2.mpz(n)
    p = 2
    while (1 << p) <= m:
        root, exact = gmpy2.iroot(m, p)
        if exact:
            m = root
            k *= p
            continue
        p = int(gmpy2.next_prime(p))
    return k


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return [int(p) for p in np.nonzero(sieve)[0]]


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes ``p`` with ``lo <= p <= hi``."""
    out = []
    p = int(gmpy2.next_prime(max(lo, 2) - 1))
    while p <= hi:
        out.append(p)
        p = int(gmpy2.next_prime(p))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and bool(gmpy2.is_prime(n, 50))


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero")
    return int(gmpy2.remove(gmpy2.mpz(n), p)[1])
