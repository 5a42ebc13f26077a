"""Exhaustive bounded search for qualifying triples.

A qualifying triple needs every component ``v`` to carry an exponent whose
S-smooth part is at least 2 (or to be an S-unit), because an entry 1 already
breaks hyperbolicity. So each ``|v|`` has the form ``s * m**q`` with ``s`` an
S-unit, ``m > 1`` coprime to S and ``q`` a prime in S, or is an S-unit itself.
These values are tabulated up to the bound; pairs ``X <= Y`` are then joined by
testing ``X + Y`` for membership, and survivors are checked exactly.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import gcd

import numpy as np

from .triples import INF, S23, AbcTriple, normalize, qualifying_signature

# int64 keeps X + Y exact for bounds below 2**62
MAX_BOUND = 2**62


def s_units(S, bound: int) -> list[int]:
    out = [1]
    for p in S:
        grown = []
        for u in out:
            v = u * p
            while v <= bound:
                grown.append(v)
                v *= p
        out.extend(grown)
    return sorted(out)


def candidate_values(S, bound: int) -> np.ndarray:
    """Sorted distinct positive values that can appear in a qualifying triple."""
    units = s_units(S, bound)
    vals = set(units)
    primes = [int(p) for p in S]
    for q in primes:
        m = 2
        while m**q <= bound:
            if all(m % p for p in primes):
                base = m**q
                for u in units:
                    v = u * base
                    if v > bound:
                        break
                    vals.add(v)
            m += 1
    return np.array(sorted(vals), dtype=np.int64)


def _pairs_for(values: np.ndarray, lo: int, hi: int, bound: int) -> list[tuple[int, int]]:
    """Pairs ``(X, Y)`` with ``X = values[i]`` for ``lo <= i < hi``, ``X <= Y`` and ``X + Y`` tabulated."""
    out = []
    n = len(values)
    for i in range(lo, hi):
        x = int(values[i])
        if 2 * x > bound:
            break
        j = int(np.searchsorted(values, bound - x, side="right"))
        if j <= i:
            continue
        ys = values[i:j]
        sums = ys + x
        idx = np.searchsorted(values, sums)
        idx[idx >= n] = n - 1
        hits = ys[values[idx] == sums]
        if len(hits):
            g = np.gcd(hits, x)
            for y in hits[g == 1]:
                out.append((x, int(y)))
    return out


def _hyperbolic(sig) -> bool:
    return sum((Fraction(0) if e is INF else Fraction(1, e) for e in sig), Fraction(0)) < 1


def search(S=S23, bound: int = 10**6, threads: int = 1) -> list[AbcTriple]:
    """All normalized qualifying triples with every ``|component| <= bound``.

    Output is sorted by absolute values (ascending after sorting the three
    magnitudes), ties broken by the signed triple; it does not depend on
    ``threads``.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    if bound >= MAX_BOUND:
        raise ValueError(f"bound must be below 2**62, got {bound}")
    S = tuple(int(p) for p in S)
    values = candidate_values(S, bound)
    n = len(values)
    threads = max(1, int(threads))
    if threads == 1:
        pairs = _pairs_for(values, 0, n, bound)
    else:
        # interleaved index blocks balance the shrinking inner ranges
        step = max(1, n // (threads * 16))
        blocks = [(lo, min(lo + step, n)) for lo in range(0, n, step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda b: _pairs_for(values, b[0], b[1], bound), blocks)
            pairs = [p for part in parts for p in part]
    found: set[AbcTriple] = set()
    sig_cache: dict[int, object] = {}
    for x, y in pairs:
        t = normalize(x, y, -(x + y))
        if not _hyperbolic(_cached_sig(t, S, sig_cache)):
            continue
        a, b, c = x, y, -(x + y)
        for perm in ((a, b, c), (b, a, c), (c, b, a), (a, c, b), (b, c, a), (c, a, b)):
            found.add(normalize(*perm))
    return sorted(found, key=AbcTriple.sort_key)


def _cached_sig(t: AbcTriple, S, cache: dict):
    entries = []
    for v in t:
        key = abs(v)
        if key not in cache:
            cache[key] = qualifying_signature(normalize(key, 1, -(key + 1)), S).p
        entries.append(cache[key])
    return entries


def default_threads() -> int:
    return os.cpu_count() or 1


__all__ = ["candidate_values", "default_threads", "s_units", "search"]
