"""Dense polynomial arithmetic and factorization over a prime field F_p.

Polynomials are lists of ints in ``[0, p)``, constant term first, with no
trailing zeros; the zero polynomial is ``[]``.
"""

from __future__ import annotations

import os
import random

Poly = list[int]

SEED_ENV = "FIELDFORGE_SEED"


def default_seed() -> int:
    """Seed for equal-degree splitting: ``$FIELDFORGE_SEED`` if set, else 0."""
    return int(os.environ.get(SEED_ENV, "0"))


def trim(a: Poly) -> Poly:
    while a and not a[-1]:
        a.pop()
    return a


def reduce_mod(coeffs, p: int) -> Poly:
    return trim([int(c) % p for c in coeffs])


def deg(a: Poly) -> int:
    return len(a) - 1


def add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(a: Poly, b: Poly, p: int) -> Poly:
    return add(a, [(-c) % p for c in b], p)


def scale(a: Poly, c: int, p: int) -> Poly:
    c %= p
    return trim([(x * c) % p for x in a]) if c else []


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = a[:]
    db = deg(b)
    if deg(r) < db:
        return [], r
    inv = pow(b[-1], -1, p)
    q = [0] * (deg(r) - db + 1)
    for k in range(deg(r) - db, -1, -1):
        c = (r[k + db] * inv) % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] = (r[k + j] - c * y) % p
    return trim(q), trim(r[:db])


def rem(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_(a, b, p)[1]


def quo(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_(a, b, p)[0]


def monic(a: Poly, p: int) -> Poly:
    if not a:
        return []
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def derivative(a: Poly, p: int) -> Poly:
    return trim([(i * c) % p for i, c in enumerate(a)][1:])


def powmod(a: Poly, n: int, f: Poly, p: int) -> Poly:
    result: Poly = [1]
    base = rem(a, f, p)
    while n:
        if n & 1:
            result = rem(mul(result, base, p), f, p)
        n >>= 1
        if n:
            base = rem(mul(base, base, p), f, p)
    return result


def pth_root(a: Poly, p: int) -> Poly:
    """``b`` with ``b^p = a``, for ``a`` whose derivative vanishes (coefficients in F_p)."""
    return trim([a[i] for i in range(0, len(a), p)])


def squarefree(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Squarefree decomposition of a monic ``f``: pairs ``(g, k)`` with ``f = prod g^k``."""
    out: list[tuple[Poly, int]] = []
    if deg(f) < 1:
        return out
    df = derivative(f, p)
    if not df:
        return [(g, k * p) for g, k in squarefree(pth_root(f, p), p)]
    c = gcd(f, df, p)
    w = quo(f, c, p)
    i = 1
    while deg(w) > 0:
        y = gcd(w, c, p)
        z = quo(w, y, p)
        if deg(z) > 0:
            out.append((z, i))
        i += 1
        w, c = y, quo(c, y, p)
    if deg(c) > 0:
        out.extend((g, k * p) for g, k in squarefree(pth_root(c, p), p))
    return out


def distinct_degree(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Split a monic squarefree ``f`` into products of irreducibles of equal degree."""
    out: list[tuple[Poly, int]] = []
    x = [0, 1]
    h = x[:]
    d = 0
    while deg(f) >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if deg(g) > 0:
            out.append((g, d))
            f = quo(f, g, p)
            h = rem(h, f, p)
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def _splitter(a: Poly, d: int, f: Poly, p: int) -> Poly:
    if p == 2:
        # Trace map F_{2^d} -> F_2 lands in {0, 1}.
        t, s = a[:], a[:]
        for _ in range(d - 1):
            s = rem(mul(s, s, p), f, p)
            t = add(t, s, p)
        return t
    return sub(powmod(a, (p**d - 1) // 2, f, p), [1], p)


def equal_degree(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of a monic product of degree-``d`` irreducibles."""
    if deg(f) == d:
        return [f]
    n = deg(f)
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if deg(a) < 1:
            continue
        g = gcd(f, _splitter(a, d, f, p), p)
        if 0 < deg(g) < n:
            break
    return equal_degree(g, d, p, rng) + equal_degree(quo(f, g, p), d, p, rng)


def factor_monic(f: Poly, p: int, seed: int | None = None) -> list[tuple[Poly, int]]:
    """Irreducible factors of a monic ``f`` with multiplicity, sorted by (degree, coefficients)."""
    rng = random.Random(default_seed() if seed is None else seed)
    found: dict[tuple[int, ...], int] = {}
    for g, k in squarefree(f, p):
        for h, d in distinct_degree(g, p):
            for q in equal_degree(h, d, p, rng):
                key = tuple(q)
                found[key] = found.get(key, 0) + k
    return sorted(((list(q), k) for q, k in found.items()), key=lambda qk: (len(qk[0]), qk[0][::-1]))


def is_irreducible(f: Poly, p: int) -> bool:
    """Rabin's test for a monic ``f``."""
    n = deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for q in {q for q in range(2, n + 1) if n % q == 0 and all(q % r for r in range(2, q))}:
        h = powmod(x, p ** (n // q), f, p)
        if deg(gcd(f, sub(h, x, p), p)) > 0:
            return False
    return not sub(powmod(x, p**n, f, p), x, p)
