"""Integer polynomial kernels on coefficient lists (constant term first).

These work on plain lists of ``gmpy2.mpz`` with no trailing zeros; the zero
polynomial is ``[]``. ``UniPoly`` converts to this form for the expensive
operations (resultants, pseudo-division, modular composition).
"""

from __future__ import annotations

from functools import reduce

import gmpy2
from gmpy2 import mpz

ZERO = mpz(0)


def to_mpz(coeffs) -> list:
    out = [mpz(int(c)) for c in coeffs]
    return trim(out)


def trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def content(a: list) -> mpz:
    """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
    return reduce(gmpy2.gcd, a, ZERO)


def primitive(a: list) -> tuple[mpz, list]:
    """Split ``a`` as ``c * p`` with ``p`` primitive and ``lc(p) > 0``."""
    if not a:
        return ZERO, []
    c = content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return c, list(a)
    return c, [x // c for x in a]


def add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return trim(out)


def sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [ZERO] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] -= v
    return trim(out)


def scale(a: list, c) -> list:
    if c == 0:
        return []
    return [x * c for x in a]


def mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [ZERO] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj == 0:
            continue
        for i, ai in enumerate(a):
            out[i + j] += ai * bj
    return trim(out)


def power(a: list, n: int) -> list:
    result = [mpz(1)]
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def derivative(a: list) -> list:
    return trim([a[i] * i for i in range(1, len(a))])


def evaluate(a: list, x):
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def prem(a: list, b: list) -> list:
    """Pseudo-remainder: ``lc(b)**(deg a - deg b + 1) * a mod b``."""
    db = len(b) - 1
    if db < 0:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    r = list(a)
    da = len(r) - 1
    if da < db:
        return r
    lb = b[-1]
    steps = da - db + 1
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        lr = r[-1]
        r = [x * lb for x in r]
        for i in range(db + 1):
            r[i + k] -= lr * b[i]
        r.pop()
        trim(r)
        steps -= 1
    if steps:
        f = lb**steps
        r = [x * f for x in r]
    return r


def divexact(a: list, b: list) -> list:
    """Exact quotient ``a / b`` in Z[x]; raises ``ValueError`` if inexact."""
    db = len(b) - 1
    if db < 0:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    if len(r) - 1 < db:
        if r:
            raise ValueError("inexact polynomial division")
        return []
    q = [ZERO] * (len(r) - db)
    lb = b[-1]
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        c, rem = gmpy2.f_divmod(r[-1], lb)
        if rem:
            raise ValueError("inexact polynomial division")
        q[k] = c
        for i in range(db + 1):
            r[i + k] -= c * b[i]
        r.pop()
        trim(r)
    if r:
        raise ValueError("inexact polynomial division")
    return trim(q)


def resultant(a: list, b: list) -> mpz:
    """Resultant over Z by the subresultant remainder sequence.

    Follows the classical Collins/Brown scheme: contents are split off first,
    and each pseudo-remainder is divided exactly by ``g * h**delta``.
    """
    if not a or not b:
        return ZERO
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    ca, a = primitive(a)
    cb, b = primitive(b)
    t = ca**db * cb**da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da & 1 and db & 1:
            s = -1
    g = mpz(1)
    h = mpz(1)
    while True:
        delta = da - db
        if da & 1 and db & 1:
            s = -s
        r = prem(a, b)
        if not r:
            return ZERO
        a = b
        div = g * h**delta
        b = [c // div for c in r]
        da, db = db, len(b) - 1
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if db == 0:
            break
    h = b[-1] ** da // h ** (da - 1)
    return s * t * h


def discriminant(a: list) -> mpz:
    """``(-1)**(n(n-1)/2) * Res(a, a') / lc(a)`` for ``deg a >= 1``."""
    n = len(a) - 1
    if n < 1:
        raise ValueError("constant polynomial")
    res = resultant(a, derivative(a))
    q, r = gmpy2.f_divmod(res, a[-1])
    if r:
        raise ArithmeticError("discriminant not divisible by leading coefficient")
    return -q if (n * (n - 1) // 2) & 1 else q


def gcd(a: list, b: list) -> list:
    """Primitive gcd in Z[x] with positive leading coefficient."""
    if not a:
        return primitive(b)[1]
    if not b:
        return primitive(a)[1]
    ca, a = primitive(a)
    cb, b = primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prem(a, b)
        a, b = b, primitive(r)[1] if r else []
    return primitive(a)[1]
