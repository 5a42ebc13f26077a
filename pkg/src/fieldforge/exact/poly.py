"""Univariate polynomials over Q or Q(sqrt -2), with resultants and discriminants."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import reduce
from math import lcm
from numbers import Rational

import gmpy2
from gmpy2 import mpz

from . import zpoly
from .quad import QuadElem


def _coerce(c):
    if isinstance(c, QuadElem):
        return c.a if c.b == 0 else c
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(int(c.numerator), int(c.denominator))
    if type(c).__name__ == "mpz":
        return Fraction(int(c))
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class UniPoly:
    """Immutable polynomial with coefficients stored constant term first.

    Coefficients are ``Fraction`` or ``QuadElem``; a ``QuadElem`` whose
    irrational part vanishes is stored as its rational part, so a polynomial is
    "rational" exactly when every stored coefficient is a ``Fraction``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # construction helpers

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> UniPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> UniPoly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots) -> UniPoly:
        out = cls((1,))
        for r in roots:
            out = out * cls((-_coerce(r), 1))
        return out

    # basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def is_integral(self) -> bool:
        return self.is_rational() and all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational, QuadElem)):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # ring operations

    @staticmethod
    def _lift(other) -> UniPoly | None:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Rational, QuadElem)):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational, QuadElem)):
            c = _coerce(other)
            return UniPoly([v * c for v in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        if self.is_integral() and other.is_integral():
            return UniPoly(zpoly.mul(self.int_coeffs(), other.int_coeffs()))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        if self.is_integral():
            return UniPoly(zpoly.power(self.int_coeffs(), n))
        result = UniPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        """Euclidean division over the coefficient field."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        inv = 1 / other.lc if isinstance(other.lc, Fraction) else other.lc.inverse()
        q = [Fraction(0)] * max(len(r) - db, 0)
        b = other.coeffs
        while len(r) - 1 >= db and r:
            k = len(r) - 1 - db
            c = r[-1] * inv
            q[k] = c
            for i in range(db + 1):
                r[i + k] = r[i + k] - c * b[i]
            r.pop()
            while r and not r[-1]:
                r.pop()
        return UniPoly(q), UniPoly(r)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (1 / Fraction(other))
        if isinstance(other, QuadElem):
            return self * other.inverse()
        return NotImplemented

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = self.divmod(other)
        if r:
            raise ValueError("polynomial division is not exact")
        return q

    # calculus and evaluation

    def derivative(self) -> UniPoly:
        return UniPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        if isinstance(x, UniPoly):
            return self.compose(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: UniPoly) -> UniPoly:
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def monic(self) -> UniPoly:
        if not self:
            return self
        lc = self.lc
        inv = 1 / lc if isinstance(lc, Fraction) else lc.inverse()
        return self * inv

    def conjugate(self) -> UniPoly:
        return UniPoly([c.conjugate() if isinstance(c, QuadElem) else c for c in self.coeffs])

    def reverse(self) -> UniPoly:
        return UniPoly(self.coeffs[::-1])

    # integer views

    def denominator(self) -> int:
        if not self.is_rational():
            raise TypeError("polynomial has irrational coefficients")
        return reduce(lcm, (c.denominator for c in self.coeffs), 1)

    def int_coeffs(self) -> list:
        """Coefficients as mpz; requires an integral polynomial."""
        if not self.is_integral():
            raise ValueError("polynomial is not integral")
        return [mpz(c.numerator) for c in self.coeffs]

    def cleared(self) -> tuple[list, int]:
        """Return ``(F, d)`` with ``self == F / d``, ``F`` integral, ``d >= 1`` minimal."""
        d = self.denominator()
        return [mpz(c.numerator * (d // c.denominator)) for c in self.coeffs], d

    def primitive_part(self) -> UniPoly:
        """Primitive integer multiple with positive leading coefficient."""
        if not self:
            return self
        F, _ = self.cleared()
        return UniPoly(zpoly.primitive(F)[1])

    def content(self) -> Fraction:
        """Rational content: ``self == content * primitive_part``."""
        if not self:
            return Fraction(0)
        F, d = self.cleared()
        c, _ = zpoly.primitive(F)
        return Fraction(int(c), d)

    # gcd and squarefree structure

    def gcd(self, other: UniPoly) -> UniPoly:
        """Monic gcd over the coefficient field."""
        if self.is_rational() and other.is_rational():
            if not self:
                return other.monic()
            if not other:
                return self.monic()
            g = zpoly.gcd(self.cleared()[0], other.cleared()[0])
            return UniPoly(g).monic()
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def squarefree_decomposition(self) -> list[tuple[UniPoly, int]]:
        """Yun's algorithm: monic squarefree coprime ``(g_i, i)`` with ``f = lc * prod g_i**i``."""
        if self.degree < 1:
            return []
        f = self.monic()
        out = []
        fp = f.derivative()
        a = f.gcd(fp)
        b = f.exact_div(a)
        c = fp.exact_div(a)
        d = c - b.derivative()
        i = 1
        while b.degree > 0:
            a = b.gcd(d)
            b = b.exact_div(a)
            c = d.exact_div(a)
            if a.degree > 0:
                out.append((a, i))
            i += 1
            d = c - b.derivative()
            if not b or b.degree == 0:
                break
        return out

    def squarefree_part(self) -> UniPoly:
        if self.degree < 1:
            return UniPoly((1,)) if self else self
        return self.exact_div(self.gcd(self.derivative())).monic()

    # text forms

    def to_text(self) -> str:
        """Constant-first list of decimal strings, e.g. ``[8, -9, 0, 1]``."""
        if not self.is_rational():
            raise TypeError("text form covers rational polynomials only")
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    @classmethod
    def from_text(cls, text: str) -> UniPoly:
        raw = text.strip()
        if not (raw.startswith("[") and raw.endswith("]")):
            raise ValueError(f"malformed polynomial text: {text!r}")
        body = raw[1:-1].strip()
        if not body:
            return cls()
        return cls(Fraction(tok.strip().strip('"')) for tok in body.split(","))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return f"UniPoly({json.dumps([str(c) for c in self.coeffs])})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if isinstance(c, QuadElem):
                coef = f"({c})"
                terms.append(("+", coef + ("*" + mono if mono else "")))
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def _check_nonzero(f: UniPoly, g: UniPoly):
    if not f or not g:
        raise ValueError("resultant of the zero polynomial")


def _field_resultant(f: UniPoly, g: UniPoly):
    """Euclidean resultant over a field; used for irrational coefficients."""
    m, n = f.degree, g.degree
    if n == 0:
        return g.lc**m
    if m == 0:
        return f.lc**n
    r = f % g
    if not r:
        return Fraction(0)
    sign = -1 if (m * n) & 1 else 1
    return sign * g.lc ** (m - r.degree) * _field_resultant(g, r)


def resultant(f: UniPoly, g: UniPoly):
    """Exact resultant ``Res(f, g)``.

    Rational inputs are cleared to Z[x] and handled by the subresultant
    sequence; inputs with ``sqrt -2`` coefficients go through the Euclidean
    recurrence over the field.
    """
    _check_nonzero(f, g)
    if not (f.is_rational() and g.is_rational()):
        return _field_resultant(f, g)
    F, df = f.cleared()
    G, dg = g.cleared()
    r = zpoly.resultant(F, G)
    return Fraction(int(r), df ** g.degree * dg ** f.degree)


def poly_disc(f: UniPoly):
    """Discriminant with the sign convention ``(-1)^(n(n-1)/2) Res(f, f')/lc(f)``."""
    n = f.degree
    if n < 1:
        raise ValueError("constant polynomial")
    if not f.is_rational():
        res = _field_resultant(f, f.derivative())
        sign = -1 if (n * (n - 1) // 2) & 1 else 1
        return sign * res / f.lc
    F, d = f.cleared()
    disc = zpoly.discriminant(F)
    # disc is homogeneous of degree 2n-2 in the coefficients
    return Fraction(int(disc), d ** (2 * n - 2))


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [list(map(mpz, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = mpz(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return int(sign * a[n - 1][n - 1])


def sylvester_resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant as the Sylvester determinant; an independent check on :func:`resultant`."""
    _check_nonzero(f, g)
    F, df = f.cleared()
    G, dg = g.cleared()
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return Fraction(1)
    det = bareiss_det(sylvester_matrix(UniPoly(F), UniPoly(G)))
    return Fraction(det, df**n * dg**m)


def _reduce_scaled(R: list, den, F: list):
    """Reduce ``R/den`` modulo ``F`` keeping an integral numerator."""
    dF = len(F) - 1
    L = F[-1]

    while len(R) - 1 >= dF:
        k = len(R) - 1 - dF
        lr = R[-1]
        g = gmpy2.gcd(lr, L)
        mult, q = L // g, lr // g
        if mult != 1:
            R = [c * mult for c in R]
            den *= mult
        for i in range(dF + 1):
            R[i + k] -= q * F[i]
        R.pop()
        zpoly.trim(R)
    if R:
        c = gmpy2.gcd(zpoly.content(R), den)
        if c != 1:
            R = [v // c for v in R]
            den //= c
    else:
        den = mpz(1)
    return R, den


def compose_mod(g: UniPoly, y: UniPoly, f: UniPoly) -> UniPoly:
    """``g(y) mod f`` by Horner evaluation, reducing after every step."""
    if f.degree < 1:
        raise ValueError("modulus must be non-constant")
    if g.is_rational() and y.is_rational() and f.is_rational():
        F, _ = f.cleared()
        Y, dy = y.cleared()
        Y, dy = _reduce_scaled(Y, mpz(dy), F)
        R, den = [], mpz(1)
        for c in reversed(g.coeffs):
            # (R/den) * (Y/dy) + c
            R = zpoly.mul(R, Y)
            den = den * dy
            if c:
                R, den = _add_frac(R, den, c)
            R, den = _reduce_scaled(R, den, F)
        return UniPoly(Fraction(int(v), int(den)) for v in R)
    ym = y % f
    acc = UniPoly()
    for c in reversed(g.coeffs):
        acc = (acc * ym + c) % f
    return acc


def _add_frac(R: list, den, c: Fraction):
    """``R/den + c`` as a scaled pair ``(R', den')``."""
    q = mpz(c.denominator)
    if den % q:
        R = [v * q for v in R]
        den = den * q
    return zpoly.add(R, [mpz(c.numerator) * (den // q)]), den
