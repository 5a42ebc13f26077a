"""Elements of a quadratic extension Q(sqrt d)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _rat(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    raise TypeError(f"expected a rational, got {type(v).__name__}")


class QuadElem:
    """``a + b*sqrt(d)`` with rational ``a``, ``b`` and a fixed square-free ``d``.

    Instances are immutable. Arithmetic with plain integers and Fractions is
    supported on both sides; mixing two different ``d`` raises ``ValueError``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = -2):
        object.__setattr__(self, "a", _rat(a))
        object.__setattr__(self, "b", _rat(b))
        object.__setattr__(self, "d", int(d))

    def __setattr__(self, name, value):
        raise AttributeError("QuadElem is immutable")

    @classmethod
    def sqrt_d(cls, d: int = -2) -> QuadElem:
        return cls(0, 1, d)

    def _lift(self, other) -> QuadElem | None:
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise ValueError(f"mixing Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Rational)):
            return QuadElem(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadElem:
        return QuadElem(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> QuadElem:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadElem division by zero")
        return QuadElem(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElem(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"QuadElem({self.a!s}, {self.b!s}, d={self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        if self.a == 0:
            return f"{self.b}*{root}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*{root}"


def _is_integral(z: QuadElem) -> bool:
    return z.a.denominator == 1 and z.b.denominator == 1


def format_s_unit(value) -> str:
    """Factored text for a constant built from 2, 3 (and, over Q(sqrt -2), their prime factors).

    Rationals print as ``-2^520*3^459*r`` with any other cofactor ``r`` left
    as is. Elements of Z[sqrt -2] print as ``u*w^a*(1+w)^b*(1-w)^c*r`` with
    ``w = sqrt(-2)``; ``1 + w`` and ``1 - w`` are the two primes above 3.
    """
    if isinstance(value, QuadElem) and value.b != 0 and value.d == -2 and _is_integral(value):
        z = value
        exps = []
        for pi in (QuadElem(0, 1), QuadElem(1, 1), QuadElem(1, -1)):
            k = 0
            while _is_integral(z / pi):
                z, k = z / pi, k + 1
            exps.append(k)
        a, b, c = exps
        # w^2 = -2 and (1 + w)(1 - w) = 3
        k3 = min(b, c)
        k2, a = divmod(a, 2)
        if k2 % 2:
            z = -z
        pieces = [f"{name}^{k}" if k > 1 else name for name, k in
                  (("2", k2), ("3", k3), ("w", a), ("(1+w)", b - k3), ("(1-w)", c - k3)) if k]
        if not pieces:
            return str(value)
        head = "-" if z == -1 else ("" if z == 1 else f"({z})*")
        return head + "*".join(pieces)
    q = Fraction(value.a if isinstance(value, QuadElem) else value)
    if q == 0:
        return "0"
    pieces = []
    for part, sep in ((q.numerator, ""), (q.denominator, "/")):
        n = abs(part)
        if n == 1 and sep:
            continue
        fs = []
        for p in (2, 3):
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            if k:
                fs.append(f"{p}^{k}" if k > 1 else str(p))
        if n != 1 or not fs:
            fs.append(str(n))
        pieces.append(sep + "*".join(fs))
    return ("-" if q < 0 else "") + "".join(pieces)
