"""Data model for three-point covers and their specializations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from gmpy2 import mpz

from ..exact import zpoly
from ..exact.expr import Sparse, parse_poly
from ..exact.poly import UniPoly, poly_disc
from ..exact.quad import QuadElem, format_s_unit
from ..fermat.triples import Signature


class CoverError(ValueError):
    pass


class BiPoly:
    """Polynomial in a parameter and ``x``, stored as ``sum_k t**k * F_k(x)``.

    ``terms[k]`` is the ``UniPoly`` coefficient of ``t**k``; trailing zero
    coefficients are dropped.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        ts = [t if isinstance(t, UniPoly) else UniPoly(t) for t in terms]
        while ts and not ts[-1]:
            ts.pop()
        object.__setattr__(self, "terms", tuple(ts))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def from_sparse(cls, sp: Sparse) -> BiPoly:
        if not sp:
            return cls(())
        kmax = max(i for i, _ in sp)
        rows: list[dict[int, object]] = [dict() for _ in range(kmax + 1)]
        for (i, j), c in sp.items():
            rows[i][j] = c
        terms = []
        for row in rows:
            if not row:
                terms.append(UniPoly())
                continue
            jmax = max(row)
            terms.append(UniPoly([row.get(j, 0) for j in range(jmax + 1)]))
        return cls(terms)

    @classmethod
    def parse(cls, text: str, param: str = "t") -> BiPoly:
        return cls.from_sparse(parse_poly(text, param))

    @property
    def tdeg(self) -> int:
        return len(self.terms) - 1

    @property
    def xdeg(self) -> int:
        return max((t.degree for t in self.terms), default=-1)

    def is_rational(self) -> bool:
        return all(t.is_rational() for t in self.terms)

    def is_integral(self) -> bool:
        return all(t.is_integral() for t in self.terms)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other: BiPoly) -> BiPoly:
        n = max(len(self.terms), len(other.terms))
        z = UniPoly()
        return BiPoly(
            [
                (self.terms[k] if k < len(self.terms) else z) + (other.terms[k] if k < len(other.terms) else z)
                for k in range(n)
            ]
        )

    def __mul__(self, other: BiPoly) -> BiPoly:
        if not self.terms or not other.terms:
            return BiPoly(())
        out = [UniPoly()] * (len(self.terms) + len(other.terms) - 1)
        for i, a in enumerate(self.terms):
            if not a:
                continue
            for j, b in enumerate(other.terms):
                if b:
                    out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    def scale(self, c) -> BiPoly:
        return BiPoly([t * c for t in self.terms])

    def conjugate(self) -> BiPoly:
        return BiPoly([t.conjugate() for t in self.terms])

    def at(self, tau) -> UniPoly:
        """Substitute a value for the parameter."""
        acc = UniPoly()
        for t in reversed(self.terms):
            acc = acc * tau + t
        return acc

    def leading_x(self) -> UniPoly:
        """Coefficient of ``x**xdeg`` as a polynomial in the parameter."""
        n = self.xdeg
        return UniPoly([t[n] for t in self.terms])

    def cleared(self) -> tuple[list[list], int]:
        """Integer coefficient lists ``F_k`` and a denominator ``d`` with ``self = sum t^k F_k / d``."""
        if not self.is_rational():
            raise CoverError("cover has irrational coefficients; double it first")
        d = reduce(lcm, (t.denominator() for t in self.terms), 1)
        rows = []
        for t in self.terms:
            rows.append([mpz(c.numerator) * (d // c.denominator) for c in t.coeffs])
        return rows, d

    def specialize_int(self, tau) -> list:
        """``den(tau)**tdeg * f(tau, x)`` as a primitive integer list with positive lead.

        Raises ``CoverError`` if the ``x``-degree drops at ``tau``.
        """
        tau = Fraction(tau)
        n, d = mpz(tau.numerator), mpz(tau.denominator)
        rows, _ = self.cleared()
        K = len(rows) - 1
        N = self.xdeg
        acc: list = []
        for k, row in enumerate(rows):
            if not row:
                continue
            acc = zpoly.add(acc, zpoly.scale(row, n**k * d ** (K - k)))
        if len(acc) - 1 < N:
            raise CoverError(f"cover degenerates at tau = {tau}")
        return zpoly.primitive(acc)[1]

    def to_text(self, param: str = "t") -> str:
        """Expanded canonical form, used for checksums."""
        parts = []
        for k, t in enumerate(self.terms):
            for j, c in enumerate(t.coeffs):
                if c:
                    parts.append(f"{param}^{k}*x^{j}:{c}")
        return ";".join(parts)


# Partitions


def normalize_partition(parts) -> tuple[int, ...]:
    return tuple(sorted((int(p) for p in parts), reverse=True))


def partition_order(parts) -> int:
    return reduce(lcm, parts, 1)


def power_cycle_type(parts, i: int) -> tuple[int, ...]:
    """Cycle type of the ``i``-th power of a permutation of cycle type ``parts``."""
    if i < 0:
        raise ValueError("power must be nonnegative")
    out = []
    for k in parts:
        g = gcd(k, i)
        out.extend([k // g] * g)
    return normalize_partition(out)


def format_partition(parts) -> str:
    """Exponential notation, e.g. ``(8, 8, 4, 4, 1, 1)`` -> ``8^2 4^2 1^2``."""
    out = []
    for k in sorted(set(parts), reverse=True):
        m = parts.count(k)
        out.append(f"{k}^{m}" if m > 1 else str(k))
    return " ".join(out)


# Discriminant shapes


@dataclass(frozen=True)
class DiscShape:
    """``D(t) = delta * t**a * (t - 1)**b * c(t)**2``."""

    delta: object
    a: int
    b: int
    c: UniPoly = field(default_factory=lambda: UniPoly((1,)))

    def polynomial(self) -> UniPoly:
        t = UniPoly.x()
        return UniPoly((self.delta,)) * t**self.a * (t - 1) ** self.b * self.c * self.c

    def canonical(self) -> DiscShape:
        """Same polynomial with ``c`` monic; the leading factor moves into ``delta``."""
        lc = self.c.lc
        return DiscShape(self.delta * lc * lc, self.a, self.b, self.c.monic())

    def same_as(self, other: DiscShape) -> bool:
        x, y = self.canonical(), other.canonical()
        return (x.delta, x.a, x.b, x.c) == (y.delta, y.a, y.b, y.c)

    def to_json(self) -> dict:
        return {
            "delta": str(self.delta),
            "delta_factored": format_s_unit(self.delta),
            "a": self.a,
            "b": self.b,
            "c": self.c.to_json(),
        }


@dataclass(frozen=True)
class Cover:
    name: str
    degree: int
    f: BiPoly
    lambdas: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    class_labels: tuple[str, str, str] = ("", "", "")
    bad_set: tuple[int, ...] = (2, 3)
    disc_shape: DiscShape | None = None
    monodromy_group: str = ""
    galois_group: str = ""
    genus: int = 0
    components: int = 1
    base: str = "t"
    field: str = "Q"
    star_signature: Signature | None = None
    auxiliary: bool = False
    f_star: BiPoly | None = None
    notes: str = ""

    @property
    def N(self) -> int:
        return self.degree

    def cusp_orders(self) -> tuple[int, int, int]:
        return tuple(partition_order(lam) for lam in self.lambdas)

    def riemann_hurwitz_ok(self) -> bool:
        N = self.degree
        rhs = -2 * N + sum(N - len(lam) for lam in self.lambdas)
        return self.components * (2 * self.genus - 2) == rhs

    def is_rational(self) -> bool:
        return self.f.is_rational()

    def form(self, which: str = "canonical") -> BiPoly:
        if which in ("canonical", "f"):
            return self.f
        if which in ("star", "trinomial_star"):
            if self.f_star is None:
                raise CoverError(f"cover {self.name} has no trinomial star form")
            return self.f_star
        raise CoverError(f"unknown form {which!r}")


@dataclass(frozen=True)
class SpecializedAlgebra:
    cover: str
    tau: Fraction
    poly: UniPoly
    separable: bool
    form: str = "canonical"

    def disc(self) -> Fraction:
        return poly_disc(self.poly)


def specialize(c: Cover, tau, form: str = "canonical") -> SpecializedAlgebra:
    """Exact specialization at ``tau``: cleared, primitive, positive leading coefficient."""
    f = c.form(form)
    if not f.is_rational():
        raise CoverError(f"cover {c.name} is defined over Q(sqrt -2); use conj_double first")
    tau = Fraction(tau)
    coeffs = f.specialize_int(tau)
    poly = UniPoly(coeffs)
    sep = bool(zpoly.discriminant(coeffs)) if poly.degree >= 1 else False
    return SpecializedAlgebra(c.name, tau, poly, sep, "star" if form in ("star", "trinomial_star") else "canonical")


def conj_double(c: Cover, name: str | None = None) -> Cover:
    """Product of a cover with its Galois conjugate, as a cover over Q."""
    prod = c.f * c.f.conjugate()
    if not prod.is_rational():
        raise CoverError(f"doubling {c.name} leaves sqrt(-2) terms; check the cover data")
    lambdas = tuple(normalize_partition(lam + lam) for lam in c.lambdas)
    return Cover(
        name=name or f"{c.name}*conj",
        degree=2 * c.degree,
        f=prod,
        lambdas=lambdas,
        class_labels=("", "", ""),
        bad_set=c.bad_set,
        disc_shape=None,
        monodromy_group="",
        galois_group="",
        genus=c.genus,
        components=2 * c.components if not c.is_rational() else c.components,
        base=c.base,
        field="Q",
        star_signature=c.star_signature,
        auxiliary=c.auxiliary,
    )


# Discriminant shape recovery


def _interpolate(xs: list[int], ys: list) -> UniPoly:
    """Newton interpolation over the coefficient field of ``ys``."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    acc = UniPoly((coef[-1],))
    for i in range(n - 2, -1, -1):
        acc = acc * UniPoly((-xs[i], 1)) + coef[i]
    return acc


def _int_interpolate(xs: list[int], ys: list) -> UniPoly:
    """Interpolation for integer data; divided differences stay rational."""
    return _interpolate(xs, [Fraction(int(y)) for y in ys])


def poly_sqrt(p: UniPoly) -> UniPoly | None:
    """Monic square root of a monic polynomial over a field, or ``None``."""
    if not p:
        return UniPoly()
    n = p.degree
    if n % 2:
        return None
    m = n // 2
    # coefficients of the root from the top down
    root = [Fraction(0)] * (m + 1)
    root[m] = Fraction(1)
    for k in range(1, m + 1):
        # coefficient of x^(n-k) in root^2 is 2*root[m-k] plus known cross terms
        s = 0
        for i in range(m - k + 1, m):
            s = s + root[i] * root[2 * m - k - i]
        root[m - k] = (p[n - k] - s) / 2
    r = UniPoly(root)
    return r if r * r == p else None


def _strip_root(p: UniPoly, root: int) -> tuple[UniPoly, int]:
    k = 0
    lin = UniPoly((-root, 1))
    while p and p(root) == 0:
        p = p.exact_div(lin)
        k += 1
    return p, k


def disc_polynomial(f: BiPoly) -> UniPoly:
    """``disc_x f(t, x)`` as an exact polynomial in ``t`` by evaluation and interpolation."""
    N = f.xdeg
    bound = (2 * N - 2) * max(f.tdeg, 0)
    xs = list(range(2, bound + 3))
    if f.is_rational():
        rows, den = f.cleared()
        ys = []
        for x0 in xs:
            acc: list = []
            for k, row in enumerate(rows):
                acc = zpoly.add(acc, zpoly.scale(row, mpz(x0) ** k))
            if len(acc) - 1 < N:
                raise CoverError(f"x-degree drops at t = {x0}; choose other sample points")
            ys.append(zpoly.discriminant(acc))
        D = _int_interpolate(xs, ys)
        return D * Fraction(1, den ** (2 * N - 2))
    ys = [poly_disc(f.at(x0)) for x0 in xs]
    return _interpolate(xs, ys)


def disc_shape_compute(c: Cover | BiPoly, scaled: bool = True) -> DiscShape:
    """Canonical factorization ``Delta * t^a * (t-1)^b * c(t)^2`` of the cover discriminant.

    With ``scaled`` (the default) the factored quantity is ``lc_x(f) * disc_x(f)``,
    which equals ``+-Res_x(f, f_x)`` and is the normalization used by the recorded
    discriminant lines; the two agree whenever ``f`` is monic in ``x``.
    """
    f = c.f if isinstance(c, Cover) else c
    D = disc_polynomial(f)
    if not D:
        raise CoverError("discriminant vanishes identically (inseparable cover)")
    if scaled:
        D = D * f.leading_x()
    D, a = _strip_root(D, 0)
    D, b = _strip_root(D, 1)
    delta = D.lc
    root = poly_sqrt(D.monic())
    if root is None:
        name = c.name if isinstance(c, Cover) else "cover"
        raise CoverError(f"{name}: residual discriminant factor is not a square; check the cover data")
    return DiscShape(delta, a, b, root)
