"""The two-parameter family of trinomial covers X_{N,m}."""

from __future__ import annotations

import warnings
from fractions import Fraction
from math import gcd

from ..exact.poly import UniPoly
from ..exact.smooth import primes_up_to
from ..fermat.triples import Signature
from .model import BiPoly, Cover, CoverError, DiscShape, normalize_partition


def trinomial_vw(N: int, m: int) -> tuple[int, int]:
    """``v`` in ``[0, r)`` with ``N v = 1 (mod r)`` and ``w = (N v - 1) / r``."""
    r = N - m
    v = next(v for v in range(r) if (N * v - 1) % r == 0)
    return v, (N * v - 1) // r


def trinomial_disc_shape(N: int, m: int) -> DiscShape:
    """Closed form of ``lc * disc`` of the canonical form; ``lc = m**m`` is constant."""
    r = N - m
    sign = -1 if ((N + 2 * m) * (N + 1) // 2) % 2 else 1
    delta = sign * N**N * m ** (N * m) * r ** ((N - 1) * m)
    return DiscShape(Fraction(delta), N - 1, 1, UniPoly((1,)))


def _bad_primes(n: int) -> tuple[int, ...]:
    return tuple(int(p) for p in primes_up_to(max(2, n)) if n % int(p) == 0)


def trinomial_cover(N: int, m: int) -> Cover:
    """``X_{N,m}`` with its canonical form and (for ``N > 2``) the trinomial star form.

    Pairs with ``m > N/2`` are swapped to ``(N, N - m)``, which defines an
    isomorphic cover; a warning records the swap.
    """
    N, m = int(N), int(m)
    if not N > m >= 1:
        raise CoverError(f"trinomial cover needs N > m >= 1, got ({N},{m})")
    if gcd(N, m) != 1:
        raise CoverError(f"trinomial cover needs gcd(N, m) = 1, got ({N},{m})")
    if 2 * m > N:
        warnings.warn(f"trinomial ({N},{m}) swapped to ({N},{N - m}); the covers are isomorphic", stacklevel=2)
        m = N - m
    r = N - m
    x = UniPoly.x()
    f = BiPoly([UniPoly.monomial(N, m**m), -((x * N - r) ** m)])
    f_star = None
    notes = ""
    v, w = trinomial_vw(N, m)
    if w >= 0:
        # m y^N - N t^v y^m + r t^w, grouped by powers of t
        rows: dict[int, UniPoly] = {}
        for k, term in ((0, UniPoly.monomial(N, m)), (v, UniPoly.monomial(m, -N)), (w, UniPoly.const(r))):
            rows[k] = rows.get(k, UniPoly()) + term
        f_star = BiPoly([rows.get(k, UniPoly()) for k in range(max(rows) + 1)])
    else:
        notes = "no star form: w = -1 for N = 2"
    return Cover(
        name=f"trinomial:{N},{m}",
        degree=N,
        f=f,
        lambdas=(
            (N,),
            normalize_partition([2] + [1] * (N - 2)),
            normalize_partition([m, r]),
        ),
        bad_set=_bad_primes(N * m * r),
        disc_shape=trinomial_disc_shape(N, m),
        monodromy_group=f"S{N}",
        galois_group=f"S{N}",
        star_signature=Signature(N, 2, m * r),
        f_star=f_star,
        notes=notes,
    )


__all__ = ["trinomial_cover", "trinomial_disc_shape", "trinomial_vw"]
