"""Rational literals in the notation used for specialization points.

Grammar: ``sign? factor ("*" factor)* ("/" factor ("*" factor)*)?`` with
``factor := integer ("^" integer)?``. For example ``-23^3`` is -12167 and
``13^3*1201^3/3^8*11^8`` is 13^3 1201^3 / (3^8 11^8).
"""

from __future__ import annotations

import re
from fractions import Fraction

_FACTOR = re.compile(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*")


class RatExprError(ValueError):
    pass


def _product(text: str, whole: str) -> int:
    value = 1
    for piece in text.split("*"):
        m = _FACTOR.fullmatch(piece)
        if not m:
            raise RatExprError(f"malformed factor {piece.strip()!r} in {whole!r}")
        value *= int(m.group(1)) ** int(m.group(2) or 1)
    return value


def parse_rat(text: str, allow_zero: bool = False) -> Fraction:
    """Evaluate a rational literal exactly."""
    s = text.strip().replace("−", "-").replace("·", "*")
    if not s:
        raise RatExprError("empty rational expression")
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        s = s[1:]
    if s.count("/") > 1:
        raise RatExprError(f"at most one '/' allowed in {text!r}")
    num, _, den = s.partition("/")
    n = _product(num, text)
    d = _product(den, text) if den else 1
    if d == 0:
        raise RatExprError(f"zero denominator in {text!r}")
    value = Fraction(sign * n, d)
    if value == 0 and not allow_zero:
        raise RatExprError(f"expression {text!r} is zero")
    return value


def format_rat(q: Fraction) -> str:
    """Decimal ``n/d`` form (or ``n`` for integers)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


__all__ = ["RatExprError", "format_rat", "parse_rat"]
