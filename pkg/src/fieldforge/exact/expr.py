"""Parser for the polynomial expressions used in the cover data file.

Grammar (whitespace ignored, multiplication always explicit)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | "t" | "u" | "x" | "w" | "(" expr ")"

``w`` stands for sqrt(-2). The result is a sparse polynomial in the base
parameter and ``x``: a dict mapping ``(param_exp, x_exp)`` to a coefficient.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .quad import QuadElem

Sparse = dict  # (i, j) -> Fraction | QuadElem

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z])|(.))")


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        pos = m.end()
        num, name, op = m.groups()
        if num is not None:
            out.append(("int", num))
        elif name is not None:
            out.append(("name", name))
        elif op is not None and not op.isspace():
            out.append(("op", op))
    out.append(("end", ""))
    return out


def _clean(p: Sparse) -> Sparse:
    return {k: v for k, v in p.items() if v}


def s_add(a: Sparse, b: Sparse) -> Sparse:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return _clean(out)


def s_neg(a: Sparse) -> Sparse:
    return {k: -v for k, v in a.items()}


def s_mul(a: Sparse, b: Sparse) -> Sparse:
    out: Sparse = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + v1 * v2
    return _clean(out)


def s_pow(a: Sparse, n: int) -> Sparse:
    result: Sparse = {(0, 0): Fraction(1)}
    base = a
    while n:
        if n & 1:
            result = s_mul(result, base)
        n >>= 1
        if n:
            base = s_mul(base, base)
    return result


class _Parser:
    def __init__(self, text: str, param: str):
        self.toks = _tokens(text)
        self.i = 0
        self.param = param
        self.text = text

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg: str):
        raise ValueError(f"{msg} in expression {self.text!r}")

    def parse(self) -> Sparse:
        out = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return out

    def expr(self) -> Sparse:
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = s_add(acc, rhs if op == "+" else s_neg(rhs))
        return acc

    def term(self) -> Sparse:
        acc = self.unary()
        while self.peek() == ("op", "*"):
            self.take()
            acc = s_mul(acc, self.unary())
        return acc

    def unary(self) -> Sparse:
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return s_neg(self.unary())
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Sparse:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                self.fail("exponent must be a nonnegative integer")
            return s_pow(base, int(val))
        return base

    def atom(self) -> Sparse:
        kind, val = self.take()
        if kind == "int":
            return _clean({(0, 0): Fraction(int(val))})
        if kind == "name":
            if val == "x":
                return {(0, 1): Fraction(1)}
            if val == self.param:
                return {(1, 0): Fraction(1)}
            if val == "w":
                return {(0, 0): QuadElem(0, 1, -2)}
            self.fail(f"unknown symbol {val!r}")
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                self.fail("missing ')'")
            return inner
        self.fail(f"unexpected token {val!r}")


def parse_poly(text: str, param: str = "t") -> Sparse:
    """Parse ``text`` into a sparse ``{(param_exp, x_exp): coeff}`` dict."""
    return _Parser(text, param).parse()
