"""Text format for polynomials and binary forms.

Grammar: integer-coefficient expressions in ``x`` (univariate) or ``x, y``
(forms), with ``+ - * ^`` and parentheses, e.g.::

    x^4 - x^3 - 4*x^2 + 4*x + 1
    3*(x^12 + y^12) - 18*x*y*(x^10 + y^10)

Raw coefficient lists are accepted too, written high-to-low and
comma-separated, e.g. ``[1, -1, -4, 4, 1]``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .binforms import BinForm
from .intpoly import IntPoly


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(\d+|[xy]|\^|\*|\+|-|\(|\))")


def _tokenize(text: str) -> list[str]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {text[pos:pos + 8]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _BiPoly:
    """Dense dict {(i, j): coeff} for x^i y^j during parsing."""

    def __init__(self, terms=None):
        self.terms = dict(terms or {})

    @staticmethod
    def const(c):
        return _BiPoly({(0, 0): c} if c else {})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
            if out[k] == 0:
                del out[k]
        return _BiPoly(out)

    def __neg__(self):
        return _BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for (i1, j1), v1 in self.terms.items():
            for (i2, j2), v2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + v1 * v2
                if out[k] == 0:
                    del out[k]
        return _BiPoly(out)

    def pow(self, n):
        out = _BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out


class _Parser:
    def __init__(self, tokens: list[str]):
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> _BiPoly:
        val = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at {self.peek()!r}")
        return val

    def expr(self) -> _BiPoly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next() == "-":
                sign = -sign
        val = self.term()
        if sign < 0:
            val = -val
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self) -> _BiPoly:
        val = self.factor()
        while True:
            nxt = self.peek()
            if nxt == "*":
                self.next()
                val = val * self.factor()
            elif nxt in ("x", "y", "(") or (nxt is not None and nxt.isdigit()):
                val = val * self.factor()  # implicit multiplication, e.g. 3x
            else:
                return val

    def factor(self) -> _BiPoly:
        base = self.atom()
        if self.peek() == "^":
            self.next()
            etok = self.next()
            if etok is None or not etok.isdigit():
                raise ParseError("exponent must be a nonnegative integer")
            return base.pow(int(etok))
        return base

    def atom(self) -> _BiPoly:
        tok = self.next()
        if tok is None:
            raise ParseError("unexpected end of input")
        if tok == "(":
            val = self.expr()
            if self.next() != ")":
                raise ParseError("unbalanced parenthesis")
            return val
        if tok == "-":
            return -self.atom()
        if tok == "+":
            return self.atom()
        if tok.isdigit():
            return _BiPoly.const(int(tok))
        if tok == "x":
            return _BiPoly({(1, 0): 1})
        if tok == "y":
            return _BiPoly({(0, 1): 1})
        raise ParseError(f"unexpected token {tok!r}")


def _parse_bipoly(text: str) -> _BiPoly:
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError("unterminated coefficient list")
        items = [s.strip() for s in text[1:-1].split(",") if s.strip()]
        if not items:
            raise ParseError("empty coefficient list")
        coeffs = [int(s) for s in items]  # high-to-low
        d = len(coeffs) - 1
        return _BiPoly({(d - i, 0): c for i, c in enumerate(coeffs) if c})
    return _Parser(_tokenize(text)).parse()


def parse_poly(text: str) -> IntPoly:
    """Parse a univariate integer polynomial in x."""
    bp = _parse_bipoly(text)
    if any(j for (_, j) in bp.terms):
        raise ParseError("unexpected variable y in univariate polynomial")
    d = max((i for (i, _) in bp.terms), default=0)
    coeffs = [0] * (d + 1)
    for (i, _), v in bp.terms.items():
        coeffs[i] = v
    return IntPoly(coeffs)


def parse_form(text: str) -> BinForm:
    """Parse a homogeneous integer binary form in x, y.  A univariate input
    (or coefficient list) is homogenized to its own degree."""
    bp = _parse_bipoly(text)
    if not bp.terms:
        raise ParseError("zero form")
    degrees = {i + j for (i, j) in bp.terms}
    has_y = any(j for (_, j) in bp.terms)
    if len(degrees) > 1:
        if has_y:
            raise ParseError(f"form is not homogeneous (term degrees {sorted(degrees)})")
        # univariate input: homogenize with y to the top degree
        d = max(degrees)
        bp = _BiPoly({(i, d - i): v for (i, _), v in bp.terms.items()})
    d = max(degrees)
    coeffs = [0] * (d + 1)
    for (i, j), v in bp.terms.items():
        coeffs[d - i] = v
    return BinForm(coeffs)


_ROOT_SELECTOR = re.compile(r"^(?P<poly>.*?)@(?:root\s*(?:≈|~=|~)\s*(?P<near>-?\d+(?:\.\d+)?)|index\s*(?P<idx>\d+))$")


def parse_algnum_spec(text: str) -> tuple[IntPoly, dict]:
    """Parse 'POLY@root≈DECIMAL' or 'POLY@indexK' selectors.

    Returns (poly, selector) where selector is {'near': Fraction} or
    {'index': int}; a bare polynomial selects index 0.
    """
    m = _ROOT_SELECTOR.match(text.strip())
    if not m:
        return parse_poly(text), {"index": 0}
    poly = parse_poly(m.group("poly"))
    if m.group("near") is not None:
        return poly, {"near": Fraction(m.group("near"))}
    return poly, {"index": int(m.group("idx"))}
