"""Scalar literal grammar and canonical serialization.

* rational: ``p`` or ``p/q``
* rational function: infix expression over ``t`` with ``+ - * / ^``,
  integer literals and parentheses; ``^`` binds tighter than unary minus,
  which binds tighter than ``* /``.
* quaternion: ``[w,x,y,z]`` with rational components.

``format_scalar`` emits text that ``parse_scalar`` reads back to an equal value.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import LiteralSyntaxError
from .rings import QUATERNION, RATFUNC, RATIONAL, Domain, Quaternion, RatFunc, domain_of

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(t)|([-+*/^()]))")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise LiteralSyntaxError("malformed rational literal", text, _first_bad(text))
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise LiteralSyntaxError("zero denominator", text, m.start(2))
    return Fraction(num, den)


def _first_bad(text: str) -> int:
    for pos, ch in enumerate(text):
        if not (ch.isdigit() or ch in "+-/ "):
            return pos
    return len(text)


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN_RE.match(text, pos)
            if not m:
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise LiteralSyntaxError(f"unexpected character {text[bad]!r}", text, bad)
            start = m.start(m.lastindex)
            self.tokens.append((m.group(m.lastindex), start))
            pos = m.end()
        self.tokens.append(("", len(text)))
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def where(self) -> int:
        return self.tokens[self.i][1]

    def take(self) -> str:
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def expect(self, tok: str):
        if self.peek() != tok:
            found = self.peek() or "end of input"
            raise LiteralSyntaxError(f"expected {tok!r}, found {found!r}", self.text, self.where())
        self.take()

    def parse(self) -> RatFunc:
        value = self.expr()
        if self.peek():
            raise LiteralSyntaxError(f"unexpected {self.peek()!r}", self.text, self.where())
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                value = value + self.term()
            else:
                value = value - self.term()
        return value

    def term(self) -> RatFunc:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            pos = self.where()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise LiteralSyntaxError("division by zero", self.text, pos)
                value = value / rhs
        return value

    def unary(self) -> RatFunc:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek() != "^":
            return base
        self.take()
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        pos = self.where()
        tok = self.take()
        if not tok.isdigit():
            raise LiteralSyntaxError("exponent must be an integer literal", self.text, pos)
        n = sign * int(tok)
        if n < 0 and not base:
            raise LiteralSyntaxError("division by zero", self.text, pos)
        return base**n

    def atom(self) -> RatFunc:
        pos = self.where()
        tok = self.take()
        if tok.isdigit():
            return RatFunc(int(tok))
        if tok == "t":
            return RatFunc.t()
        if tok == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise LiteralSyntaxError(f"unexpected {tok or 'end of input'!r}", self.text, pos)


def parse_ratfunc(text: str) -> RatFunc:
    return _ExprParser(text).parse()


def parse_quaternion(text: str) -> Quaternion:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise LiteralSyntaxError("quaternion literal must look like [w,x,y,z]", text, 0)
    parts = s[1:-1].split(",")
    if len(parts) != 4:
        raise LiteralSyntaxError(f"quaternion literal needs 4 components, got {len(parts)}", text, 0)
    return Quaternion(*(parse_rational(p) for p in parts))


def parse_scalar(domain: Domain, text: str):
    if not isinstance(text, str):
        raise LiteralSyntaxError(f"scalar literal must be a string, got {type(text).__name__}")
    if domain is RATIONAL:
        return parse_rational(text)
    if domain is RATFUNC:
        return parse_ratfunc(text)
    if domain is QUATERNION:
        return parse_quaternion(text)
    raise ValueError(f"unknown domain {domain!r}")


def _format_poly(coeffs: list[Fraction]) -> str:
    out = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mag = abs(c)
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out) or "0"


def format_scalar(value) -> str:
    dom = domain_of(value)
    if dom is RATIONAL:
        return str(value)
    if dom is QUATERNION:
        return "[" + ",".join(str(c) for c in value.components()) + "]"
    num = _format_poly(value.numerator_coeffs())
    if value.is_polynomial():
        return num
    return f"({num})/({_format_poly(value.denominator_coeffs())})"
