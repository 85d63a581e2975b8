"""Recursive-descent parser for polynomial text.

Grammar (``^`` binds tighter than ``*``, ``*`` tighter than ``+``/``-``)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' INTEGER)?
    atom    := INTEGER ('/' INTEGER)? | 'X' | 'Y' | '(' expr ')'

Variables are case-insensitive; implicit multiplication is rejected.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import FieldError, ParseError
from .field import FieldDescriptor, QQ
from .poly import BivariatePoly

__all__ = ["parse_polynomial", "tokenize"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    text = text.replace("−", "-").replace("**", "^")
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1) is not None:
            out.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append(("op", ch, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, desc: FieldDescriptor):
        self.toks = tokenize(text)
        self.i = 0
        self.desc = desc

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ParseError(f"expected {op!r}, found {t[1] or 'end of input'!r}", t[2])

    def parse(self) -> BivariatePoly:
        if self.peek()[0] == "end":
            raise ParseError("empty polynomial", 0)
        e = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected {t[1]!r}", t[2])
        return e

    def expr(self):
        acc = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = acc * self.unary()
        nxt = self.peek()
        if nxt[0] in ("int", "name") or (nxt[0] == "op" and nxt[1] == "("):
            raise ParseError("implicit multiplication is not allowed; use '*'", nxt[2])
        return acc

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                raise ParseError("exponent must be a non-negative integer literal", e[2])
            base = base ** int(e[1])
            t = self.peek()
            if t[0] == "op" and t[1] == "^":
                raise ParseError("chained exponents need parentheses", t[2])
        return base

    def atom(self):
        t = self.take()
        if t[0] == "int":
            value = Fraction(int(t[1]))
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                d = self.take()
                if d[0] != "int":
                    raise ParseError("rational literal needs an integer denominator", d[2])
                if int(d[1]) == 0:
                    raise ParseError("zero denominator", d[2])
                value = Fraction(int(t[1]), int(d[1]))
            try:
                return BivariatePoly.constant(self.desc, value)
            except FieldError as exc:
                raise ParseError(str(exc), t[2]) from None
        if t[0] == "name":
            name = t[1].lower()
            if name == "x":
                return BivariatePoly.x(self.desc)
            if name == "y":
                return BivariatePoly.y(self.desc)
            raise ParseError(f"unknown identifier {t[1]!r}", t[2])
        if t[0] == "op" and t[1] == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        if t[0] == "op" and t[1] == "/":
            raise ParseError("'/' is only allowed inside a rational literal a/b", t[2])
        raise ParseError(f"unexpected {t[1] or 'end of input'!r}", t[2])


def parse_polynomial(text: str, desc: FieldDescriptor = QQ) -> BivariatePoly:
    """Parse ``text`` into an exact polynomial over ``desc``."""
    return _Parser(text, desc).parse()
