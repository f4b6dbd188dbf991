"""Small expression parser for algebra elements.

Grammar (whitespace-insensitive):

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := atom ('^' INT)?
    atom     := INT | NAME | '(' expr ')' | '[' INT ']' | '-' factor

NAME is a generator of the presentation at hand, or the reserved scalars
q and s (s^2 = q).  [n] is the symmetric q-number.  '/' requires a scalar
divisor, and generator powers must be nonnegative.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .freealg import Element
from .scalars import QScalar, qnum

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()\[\]]))"
)


class ParseError(ValueError):
    pass


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r} at {pos}")
        if m.group("int") is not None:
            out.append(("int", int(m.group("int"))))
        elif m.group("name") is not None:
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    def __init__(self, tokens, generators):
        self.tokens = tokens
        self.pos = 0
        self.generators = set(generators)

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, got {val!r}")

    def parse_expr(self):
        e = self.parse_term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.parse_term()
                e = e + rhs if val == "+" else e - rhs
            else:
                return e

    def parse_term(self):
        e = self.parse_factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                rhs = self.parse_factor()
                if val == "*":
                    e = e * rhs
                else:
                    sc = _as_scalar(rhs)
                    if sc is None or sc.is_zero():
                        raise ParseError("division requires a nonzero scalar")
                    e = e.scale(sc.reciprocal())
            else:
                return e

    def parse_factor(self):
        base = self.parse_atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.next()
            exp = self._signed_int()
            if exp >= 0:
                sc = _as_scalar(base)
                if sc is not None:
                    return Element.scalar(sc ** exp)
                return base ** exp
            sc = _as_scalar(base)
            if sc is None or sc.is_zero():
                raise ParseError("negative power of a non-scalar")
            return Element.scalar(sc.reciprocal() ** (-exp))
        return base

    def _signed_int(self):
        kind, val = self.next()
        neg = False
        if kind == "op" and val == "-":
            neg = True
            kind, val = self.next()
        if kind != "int":
            raise ParseError("expected an integer exponent")
        return -val if neg else val

    def parse_atom(self):
        kind, val = self.next()
        if kind == "int":
            return Element.scalar(QScalar.rational(Fraction(val)))
        if kind == "name":
            if val == "q":
                return Element.scalar(QScalar.q())
            if val == "s":
                return Element.scalar(QScalar.s())
            if val in self.generators:
                return Element.word((val,))
            raise ParseError(f"unknown name {val!r}")
        if kind == "op" and val == "(":
            e = self.parse_expr()
            self.expect_op(")")
            return e
        if kind == "op" and val == "[":
            n = self._signed_int()
            self.expect_op("]")
            return Element.scalar(qnum(n))
        if kind == "op" and val == "-":
            return -self.parse_factor()
        raise ParseError(f"unexpected token {val!r}")


def _as_scalar(e):
    """The QScalar value of a purely scalar element, else None."""
    if not e.terms:
        return QScalar.zero()
    if len(e.terms) == 1 and () in e.terms:
        return e.terms[()]
    return None


def parse_expression(text, generators):
    """Parse text into an Element over the given generator names."""
    p = _Parser(_tokenize(text), generators)
    e = p.parse_expr()
    kind, _ = p.peek()
    if kind != "end":
        raise ParseError(f"trailing input at token {p.pos}")
    return e
