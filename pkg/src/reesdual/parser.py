"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insignificant, no implicit multiplication):

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := base ('^' INT)?
    base    := RATIONAL | INT | VARIABLE | '(' expr ')'

RATIONAL is INT '/' INT.  Variable tokens are the names declared by the
VarSet (x1.., T1.., Z{i}_{j}, Y{j}).  `^` binds tightest.  Errors carry
the 0-based position in the input string.
"""

import re

from .fields import QQ
from .poly import Poly


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|([()+\-*/^]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            where = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", where)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, vars, field):
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = vars
        self.field = field

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)
        return self.advance()

    def parse(self):
        p = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {value!r}", pos)
        return p

    def expr(self):
        kind, value, _ = self.peek()
        sign = 1
        if kind == "op" and value in "+-":
            self.advance()
            sign = -1 if value == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                q = self.term()
                p = p + q if value == "+" else p - q
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                p = p * self.factor()
            else:
                return p

    def factor(self):
        p = self.base()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, pos = self.peek()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            self.advance()
            p = p ** value
        return p

    def base(self):
        kind, value, pos = self.advance()
        if kind == "int":
            num = value
            k, v, _ = self.peek()
            if k == "op" and v == "/":
                self.advance()
                k, v, dpos = self.peek()
                if k != "int":
                    raise ParseError("denominator must be an integer", dpos)
                self.advance()
                if v == 0:
                    raise ParseError("zero denominator", dpos)
                return Poly.const(self.vars, self.field.fraction(num, v), self.field)
            return Poly.const(self.vars, num, self.field)
        if kind == "name":
            index = self.vars.index.get(value)
            if index is None or index >= self.vars.total - self.vars.naux:
                raise ParseError(f"unknown variable {value!r}", pos)
            return Poly.var(self.vars, index, self.field)
        if kind == "op" and value == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(
            "expected a number, variable, or parenthesized expression", pos
        )


def parse_poly(text, vars, field=QQ):
    """Parse `text` into a canonical Poly over `vars` and `field`."""
    return _Parser(text, vars, field).parse()
