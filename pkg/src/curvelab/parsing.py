"""Recursive-descent parser for polynomial expressions.

Grammar: +, -, *, ^, parentheses, integer and integer/integer literals, and
declared variable names.  '/' is accepted with a positive integer literal
denominator (so both "3/4" and "x/4" parse).  Multiplication is always
explicit.
"""

from __future__ import annotations

import re

from .errors import ParseError, UnknownVariableError
from .mpoly import MPoly
from .numberfield import QQ
from .rationals import Rat

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+\-*/^]))")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                at = len(text) - len(stripped)
                raise ParseError(at, f"a token (got {stripped[0]!r})")
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2), m.start(2)))
            else:
                self.tokens.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx]

    def next(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok


class _Parser:
    def __init__(self, text: str, variables):
        self.lex = _Lexer(text)
        self.variables = tuple(variables)

    def parse(self) -> MPoly:
        p = self.expr()
        kind, _, pos = self.lex.peek()
        if kind != "end":
            raise ParseError(pos, "'+', '-', '*', '/', '^' or end of input")
        return p

    def expr(self) -> MPoly:
        kind, val, _ = self.lex.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.lex.next()
            negate = val == "-"
        p = self.term()
        if negate:
            p = -p
        while True:
            kind, val, _ = self.lex.peek()
            if kind == "op" and val in "+-":
                self.lex.next()
                q = self.term()
                p = p - q if val == "-" else p + q
            else:
                return p

    def term(self) -> MPoly:
        p = self.factor()
        while True:
            kind, val, pos = self.lex.peek()
            if kind == "op" and val == "*":
                self.lex.next()
                p = p * self.factor()
            elif kind == "op" and val == "/":
                self.lex.next()
                kind2, val2, pos2 = self.lex.next()
                if kind2 != "int":
                    raise ParseError(pos2, "an integer denominator")
                den = int(val2)
                if den == 0:
                    raise ParseError(pos2, "a nonzero denominator")
                p = p.scale_rat(Rat(1, den))
            else:
                return p

    def factor(self) -> MPoly:
        p = self.base()
        kind, val, _ = self.lex.peek()
        if kind == "op" and val == "^":
            self.lex.next()
            kind2, val2, pos2 = self.lex.next()
            if kind2 != "int":
                raise ParseError(pos2, "a non-negative integer exponent")
            p = p ** int(val2)
        return p

    def base(self) -> MPoly:
        kind, val, pos = self.lex.next()
        if kind == "int":
            return MPoly.from_rationals(self.variables, {(0,) * len(self.variables): Rat(int(val))})
        if kind == "name":
            if val not in self.variables:
                raise UnknownVariableError(val, pos)
            return MPoly.variable(self.variables, val)
        if kind == "op" and val == "(":
            p = self.expr()
            kind2, val2, pos2 = self.lex.next()
            if kind2 != "op" or val2 != ")":
                raise ParseError(pos2, "')'")
            return p
        if kind == "op" and val == "-":
            return -self.factor()
        expected = "a number, a variable, '(' or '-'"
        raise ParseError(pos, expected)


def parse_polynomial(text: str, variables) -> MPoly:
    """Parse an expression string into canonical sparse form."""
    return _Parser(text, variables).parse()
