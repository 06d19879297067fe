"""Recursive-descent parser and printer for surd expressions.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := NUMBER | "(" expr ")" | "sqrt" "(" expr ")"
    NUMBER := integer or decimal literal

Binary operators are left-associative.  There is no unary minus.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from .errors import ParseError
from .expr import Add, Const, Div, Mul, Sqrt, Sub, SurdExpr

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/()]))")


class Token(NamedTuple):
    kind: str  # "num", "name", "op" or "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            if not rest.strip():
                tokens.append(Token("end", "", len(text)))
                return tokens
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {text[bad]!r} at position {bad}", bad)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected: str):
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(
            f"syntax error at position {tok.pos}: expected {expected}, found {found}",
            tok.pos,
            expected,
        )

    def expect(self, op: str):
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
        else:
            self.fail(f'"{op}"')

    def parse(self) -> SurdExpr:
        e = self.expr()
        if self.tok.kind != "end":
            self.fail("an operator or end of input")
        return e

    def expr(self) -> SurdExpr:
        e = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> SurdExpr:
        e = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.tok.text
            self.i += 1
            rhs = self.factor()
            e = Mul(e, rhs) if op == "*" else Div(e, rhs)
        return e

    def factor(self) -> SurdExpr:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return Const(Fraction(tok.text))
        if tok.kind == "op" and tok.text == "(":
            self.i += 1
            e = self.expr()
            self.expect(")")
            return e
        if tok.kind == "name":
            if tok.text != "sqrt":
                raise ParseError(
                    f"syntax error at position {tok.pos}: unknown function {tok.text!r}",
                    tok.pos,
                    '"sqrt"',
                )
            self.i += 1
            self.expect("(")
            e = self.expr()
            self.expect(")")
            return Sqrt(e)
        self.fail('a number, "(" or "sqrt"')


def parse_expr(text: str) -> SurdExpr:
    return _Parser(text).parse()


# -- printing ------------------------------------------------------------------

_PREC = {Add: 1, Sub: 1, Mul: 2, Div: 2}
_SYMBOL = {Add: "+", Sub: "-", Mul: "*", Div: "/"}


def _terminating(q: Fraction) -> bool:
    d = q.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def format_const(q: Fraction) -> str:
    """Literal text for a constant.

    Integers and terminating decimals print as literals and re-parse to the
    same ``Const``.  Anything else prints as a parenthesized quotient, which
    re-parses to an equal-valued ``Div``.
    """
    if q < 0:
        return f"(0 - {format_const(-q)})"
    if q.denominator == 1:
        return str(q.numerator)
    if _terminating(q):
        d = q.denominator
        k = 0
        while 10**k % d:
            k += 1
        digits = str(q.numerator * (10**k // d)).rjust(k + 1, "0")
        return f"{digits[:-k]}.{digits[-k:]}"
    return f"({q.numerator}/{q.denominator})"


def _prec(e: SurdExpr) -> int:
    return _PREC.get(type(e), 3)


def print_expr(e: SurdExpr) -> str:
    if isinstance(e, Const):
        return format_const(e.value)
    if isinstance(e, Sqrt):
        return f"sqrt({print_expr(e.child)})"
    p = _PREC[type(e)]
    left = print_expr(e.left)
    if _prec(e.left) < p:
        left = f"({left})"
    right = print_expr(e.right)
    # left-associative: an equal-precedence right child needs parentheses
    if _prec(e.right) <= p:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(e)]} {right}"
