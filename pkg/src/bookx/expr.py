"""Expression trees over rationals, + - * / and square root."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero


class SurdExpr:
    __slots__ = ()


@dataclass(frozen=True)
class Const(SurdExpr):
    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Add(SurdExpr):
    left: SurdExpr
    right: SurdExpr


@dataclass(frozen=True)
class Sub(SurdExpr):
    left: SurdExpr
    right: SurdExpr


@dataclass(frozen=True)
class Mul(SurdExpr):
    left: SurdExpr
    right: SurdExpr


@dataclass(frozen=True)
class Div(SurdExpr):
    left: SurdExpr
    right: SurdExpr

    def __post_init__(self):
        if isinstance(self.right, Const) and self.right.value == 0:
            raise DivisionByZero("division by the constant 0")


@dataclass(frozen=True)
class Sqrt(SurdExpr):
    child: SurdExpr


BINARY = (Add, Sub, Mul, Div)


def tree_size(e: SurdExpr) -> int:
    if isinstance(e, Const):
        return 1
    if isinstance(e, Sqrt):
        return 1 + tree_size(e.child)
    return 1 + tree_size(e.left) + tree_size(e.right)
