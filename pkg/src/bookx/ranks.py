"""Ranks of simple irrationals and the X.115 ladder.

Starting from the unit u0 = 1 and a rational b that is not a square, the
ladder u[n+1] = sqrt(b * u[n]) gives u1 = sqrt(b), u2 = sqrt(b sqrt(b)), ...
with u[n] = b ** (1 - 2**-n).  Each term has rank exactly n, so the ranks
never run out.  The areas s[n] = b * u[n] = u[n+1] ** 2 satisfy
s[n] = sqrt(b**2 s[n-1]) = (b**(2**n) * s[n-1]**(2**(n-1))) ** (1/2**n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import surd
from .arithmetic import as_rat, is_perfect_square
from .errors import DomainError
from .surd import CanonicalValue, SimpleSurd

DEPTH_CAP = 16


def rank(x) -> int:
    """Minimal n such that x ** (2**n) is rational."""
    x = surd.as_value(x)
    if surd.sign(x) <= 0:
        raise DomainError(f"rank needs a positive magnitude, got {x}")
    if not isinstance(x, SimpleSurd):
        raise DomainError(f"rank is defined only for monomial values, not {x}")
    return x.depth


@dataclass(frozen=True)
class RankSequence:
    base_b: Fraction
    terms: tuple[SimpleSurd, ...]   # u1 .. uN
    areas: tuple[CanonicalValue, ...]  # s1 .. sN

    def term(self, n: int) -> CanonicalValue:
        """u[n], with u[0] the unit."""
        return surd.ONE if n == 0 else self.terms[n - 1]


def _check_base(b, count: int, depth_cap: int) -> Fraction:
    b = as_rat(b)
    if b <= 0:
        raise DomainError(f"base must be positive, got {b}")
    if is_perfect_square(b):
        raise DomainError(f"base {b} is a perfect square: sqrt(b) is rational and the ladder collapses")
    if count < 1:
        raise DomainError("count must be at least 1")
    if count > depth_cap:
        raise DomainError(f"count {count} exceeds the depth cap {depth_cap}")
    return b


def x115_sequence(b, count: int, *, depth_cap: int = DEPTH_CAP) -> RankSequence:
    b = _check_base(b, count, depth_cap)
    base = surd.rational(b)
    u: CanonicalValue = surd.ONE
    terms, areas = [], []
    for _ in range(count):
        u = surd.sqrt(surd.mul(base, u))
        terms.append(u)
        areas.append(surd.mul(base, u))
    return RankSequence(b, tuple(terms), tuple(areas))


def s_recurrence_check(b, n: int, *, depth_cap: int = DEPTH_CAP) -> bool:
    """Compute s[n] three ways and report whether they coincide.

    Direct: b * u[n].  Recurrence: sqrt(b**2 * s[n-1]).  Closed form:
    the 2**n-th root of b**(2**n) * s[n-1]**(2**(n-1)).  Here s[0] = b * u0.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    b = _check_base(b, n, depth_cap)
    seq = x115_sequence(b, n, depth_cap=depth_cap)
    base = surd.rational(b)
    direct = seq.areas[n - 1]
    prev = base if n == 1 else seq.areas[n - 2]
    by_recurrence = surd.sqrt(surd.mul(surd.power(base, 2), prev))
    closed = surd.mul(surd.power(base, 2**n), surd.power(prev, 2 ** (n - 1)))
    for _ in range(n):
        closed = surd.sqrt(closed)
    # the ladder's own defining relation, s[n] = u[n+1]**2
    next_u = surd.sqrt(surd.mul(base, seq.terms[n - 1]))
    return direct == by_recurrence == closed == surd.mul(next_u, next_u)
