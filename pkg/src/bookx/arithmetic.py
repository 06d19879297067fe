"""Exact rationals and the integer utilities behind every commensurability test.

Rationals are :class:`fractions.Fraction`, which already keeps numerator and
denominator reduced with a positive denominator.  This module adds the
factorization layer: trial division by the primes below 10**6, then
Miller-Rabin and Brent's variant of Pollard rho for whatever is left.
"""

from __future__ import annotations

import math
import operator
import random
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import NamedTuple

from .errors import DivisionByZero, DomainError

Rat = Fraction

TRIAL_LIMIT = 10**6


def as_rat(x) -> Fraction:
    """Coerce ints, Fractions and exact strings ("3/4", "0.5") to a Fraction.

    Floats are rejected: they would smuggle binary rounding into exact code.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not an exact rational: {x!r}") from exc
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
}


def rat_arith(x, y, op: str):
    """Apply ``op`` (add, sub, mul, div or cmp) to two rationals.

    ``cmp`` returns -1, 0 or 1.
    """
    x, y = as_rat(x), as_rat(y)
    if op == "div":
        if y == 0:
            raise DivisionByZero("division by zero")
        return x / y
    if op == "cmp":
        return (x > y) - (x < y)
    try:
        return _OPS[op](x, y)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


# -- primes and factorization ------------------------------------------------

@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * TRIAL_LIMIT
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(TRIAL_LIMIT - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, TRIAL_LIMIT, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    # Deterministic for n < 3.3e24 with these bases; beyond that a strong
    # probable-prime test, which is far past desk-scale radicands.
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split_large(r, out, rng)
        _split_large(r, out, rng)
        return
    d = _pollard_brent(n, rng)
    _split_large(d, out, rng)
    _split_large(n // d, out, rng)


@lru_cache(maxsize=4096)
def _factorint_cached(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out[p] = k
    if n > 1:
        if n < TRIAL_LIMIT * TRIAL_LIMIT:
            out[n] = out.get(n, 0) + 1
        else:
            # fixed seed keeps factorization a pure function of n
            _split_large(n, out, random.Random(n))
    return tuple(sorted(out.items()))


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer as ``{prime: exponent}``."""
    if n < 1:
        raise DomainError(f"factorint needs a positive integer, got {n}")
    return dict(_factorint_cached(n))


def factor_rat(q: Fraction) -> dict[int, int]:
    """Factor a positive rational; denominator primes get negative exponents."""
    q = as_rat(q)
    if q <= 0:
        raise DomainError(f"cannot factor nonpositive rational {q}")
    out = factorint(q.numerator)
    for p, e in factorint(q.denominator).items():
        out[p] = -e
    return out


# -- squares -----------------------------------------------------------------

def _isqrt_exact(n: int) -> int | None:
    r = math.isqrt(n)
    return r if r * r == n else None


def rational_sqrt(q) -> Fraction | None:
    """Return the rational square root of ``q`` if there is one, else None."""
    q = as_rat(q)
    if q < 0:
        return None
    num = _isqrt_exact(q.numerator)
    if num is None:
        return None
    den = _isqrt_exact(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def is_perfect_square(q) -> bool:
    """True iff ``q >= 0`` and its square root is rational."""
    return rational_sqrt(q) is not None


class SquarefreeDecomp(NamedTuple):
    """``value == square_part**2 * num / den`` with num, den coprime and squarefree."""

    square_part: Fraction
    squarefree_part: tuple[int, int]

    def recompose(self) -> Fraction:
        num, den = self.squarefree_part
        return self.square_part**2 * Fraction(num, den)


def _squarefree_int(n: int) -> tuple[int, int]:
    # n = root**2 * core, core squarefree
    root = core = 1
    for p, e in factorint(n).items():
        root *= p ** (e // 2)
        if e % 2:
            core *= p
    return root, core


def squarefree_decompose(q) -> SquarefreeDecomp:
    q = as_rat(q)
    if q <= 0:
        raise DomainError(f"squarefree decomposition needs q > 0, got {q}")
    rn, cn = _squarefree_int(q.numerator)
    rd, cd = _squarefree_int(q.denominator)
    # numerator and denominator are coprime, so the cores are too
    return SquarefreeDecomp(Fraction(rn, rd), (cn, cd))


def squarefree_kernel(q) -> tuple[Fraction, int]:
    """Write ``q > 0`` as ``c**2 * m`` with ``m`` a squarefree integer.

    This is the form a square-root radicand takes in the multi-quadratic
    representation: sqrt(q) == c * sqrt(m).
    """
    d = squarefree_decompose(q)
    num, den = d.squarefree_part
    # num/den == num*den / den**2
    return d.square_part / den, num * den
