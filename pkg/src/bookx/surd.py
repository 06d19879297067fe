"""Canonical forms for square-root irrationals and exact arithmetic on them.

Every value is held in one of two canonical forms:

* :class:`QuadElem` -- a sum of rational multiples of square roots of
  distinct squarefree integers, i.e. an element of a multi-quadratic field.
  Binomials, apotomes and any sum of square roots live here.
* :class:`SimpleSurd` -- a single term ``coeff * radicand ** (1 / 2**depth)``
  with minimal depth.  Rationals (depth 0), power-only rationals (depth 1),
  medials (depth 2) and every higher rank live here.

A value with exactly one term is always a ``SimpleSurd``; zero and values
with two or more terms are ``QuadElem``.  Both forms are fully reduced, so
structural equality is value equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from numbers import Rational

import mpmath

from .arithmetic import as_rat, factor_rat, factorint, rational_sqrt
from .errors import DivisionByZero, DomainError, NegativeRadicand, NotRepresentable
from .expr import Add, Const, Div, Mul, Sqrt, Sub, SurdExpr

DENEST_FAILURE = "denesting discriminant is not a rational square"


class _Arith:
    """Operator sugar shared by both canonical forms."""

    __slots__ = ()

    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(other, self)

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(other, self)

    def __mul__(self, other):
        return mul(self, other)

    def __rmul__(self, other):
        return mul(other, self)

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(other, self)

    def __neg__(self):
        return mul(self, -1)

    def __pow__(self, k: int):
        return power(self, k)

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __float__(self):
        with mpmath.workdps(20):
            return float(_mpf(self))

    def __str__(self):
        from .parser import print_expr

        return print_expr(to_expr(self))


@dataclass(frozen=True, repr=False)
class QuadElem(_Arith):
    """``sum(c * sqrt(m) for m, c in terms)``; m squarefree, sorted, c != 0.

    ``m == 1`` carries the rational part.  Square roots of distinct
    squarefree integers are linearly independent over the rationals, which
    is what makes this representation canonical.
    """

    terms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: dict[int, Fraction]) -> "QuadElem":
        return cls(tuple(sorted((m, Fraction(c)) for m, c in coeffs.items() if c)))

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self.terms)

    @property
    def basis(self) -> tuple[int, ...]:
        """Primes p such that sqrt(p) is needed to write the value."""
        primes: set[int] = set()
        for m, _ in self.terms:
            if m > 1:
                primes.update(factorint(m))
        return tuple(sorted(primes))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"QuadElem({self})"

    def _mul(self, other: "QuadElem") -> "QuadElem":
        out: dict[int, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                g = math.gcd(m1, m2)
                key = (m1 // g) * (m2 // g)
                out[key] = out.get(key, 0) + c1 * c2 * g
        return QuadElem.from_dict(out)

    def _add(self, other: "QuadElem", scale: int = 1) -> "QuadElem":
        out = dict(self.terms)
        for m, c in other.terms:
            out[m] = out.get(m, 0) + scale * c
        return QuadElem.from_dict(out)

    def _scale(self, q: Fraction) -> "QuadElem":
        return QuadElem.from_dict({m: c * q for m, c in self.terms})

    def _conjugate(self, p: int) -> "QuadElem":
        # the field automorphism sqrt(p) -> -sqrt(p)
        return QuadElem(tuple((m, -c if m % p == 0 else c) for m, c in self.terms))


@dataclass(frozen=True, repr=False)
class SimpleSurd(_Arith):
    """``coeff * radicand ** (1 / 2**depth)`` in lowest terms.

    The radicand is kept factored as ``((prime, exponent), ...)`` with every
    exponent in ``1 .. 2**depth - 1`` and at least one exponent odd (so the
    depth is minimal).  Keeping it factored means repeated root extraction
    never has to factor the ever-growing radicands of deep ladders.
    """

    coeff: Fraction
    factors: tuple[tuple[int, int], ...] = ()
    depth: int = 0

    @classmethod
    def make(cls, coeff, factors: dict[int, int] | None = None, depth: int = 0) -> "SimpleSurd":
        coeff = as_rat(coeff)
        if coeff == 0:
            raise DomainError("SimpleSurd coefficient must be nonzero")
        factors = {p: e for p, e in (factors or {}).items() if e}
        while True:
            mod = 1 << depth
            kept = {}
            for p, e in factors.items():
                q, r = divmod(e, mod)
                if q:
                    coeff *= Fraction(p) ** q
                if r:
                    kept[p] = r
            factors = kept
            if depth and factors and all(e % 2 == 0 for e in factors.values()):
                factors = {p: e // 2 for p, e in factors.items()}
                depth -= 1
                continue
            break
        if not factors:
            depth = 0
        return cls(coeff, tuple(sorted(factors.items())), depth)

    @property
    def radicand(self) -> int:
        r = 1
        for p, e in self.factors:
            r *= p**e
        return r

    @property
    def sign(self) -> int:
        return 1 if self.coeff > 0 else -1

    def is_rational(self) -> bool:
        return self.depth == 0

    def __repr__(self):
        return f"SimpleSurd({self.power_form()})"

    def power_form(self) -> str:
        """Render with rational exponents, e.g. ``2^(7/8)`` or ``1/2 * 3^(1/4)``."""
        parts = []
        if self.coeff != 1 or not self.factors:
            parts.append(str(self.coeff))
        for p, e in self.factors:
            ex = Fraction(e, 1 << self.depth)
            parts.append(f"{p}^({ex})")
        return " * ".join(parts)


CanonicalValue = QuadElem | SimpleSurd

ZERO = QuadElem()
ONE = SimpleSurd(Fraction(1))


# -- conversions ---------------------------------------------------------------

def rational(q) -> CanonicalValue:
    q = as_rat(q)
    return ZERO if q == 0 else SimpleSurd(q)


def as_value(x) -> CanonicalValue:
    """Accept a canonical value or anything :func:`as_rat` understands."""
    if isinstance(x, (QuadElem, SimpleSurd)):
        return x
    if isinstance(x, (int, Rational, str)):
        return rational(x)
    raise TypeError(f"not a canonical value: {x!r}")


def canon(v: CanonicalValue) -> CanonicalValue:
    if isinstance(v, QuadElem) and len(v.terms) == 1:
        (m, c), = v.terms
        if m == 1:
            return SimpleSurd(c)
        return SimpleSurd.make(c, factorint(m), 1)
    return v


def _as_quad(v: CanonicalValue) -> QuadElem | None:
    if isinstance(v, QuadElem):
        return v
    if v.depth == 0:
        return QuadElem(((1, v.coeff),))
    if v.depth == 1:
        # every exponent is 1, so the radicand is already squarefree
        return QuadElem(((v.radicand, v.coeff),))
    return None


def is_zero(v: CanonicalValue) -> bool:
    return isinstance(v, QuadElem) and v.is_zero()


def is_rational(v: CanonicalValue) -> bool:
    v = as_value(v)
    return is_zero(v) or (isinstance(v, SimpleSurd) and v.depth == 0)


def rational_value(v: CanonicalValue) -> Fraction:
    if is_zero(v):
        return Fraction(0)
    if isinstance(v, SimpleSurd) and v.depth == 0:
        return v.coeff
    raise DomainError(f"{v} is not rational")


def term_count(v: CanonicalValue) -> int:
    return len(v.terms) if isinstance(v, QuadElem) else 1


# -- arithmetic ----------------------------------------------------------------

def _mul_simple(x: SimpleSurd, y: SimpleSurd) -> SimpleSurd:
    d = max(x.depth, y.depth)
    f: dict[int, int] = {}
    for s in (x, y):
        shift = d - s.depth
        for p, e in s.factors:
            f[p] = f.get(p, 0) + (e << shift)
    return SimpleSurd.make(x.coeff * y.coeff, f, d)


def _inverse(v: CanonicalValue) -> CanonicalValue:
    if is_zero(v):
        raise DivisionByZero("division by zero")
    if isinstance(v, SimpleSurd):
        return SimpleSurd.make(1 / v.coeff, {p: -e for p, e in v.factors}, v.depth)
    num, den = QuadElem(((1, Fraction(1)),)), v
    while True:
        basis = den.basis
        if not basis:
            break
        conj = den._conjugate(basis[-1])
        num, den = num._mul(conj), den._mul(conj)
    return canon(num._scale(1 / rational_value(canon(den))))


def add(x, y) -> CanonicalValue:
    x, y = as_value(x), as_value(y)
    if is_zero(x):
        return y
    if is_zero(y):
        return x
    qx, qy = _as_quad(x), _as_quad(y)
    if qx is not None and qy is not None:
        return canon(qx._add(qy))
    if isinstance(x, SimpleSurd) and isinstance(y, SimpleSurd):
        if x.depth == y.depth and x.factors == y.factors:
            c = x.coeff + y.coeff
            return ZERO if c == 0 else SimpleSurd(c, x.factors, x.depth)
        raise NotRepresentable(
            "sum of incommensurable surds of rank 2 or more is outside the supported forms"
        )
    raise NotRepresentable("sum of a multi-term value and a surd of rank 2 or more")


def sub(x, y) -> CanonicalValue:
    return add(x, mul(as_value(y), -1))


def mul(x, y) -> CanonicalValue:
    x, y = as_value(x), as_value(y)
    if is_zero(x) or is_zero(y):
        return ZERO
    if isinstance(x, SimpleSurd) and isinstance(y, SimpleSurd):
        return _mul_simple(x, y)
    qx, qy = _as_quad(x), _as_quad(y)
    if qx is not None and qy is not None:
        return canon(qx._mul(qy))
    raise NotRepresentable("product of a multi-term value and a surd of rank 2 or more")


def div(x, y) -> CanonicalValue:
    return mul(x, _inverse(as_value(y)))


def power(x, k: int) -> CanonicalValue:
    x = as_value(x)
    if k < 0:
        return power(_inverse(x), -k)
    if isinstance(x, SimpleSurd):
        return SimpleSurd.make(x.coeff**k, {p: e * k for p, e in x.factors}, x.depth)
    result: CanonicalValue = ONE
    base = x
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


_ARITH = {"add": add, "sub": sub, "mul": mul, "div": div}


def quad_arith(x, y, op: str) -> CanonicalValue:
    try:
        fn = _ARITH[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(x, y)


# -- square roots ----------------------------------------------------------------

def denest(a: Fraction, b: Fraction, d: int) -> CanonicalValue:
    """Square root of ``a + b*sqrt(d)`` as a sum of square roots of rationals.

    sqrt(a + b sqrt d) = sqrt((a+c)/2) + sign(b) sqrt((a-c)/2) with
    c = sqrt(a**2 - b**2 d), which must be rational.
    """
    c = rational_sqrt(a * a - b * b * d)
    if c is None:
        raise NotRepresentable(DENEST_FAILURE)
    hi, lo = (a + c) / 2, (a - c) / 2
    if hi < 0 or lo < 0:
        raise NegativeRadicand(f"square root of negative value {a} + {b}*sqrt({d})")
    root_lo = sqrt(rational(lo))
    return add(sqrt(rational(hi)), root_lo if b > 0 else mul(root_lo, -1))


def sqrt(x) -> CanonicalValue:
    x = as_value(x)
    if is_zero(x):
        return ZERO
    if sign(x) < 0:
        raise NegativeRadicand(f"square root of negative value {x}")
    if isinstance(x, SimpleSurd):
        f = {p: e << x.depth for p, e in factor_rat(x.coeff).items()}
        for p, e in x.factors:
            f[p] = f.get(p, 0) + e
        return SimpleSurd.make(1, f, x.depth + 1)
    if len(x.terms) == 2:
        (m1, c1), (m2, c2) = x.terms
        if m1 == 1:
            return denest(c1, c2, m2)
        raise NotRepresentable(
            "square root of a binomial without a rational term is outside the supported forms"
        )
    raise NotRepresentable("square root of a value with more than two terms is not supported")


# -- evaluation and sign -------------------------------------------------------------

def _mpf(v: CanonicalValue):
    """Evaluate in the current mpmath context."""
    if isinstance(v, QuadElem):
        return mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * mpmath.sqrt(m) for m, c in v.terms)
    val = mpmath.mpf(v.coeff.numerator) / v.coeff.denominator
    scale = 1 << v.depth
    for p, e in v.factors:
        val *= mpmath.power(p, mpmath.mpf(e) / scale)
    return val


def _quad_sign(q: QuadElem) -> int:
    if not q.terms:
        return 0
    if len(q.terms) == 1:
        return 1 if q.terms[0][1] > 0 else -1
    with mpmath.workprec(96):
        parts = [mpmath.mpf(c.numerator) / c.denominator * mpmath.sqrt(m) for m, c in q.terms]
        total = mpmath.fsum(parts)
        bound = mpmath.fsum(abs(t) for t in parts) * mpmath.ldexp(1, -80)
        if abs(total) > bound:
            return 1 if total > 0 else -1
    # exact: write q = A + B sqrt(p) over the smaller field and compare A^2 with p B^2
    p = q.basis[-1]
    a = QuadElem(tuple((m, c) for m, c in q.terms if m % p))
    b = QuadElem(tuple((m // p, c) for m, c in q.terms if m % p == 0))
    sa, sb = _quad_sign(a), _quad_sign(b)
    if sa == 0 or sb == 0 or sa == sb:
        return sa or sb
    return sa * _quad_sign(a._mul(a)._add(b._mul(b)._scale(Fraction(p)), -1))


def sign(x) -> int:
    x = as_value(x)
    if isinstance(x, SimpleSurd):
        return x.sign
    return _quad_sign(x)


def compare(x, y) -> int:
    """Exact three-way comparison of real values."""
    x, y = as_value(x), as_value(y)
    try:
        return sign(sub(x, y))
    except NotRepresentable:
        pass
    # x - y is outside the canonical forms, so x != y and enough precision
    # separates them
    prec = 128
    while True:
        with mpmath.workprec(prec):
            fx, fy = _mpf(x), _mpf(y)
            err = (abs(fx) + abs(fy)) * mpmath.ldexp(1, 16 - prec)
            if abs(fx - fy) > err:
                return 1 if fx > fy else -1
        prec *= 2


def to_float(x, digits: int = 15) -> Decimal:
    """Decimal approximation correctly rounded to ``digits`` significant digits."""
    if digits < 1:
        raise DomainError("digits must be at least 1")
    x = as_value(x)
    ctx = Context(prec=digits, rounding=ROUND_HALF_EVEN)
    if is_rational(x):
        q = rational_value(x)
        return ctx.divide(Decimal(q.numerator), Decimal(q.denominator))
    # irrational: no exact ties, so widen the guard until two precisions agree
    guard = 10
    previous = None
    while True:
        with mpmath.workdps(digits + guard):
            val = _mpf(x)
            neg, man, exp, _ = mpmath.mpf(val)._mpf_
            man, exp = (-1) ** neg * int(man), int(exp)
        wide = Context(prec=max(digits + guard + 40, 64))
        exact = wide.multiply(Decimal(man), wide.power(Decimal(2), exp)) if exp < 0 else Decimal(man << exp)
        rounded = ctx.plus(exact)
        if rounded == previous:
            return rounded
        previous = rounded
        guard *= 2


# -- predicates ------------------------------------------------------------------------

def _require_nonzero(*vals):
    for v in vals:
        if is_zero(v):
            raise DomainError("commensurability is undefined for zero magnitudes")


def _require_positive(x: CanonicalValue):
    if sign(x) <= 0:
        raise DomainError(f"expected a positive magnitude, got {x}")


def commensurable_length(x, y) -> bool:
    """True iff x / y is rational."""
    x, y = as_value(x), as_value(y)
    _require_nonzero(x, y)
    try:
        return is_rational(div(x, y))
    except NotRepresentable:
        # the forms are closed under rational scaling, so a ratio that leaves
        # them cannot be rational
        return False


def commensurable_power(x, y) -> bool:
    """True iff x**2 / y**2 is rational."""
    x, y = as_value(x), as_value(y)
    _require_nonzero(x, y)
    return commensurable_length(mul(x, x), mul(y, y))


def rational_in_length(x) -> bool:
    x = as_value(x)
    _require_positive(x)
    return is_rational(x)


def rational_in_power(x) -> bool:
    x = as_value(x)
    _require_positive(x)
    return is_rational(mul(x, x))


# -- expression bridge -------------------------------------------------------------------

def normalize(e: SurdExpr) -> CanonicalValue:
    """Evaluate an expression tree exactly into canonical form."""
    if isinstance(e, Const):
        return rational(e.value)
    if isinstance(e, Sqrt):
        return sqrt(normalize(e.child))
    left, right = normalize(e.left), normalize(e.right)
    if isinstance(e, Add):
        return add(left, right)
    if isinstance(e, Sub):
        return sub(left, right)
    if isinstance(e, Mul):
        return mul(left, right)
    if isinstance(e, Div):
        return div(left, right)
    raise TypeError(f"not an expression node: {e!r}")


def _nested_sqrt(radicand: int, depth: int) -> SurdExpr:
    e: SurdExpr = Const(Fraction(radicand))
    for _ in range(depth):
        e = Sqrt(e)
    return e


def _term_expr(c: Fraction, radical: SurdExpr | None) -> SurdExpr:
    num, den = abs(c.numerator), c.denominator
    if radical is None:
        body: SurdExpr = Const(Fraction(num))
    elif num == 1:
        body = radical
    else:
        body = Mul(Const(Fraction(num)), radical)
    return body if den == 1 else Div(body, Const(Fraction(den)))


def to_expr(v) -> SurdExpr:
    """Rebuild an expression tree whose normalization is ``v``."""
    v = as_value(v)
    if is_zero(v):
        return Const(Fraction(0))
    if isinstance(v, SimpleSurd):
        pieces = [(v.coeff, None if v.depth == 0 else _nested_sqrt(v.radicand, v.depth))]
    else:
        pieces = [(c, None if m == 1 else Sqrt(Const(Fraction(m)))) for m, c in v.terms]
        # positive terms lead so apotomes read "sqrt(2) - 1"
        pieces.sort(key=lambda piece: piece[0] < 0)
    first_c, first_r = pieces[0]
    e = _term_expr(first_c, first_r)
    if first_c < 0:
        e = Sub(Const(Fraction(0)), e)
    for c, r in pieces[1:]:
        t = _term_expr(c, r)
        e = Add(e, t) if c > 0 else Sub(e, t)
    return e
