"""Classification of magnitudes into the Book X taxonomy.

Covers the rational / power-only / rank-n ladder of simple irrationals,
the six binomials and six apotomes, their numeric generators, square roots
of first binomials and apotomes, medials, and the X.17 division criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .arithmetic import as_rat, is_perfect_square, rational_sqrt
from .errors import DomainError
from . import surd
from .surd import CanonicalValue, QuadElem, SimpleSurd


@dataclass(frozen=True)
class PowerOnlyLine:
    """A line whose value is ``sqrt(square)``."""

    square: Fraction

    def __post_init__(self):
        object.__setattr__(self, "square", as_rat(self.square))
        if self.square <= 0:
            raise DomainError(f"a line needs a positive square, got {self.square}")

    @property
    def value(self) -> CanonicalValue:
        return surd.sqrt(surd.rational(self.square))

    def rational_in_length(self) -> bool:
        return is_perfect_square(self.square)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class BinomialPair:
    """``greater + lesser`` (binomial) or ``greater - lesser`` (apotome).

    Build with :meth:`of`, which orders the terms and checks that they are
    commensurable in power only.
    """

    greater: PowerOnlyLine
    lesser: PowerOnlyLine
    sign: Literal[1, -1] = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 (binomial) or -1 (apotome)")
        if not self.greater.square > self.lesser.square:
            raise DomainError("greater term must exceed the lesser term")
        if is_perfect_square(self.greater.square / self.lesser.square):
            raise DomainError(
                "terms are commensurable in length: "
                f"sqrt({self.greater.square}) and sqrt({self.lesser.square}) do not form a binomial"
            )

    @classmethod
    def of(cls, square1, square2, sign: int = 1) -> "BinomialPair":
        s1, s2 = as_rat(square1), as_rat(square2)
        if s1 < s2:
            s1, s2 = s2, s1
        return cls(PowerOnlyLine(s1), PowerOnlyLine(s2), sign)

    @property
    def is_apotome(self) -> bool:
        return self.sign < 0

    def value(self) -> CanonicalValue:
        t1, t2 = self.greater.value, self.lesser.value
        return surd.add(t1, t2) if self.sign > 0 else surd.sub(t1, t2)

    def __str__(self):
        return str(self.value())


def pair_from_value(x: CanonicalValue) -> BinomialPair | None:
    """Split a positive two-term value into its binomial/apotome terms."""
    if not isinstance(x, QuadElem) or len(x.terms) != 2:
        return None
    (m1, c1), (m2, c2) = x.terms
    sq1, sq2 = c1 * c1 * m1, c2 * c2 * m2
    pos, neg = (sq1, sq2) if sq1 > sq2 else (sq2, sq1)
    big_coeff = c1 if sq1 > sq2 else c2
    small_coeff = c2 if sq1 > sq2 else c1
    if big_coeff < 0:
        return None  # negative value
    return BinomialPair.of(pos, neg, 1 if small_coeff > 0 else -1)


# -- classification --------------------------------------------------------------

@dataclass(frozen=True)
class TaxonomyClass:
    """Outcome of :func:`classify`.

    ``kind`` is one of ``rational_length``, ``rational_power_only``,
    ``simple_rank``, ``binomial``, ``apotome`` or ``unclassified``.
    """

    kind: str
    rank: int | None = None
    species: int | None = None

    @property
    def medial(self) -> bool:
        return self.kind == "simple_rank" and self.rank == 2

    @property
    def label(self) -> str:
        # the name reported to users; rank 2 has its own Euclidean name
        return "medial" if self.medial else self.kind

    def __str__(self):
        if self.species is not None:
            return f"{self.kind}({self.species})"
        if self.kind == "simple_rank":
            return f"simple_rank({self.rank}){', medial' if self.medial else ''}"
        return self.kind


RationalLength = TaxonomyClass("rational_length", rank=0)
RationalPowerOnly = TaxonomyClass("rational_power_only", rank=1)
Unclassified = TaxonomyClass("unclassified")


def SimpleRank(n: int) -> TaxonomyClass:
    if n < 2:
        raise ValueError("simple ranks start at 2")
    return TaxonomyClass("simple_rank", rank=n)


def Binomial(k: int) -> TaxonomyClass:
    return TaxonomyClass("binomial", species=k)


def Apotome(k: int) -> TaxonomyClass:
    return TaxonomyClass("apotome", species=k)


def _positive(x) -> CanonicalValue:
    x = surd.as_value(x)
    if surd.sign(x) <= 0:
        raise DomainError(f"Book X magnitudes are positive, got {x}")
    return x


def classify(x) -> TaxonomyClass:
    x = _positive(x)
    if isinstance(x, SimpleSurd):
        if x.depth == 0:
            return RationalLength
        if x.depth == 1:
            return RationalPowerOnly
        return SimpleRank(x.depth)
    pair = pair_from_value(x)
    if pair is None:
        return Unclassified
    k = classify_pair(pair)
    return Apotome(k) if pair.is_apotome else Binomial(k)


def species_conditions(p: BinomialPair) -> dict[str, bool]:
    """The three facts that fix the species.

    With a, b the greater and lesser terms and c = sqrt(a**2 - b**2):
    whether c is commensurable in length with a, and whether a or b is
    rational in length.
    """
    a2, b2 = p.greater.square, p.lesser.square
    return {
        "excess_commensurable": is_perfect_square((a2 - b2) / a2),
        "greater_rational": is_perfect_square(a2),
        "lesser_rational": is_perfect_square(b2),
    }


def classify_pair(p: BinomialPair) -> int:
    """Species 1..6 of a binomial or apotome (same rules for both)."""
    cond = species_conditions(p)
    base = 1 if cond["excess_commensurable"] else 4
    if cond["greater_rational"]:
        return base
    if cond["lesser_rational"]:
        return base + 1
    return base + 2


# -- generators --------------------------------------------------------------------

def _generator_squares(k: int, n: Fraction) -> tuple[Fraction, Fraction]:
    # squares of the two terms for the six numeric recipes
    if k == 1:
        return n * n, n * n - n * n / 4
    if k == 2:
        return n * n + n * n / 3, n * n
    if k == 3:
        return n, n - n / 4
    if k == 4:
        return n * n, n * n - n * n / 2
    if k == 5:
        return 2 * n * n, n * n
    if k == 6:
        return n, n - n / 2
    raise DomainError(f"binomial species must be 1..6, got {k}")


def gen_binomial(k: int, n, *, sign: int = 1) -> BinomialPair:
    """The k-th binomial built from the number ``n``.

    1: n and sqrt(n**2 - n**2/4)      4: n and sqrt(n**2 - n**2/2)
    2: sqrt(n**2 + n**2/3) and n      5: sqrt(2 n**2) and n
    3: sqrt(n) and sqrt(n - n/4)      6: sqrt(n) and sqrt(n - n/2)

    Any positive rational ``n`` is accepted; recipes 3 and 6 additionally
    need both square roots irrational.
    """
    n = as_rat(n)
    if n <= 0:
        raise DomainError(f"generator needs n > 0, got {n}")
    s1, s2 = _generator_squares(k, n)
    if k in (3, 6):
        for s in (s1, s2):
            if is_perfect_square(s):
                raise DomainError(
                    f"species {k} needs irrational terms, but sqrt({s}) = {rational_sqrt(s)} is rational"
                )
    return BinomialPair.of(s1, s2, sign)


def gen_apotome(k: int, n) -> BinomialPair:
    return gen_binomial(k, n, sign=-1)


# -- square root of first binomials/apotomes --------------------------------------

def _parts_by_quadratic(a: Fraction, b2: Fraction) -> tuple[Fraction, Fraction]:
    """Solve t**2 + c = b t with b = a, c = b2/4, by completing the square.

    One part is the "thing" t, the other a - t; their product is the
    quarter of the lesser square.
    """
    half = a / 2
    disc = half * half - b2 / 4
    root = rational_sqrt(disc)
    if root is None:
        raise DomainError("not a first binomial: the parts are irrational")
    t = half - root
    return a - t, t


def _parts_by_gnomon(a: Fraction, b2: Fraction) -> tuple[Fraction, Fraction]:
    """Split ``a`` at the point where the rectangle of the parts is b2/4.

    Unequal parts x, y of a line a satisfy (x - y)**2 = a**2 - 4xy, so the
    difference of the parts is sqrt(a**2 - b2).
    """
    diff = rational_sqrt(a * a - b2)
    if diff is None:
        raise DomainError("not a first binomial: the parts are irrational")
    return (a + diff) / 2, (a - diff) / 2


def sqrt_first(p: BinomialPair, *, method: str = "both") -> BinomialPair:
    """Square root of a first binomial (or apotome), itself a binomial (apotome).

    ``method`` picks the route used to split the rational term: ``quadratic``,
    ``gnomon`` or ``both`` (compute each and require agreement).
    """
    if classify_pair(p) != 1:
        raise DomainError("square-root extraction needs a first binomial or first apotome")
    a = rational_sqrt(p.greater.square)
    b2 = p.lesser.square
    routes = {"quadratic": _parts_by_quadratic, "gnomon": _parts_by_gnomon}
    if method == "both":
        results = {name: fn(a, b2) for name, fn in routes.items()}
        if results["quadratic"] != results["gnomon"]:
            raise AssertionError(f"root-extraction routes disagree: {results}")
        x, y = results["gnomon"]
    else:
        try:
            x, y = routes[method](a, b2)
        except KeyError:
            raise ValueError(f"unknown method {method!r}") from None
    return BinomialPair.of(x, y, p.sign)


# -- medials and X.17 ----------------------------------------------------------------

def is_medial(x) -> bool:
    """True iff x**4 is rational and x**2 is not."""
    x = _positive(x)
    sq = surd.mul(x, x)
    if surd.is_rational(sq):
        return False
    try:
        return surd.is_rational(surd.mul(sq, sq))
    except DomainError:
        return False


@dataclass(frozen=True)
class X17Split:
    x: CanonicalValue
    rest: CanonicalValue
    side: CanonicalValue
    commensurable_parts: bool
    commensurable_side: bool

    @property
    def agrees(self) -> bool:
        return self.commensurable_parts == self.commensurable_side


def x17_split(a, bsq) -> X17Split:
    """Cut ``a`` into x and a - x with x(a - x) = bsq/4 (x the smaller part).

    Reports whether the parts are commensurable in length and whether ``a``
    is commensurable with sqrt(a**2 - bsq); the two always coincide.
    """
    a, bsq = as_rat(a), as_rat(bsq)
    if a <= 0 or bsq <= 0:
        raise DomainError("x17_split needs a > 0 and b**2 > 0")
    if bsq >= a * a:
        raise DomainError(f"x17_split needs b < a, got a = {a}, b**2 = {bsq}")
    side = surd.sqrt(surd.rational(a * a - bsq))
    x = surd.div(surd.sub(a, side), 2)
    rest = surd.sub(a, x)
    return X17Split(
        x=x,
        rest=rest,
        side=side,
        commensurable_parts=surd.commensurable_length(x, rest),
        commensurable_side=surd.commensurable_length(surd.rational(a), side),
    )
