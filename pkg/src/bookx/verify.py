"""Seeded randomized checks of propositions X.17, X.21, X.54 and X.115.

Trial ``i`` draws its instance from a generator seeded by
``(prop, seed, i)`` alone, so reports do not depend on execution order.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

from . import surd
from .arithmetic import is_perfect_square
from .errors import DomainError
from .ranks import rank, s_recurrence_check, x115_sequence
from .taxonomy import BinomialPair, classify, classify_pair, is_medial, sqrt_first, x17_split

PROPOSITIONS = ("x17", "x21", "x54", "x115")


@dataclass(frozen=True)
class VerifyReport:
    prop: str
    attempted: int
    passed: int
    seed: int
    counterexample: dict | None = None

    def __post_init__(self):
        assert self.passed <= self.attempted
        assert (self.counterexample is not None) == (self.passed < self.attempted)

    @property
    def ok(self) -> bool:
        return self.passed == self.attempted

    def to_dict(self) -> dict:
        return asdict(self)


def trial_rng(prop: str, seed: int, i: int) -> random.Random:
    return random.Random(f"{prop}:{seed}:{i}")


def _rand_rat(rng: random.Random, top: int = 40, den: int = 8) -> Fraction:
    return Fraction(rng.randint(1, top), rng.randint(1, den))


def _rand_nonsquare(rng: random.Random) -> Fraction:
    while True:
        q = _rand_rat(rng)
        if not is_perfect_square(q):
            return q


def _proper_fraction(rng: random.Random) -> Fraction:
    d = rng.randint(2, 12)
    return Fraction(rng.randint(1, d - 1), d)


# each trial returns (ok, instance description)

def _trial_x17(rng: random.Random, i: int):
    a = _rand_rat(rng)
    if i % 2 == 0:
        # a**2 - b**2 a square: parts commensurable
        c = a * _proper_fraction(rng)
        bsq = a * a - c * c
    else:
        while True:
            bsq = a * a * _proper_fraction(rng)
            if not is_perfect_square(a * a - bsq):
                break
    split = x17_split(a, bsq)
    instance = {
        "a": str(a),
        "bsq": str(bsq),
        "x": str(split.x),
        "commensurable_parts": split.commensurable_parts,
        "commensurable_side": split.commensurable_side,
    }
    return split.agrees, instance


def _trial_x21(rng: random.Random, i: int):
    while True:
        s, t = _rand_nonsquare(rng), _rand_nonsquare(rng)
        if not is_perfect_square(s / t):
            break
    side = surd.sqrt(surd.mul(surd.sqrt(s), surd.sqrt(t)))
    return is_medial(side), {"s": str(s), "t": str(t), "side": str(side)}


def _trial_x54(rng: random.Random, i: int):
    sign = 1 if i % 2 == 0 else -1
    while True:
        a = _rand_rat(rng)
        c = a * _proper_fraction(rng)
        b2 = a * a - c * c
        if not is_perfect_square(b2):
            break
    p = BinomialPair.of(a * a, b2, sign)
    instance = {"input": str(p)}
    if classify_pair(p) != 1:
        return False, instance
    root = sqrt_first(p, method="both")
    value = root.value()
    instance["root"] = str(value)
    squared = surd.mul(value, value)
    kind = classify(value).kind
    ok = squared == p.value() and kind == ("binomial" if sign > 0 else "apotome")
    return ok, instance


def _trial_x115(rng: random.Random, i: int):
    b = _rand_nonsquare(rng)
    depth = rng.randint(1, 8)
    seq = x115_sequence(b, depth)
    instance = {"b": str(b), "depth": depth}
    ok = True
    for n in range(1, depth + 1):
        u = seq.term(n)
        ok = (
            ok
            and rank(u) == n
            and not surd.commensurable_length(u, seq.term(n - 1))
            and not surd.commensurable_length(u, surd.ONE)
            and s_recurrence_check(b, n)
        )
    return ok, instance


_TRIALS: dict[str, Callable] = {
    "x17": _trial_x17,
    "x21": _trial_x21,
    "x54": _trial_x54,
    "x115": _trial_x115,
}


def verify_proposition(prop: str, trials: int, seed: int) -> VerifyReport:
    try:
        trial = _TRIALS[prop]
    except KeyError:
        raise DomainError(f"unknown proposition {prop!r}; choose from {', '.join(PROPOSITIONS)}") from None
    if trials < 1:
        raise DomainError("trials must be at least 1")
    passed = 0
    counterexample = None
    for i in range(trials):
        try:
            ok, instance = trial(trial_rng(prop, seed, i), i)
        except DomainError as exc:
            ok, instance = False, {"error": str(exc)}
        if ok:
            passed += 1
        elif counterexample is None:
            counterexample = {"trial": i, **instance}
    return VerifyReport(prop, trials, passed, seed, counterexample)
