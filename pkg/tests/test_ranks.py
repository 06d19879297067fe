from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bookx import surd
from bookx.errors import DomainError
from bookx.parser import parse_expr
from bookx.ranks import DEPTH_CAP, rank, s_recurrence_check, x115_sequence
from bookx.surd import normalize


def val(text):
    return normalize(parse_expr(text))


def brute_rank(x, limit=12):
    """Smallest n with x**(2**n) rational, by repeated exact squaring."""
    for n in range(limit):
        if surd.is_rational(x):
            return n
        x = surd.mul(x, x)
    raise AssertionError("rank above limit")


@pytest.mark.parametrize("text, n", [("5", 0), ("sqrt(2)", 1), ("sqrt(2*sqrt(2))", 2), ("3*sqrt(sqrt(sqrt(5/7)))", 3)])
def test_rank_examples(text, n):
    assert rank(val(text)) == n == brute_rank(val(text))


def test_rank_needs_monomial():
    with pytest.raises(DomainError, match="monomial"):
        rank(val("1 + sqrt(2)"))
    with pytest.raises(DomainError):
        rank(val("0"))


@given(st.fractions(min_value=F(1, 100), max_value=100, max_denominator=100), st.sampled_from(
    ["sqrt(3)", "sqrt(sqrt(6))", "sqrt(5*sqrt(2*sqrt(3)))", "7"]))
def test_rank_invariant_under_rational_scaling(q, text):
    x = val(text)
    assert rank(surd.mul(q, x)) == rank(x)


def test_ladder_matches_listed_terms():
    seq = x115_sequence(2, 3)
    assert seq.terms[0] == val("sqrt(2)")
    assert seq.terms[1] == val("sqrt(2*sqrt(2))")
    assert seq.terms[2] == val("sqrt(2*sqrt(2*sqrt(2)))")
    assert [t.power_form() for t in seq.terms] == ["2^(1/2)", "2^(3/4)", "2^(7/8)"]
    assert [rank(t) for t in seq.terms] == [1, 2, 3]


@pytest.mark.parametrize("b", [2, 3, 5, F(1, 2), F(7, 3), 12])
def test_ladder_invariants(b):
    seq = x115_sequence(b, 8)
    base = surd.rational(b)
    for n in range(1, 9):
        u, s = seq.term(n), seq.areas[n - 1]
        nxt = surd.sqrt(surd.mul(base, u))
        assert surd.mul(nxt, nxt) == s == surd.mul(base, u)
        assert rank(u) == n
        assert not surd.commensurable_length(u, seq.term(n - 1))
        assert not surd.commensurable_length(u, surd.ONE)
        # closed form u_n = b ** (1 - 2**-n)
        with mpmath.workdps(40):
            bf = mpmath.mpf(b.numerator if isinstance(b, F) else b) / (b.denominator if isinstance(b, F) else 1)
            assert mpmath.almosteq(mpmath.mpf(float(u)), bf ** (1 - mpmath.mpf(2) ** -n), rel_eps=1e-12)


def test_ladder_base_case_cross_check():
    # s1 = b u1 = 2 sqrt(2) = sqrt(4 s0) with s0 = b u0 = 2
    seq = x115_sequence(2, 1)
    assert seq.areas[0] == val("2*sqrt(2)") == surd.sqrt(surd.mul(4, 2))


def test_s2_value():
    seq = x115_sequence(2, 2)
    assert seq.areas[1] == val("sqrt(4 * 2 * sqrt(2))") == val("2 * sqrt(2*sqrt(2))")


@pytest.mark.parametrize("b", [2, 3, 5, F(1, 2)])
@pytest.mark.parametrize("n", range(1, 9))
def test_s_recurrence(b, n):
    assert s_recurrence_check(b, n)


def test_depth_cap_reached_quickly():
    seq = x115_sequence(2, DEPTH_CAP)
    assert seq.terms[-1].power_form() == "2^(65535/65536)"
    assert rank(seq.terms[-1]) == DEPTH_CAP


@pytest.mark.parametrize("b, count", [(4, 2), (F(9, 4), 1), (0, 1), (2, 0), (2, DEPTH_CAP + 1)])
def test_ladder_errors(b, count):
    with pytest.raises(DomainError):
        x115_sequence(b, count)
