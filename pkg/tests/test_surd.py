import random
from decimal import Decimal
from fractions import Fraction as F

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bookx import surd
from bookx.errors import DivisionByZero, DomainError, NegativeRadicand, NotRepresentable
from bookx.expr import Add, Const, Mul, Sqrt
from bookx.parser import parse_expr
from bookx.surd import QuadElem, SimpleSurd, normalize

from .oracles import eval_expr, random_expr_text


def val(text):
    return normalize(parse_expr(text))


R2 = surd.sqrt(2)
FOURTH_ROOT_2 = surd.sqrt(R2)


# -- normalize ------------------------------------------------------------------

def test_normalize_sqrt2():
    v = normalize(Sqrt(Const(2)))
    assert v == SimpleSurd.make(1, {2: 1}, 1)
    assert (v.coeff, v.radicand, v.depth) == (1, 2, 1)


def test_squaring_oracle_for_denesting_example():
    # (sqrt(3/2) + sqrt(1/2))**2 == 2 + sqrt(3), expanded by sympy
    r = sympy.sqrt(sympy.Rational(3, 2)) + sympy.sqrt(sympy.Rational(1, 2))
    assert sympy.expand(r**2) == 2 + sympy.sqrt(3)
    assert sympy.nsimplify(r - (sympy.sqrt(6) + sympy.sqrt(2)) / 2) == 0


def test_normalize_denests():
    v = normalize(Sqrt(Add(Const(2), Sqrt(Const(3)))))
    assert isinstance(v, QuadElem)
    assert v.coeffs == {2: F(1, 2), 6: F(1, 2)}
    assert v == val("sqrt(3/2) + sqrt(1/2)")


def test_normalize_not_representable():
    # 1**2 - 1**2 * 2 = -1 is not a rational square
    assert sympy.sqrt(sympy.Integer(1 - 2)).is_rational is not True
    with pytest.raises(NotRepresentable, match="denesting discriminant"):
        normalize(Sqrt(Add(Const(1), Sqrt(Const(2)))))


def test_normalize_product_of_roots_is_rational():
    v = normalize(Mul(Sqrt(Const(2)), Sqrt(Const(2))))
    assert surd.is_rational(v) and surd.rational_value(v) == 2


def test_normalize_errors():
    with pytest.raises(DivisionByZero):
        val("1 / (sqrt(2) - sqrt(2))")
    with pytest.raises(NegativeRadicand):
        val("sqrt(1 - sqrt(2))")
    with pytest.raises(NotRepresentable):
        val("sqrt(sqrt(2)) + 1")


# -- canonical form ----------------------------------------------------------------

def test_depth_is_minimized():
    assert val("sqrt(sqrt(4))") == R2
    assert val("sqrt(sqrt(sqrt(16)))") == R2
    assert val("sqrt(sqrt(9/4))").depth == 1


def test_single_terms_are_simple_surds():
    assert isinstance(val("sqrt(8) - sqrt(2)"), SimpleSurd)
    assert isinstance(val("sqrt(2) + 1"), QuadElem)
    assert val("sqrt(2) - sqrt(2)") == QuadElem()


def test_basis_and_coeffs():
    v = val("1 + sqrt(6) + sqrt(10)")
    assert v.basis == (2, 3, 5)
    assert v.coeffs == {1: 1, 6: 1, 10: 1}


def test_deep_radicand_kept_factored():
    v = val("sqrt(2 * sqrt(2 * sqrt(2)))")
    assert v.factors == ((2, 7),) and v.depth == 3 and v.radicand == 128
    assert v.power_form() == "2^(7/8)"


# -- quad_arith ------------------------------------------------------------------------

def test_conjugate_product():
    assert surd.quad_arith(val("1 + sqrt(2)"), val("1 - sqrt(2)"), "mul") == surd.rational(-1)


def test_ladder_step_product():
    # u2 * u2 == b * u1 with b = 2
    u2 = val("sqrt(2 * sqrt(2))")
    assert surd.quad_arith(u2, u2, "mul") == val("2 * sqrt(2)")


def test_square_of_denested_root():
    r = val("(sqrt(6) + sqrt(2)) / 2")
    assert surd.quad_arith(r, r, "mul") == val("2 + sqrt(3)")


def test_quotients():
    assert surd.quad_arith(1, val("1 + sqrt(2)"), "div") == val("sqrt(2) - 1")
    inv = surd.quad_arith(1, val("1 + sqrt(2) + sqrt(3)"), "div")
    assert surd.mul(inv, val("1 + sqrt(2) + sqrt(3)")) == surd.ONE
    assert surd.quad_arith(FOURTH_ROOT_2, R2, "div") == val("sqrt(sqrt(2)) / sqrt(2)")
    with pytest.raises(DivisionByZero):
        surd.quad_arith(R2, 0, "div")


def test_deep_surds_combine_only_when_commensurable():
    assert surd.add(FOURTH_ROOT_2, FOURTH_ROOT_2) == surd.mul(2, FOURTH_ROOT_2)
    with pytest.raises(NotRepresentable):
        surd.add(FOURTH_ROOT_2, surd.sqrt(surd.sqrt(3)))
    with pytest.raises(NotRepresentable):
        surd.add(FOURTH_ROOT_2, val("1 + sqrt(2)"))
    with pytest.raises(NotRepresentable):
        surd.mul(FOURTH_ROOT_2, val("1 + sqrt(2)"))


def test_mixed_depth_products_close():
    assert surd.mul(FOURTH_ROOT_2, surd.sqrt(surd.sqrt(surd.sqrt(2)))) == val("sqrt(sqrt(sqrt(8)))")
    assert surd.mul(FOURTH_ROOT_2, surd.sqrt(surd.sqrt(8))) == surd.rational(2)


def test_power():
    assert surd.power(val("1 + sqrt(2)"), 2) == val("3 + 2*sqrt(2)")
    assert surd.power(FOURTH_ROOT_2, 4) == surd.rational(2)
    assert surd.power(R2, -2) == surd.rational(F(1, 2))


# -- sqrt ----------------------------------------------------------------------------------

def test_sqrt_examples():
    assert surd.sqrt(4) == surd.rational(2)
    assert surd.sqrt(val("2 + sqrt(3)")) == val("sqrt(3/2) + sqrt(1/2)")
    assert surd.sqrt(R2) == SimpleSurd.make(1, {2: 1}, 2)
    assert float(surd.sqrt(R2)) == pytest.approx(2**0.25)


def test_sqrt_apotome_branch():
    assert surd.sqrt(val("2 - sqrt(3)")) == val("sqrt(3/2) - sqrt(1/2)")


def test_sqrt_errors():
    with pytest.raises(NegativeRadicand):
        surd.sqrt(-2)
    with pytest.raises(NotRepresentable):
        surd.sqrt(val("sqrt(2) + sqrt(3)"))
    with pytest.raises(NotRepresentable):
        surd.sqrt(val("1 + sqrt(2) + sqrt(3)"))


@settings(max_examples=500)
@given(
    # a == 0 would make a single-term surd, not a binomial
    st.fractions(min_value=F(-20), max_value=20, max_denominator=6).filter(lambda a: a != 0),
    st.fractions(min_value=F(-20), max_value=20, max_denominator=6).filter(lambda b: b != 0),
    st.sampled_from([2, 3, 5, 6, 7, 10, 11, 13, 15, 21, 30]),
)
def test_denesting_criterion(a, b, d):
    x = surd.add(a, surd.mul(b, surd.sqrt(d)))
    disc = sympy.Rational(a.numerator, a.denominator) ** 2 - sympy.Rational(b.numerator, b.denominator) ** 2 * d
    disc_is_square = disc >= 0 and sympy.sqrt(disc).is_rational
    if surd.sign(x) < 0:
        with pytest.raises(NegativeRadicand):
            surd.sqrt(x)
        return
    if disc_is_square:
        r = surd.sqrt(x)
        assert surd.mul(r, r) == x
    else:
        with pytest.raises(NotRepresentable):
            surd.sqrt(x)


# -- predicates -----------------------------------------------------------------------------

def test_commensurable_length_examples():
    assert surd.commensurable_length(R2, val("3*sqrt(2)"))
    assert not surd.commensurable_length(R2, surd.sqrt(3))
    assert not surd.commensurable_length(R2, val("sqrt(2*sqrt(2))"))
    assert surd.commensurable_length(val("1 + sqrt(2)"), val("3 + 3*sqrt(2)"))
    assert not surd.commensurable_length(val("1 + sqrt(2)"), FOURTH_ROOT_2)
    with pytest.raises(DomainError):
        surd.commensurable_length(0, R2)


def test_commensurable_power_examples():
    assert surd.commensurable_power(R2, surd.sqrt(3))
    assert not surd.commensurable_power(FOURTH_ROOT_2, R2)
    for x in (R2, FOURTH_ROOT_2, val("2 + sqrt(3)")):
        assert surd.commensurable_power(x, x)


@pytest.mark.parametrize(
    "text, in_length, in_power",
    [("5", True, True), ("sqrt(10)", False, True), ("sqrt(sqrt(2))", False, False)],
)
def test_rationality(text, in_length, in_power):
    x = val(text)
    assert surd.rational_in_length(x) is in_length
    assert surd.rational_in_power(x) is in_power


def test_rationality_requires_positive():
    with pytest.raises(DomainError):
        surd.rational_in_length(val("1 - sqrt(2)"))


# -- to_float and comparison ---------------------------------------------------------------------

def test_to_float_examples():
    assert surd.to_float(R2, 10) == Decimal("1.414213562")
    assert surd.to_float(val("2 + sqrt(3)"), 6) == Decimal("3.73205")
    a = surd.to_float(val("(sqrt(6) + sqrt(2)) / 2"), 6)
    assert a == Decimal("1.93185") == surd.to_float(val("sqrt(2 + sqrt(3))"), 6)


def test_to_float_rationals_round_half_even():
    assert surd.to_float(F(1, 8), 2) == Decimal("0.12")
    assert surd.to_float(F(2, 3), 3) == Decimal("0.667")


def test_to_float_correctly_rounded_against_mpmath():
    rng = random.Random(5)
    for _ in range(100):
        text = random_expr_text(rng)
        exact = val(text)
        digits = rng.randint(1, 30)
        with mpmath.workdps(digits + 40):
            ref = eval_expr(parse_expr(text), digits + 40)
            expected = Decimal(mpmath.nstr(ref, digits + 30, strip_zeros=False))
        from decimal import Context, ROUND_HALF_EVEN

        assert surd.to_float(exact, digits) == Context(prec=digits, rounding=ROUND_HALF_EVEN).plus(expected)


def test_compare():
    assert surd.compare(val("sqrt(3) - sqrt(2)"), val("sqrt(2) - 1")) < 0
    assert surd.compare(FOURTH_ROOT_2, R2) < 0
    assert surd.compare(val("1 + sqrt(2)"), surd.sqrt(surd.sqrt(35))) < 0
    assert surd.compare(val("1 + sqrt(2)"), surd.sqrt(surd.sqrt(33))) > 0
    assert surd.compare(R2, val("sqrt(8) / 2")) == 0
    # a near-tie decided exactly: 99 / 70 is a convergent of sqrt(2)
    assert surd.sign(val("sqrt(2) - 99/70")) == -1
    assert surd.sign(val("sqrt(2) + sqrt(3) - sqrt(5 + 2*sqrt(6))")) == 0


def test_exact_sign_without_float_shortcut(monkeypatch):
    texts = [
        "sqrt(2) + sqrt(3) - sqrt(10)",
        "sqrt(6) - sqrt(2) - 1",
        "1 + sqrt(2) - sqrt(3) - sqrt(6) + sqrt(5)",
        "sqrt(2) - 99/70",
        "7 - sqrt(3) - sqrt(5) - sqrt(7)",
    ]
    expected = [int(mpmath.sign(eval_expr(parse_expr(t)))) for t in texts]
    # force the exact branch by making the float error bound useless
    monkeypatch.setattr(mpmath, "ldexp", lambda x, n: mpmath.mpf(10) ** 10)
    assert [surd.sign(val(t)) for t in texts] == expected


# -- invariants -------------------------------------------------------------------------------------

seeds = st.integers(min_value=0, max_value=2**32)


@settings(max_examples=200)
@given(seeds)
def test_to_expr_roundtrip(seed):
    v = val(random_expr_text(random.Random(seed)))
    assert normalize(surd.to_expr(v)) == v
    assert val(str(v)) == v


@settings(max_examples=100)
@given(seeds)
def test_commensurability_is_an_equivalence(seed):
    rng = random.Random(seed)
    xs = [val(random_expr_text(rng)) for _ in range(3)]
    x, y, z = xs
    assert surd.commensurable_length(x, x)
    assert surd.commensurable_length(x, y) == surd.commensurable_length(y, x)
    if surd.commensurable_length(x, y) and surd.commensurable_length(y, z):
        assert surd.commensurable_length(x, z)
    # and along a forced chain
    y2, z2 = surd.mul(x, F(3, 7)), surd.mul(x, F(5, 2))
    assert surd.commensurable_length(y2, z2)


@settings(max_examples=200)
@given(seeds)
def test_rational_in_length_implies_power(seed):
    x = val(random_expr_text(random.Random(seed)))
    if surd.rational_in_length(x):
        assert surd.rational_in_power(x)


@settings(max_examples=200)
@given(seeds)
def test_sqrt_squares_back(seed):
    x = val(random_expr_text(random.Random(seed)))
    try:
        r = surd.sqrt(x)
    except NotRepresentable:
        return
    assert surd.quad_arith(r, r, "mul") == x


@settings(max_examples=200)
@given(seeds, seeds)
def test_to_float_agrees_with_float_evaluation(s1, s2):
    rng = random.Random(s1)
    t1, t2 = random_expr_text(rng), random_expr_text(rng)
    for op in ("+", "-", "*", "/"):
        text = f"({t1}) {op} ({t2})"
        try:
            exact = val(text)
        except NotRepresentable:
            continue
        ref = float(eval_expr(parse_expr(text), 30))
        got = float(surd.to_float(exact, 15))
        assert got == pytest.approx(ref, rel=1e-9, abs=1e-12)
