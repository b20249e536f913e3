"""Sparse Laurent polynomials, dense univariate polynomials, and the
coefficient fields built on them."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from omegact import LaurentPolynomial, RationalFunction, UPoly
from omegact.fields import QuotientFieldElement
from omegact.unipoly import NEG_INF, extended_gcd, poly_divmod, poly_gcd, series_inverse

from .support import lp, up

XY = ("x", "y")


# ----------------------------------------------------------------------
# canonical string forms


def test_laurent_str_golden():
    assert str(lp(XY, {(-1, 0): 1, (1, 0): 1})) == "x^-1+x"
    assert str(lp(XY, {(0, 0): 1, (1, 0): -2, (1, 1): 1})) == "1-2*x+x*y"
    assert str(LaurentPolynomial.zero(XY)) == "0"
    assert str(LaurentPolynomial.one(XY)) == "1"
    assert str(LaurentPolynomial.monomial(XY, 1, (-1, 0))) == "x^-1"
    assert str(LaurentPolynomial.monomial(XY, Fraction(3, 2), (1, 1))) == "3/2*x*y"


def test_laurent_square_golden():
    s = lp(XY, {(1, 0): 1, (0, 1): 1})
    assert str(s * s) == "x^2+2*x*y+y^2"


def test_upoly_str_golden():
    assert str(up([4, -3, 2, 1])) == "4-3*t+2*t^2+t^3"
    assert str(up([])) == "0"


def test_rational_function_normalized_golden():
    # constants migrate to the numerator so the denominator stays monic-free
    r = RationalFunction(up([1, 1]), up([2, 0, 4]))
    assert str(r) == "(1/2+1/2*t)/(1+2*t^2)"
    assert r.var == "t"


# ----------------------------------------------------------------------
# Laurent polynomial arithmetic


small_coeff = st.integers(min_value=-4, max_value=4)
small_exp = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
laurents = st.dictionaries(small_exp, small_coeff, max_size=4).map(
    lambda d: lp(XY, d)
)


@settings(max_examples=60, deadline=None)
@given(laurents, laurents, laurents)
def test_laurent_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(laurents)
def test_laurent_additive_inverse(a):
    assert (a - a).is_zero()
    assert a + LaurentPolynomial.zero(XY) == a
    assert a * LaurentPolynomial.one(XY) == a


def test_divmod_in_var_golden():
    a = lp(("t",), {(3,): 1, (1,): -2, (0,): 5})
    b = lp(("t",), {(1,): 1, (0,): -1})
    q, r = a.divmod_in_var(b, "t")
    assert q * b + r == a
    assert str(q) == "-1+t+t^2" and str(r) == "4"


def test_substitute_monomials_golden():
    q = lp(XY, {(0, 0): 1, (1, 0): -2, (1, 1): 1})
    img = {"x": lp(XY, {(1, 1): 1}), "y": lp(XY, {(0, 1): 1})}
    assert str(q.substitute_monomials(img)) == "1-2*x*y+x*y^2"


@settings(max_examples=40, deadline=None)
@given(laurents, st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
def test_unimodular_substitution_injective(a, p, q, r):
    # the shear product [[1,p],[0,1]]*[[1,0],[q,1]]*[[1,r],[0,1]] has det 1,
    # so distinct exponent vectors keep distinct images and no terms merge
    m11, m12 = 1 + p * q, p + r + p * q * r
    m21, m22 = q, 1 + q * r
    img = {
        "x": lp(XY, {(m11, m21): 1}),
        "y": lp(XY, {(m12, m22): 1}),
    }
    image = a.substitute_monomials(img)
    assert image.num_terms() == a.num_terms()


# ----------------------------------------------------------------------
# univariate layer


int_polys = st.lists(st.integers(-5, 5), max_size=6).map(up)


def test_upoly_degree_conventions():
    assert up([]).degree() == NEG_INF
    assert up([7]).degree() == 0
    assert up([0, 0, 3]).degree() == 2
    with pytest.raises(ValueError):
        up([]).leading()


@settings(max_examples=60, deadline=None)
@given(int_polys, int_polys)
def test_poly_divmod_reassembles(a, b):
    if b.is_zero():
        with pytest.raises(ZeroDivisionError):
            poly_divmod(a, b)
        return
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree() < b.degree()


@settings(max_examples=60, deadline=None)
@given(int_polys, int_polys)
def test_extended_gcd_bezout(a, b):
    if a.is_zero() and b.is_zero():
        return
    g, u, v = extended_gcd(a, b)
    assert u * a + v * b == g
    if not a.is_zero():
        assert poly_divmod(a, g)[1].is_zero()
    if not b.is_zero():
        assert poly_divmod(b, g)[1].is_zero()


def test_poly_gcd_golden():
    g = poly_gcd(up([-1, 0, 1]), up([1, 2, 1]))
    assert str(g) == "1+t"


@settings(max_examples=30, deadline=None)
@given(int_polys, st.integers(-3, 3))
def test_translate_is_ring_hom_and_invertible(p, b):
    bb = Fraction(b)
    assert p.translate(bb).translate(-bb) == p
    q = up([1, 1, 1])
    assert (p * q).translate(bb) == p.translate(bb) * q.translate(bb)


def test_series_inverse_golden():
    inv = series_inverse(up([1, -1]), 5)
    assert str(inv) == "1+t+t^2+t^3+t^4"


@settings(max_examples=30, deadline=None)
@given(int_polys, st.integers(1, 8))
def test_series_inverse_is_inverse(p, m):
    if not p[0]:
        return
    assert (p * series_inverse(p, m)).truncate(m) == up([1]).truncate(m)


def test_upoly_compose_and_reversal():
    p = up([1, 2, 3])
    t = up([0, 1])
    assert p.compose(t) == p
    assert p.reversal(2).reversal(2) == p
    assert p.evaluate(Fraction(2)) == Fraction(1 + 4 + 12)


def test_upoly_shift_roundtrip():
    p = up([0, 0, 5, 7])
    assert p.shift_down(2).shift_up(2) == p
    assert str(p.shift_down(2)) == "5+7*t"


# ----------------------------------------------------------------------
# rational function field


def test_rational_function_gcd_reduction():
    r = RationalFunction(up([-1, 0, 1]), up([1, 1]))  # (t^2-1)/(t+1)
    assert r.is_polynomial()
    assert r.as_poly() == up([-1, 1])


def test_rational_function_field_ops():
    r = RationalFunction(up([1, 1]), up([2, 0, 4]))
    assert str(r + r) == "(1+t)/(1+2*t^2)"
    assert r * r.one_like() == r
    assert (r - r).num.is_zero()
    assert (r / r) == r.one_like()
    with pytest.raises(ZeroDivisionError):
        RationalFunction(up([1]), up([]))


def test_rational_function_evaluate():
    r = RationalFunction(up([0, 1]), up([1, 1]))  # t/(1+t)
    assert r.evaluate(Fraction(1)) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        r.evaluate(Fraction(-1))


# ----------------------------------------------------------------------
# quotient field Q[alpha]/(p)


def test_quotient_field_golden_ratio():
    mod = up([-1, -1, 1], var="a")  # a^2 - a - 1
    phi = QuotientFieldElement.generator(mod)
    one = QuotientFieldElement.constant(mod, 1)
    assert phi * phi == phi + one
    assert phi * phi.inverse() == one
    assert str(phi.inverse()) == "-1+a"


def test_quotient_field_gaussian():
    mod = up([1, 0, 1], var="a")  # a^2 + 1
    i = QuotientFieldElement.generator(mod)
    one = QuotientFieldElement.constant(mod, 1)
    assert i * i == -one
    assert (one + i) * (one - i) == one + one


def test_quotient_field_rejects_bad_modulus():
    with pytest.raises(ValueError):
        QuotientFieldElement.generator(up([3]))
    with pytest.raises(ValueError):
        QuotientFieldElement.generator(up([1, 0, 2]))  # not monic


def test_quotient_field_zero_divisor_detected():
    # t^2 - 1 is reducible; t - 1 is a zero divisor and has no inverse
    mod = up([-1, 0, 1], var="a")
    elt = QuotientFieldElement(up([-1, 1], var="a"), mod)
    with pytest.raises(ZeroDivisionError):
        elt.inverse()
