"""Monomial orders, factor classification, and the two-variable CT routine."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omegact import LaurentPolynomial, VariableOrder
from omegact.ctrational import ct_rational, series_coefficients
from omegact.elliott import ElliottRational
from omegact.oracle import truncated_ct
from omegact.ordering import MIXED, NT, PT, classify_factor

from .support import lp, order

XT = ("x", "t")

exps2 = st.tuples(st.integers(-5, 5), st.integers(-5, 5))


class TestCompare:
    def test_later_variable_dominates(self):
        # x^2 is still smaller than t: the order scans t first
        o = order("x", "t")
        assert o.compare((2, 0), (0, 1)) == -1
        assert o.compare((0, 1), (2, 0)) == 1
        assert o.compare((3, 1), (3, 1)) == 0

    def test_rho_twist_flips_a_variable(self):
        # rho = diag(-1, 1) makes large x-powers small
        o = VariableOrder(XT, rho=[[-1, 0], [0, 1]])
        assert o.compare((1, 0), (0, 0)) == -1
        assert o.compare((0, 0), (1, 0)) == 1

    def test_reversed_negates_rho(self):
        o = order("x", "t")
        r = o.reversed()
        assert r.rho == [[-1, 0], [0, -1]]
        assert r.reversed().rho == [[1, 0], [0, 1]]

    def test_rho_must_be_invertible(self):
        with pytest.raises(ValueError):
            VariableOrder(XT, rho=[[1, 1], [1, 1]])
        with pytest.raises(ValueError):
            VariableOrder(XT, rho=[[1, 0]])

    @given(exps2, exps2)
    @settings(max_examples=60, deadline=None)
    def test_antisymmetry(self, a, b):
        o = order("x", "t")
        assert o.compare(a, b) == -o.compare(b, a)

    @given(exps2, exps2, exps2)
    @settings(max_examples=60, deadline=None)
    def test_transitivity(self, a, b, c):
        o = order("x", "t")
        if o.compare(a, b) <= 0 and o.compare(b, c) <= 0:
            assert o.compare(a, c) <= 0

    @given(exps2, exps2, exps2)
    @settings(max_examples=60, deadline=None)
    def test_translation_invariance(self, a, b, c):
        # the order is a group order: adding c to both sides changes nothing
        o = VariableOrder(XT, rho=[[2, 1], [0, 1]])
        sa = tuple(x + y for x, y in zip(a, c))
        sb = tuple(x + y for x, y in zip(b, c))
        assert o.compare(sa, sb) == o.compare(a, b)


coeff = st.integers(-4, 4).filter(bool).map(Fraction)
small_poly = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2)), coeff, min_size=1, max_size=4
).map(lambda d: LaurentPolynomial(XT, d))


class TestInitialTerm:
    def test_lowest_t_power_wins(self):
        o = order("x", "t")
        f = lp(XT, {(2, 1): 1, (1, 2): 1})
        init = o.initial_term(f)
        assert init.exps == (2, 1)
        assert init.coeff == 1

    def test_constant_beats_mixed_terms(self):
        o = order("x", "t")
        f = lp(XT, {(0, 0): 1, (1, 1): -1, (-1, 1): -1})
        assert o.initial_term(f).exps == (0, 0)

    def test_zero_has_no_initial_term(self):
        o = order("x", "t")
        with pytest.raises(ValueError):
            o.initial_term(LaurentPolynomial.zero(XT))

    @given(small_poly, small_poly)
    @settings(max_examples=60, deadline=None)
    def test_multiplicative(self, f, g):
        # in(fg) = in(f) in(g): the minimal exponent sum is attained once
        o = order("x", "t")
        a, b = o.initial_term(f), o.initial_term(g)
        c = o.initial_term(f * g)
        assert c.exps == tuple(x + y for x, y in zip(a.exps, b.exps))
        assert c.coeff == a.coeff * b.coeff


class TestClassifyFactor:
    def test_pt_initial_at_lowest_var_exponent(self):
        o = order("l", "x")
        f = lp(("l", "x"), {(0, 0): 1, (2, 1): -1})  # 1 - l^2 x
        assert classify_factor(f, "l", o).kind == PT

    def test_nt_initial_at_highest_var_exponent(self):
        o = order("l", "x")
        f = lp(("l", "x"), {(3, 0): 1, (0, 1): -1})  # l^3 - x
        assert classify_factor(f, "l", o).kind == NT

    def test_nt_trinomial(self):
        o = order("x", "t")
        f = lp(XT, {(2, 0): 1, (1, 1): -1, (0, 2): -1})  # x^2 - xt - t^2
        assert classify_factor(f, "x", o).kind == NT

    def test_mixed_initial_strictly_inside(self):
        o = order("x", "t")
        f = lp(XT, {(0, 1): 1, (1, 0): -1, (3, 0): -1})  # t - x - x^3
        assert classify_factor(f, "x", o).kind == MIXED

    def test_var_free_factor_is_pt(self):
        o = order("x", "t")
        f = lp(XT, {(0, 0): 1, (0, 1): -2})  # 1 - 2t
        assert classify_factor(f, "x", o).kind == PT

    @given(
        st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
        st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
        coeff,
    )
    @settings(max_examples=60, deadline=None)
    def test_reversal_swaps_binomial_classes(self, e1, e2, c):
        # a binomial with distinct x-exponents flips PT <-> NT when the
        # order is reversed: min and max of the key exchange roles
        if e1[0] == e2[0]:
            return
        o = order("x", "t")
        f = LaurentPolynomial(XT, {e1: Fraction(1), e2: c})
        k1 = classify_factor(f, "x", o).kind
        k2 = classify_factor(f, "x", o.reversed()).kind
        assert {k1, k2} == {PT, NT}


class TestCTRational:
    def test_row_sum_generating_function(self):
        # CT_a a/((a - ax - x)(1 - ax - x)) collects the binomial row sums
        o = order("a", "x")
        N = lp(("a", "x"), {(1, 0): 1})
        f1 = lp(("a", "x"), {(1, 0): 1, (1, 1): -1, (0, 1): -1})
        f2 = lp(("a", "x"), {(0, 0): 1, (1, 1): -1, (0, 1): -1})
        r = ct_rational(N, [f1, f2], "a", o)
        assert str(r) == "1/(1-2*x)"

    def test_mixed_factor_rejected(self):
        o = order("x", "t")
        N = LaurentPolynomial.one(XT)
        f = lp(XT, {(0, 1): 1, (1, 0): -1, (3, 0): -1})
        with pytest.raises(ValueError, match="not rho-factorable"):
            ct_rational(N, [f], "x", o)

    def test_reciprocity_of_the_two_expansions(self):
        # x/((x - 2t)(1 - x)): the factor x - 2t is NT upward and PT
        # downward, 1 - x the other way round, so the two constant terms
        # are negatives of one another
        rho = order("x", "t")
        sigma = rho.reversed()
        N = lp(XT, {(1, 0): 1})
        f1 = lp(XT, {(1, 0): 1, (0, 1): -2})
        f2 = lp(XT, {(0, 0): 1, (1, 0): -1})
        a = ct_rational(N, [f1, f2], "x", rho)
        b = ct_rational(N, [f1, f2], "x", sigma)
        assert str(a) == "1/(1-2*t)"
        assert str(b) == "-1/(1-2*t)"
        assert not (a + b)

    def test_three_active_variables_rejected(self):
        o = VariableOrder(("x", "y", "t"))
        N = LaurentPolynomial.one(("x", "y", "t"))
        f1 = lp(("x", "y", "t"), {(0, 0, 0): 1, (1, 0, 1): -1})
        f2 = lp(("x", "y", "t"), {(0, 0, 0): 1, (0, 1, 0): -1})
        with pytest.raises(ValueError, match="more than two active"):
            ct_rational(N, [f1, f2], "x", o)

    def test_matches_truncated_oracle_on_random_instances(self):
        # fixed pool of PT and NT binomials; compare the closed form
        # against direct series extraction through t^12
        rho = order("x", "t")
        pool = [
            lp(XT, {(0, 0): 1, (1, 1): -1}),
            lp(XT, {(0, 0): 1, (2, 1): -1}),
            lp(XT, {(0, 0): 1, (1, 2): -1}),
            lp(XT, {(0, 0): 1, (-1, 1): -1}),
            lp(XT, {(0, 0): 1, (0, 1): -2}),
            lp(XT, {(1, 0): 1, (0, 1): -1}),
        ]
        rng = random.Random(7)
        for _ in range(12):
            k = rng.randint(2, 3)
            idx = rng.sample(range(len(pool)), k)
            facs = [(pool[i], rng.randint(1, 2)) for i in idx]
            N = lp(XT, {(rng.randint(-1, 2), rng.randint(0, 1)): 1})
            val = ct_rational(N, facs, "x", rho)
            table = truncated_ct(ElliottRational(rho, N, facs), ("x",), {"t": (0, 12)})
            if isinstance(val, Fraction):
                coeffs = [val] + [Fraction(0)] * 12
            else:
                coeffs = series_coefficients(val, 13)
            assert coeffs == [table.get((n,)) for n in range(13)]
