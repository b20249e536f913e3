"""Shared builders for the test suite."""

from fractions import Fraction

from omegact import LaurentPolynomial, UPoly, VariableOrder


def lp(vars, terms):
    """LaurentPolynomial from {exponent tuple: coefficient}."""
    return LaurentPolynomial(tuple(vars), {tuple(e): Fraction(c) for e, c in terms.items()})


def up(coeffs, var="t"):
    """UPoly over the rationals from ascending coefficients."""
    return UPoly.rational(var, [Fraction(c) for c in coeffs])


def order(*vars):
    return VariableOrder(tuple(vars))
