"""Constant terms of general rational functions in at most two variables.

The function is rewritten as a univariate rational in the extraction
variable whose coefficients live in the rationals or in a univariate
rational-function field.  Factors classify PT or NT against the series
order; the constant term is the polynomial part at zero plus the PT pole
blocks evaluated at zero, each block obtained by a Bezout inverse rather
than a linear system.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .fields import RationalFunction
from .laurent import LaurentPolynomial
from .ordering import MIXED, PT, VariableOrder, classify_factor
from .ppfraction import frac_at
from .unipoly import UPoly, poly_divmod

Scalar = Union[Fraction, RationalFunction]


def _scalarize(p: LaurentPolynomial, other: Optional[str]) -> Scalar:
    """A Laurent polynomial in at most `other` as a field element."""
    if other is None:
        return p.constant_value()
    oi = p.vars.index(other)
    m0 = min((e[oi] for e in p.terms), default=0)
    m0 = min(m0, 0)
    coeffs = {}
    for e, c in p.terms.items():
        if any(x for i, x in enumerate(e) if i != oi):
            raise ValueError("coefficient %s involves more than one variable" % p)
        coeffs[e[oi] - m0] = c
    deg = max(coeffs) if coeffs else 0
    num = UPoly.rational(other, [coeffs.get(k, 0) for k in range(deg + 1)])
    if m0 == 0:
        return RationalFunction.from_poly(num)
    den = UPoly.rational(other, [0] * (-m0) + [1])
    return RationalFunction(num, den)


def _to_upoly(p: LaurentPolynomial, var: str, other: Optional[str], one: Scalar) -> UPoly:
    vi = p.vars.index(var)
    if p.terms and min(e[vi] for e in p.terms) < 0:
        raise ValueError("negative %s exponents must be cleared first" % var)
    deg = max((e[vi] for e in p.terms), default=0)
    coeffs = []
    for k in range(deg + 1):
        ck = p.coefficient_in(var, k)
        coeffs.append(_scalarize(ck, other) if other else ck.constant_value())
    return UPoly(var, coeffs, one)


def ct_rational(
    N: LaurentPolynomial,
    factors: Sequence,
    var: str,
    order: VariableOrder,
) -> Scalar:
    """CT in var of N / prod f_i^m_i; at most one other variable may occur.

    Every factor must classify PT or NT in var under the order; a Mixed
    factor has no one-sided expansion and raises.  Factors must be
    pairwise coprime after merging repeats.
    """
    vars = order.vars
    if var not in vars:
        raise ValueError("variable %r not in context %r" % (var, vars))
    flist: List[Tuple[LaurentPolynomial, int]] = []
    for item in factors:
        f, m = item if isinstance(item, tuple) else (item, 1)
        flist.append((order.align(f), int(m)))
    num = order.align(N)

    active = set()
    for p in [num] + [f for f, _ in flist]:
        for v in vars:
            if p.involves(v):
                active.add(v)
    others = [v for v in vars if v in active and v != var]
    if len(others) > 1:
        raise ValueError("more than two active variables: %s" % sorted(active))
    other = others[0] if others else None
    one: Scalar = RationalFunction.constant(other, 1) if other else Fraction(1)

    scalar_den = one
    classified: List[Tuple[LaurentPolynomial, int, str]] = []
    for f, m in flist:
        if f.is_zero():
            raise ZeroDivisionError("zero factor in denominator")
        if m == 0:
            continue
        if m < 0:
            raise ValueError("negative factor multiplicity")
        shift = {}
        a = f.min_exp(var) if f.involves(var) else 0
        b = f.min_exp(other) if other and f.involves(other) else 0
        if a or b:
            e = [0] * len(vars)
            e[vars.index(var)] = -a
            if other:
                e[vars.index(other)] = -b
            f = f * LaurentPolynomial.monomial(vars, 1, tuple(e))
            e2 = tuple(x * m for x in e)
            num = num * LaurentPolynomial.monomial(vars, 1, e2)
        if not f.involves(var):
            scalar_den = scalar_den * _scalarize(f, other) ** m
            continue
        kind = classify_factor(f, var, order).kind
        if kind == MIXED:
            raise ValueError("factor %s is not rho-factorable in %s (Mixed)" % (f, var))
        classified.append((f, m, kind))

    # merge repeated factors so the pole blocks are attached to coprime powers
    merged: List[List] = []
    for f, m, kind in classified:
        for entry in merged:
            if entry[0] == f:
                entry[1] += m
                break
        else:
            merged.append([f, m, kind])

    c = max(0, -num.min_exp(var)) if num.terms else 0
    if c:
        e = [0] * len(vars)
        e[vars.index(var)] = c
        num = num * LaurentPolynomial.monomial(vars, 1, tuple(e))
    num_u = _to_upoly(num, var, other, one)

    ups = [( _to_upoly(f, var, other, one), m, kind) for f, m, kind in merged]
    d_full = UPoly(var, [one - one] * c + [one], one)
    for fu, m, _ in ups:
        d_full = d_full * fu ** m

    q, _ = poly_divmod(num_u, d_full)
    total = q[0]
    for fu, m, kind in ups:
        if kind != PT:
            continue
        blk = frac_at(num_u, d_full, fu ** m)
        total = total + blk.numerator[0] / fu[0] ** m

    return total / scalar_den


def hadamard(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    """Coefficientwise product of two power series given as rationals.

    Realized as CT_x f(t/x) g(x): the substituted denominator of f is NT
    in x and that of g is PT, so the two-variable constant-term routine
    applies directly.
    """
    tname = f.var
    xname = "x" if tname != "x" else "y"
    if not f.den.evaluate(Fraction(0)):
        raise ValueError("left factor is not expandable at 0")
    if not g.den.evaluate(Fraction(0)):
        raise ValueError("right factor is not expandable at 0")
    vars = (xname, tname)
    order = VariableOrder(vars)

    def sub_tx(p: UPoly) -> LaurentPolynomial:
        return LaurentPolynomial(vars, {(-k, k): c for k, c in enumerate(p.coeffs) if c})

    def sub_x(p: UPoly) -> LaurentPolynomial:
        return LaurentPolynomial(vars, {(k, 0): c for k, c in enumerate(p.coeffs) if c})

    N = sub_tx(f.num) * sub_x(g.num)
    facs = [(sub_tx(f.den), 1), (sub_x(g.den), 1)]
    val = ct_rational(N, facs, xname, order)
    if isinstance(val, Fraction):
        return RationalFunction.constant(tname, val)
    return val


def series_coefficients(f: RationalFunction, count: int) -> List[Fraction]:
    """First `count` Taylor coefficients of f at the origin."""
    if not f.den.evaluate(Fraction(0)):
        raise ValueError("not expandable at 0")
    from .unipoly import series_inverse

    inv = series_inverse(f.den, count)
    return [(f.num * inv)[k] for k in range(count)]
