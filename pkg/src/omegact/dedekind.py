"""Generalized Dedekind sums evaluated exactly through pole blocks.

A sum of R(alpha) over the nontrivial n-th roots of unity equals
-n * Frac(R(t)/(t^n - 1), t^(n-1)+...+1) at t = 0, so one Bezout
inverse replaces the n-term complex sum.  The reciprocity law for the
higher-dimensional sums is checked by an independent route: the pole
block of the product function at t = 1, reached by translation and a
series inverse at the origin.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Sequence, Tuple

from .fields import RationalFunction
from .ppfraction import frac_at, frac_at_origin
from .unipoly import UPoly, poly_gcd


class DedekindInstance(NamedTuple):
    n: int
    a: Tuple[int, ...]

    @classmethod
    def make(cls, n: int, a: Sequence[int]) -> "DedekindInstance":
        n = int(n)
        a = tuple(int(x) for x in a)
        if n < 1 or any(x < 1 for x in a):
            raise ValueError("n and all a_i must be positive")
        bad = [x for x in a if math.gcd(n, x) != 1]
        if bad:
            raise ValueError("a_i must be coprime to n; offending: %s" % bad)
        return cls(n, a)


class ReciprocityReport(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


def _tpow_minus_one(var: str, k: int) -> UPoly:
    return UPoly.rational(var, [-1] + [0] * (k - 1) + [1])


def _tpow_plus_one(var: str, k: int) -> UPoly:
    return UPoly.rational(var, [1] + [0] * (k - 1) + [1])


def generalized_sum(R: RationalFunction, n: int) -> Fraction:
    """Sum of R over the n-th roots of unity other than 1.

    R may not have poles at nontrivial n-th roots; a pole at 1 is fine
    since that point is excluded from the sum.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return Fraction(0)
    var = R.var
    p = UPoly.rational(var, [1] * n)  # (t^n - 1)/(t - 1)
    g = poly_gcd(R.den, p)
    if g.degree() != 0:
        raise ValueError(
            "R has a pole at a nontrivial %d-th root of unity (common factor %s)" % (n, g)
        )
    D = R.den * _tpow_minus_one(var, n)
    blk = frac_at(R.num, D, p)
    # the block numerator at 0 over p(0) = 1
    return Fraction(-n) * blk.numerator[0]


def dedekind_sum(instance: DedekindInstance) -> Fraction:
    """d(n; a_1..a_m): the higher-dimensional Dedekind sum, exact."""
    inst = DedekindInstance.make(instance.n, instance.a)
    var = "t"
    num = UPoly.rational(var, [1])
    den = UPoly.rational(var, [1])
    for ai in inst.a:
        num = num * _tpow_plus_one(var, ai)
        den = den * _tpow_minus_one(var, ai)
    return generalized_sum(RationalFunction(num, den), inst.n)


def reciprocity_check(a: Sequence[int]) -> ReciprocityReport:
    """Zagier reciprocity for pairwise coprime a_0..a_m.

    lhs: sum over j of d(a_j; the others)/a_j.  rhs: half the pole block
    of F(t) = prod (t^a_j + 1)/(t^a_j - 1) at t = 1 evaluated at t = 0,
    plus 1 when the number of entries is odd (the constant collects the
    residues at t = +-1 that the block omits).
    """
    entries = tuple(int(x) for x in a)
    if not entries or any(x < 1 for x in entries):
        raise ValueError("need positive integers")
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            if math.gcd(entries[i], entries[j]) != 1:
                raise ValueError(
                    "entries must be pairwise coprime; gcd(%d, %d) > 1"
                    % (entries[i], entries[j])
                )
    m1 = len(entries)
    lhs = Fraction(0)
    for j, aj in enumerate(entries):
        rest = entries[:j] + entries[j + 1 :]
        lhs += Fraction(1, aj) * dedekind_sum(DedekindInstance(aj, rest))

    var = "t"
    num = UPoly.rational(var, [1])
    den = UPoly.rational(var, [1])
    for aj in entries:
        num = num * _tpow_plus_one(var, aj)
        den = den * _tpow_minus_one(var, aj)
    # move the pole at t = 1 to the origin, read its block, move back
    g_num = num.translate(Fraction(1))
    g_den = den.translate(Fraction(1))
    blk = frac_at_origin(g_num, g_den, m1)
    c = blk.numerator
    frac_val = c.evaluate(Fraction(-1)) / Fraction((-1) ** m1)
    rhs = frac_val / 2 + Fraction(1 - (-1) ** m1, 2)
    return ReciprocityReport(lhs, rhs, lhs == rhs)
