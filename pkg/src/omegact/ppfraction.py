"""Partial-fraction extraction without global linear systems.

The fractional part of N/D attached to a denominator factor D1 is
rem(N * s, D1) / D1 where s inverts the cofactor D/D1 modulo D1.  All
routines work over any coefficient field the polynomials carry, and all
of them return exact results; reassembly is checked where it is cheap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple

from .fields import QuotientFieldElement
from .unipoly import UPoly, extended_gcd, poly_divmod, poly_gcd, series_inverse


class FracPart(NamedTuple):
    numerator: UPoly
    factor: UPoly

    def __str__(self):
        return "(%s)/(%s)" % (self.numerator, self.factor)


class PPFraction:
    """polynomial part plus one proper fraction per pairwise-coprime factor."""

    __slots__ = ("polynomial_part", "parts")

    def __init__(self, polynomial_part: UPoly, parts: Sequence[FracPart], check_against=None):
        self.polynomial_part = polynomial_part
        self.parts = list(parts)
        for p in self.parts:
            if p.numerator.degree() >= p.factor.degree():
                raise ValueError("fraction part %s is not proper" % (p,))
        if check_against is not None:
            n, d = check_against
            if self.assemble_against(d) != n:
                raise AssertionError("partial fraction decomposition failed to reassemble")

    def denominator(self) -> UPoly:
        d = self.polynomial_part.constant(self.polynomial_part.one)
        for p in self.parts:
            d = d * p.factor
        return d

    def assemble_against(self, d: UPoly) -> UPoly:
        """numerator of the sum over the common denominator d."""
        total = self.polynomial_part * d
        for p in self.parts:
            cof = poly_divmod(d, p.factor)[0]
            total = total + p.numerator * cof
        return total

    def __str__(self):
        pieces = []
        if self.polynomial_part:
            pieces.append(str(self.polynomial_part))
        pieces.extend(str(p) for p in self.parts)
        return " + ".join(pieces) if pieces else "0"


def frac_at(N: UPoly, D: UPoly, D1: UPoly) -> FracPart:
    """Frac(N/D, D1): the fractional part supported on D1.

    D1 must divide D with cofactor coprime to D1.  N may be improper;
    the result numerator has degree below deg D1.
    """
    E, r = poly_divmod(D, D1)
    if not r.is_zero():
        raise ValueError("%s does not divide the denominator" % D1)
    g, _, v = extended_gcd(D1, E)
    if g.is_zero() or g.degree() != 0:
        raise ValueError("factor is not coprime to its cofactor (gcd %s)" % g)
    inv = v * (N.one / g[0])  # inv == 1/E mod D1
    p1 = poly_divmod(N * inv, D1)[1]
    return FracPart(p1, D1)


def ppfraction_split(N: UPoly, factors: Sequence[UPoly]) -> PPFraction:
    """Split N / prod(factors) into polynomial part and one part per factor.

    Each numerator is obtained by multiplying N with the inverses of the
    other factors one at a time, reducing after every multiplication, so
    intermediate degrees never exceed twice the factor degree.
    """
    factors = list(factors)
    if not factors:
        return PPFraction(N, [])
    D = factors[0].constant(factors[0].one)
    for f in factors:
        if f.degree() < 1:
            raise ValueError("denominator factor %s is constant" % f)
        D = D * f
    poly, R = poly_divmod(N, D)
    parts = []
    for i, f in enumerate(factors):
        p = poly_divmod(R, f)[1]
        for j, other in enumerate(factors):
            if i == j:
                continue
            g, _, v = extended_gcd(f, other)
            if g.is_zero() or g.degree() != 0:
                raise ValueError(
                    "factors %s and %s are not coprime (gcd %s)" % (f, other, g)
                )
            s = v * (N.one / g[0])  # s == 1/other mod f
            p = poly_divmod(p * s, f)[1]
        parts.append(FracPart(p, f))
    return PPFraction(poly, parts, check_against=(N, D))


def conjugated_frac(N: UPoly, D: UPoly, D1: UPoly, b) -> FracPart:
    """Frac(N/D, D1) computed through the translation t -> t + b."""
    part = frac_at(N.translate(b), D.translate(b), D1.translate(b))
    return FracPart(part.numerator.translate(-b), D1)


def frac_at_origin(N: UPoly, D: UPoly, m: int) -> FracPart:
    """Frac at the m-fold pole t = 0: c(t)/t^m with c = N/(D/t^m) mod t^m.

    Valid for improper N/D as well; c collects the negative-power part
    of the Laurent expansion at the origin.
    """
    E = D.shift_down(m)
    if not E[0]:
        raise ValueError("denominator has a zero of order > %d at the origin" % m)
    c = (N * series_inverse(E, m)).truncate(m)
    return FracPart(c, E.constant(E.one).shift_up(m))


def power_split(p: UPoly, q: UPoly, m: int, n: int) -> Tuple[UPoly, UPoly]:
    """A, B with 1/(p^m q^n) = A/p^m + B/q^n, i.e. A*q^n + B*p^m = 1.

    Built from a single Bezout pair r*q + s*p = 1:
    A = sum_i C(n-1+i, i) r^n s^i p^i over i < m, and symmetrically for B.
    """
    if m < 1 or n < 1:
        raise ValueError("powers must be positive")
    g, u, v = extended_gcd(p, q)
    if g.is_zero() or g.degree() != 0:
        raise ValueError("p and q are not coprime (gcd %s)" % g)
    ginv = p.one / g[0]
    s = u * ginv  # s*p == 1 mod q
    r = v * ginv  # r*q == 1 mod p
    from math import comb

    A = p.spawn([])
    rn = r ** n
    sp = p.constant(p.one)
    for i in range(m):
        A = A + rn * sp * comb(n - 1 + i, i)
        sp = sp * s * p
    B = p.spawn([])
    sm = s ** m
    rq = p.constant(p.one)
    for j in range(n):
        B = B + sm * rq * comb(m - 1 + j, j)
        rq = rq * r * q
    return A, B


def full_pfd_linear(N: UPoly, roots: Sequence[Tuple[Fraction, int]]):
    """Full decomposition of N / prod (t - a)^m over given distinct roots.

    Returns (polynomial_part, blocks) where each block is (a, [h_1..h_m])
    and h_j multiplies 1/(t-a)^j.
    """
    seen = set()
    for a, m in roots:
        if a in seen:
            raise ValueError("repeated root %s" % a)
        seen.add(a)
        if m < 1:
            raise ValueError("multiplicity must be positive")
    D = N.constant(N.one)
    for a, m in roots:
        D = D * N.spawn([N.one * (-a), N.one]) ** m
    poly = poly_divmod(N, D)[0]
    blocks = []
    for a, m in roots:
        Et = N.constant(N.one)
        for b, k in roots:
            if b == a:
                continue
            Et = Et * N.spawn([N.one * (a - b), N.one]) ** k
        Nt = N.translate(a)
        c = (Nt * series_inverse(Et, m)).truncate(m)
        blocks.append((a, [c[m - j] for j in range(1, m + 1)]))
    return poly, blocks


def polynomial_part_by_reversal(N: UPoly, D: UPoly) -> UPoly:
    """The polynomial part of N/D without computing any remainder.

    Reversal sends the polynomial part to the fractional part at the
    origin: with n = deg N, d = deg D, the reversed quotient is the
    order-(n-d+1) series of rev(N)/rev(D).
    """
    n, d = N.degree(), D.degree()
    if D.is_zero():
        raise ZeroDivisionError("zero denominator")
    if N.is_zero() or n < d:
        return N.spawn([])
    Ns = N.reversal(n)
    Ds = D.reversal(d)
    c = (Ns * series_inverse(Ds, n - d + 1)).truncate(n - d + 1)
    return N.spawn([c[n - d - k] for k in range(n - d + 1)])


def frac_at_prime(N: UPoly, D: UPoly, p: UPoly):
    """The pole block of N/D at a root alpha of a monic squarefree prime p.

    Returns (p, k, [h_1..h_k]) with h_j in Q[alpha]/(p) multiplying
    1/(t - alpha)^j, where k is the multiplicity of p in D.
    """
    if p.leading() != 1:
        raise ValueError("modulus must be monic")
    g = poly_gcd(p, p.derivative())
    if g.degree() != 0:
        raise ValueError("modulus is not squarefree (gcd with derivative %s)" % g)
    k = 0
    E = D
    while True:
        q, r = poly_divmod(E, p)
        if r.is_zero():
            E = q
            k += 1
        else:
            break
    if k == 0:
        raise ValueError("%s does not divide the denominator" % p)

    one_f = QuotientFieldElement.constant(p, 1)
    alpha = QuotientFieldElement.generator(p)

    def lift(poly: UPoly) -> UPoly:
        return UPoly("t", [QuotientFieldElement.constant(p, c) for c in poly.coeffs], one_f)

    p_f = lift(p)
    # p(t) = (t - alpha) * ptilde over the quotient field
    t_minus_alpha = UPoly("t", [-alpha, one_f], one_f)
    ptilde, rem = poly_divmod(p_f, t_minus_alpha)
    if not rem.is_zero():
        raise AssertionError("alpha is not a root of its own modulus")
    Nt = lift(N).translate(alpha)
    Et = (lift(E).translate(alpha)) * (ptilde.translate(alpha) ** k)
    if not Et[0]:
        raise ZeroDivisionError(
            "zero divisor while inverting the cofactor; modulus %s is not prime" % p
        )
    c = (Nt * series_inverse(Et, k)).truncate(k)
    return p, k, [c[k - j] for j in range(1, k + 1)]
