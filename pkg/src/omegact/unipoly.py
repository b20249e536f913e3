"""Dense univariate polynomials over an arbitrary coefficient field.

The field is duck typed: coefficients must support +, -, *, /, ==, and
truth testing (zero is falsy).  Each polynomial carries `one`, the
multiplicative identity of its field, so algorithms can manufacture
constants without knowing the concrete type.  The zero polynomial has
degree NEG_INF.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

NEG_INF = float("-inf")


class UPoly:
    __slots__ = ("var", "coeffs", "one")

    def __init__(self, var: str, coeffs: Sequence, one):
        self.var = var
        self.one = one
        cs: List = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    # ------------------------------------------------------------------

    @classmethod
    def rational(cls, var: str, coeffs: Sequence) -> "UPoly":
        return cls(var, [Fraction(c) for c in coeffs], Fraction(1))

    def zero_elem(self):
        return self.one - self.one

    def spawn(self, coeffs: Sequence) -> "UPoly":
        return UPoly(self.var, coeffs, self.one)

    def constant(self, c) -> "UPoly":
        return self.spawn([c])

    def identity(self) -> "UPoly":
        # the polynomial t
        return self.spawn([self.zero_elem(), self.one])

    # ------------------------------------------------------------------

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.zero_elem()

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    __hash__ = None

    # ------------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UPoly):
            return other
        return self.constant(self.one * other if isinstance(other, int) else other)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self.spawn([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return self.spawn([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            # scalar from the coefficient field (or int)
            c = self.one * other if isinstance(other, int) else other
            return self.spawn([k * c for k in self.coeffs])
        if self.is_zero() or other.is_zero():
            return self.spawn([])
        z = self.zero_elem()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return self.spawn(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.constant(self.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # ------------------------------------------------------------------

    def evaluate(self, x):
        acc = self.zero_elem()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "UPoly") -> "UPoly":
        acc = self.spawn([])
        for c in reversed(self.coeffs):
            acc = acc * other + self.constant(c)
        return acc

    def translate(self, b) -> "UPoly":
        """p(t + b)"""
        shift = self.spawn([b, self.one])
        return self.compose(shift)

    def derivative(self) -> "UPoly":
        return self.spawn([c * k for k, c in enumerate(self.coeffs)][1:])

    def reversal(self, n: int) -> "UPoly":
        """t^n * p(1/t); n must be at least deg(p)."""
        if self.is_zero():
            return self
        if n < self.degree():
            raise ValueError("reversal order below degree")
        z = self.zero_elem()
        out = [z] * (n + 1)
        for k, c in enumerate(self.coeffs):
            out[n - k] = c
        return self.spawn(out)

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        return self.spawn([c / lead for c in self.coeffs])

    def truncate(self, m: int) -> "UPoly":
        return self.spawn(self.coeffs[:m])

    def shift_down(self, m: int) -> "UPoly":
        """p // t^m; the dropped coefficients must vanish."""
        for c in self.coeffs[:m]:
            if c:
                raise ValueError("polynomial not divisible by %s^%d" % (self.var, m))
        return self.spawn(self.coeffs[m:])

    def shift_up(self, m: int) -> "UPoly":
        z = self.zero_elem()
        return self.spawn([z] * m + self.coeffs)

    # ------------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if k == 0:
                pieces.append(cs)
                continue
            mono = self.var if k == 1 else "%s^%d" % (self.var, k)
            if cs == "1":
                term = mono
            elif cs == "-1":
                term = "-" + mono
            elif any(op in cs[1:] for op in "+-"):
                term = "(%s)*%s" % (cs, mono)
            else:
                term = "%s*%s" % (cs, mono)
            pieces.append(term)
        out = pieces[0]
        for p in pieces[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return "UPoly(%r, %s)" % (self.var, str(self))


# ----------------------------------------------------------------------


def poly_divmod(a: UPoly, b: UPoly):
    """Quotient and remainder with deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.degree() < b.degree():
        return a.spawn([]), a
    lead_inv = a.one / b.leading()
    q = [a.zero_elem()] * (len(a.coeffs) - len(b.coeffs) + 1)
    r = list(a.coeffs)
    db = b.degree()
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        f = c * lead_inv
        q[k - db] = f
        for j, bc in enumerate(b.coeffs):
            r[k - db + j] = r[k - db + j] - f * bc
    return a.spawn(q), a.spawn(r[:db])


def extended_gcd(a: UPoly, b: UPoly):
    """(g, u, v) with u*a + v*b = g and g monic (or zero)."""
    one = a.constant(a.one)
    zero = a.spawn([])
    r0, r1 = a, b
    u0, u1 = one, zero
    v0, v1 = zero, one
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    lead = r0.leading()
    inv = a.one / lead
    return r0 * inv, u0 * inv, v0 * inv


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic() if not a.is_zero() else a


def series_inverse(e: UPoly, m: int) -> UPoly:
    """Inverse of e modulo t^m; e must have an invertible constant term."""
    c0 = e[0]
    if not c0:
        raise ValueError("series inverse requires a nonzero constant term")
    inv0 = e.one / c0
    out = [inv0]
    for k in range(1, m):
        acc = e.zero_elem()
        for j in range(1, min(k, len(e.coeffs) - 1) + 1):
            acc = acc + e[j] * out[k - j]
        out.append(-inv0 * acc)
    return e.spawn(out)
