"""Coefficient fields built on univariate polynomials.

RationalFunction is the field of fractions of Q[v] with a normalized
representation (monic denominator, gcd removed).  QuotientFieldElement
works modulo a fixed monic polynomial; inversion reports zero divisors
explicitly so callers learn when a claimed prime modulus is not one.
"""

from __future__ import annotations

from fractions import Fraction

from .unipoly import UPoly, extended_gcd, poly_divmod, poly_gcd


def _rat_poly(var: str, value) -> UPoly:
    if isinstance(value, UPoly):
        return value
    return UPoly.rational(var, [value])


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
        lead = den.leading()
        if lead != 1:
            num = num * (Fraction(1) / lead)
            den = den.monic()
        if num.is_zero():
            den = den.constant(Fraction(1))
        self.num = num
        self.den = den

    # ------------------------------------------------------------------

    @classmethod
    def from_poly(cls, p: UPoly) -> "RationalFunction":
        return cls(p, p.constant(Fraction(1)))

    @classmethod
    def constant(cls, var: str, c) -> "RationalFunction":
        return cls.from_poly(UPoly.rational(var, [c]))

    @classmethod
    def variable(cls, var: str, power: int = 1) -> "RationalFunction":
        p = UPoly.rational(var, [0] * power + [1])
        return cls.from_poly(p)

    @property
    def var(self) -> str:
        return self.num.var if self.num.coeffs else self.den.var

    def one_like(self) -> "RationalFunction":
        return RationalFunction.constant(self.den.var, 1)

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def as_poly(self) -> UPoly:
        if not self.is_polynomial():
            raise ValueError("not a polynomial: %s" % self)
        return self.num

    # ------------------------------------------------------------------

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, UPoly):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(self.den.var, other)
        raise TypeError("cannot coerce %r" % (other,))

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        out = RationalFunction.__new__(RationalFunction)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (self.one_like() / self) ** (-n)
        result = self.one_like()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    __hash__ = None

    def __bool__(self):
        return not self.num.is_zero()

    def evaluate(self, x: Fraction) -> Fraction:
        d = self.den.evaluate(x)
        if not d:
            raise ZeroDivisionError("pole at %s" % x)
        return self.num.evaluate(x) / d

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        num, den = self.num, self.den
        # display with denominator constant term 1 when the origin is regular
        c = den[0]
        if c:
            num = num * (Fraction(1) / c)
            den = den * (Fraction(1) / c)
        ns, ds = str(num), str(den)
        if any(op in ns[1:] for op in "+-"):
            ns = "(%s)" % ns
        if any(op in ds[1:] for op in "+-") or "*" in ds:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)

    def __repr__(self):
        return "RationalFunction(%s)" % self


class QuotientFieldElement:
    """An element of Q[alpha]/(modulus); modulus monic of positive degree."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: UPoly, modulus: UPoly):
        if modulus.degree() < 1:
            raise ValueError("modulus must have positive degree")
        if modulus.leading() != 1:
            raise ValueError("modulus must be monic")
        self.modulus = modulus
        self.value = poly_divmod(value, modulus)[1]

    @classmethod
    def constant(cls, modulus: UPoly, c) -> "QuotientFieldElement":
        return cls(UPoly.rational(modulus.var, [c]), modulus)

    @classmethod
    def generator(cls, modulus: UPoly) -> "QuotientFieldElement":
        return cls(UPoly.rational(modulus.var, [0, 1]), modulus)

    def _coerce(self, other) -> "QuotientFieldElement":
        if isinstance(other, QuotientFieldElement):
            if other.modulus != self.modulus:
                raise ValueError("mismatched moduli")
            return other
        if isinstance(other, (int, Fraction)):
            return QuotientFieldElement.constant(self.modulus, other)
        if isinstance(other, UPoly):
            return QuotientFieldElement(other, self.modulus)
        raise TypeError("cannot coerce %r" % (other,))

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QuotientFieldElement(self.value + o.value, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return QuotientFieldElement(-self.value, self.modulus)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return QuotientFieldElement(self.value * o.value, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "QuotientFieldElement":
        g, u, _ = extended_gcd(self.value, self.modulus)
        if g.degree() != 0:
            raise ZeroDivisionError(
                "zero divisor: gcd(%s, %s) = %s, modulus is not prime" % (self.value, self.modulus, g)
            )
        if g.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # g is the monic gcd, a nonzero constant here
        return QuotientFieldElement(u * (Fraction(1) / g[0]), self.modulus)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuotientFieldElement.constant(self.modulus, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.value == o.value

    __hash__ = None

    def __bool__(self):
        return not self.value.is_zero()

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return "QuotientFieldElement(%s mod %s)" % (self.value, self.modulus)
