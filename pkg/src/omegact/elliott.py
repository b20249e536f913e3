"""Rational functions whose denominators factor into binomials.

The denominator of an Elliott-rational function is a product of powers
of two-term factors (lhs - rhs).  Normalization keeps lhs equal to the
order-initial term with coefficient +1 (compensating the numerator),
absorbs single-term factors into the numerator, and merges factors that
agree up to unit scaling.  A factor with more than two terms is
rejected: such functions are outside this class.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .laurent import Exponents, LaurentPolynomial, grevlex_key
from .ordering import Monomial, VariableOrder

FactorKey = Tuple[Exponents, Fraction, Exponents]


class BinomialFactor:
    """A denominator factor (lhs - rhs)^mult with lhs the initial term."""

    __slots__ = ("lhs", "rhs", "mult")

    def __init__(self, lhs: Monomial, rhs: Monomial, mult: int):
        if lhs.coeff != 1:
            raise ValueError("lhs coefficient must be normalized to 1")
        if mult < 1:
            raise ValueError("multiplicity must be positive")
        self.lhs = lhs
        self.rhs = rhs
        self.mult = int(mult)

    def key(self) -> FactorKey:
        return (self.lhs.exps, self.rhs.coeff, self.rhs.exps)

    def with_mult(self, m: int) -> "BinomialFactor":
        return BinomialFactor(self.lhs, self.rhs, m)

    def as_laurent(self, vars: Sequence[str]) -> LaurentPolynomial:
        return self.lhs.as_laurent(vars) - self.rhs.as_laurent(vars)

    def base_str(self, vars: Sequence[str]) -> str:
        return str(self.as_laurent(vars))

    def __repr__(self):
        return "BinomialFactor(%r, %r, %d)" % (self.lhs, self.rhs, self.mult)


class ElliottRational:
    __slots__ = ("order", "numerator", "factors")

    def __init__(
        self,
        order: VariableOrder,
        numerator: LaurentPolynomial,
        factors: Iterable = (),
    ):
        self.order = order
        num = order.align(numerator) if numerator.vars != order.vars else numerator
        merged: Dict[FactorKey, BinomialFactor] = {}

        def push(lhs: Monomial, rhs: Monomial, mult: int):
            k = (lhs.exps, rhs.coeff, rhs.exps)
            prev = merged.get(k)
            if prev is None:
                merged[k] = BinomialFactor(lhs, rhs, mult)
            else:
                merged[k] = prev.with_mult(prev.mult + mult)

        for item in factors:
            if isinstance(item, BinomialFactor):
                f, mult = item, item.mult
                push(f.lhs, f.rhs, mult)
                continue
            if isinstance(item, tuple):
                poly, mult = item
            else:
                poly, mult = item, 1
            mult = int(mult)
            if mult == 0:
                continue
            if mult < 0:
                raise ValueError("negative factor multiplicity")
            poly = order.align(poly)
            nt = poly.num_terms()
            if nt == 0:
                raise ZeroDivisionError("zero factor in denominator")
            if nt == 1:
                num = num * (poly ** (-mult))  # a monomial, absorbed
                continue
            if nt > 2:
                raise ValueError("denominator factor is not a binomial: %s" % poly)
            init = order.initial_term(poly)
            other_exps = next(e for e in poly.terms if e != init.exps)
            d = poly.terms[other_exps]
            # scale by the initial monomial: the factor reads (1 - M) with
            # M order-greater than 1, and the unit moves to the numerator
            ratio = Monomial(-d / init.coeff, tuple(o - i for o, i in zip(other_exps, init.exps)))
            lhs = Monomial(Fraction(1), (0,) * len(order.vars))
            if init.coeff != 1 or any(init.exps):
                num = num * LaurentPolynomial.monomial(
                    order.vars,
                    (Fraction(1) / init.coeff) ** mult,
                    tuple(-e * mult for e in init.exps),
                )
            push(lhs, ratio, mult)

        self.numerator = num
        ordered = sorted(merged.values(), key=lambda f: f.base_str(order.vars))
        self.factors = tuple(ordered)

    # ------------------------------------------------------------------

    @classmethod
    def from_laurent(cls, order: VariableOrder, p: LaurentPolynomial) -> "ElliottRational":
        return cls(order, p)

    @classmethod
    def one(cls, order: VariableOrder) -> "ElliottRational":
        return cls(order, LaurentPolynomial.one(order.vars))

    @classmethod
    def zero(cls, order: VariableOrder) -> "ElliottRational":
        return cls(order, LaurentPolynomial.zero(order.vars))

    @classmethod
    def constant(cls, order: VariableOrder, c) -> "ElliottRational":
        return cls(order, LaurentPolynomial.constant(order.vars, c))

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def denominator_poly(self) -> LaurentPolynomial:
        out = LaurentPolynomial.one(self.order.vars)
        for f in self.factors:
            out = out * (f.as_laurent(self.order.vars) ** f.mult)
        return out

    # ------------------------------------------------------------------
    # arithmetic

    def _mults(self) -> Dict[FactorKey, int]:
        return {f.key(): f.mult for f in self.factors}

    def _factor_map(self) -> Dict[FactorKey, BinomialFactor]:
        return {f.key(): f for f in self.factors}

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ElliottRational(self.order, self.numerator * other, self.factors)
        if isinstance(other, LaurentPolynomial):
            return ElliottRational(self.order, self.numerator * other, self.factors)
        if not isinstance(other, ElliottRational):
            return NotImplemented
        return ElliottRational(
            self.order,
            self.numerator * other.numerator,
            list(self.factors) + list(other.factors),
        )

    __rmul__ = __mul__

    def __neg__(self):
        return ElliottRational(self.order, -self.numerator, self.factors)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, LaurentPolynomial)):
            other = ElliottRational(self.order, LaurentPolynomial.constant(self.order.vars, other) if not isinstance(other, LaurentPolynomial) else other)
        if not isinstance(other, ElliottRational):
            return NotImplemented
        ma, mb = self._mults(), other._mults()
        fmap = self._factor_map()
        fmap.update(other._factor_map())
        keys = set(ma) | set(mb)
        common = {k: max(ma.get(k, 0), mb.get(k, 0)) for k in keys}
        na = self.numerator
        nb = other.numerator
        for k, m in common.items():
            base = fmap[k].as_laurent(self.order.vars)
            da = m - ma.get(k, 0)
            db = m - mb.get(k, 0)
            if da:
                na = na * base ** da
            if db:
                nb = nb * base ** db
        return ElliottRational(
            self.order,
            na + nb,
            [fmap[k].with_mult(m) for k, m in common.items() if m],
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, LaurentPolynomial)):
            return self + ElliottRational(self.order, -(LaurentPolynomial.constant(self.order.vars, other) if not isinstance(other, LaurentPolynomial) else other))
        if not isinstance(other, ElliottRational):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, n: int):
        if n < 0:
            return self.reciprocal() ** (-n)
        return ElliottRational(
            self.order,
            self.numerator ** n,
            [f.with_mult(f.mult * n) for f in self.factors] if n else (),
        )

    def reciprocal(self) -> "ElliottRational":
        if self.numerator.num_terms() > 2:
            raise ValueError("reciprocal requires a monomial or binomial numerator")
        if self.numerator.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        den = self.denominator_poly()
        return ElliottRational(self.order, den, [(self.numerator, 1)])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, LaurentPolynomial):
            other = ElliottRational(self.order, other)
        if not isinstance(other, ElliottRational):
            return NotImplemented
        return self * other.reciprocal()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPolynomial)):
            other = ElliottRational(
                self.order,
                other if isinstance(other, LaurentPolynomial) else LaurentPolynomial.constant(self.order.vars, other),
            )
        if not isinstance(other, ElliottRational):
            return NotImplemented
        if other.order.vars != self.order.vars:
            sv, ov = set(self.order.vars), set(other.order.vars)
            try:
                if ov <= sv:
                    other = other.with_order(self.order)
                elif sv <= ov:
                    return other.__eq__(self)
                else:
                    return False
            except ValueError:
                return False
        ma, mb = self._mults(), other._mults()
        fmap = self._factor_map()
        fmap.update(other._factor_map())
        na, nb = self.numerator, other.numerator
        for k in set(ma) | set(mb):
            a, b = ma.get(k, 0), mb.get(k, 0)
            m = min(a, b)
            base = fmap[k].as_laurent(self.order.vars)
            if b - m:
                na = na * base ** (b - m)
            if a - m:
                nb = nb * base ** (a - m)
        return na == nb

    __hash__ = None

    # ------------------------------------------------------------------

    def substitute_monomials(
        self,
        images: Dict[str, LaurentPolynomial],
        new_order: Optional[VariableOrder] = None,
    ) -> "ElliottRational":
        order = new_order if new_order is not None else self.order
        num = self.numerator.substitute_monomials(images).embed(order.vars)
        raw = []
        for f in self.factors:
            poly = f.as_laurent(self.order.vars).substitute_monomials(images).embed(order.vars)
            raw.append((poly, f.mult))
        return ElliottRational(order, num, raw)

    def substitute_one(self, var: str) -> "ElliottRational":
        num = self.numerator.substitute_one(var)
        raw = []
        for f in self.factors:
            poly = f.as_laurent(self.order.vars).substitute_one(var)
            raw.append((poly, f.mult))
        return ElliottRational(self.order, num, raw)

    def with_order(self, order: VariableOrder) -> "ElliottRational":
        """The same function viewed in another variable context.

        Dropped variables must not occur anywhere in the function.
        """
        if order.vars == self.order.vars and order.rho == self.order.rho:
            return self
        num = self.numerator.embed(order.vars)
        raw = [
            (f.as_laurent(self.order.vars).embed(order.vars), f.mult)
            for f in self.factors
        ]
        return ElliottRational(order, num, raw)

    def cancel_common(self) -> "ElliottRational":
        """Divide binomial factors out of the numerator where possible."""
        num = self.numerator
        mults = [[f, f.mult] for f in self.factors]
        changed = True
        while changed and not num.is_zero():
            changed = False
            for slot in mults:
                f, m = slot
                if m == 0:
                    continue
                base = f.as_laurent(self.order.vars)
                try:
                    q = num.exact_div(base)
                except ValueError:
                    continue
                num = q
                slot[1] = m - 1
                changed = True
        return ElliottRational(
            self.order, num, [f.with_mult(m) for f, m in mults if m]
        )

    # ------------------------------------------------------------------

    def expand_truncated(self, max_total_degree: int) -> LaurentPolynomial:
        """Series expansion keeping terms of total degree <= the bound.

        Requires every factor to look like (1 - M) with M a monomial of
        nonnegative exponents and positive total degree, so truncation by
        total degree is sound.
        """
        out = self.numerator
        vars = self.order.vars
        for f in self.factors:
            if any(e != 0 for e in f.lhs.exps):
                raise ValueError("factor %s is not 1 - monomial" % f.base_str(vars))
            if any(e < 0 for e in f.rhs.exps) or sum(f.rhs.exps) < 1:
                raise ValueError(
                    "factor %s does not expand by total degree" % f.base_str(vars)
                )
            ratio = f.rhs.as_laurent(vars)
            geom = LaurentPolynomial.one(vars)
            power = LaurentPolynomial.one(vars)
            k = 0
            while True:
                k += 1
                power = power * ratio
                if power.total_degree_min() > max_total_degree:
                    break
                coeff = _binom_int(f.mult - 1 + k, k)
                geom = geom + power * coeff
            out = out * geom
            out = _truncate_total_degree(out, max_total_degree)
        return _truncate_total_degree(out, max_total_degree)

    # ------------------------------------------------------------------

    def canonical_str(self) -> str:
        num = str(self.numerator)
        if not self.factors:
            return num
        pieces = []
        for f in self.factors:
            base = "(%s)" % f.base_str(self.order.vars)
            pieces.append(base if f.mult == 1 else "%s^%d" % (base, f.mult))
        den = "*".join(pieces)
        if len(pieces) > 1:
            den = "(%s)" % den
        return "(%s)/%s" % (num, den)

    def __str__(self):
        return self.canonical_str()

    def __repr__(self):
        return "ElliottRational(%s)" % self.canonical_str()

    def to_json_dict(self) -> dict:
        def mono(c: Fraction, exps: Exponents):
            return [str(c)] + list(exps)

        num = [mono(c, e) for e, c in self.numerator.sorted_terms()]
        den = [
            {
                "lhs": mono(f.lhs.coeff, f.lhs.exps),
                "rhs": mono(f.rhs.coeff, f.rhs.exps),
                "mult": f.mult,
            }
            for f in self.factors
        ]
        return {"vars": list(self.order.vars), "numerator": num, "denominator": den}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _binom_int(n: int, k: int) -> Fraction:
    from math import comb

    return Fraction(comb(n, k))


def _truncate_total_degree(p: LaurentPolynomial, bound: int) -> LaurentPolynomial:
    out = LaurentPolynomial(p.vars)
    out.terms = {e: c for e, c in p.terms.items() if sum(e) <= bound}
    return out
