"""Sparse Laurent polynomials with exact rational coefficients.

A polynomial lives in an explicit variable context (an ordered tuple of
names) and stores only nonzero terms as a dict from exponent tuples to
Fractions.  Exponents may be negative.  Binary operations align contexts
by embedding the smaller variable set into the larger one.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Tuple

Exponents = Tuple[int, ...]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("coefficient must be int or Fraction, got %r" % type(c).__name__)


def grevlex_key(exps: Exponents):
    # graded, ties broken reverse lexicographically; used for canonical printing
    return (sum(exps), tuple(reversed(exps)))


class LaurentPolynomial:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str], terms: Optional[Dict[Exponents, Fraction]] = None):
        self.vars: Tuple[str, ...] = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names: %r" % (self.vars,))
        clean: Dict[Exponents, Fraction] = {}
        if terms:
            n = len(self.vars)
            for exps, c in terms.items():
                if len(exps) != n:
                    raise ValueError("exponent tuple %r does not match %d variables" % (exps, n))
                c = _as_fraction(c)
                if c:
                    e = tuple(int(k) for k in exps)
                    prev = clean.get(e)
                    if prev is None:
                        clean[e] = c
                    else:
                        s = prev + c
                        if s:
                            clean[e] = s
                        else:
                            del clean[e]
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, vars: Iterable[str]) -> "LaurentPolynomial":
        return cls(vars, {})

    @classmethod
    def constant(cls, vars: Iterable[str], c) -> "LaurentPolynomial":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): _as_fraction(c)})

    @classmethod
    def one(cls, vars: Iterable[str]) -> "LaurentPolynomial":
        return cls.constant(vars, 1)

    @classmethod
    def monomial(cls, vars: Iterable[str], c, exps: Exponents) -> "LaurentPolynomial":
        return cls(vars, {tuple(exps): _as_fraction(c)})

    @classmethod
    def variable(cls, vars: Iterable[str], name: str, power: int = 1) -> "LaurentPolynomial":
        vars = tuple(vars)
        if name not in vars:
            raise ValueError("variable %r not in context %r" % (name, vars))
        exps = [0] * len(vars)
        exps[vars.index(name)] = power
        return cls(vars, {tuple(exps): Fraction(1)})

    # ------------------------------------------------------------------
    # predicates and simple accessors

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return next(iter(self.terms.values()))

    def single_term(self) -> Tuple[Fraction, Exponents]:
        if len(self.terms) != 1:
            raise ValueError("expected a monomial, got %s" % self)
        exps, c = next(iter(self.terms.items()))
        return c, exps

    def coefficient(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def num_terms(self) -> int:
        return len(self.terms)

    def iter_terms(self) -> Iterator[Tuple[Exponents, Fraction]]:
        return iter(self.terms.items())

    def total_degree_min(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return min(sum(e) for e in self.terms)

    def _vi(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ValueError("variable %r not in context %r" % (var, self.vars)) from None

    def min_exp(self, var: str) -> int:
        i = self._vi(var)
        if not self.terms:
            raise ValueError("zero polynomial")
        return min(e[i] for e in self.terms)

    def max_exp(self, var: str) -> int:
        i = self._vi(var)
        if not self.terms:
            raise ValueError("zero polynomial")
        return max(e[i] for e in self.terms)

    def involves(self, var: str) -> bool:
        if var not in self.vars:
            return False
        i = self.vars.index(var)
        return any(e[i] != 0 for e in self.terms)

    # ------------------------------------------------------------------
    # context handling

    def embed(self, newvars: Iterable[str]) -> "LaurentPolynomial":
        newvars = tuple(newvars)
        if newvars == self.vars:
            return self
        pos = {}
        for i, v in enumerate(self.vars):
            if v not in newvars:
                if self.involves(v):
                    raise ValueError("cannot drop active variable %r" % v)
                pos[i] = None
            else:
                pos[i] = newvars.index(v)
        terms: Dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            e = [0] * len(newvars)
            for i, k in enumerate(exps):
                j = pos[i]
                if j is not None:
                    e[j] = k
            terms[tuple(e)] = c
        return LaurentPolynomial(newvars, terms)

    def _aligned(self, other: "LaurentPolynomial"):
        if self.vars == other.vars:
            return self, other
        sv, ov = set(self.vars), set(other.vars)
        if ov <= sv:
            return self, other.embed(self.vars)
        if sv <= ov:
            return self.embed(other.vars), other
        raise ValueError("incompatible variable contexts %r and %r" % (self.vars, other.vars))

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.vars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exps, c in b.terms.items():
            s = terms.get(exps, Fraction(0)) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        out = LaurentPolynomial(a.vars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPolynomial(self.vars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.vars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return LaurentPolynomial.zero(self.vars)
            out = LaurentPolynomial(self.vars)
            out.terms = {e: k * c for e, k in self.terms.items()}
            return out
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        a, b = self._aligned(other)
        if len(a.terms) > len(b.terms):
            a, b = b, a
        terms: Dict[Exponents, Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        out = LaurentPolynomial(a.vars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            c, exps = self.single_term()  # only monomials are invertible
            inv = LaurentPolynomial.monomial(self.vars, Fraction(1) / c, tuple(-e for e in exps))
            return inv ** (-n)
        result = LaurentPolynomial.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.vars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        try:
            a, b = self._aligned(other)
        except ValueError:
            return False
        return a.terms == b.terms

    __hash__ = None

    # ------------------------------------------------------------------
    # division

    def divide_by_monomial(self, mono: "LaurentPolynomial") -> "LaurentPolynomial":
        a, m = self._aligned(mono)
        c, exps = m.single_term()
        inv = Fraction(1) / c
        out = LaurentPolynomial(a.vars)
        out.terms = {tuple(x - y for x, y in zip(e, exps)): k * inv for e, k in a.terms.items()}
        return out

    def divmod_in_var(self, divisor: "LaurentPolynomial", var: str):
        """Long division in one variable.

        The divisor's leading coefficient in var must be a single monomial
        (true for any binomial whose two terms differ in var).  Returns
        (q, r) with self == q*divisor + r and max_exp(r, var) below the
        divisor's leading var exponent.
        """
        a, d = self._aligned(divisor)
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        var_i = a._vi(var)
        shift = d.min_exp(var)
        if shift:
            unit = [0] * len(a.vars)
            unit[var_i] = -shift
            d = d * LaurentPolynomial.monomial(a.vars, 1, tuple(unit))
        deg = d.max_exp(var)
        lead = d.coefficient_in(var, deg)
        if not lead.is_monomial():
            raise ValueError("leading coefficient in %s is not a monomial: %s" % (var, lead))
        q = LaurentPolynomial.zero(a.vars)
        r = a
        while r.terms:
            rtop = r.max_exp(var)
            if rtop < deg:
                break
            top = r.coefficient_in(var, rtop)
            unit = [0] * len(a.vars)
            unit[var_i] = rtop - deg
            step = top.divide_by_monomial(lead) * LaurentPolynomial.monomial(a.vars, 1, tuple(unit))
            q = q + step
            r = r - step * d
        if shift:
            unit = [0] * len(a.vars)
            unit[var_i] = -shift
            q = q * LaurentPolynomial.monomial(a.vars, 1, tuple(unit))
        return q, r

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Divide exactly, raising ValueError when the division leaves a remainder."""
        a, d = self._aligned(divisor)
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if a.is_zero():
            return a
        if d.is_monomial():
            return a.divide_by_monomial(d)
        var = None
        for v in a.vars:
            if d.involves(v) and d.min_exp(v) != d.max_exp(v):
                var = v
                break
        if var is None:
            raise ValueError("cannot choose a division variable for %s" % d)
        # lift the dividend to nonnegative exponents in var so the
        # top-down reduction sees every term
        sa = a.min_exp(var)
        shifted = a
        if sa:
            unit = [0] * len(a.vars)
            unit[a._vi(var)] = -sa
            shifted = a * LaurentPolynomial.monomial(a.vars, 1, tuple(unit))
        q, r = shifted.divmod_in_var(d, var)
        if sa:
            unit = [0] * len(a.vars)
            unit[a._vi(var)] = sa
            q = q * LaurentPolynomial.monomial(a.vars, 1, tuple(unit))
        if r.terms:
            exps = min(r.terms, key=grevlex_key)
            raise ValueError(
                "%s does not divide %s exactly (offending term %s)"
                % (d, a, _term_str(r.terms[exps], exps, a.vars))
            )
        return q

    # ------------------------------------------------------------------
    # structure ops

    def coefficient_in(self, var: str, k: int) -> "LaurentPolynomial":
        """Terms whose var exponent equals k, with that exponent zeroed out."""
        i = self._vi(var)
        terms = {}
        for exps, c in self.terms.items():
            if exps[i] == k:
                e = list(exps)
                e[i] = 0
                terms[tuple(e)] = c
        out = LaurentPolynomial(self.vars)
        out.terms = terms
        return out

    def substitute_one(self, var: str) -> "LaurentPolynomial":
        i = self._vi(var)
        out = LaurentPolynomial.zero(self.vars)
        terms: Dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            e = list(exps)
            e[i] = 0
            e = tuple(e)
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out.terms = terms
        return out

    def substitute_zero(self, var: str) -> "LaurentPolynomial":
        """Set var := 0; requires no negative var exponents among surviving terms."""
        i = self._vi(var)
        terms = {}
        for exps, c in self.terms.items():
            if exps[i] < 0:
                raise ValueError("negative power of %s at 0 in %s" % (var, self))
            if exps[i] == 0:
                terms[exps] = c
        out = LaurentPolynomial(self.vars)
        out.terms = terms
        return out

    def substitute_monomials(self, images: Dict[str, "LaurentPolynomial"]) -> "LaurentPolynomial":
        """Substitute a monomial for each variable.

        Variables missing from images map to themselves; every image must
        be a single term in a common target context containing the
        untouched variables.
        """
        target = None
        for img in images.values():
            if target is None:
                target = img.vars
            elif img.vars != target:
                raise ValueError("images live in different contexts")
        if target is None:
            target = self.vars
        full = {}
        for v in self.vars:
            if v in images:
                full[v] = images[v].single_term()
            elif self.involves(v):
                if v not in target:
                    raise ValueError("variable %r has no image and is not in the target context" % v)
                j = target.index(v)
                e = [0] * len(target)
                e[j] = 1
                full[v] = (Fraction(1), tuple(e))
        terms: Dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            coeff = c
            acc = [0] * len(target)
            for i, k in enumerate(exps):
                if k == 0:
                    continue
                mc, me = full[self.vars[i]]
                coeff *= mc ** k
                for j, ej in enumerate(me):
                    acc[j] += ej * k
            e = tuple(acc)
            s = terms.get(e, Fraction(0)) + coeff
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out = LaurentPolynomial(target)
        out.terms = terms
        return out

    def derivative(self, var: str) -> "LaurentPolynomial":
        i = self._vi(var)
        terms = {}
        for exps, c in self.terms.items():
            k = exps[i]
            if k == 0:
                continue
            e = list(exps)
            e[i] = k - 1
            terms[tuple(e)] = c * k
        out = LaurentPolynomial(self.vars)
        out.terms = terms
        return out

    # ------------------------------------------------------------------
    # printing

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            s = _term_str(c, exps, self.vars)
            if pieces and not s.startswith("-"):
                pieces.append("+" + s)
            else:
                pieces.append(s)
        return "".join(pieces)

    def __repr__(self) -> str:
        return "LaurentPolynomial(%r, %s)" % (self.vars, str(self))


def _term_str(c: Fraction, exps: Exponents, vars: Tuple[str, ...]) -> str:
    factors = []
    for v, e in zip(vars, exps):
        if e == 0:
            continue
        factors.append(v if e == 1 else "%s^%d" % (v, e))
    if not factors:
        return str(c)
    mono = "*".join(factors)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return "%s*%s" % (c, mono)
