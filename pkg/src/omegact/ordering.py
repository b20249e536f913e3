"""Monomial orders for fields of iterated Laurent series.

The working field treats later variables as infinitely larger than any
power of earlier ones.  Exponent tuples are compared reverse
lexicographically after an optional integer matrix twist: scan from the
highest index down and decide at the first difference.  With the twist
rho = -I this turns ascending series into descending ones.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .laurent import Exponents, LaurentPolynomial


class Monomial(NamedTuple):
    coeff: Fraction
    exps: Exponents

    def as_laurent(self, vars: Sequence[str]) -> LaurentPolynomial:
        return LaurentPolynomial.monomial(vars, self.coeff, self.exps)


def _identity(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _det(m: List[List[int]]) -> Fraction:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for row in range(col, n):
            if a[row][col]:
                pivot = row
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for row in range(col + 1, n):
            if a[row][col]:
                f = a[row][col] * inv
                for j in range(col, n):
                    a[row][j] -= f * a[col][j]
    return det


class VariableOrder:
    """A total order on monomials in a fixed variable tuple."""

    __slots__ = ("vars", "rho")

    def __init__(self, vars: Iterable[str], rho: Optional[Sequence[Sequence[int]]] = None):
        self.vars: Tuple[str, ...] = tuple(vars)
        if rho is None:
            self.rho = None
        else:
            rho = [list(map(int, row)) for row in rho]
            n = len(self.vars)
            if len(rho) != n or any(len(row) != n for row in rho):
                raise ValueError("rho must be a %dx%d integer matrix" % (n, n))
            if _det(rho) == 0:
                raise ValueError("rho must be invertible")
            self.rho = rho

    def reversed(self) -> "VariableOrder":
        """The order with rho negated; swaps the roles of PT and NT factors."""
        if self.rho is None:
            n = len(self.vars)
            rho = [[-1 if i == j else 0 for j in range(n)] for i in range(n)]
        else:
            rho = [[-x for x in row] for row in self.rho]
        return VariableOrder(self.vars, rho)

    def _apply(self, exps: Exponents) -> Exponents:
        if self.rho is None:
            return exps
        return tuple(sum(r * e for r, e in zip(row, exps)) for row in self.rho)

    def key(self, exps: Exponents):
        # lexicographic on the reversed twisted tuple == scan highest index down
        return tuple(reversed(self._apply(exps)))

    def compare(self, e1: Exponents, e2: Exponents) -> int:
        k1, k2 = self.key(e1), self.key(e2)
        if k1 < k2:
            return -1
        if k1 > k2:
            return 1
        return 0

    def align(self, f: LaurentPolynomial) -> LaurentPolynomial:
        return f.embed(self.vars) if f.vars != self.vars else f

    def initial_term(self, f: LaurentPolynomial) -> Monomial:
        """The unique order-minimal term; it dominates the series expansion."""
        f = self.align(f)
        if f.is_zero():
            raise ValueError("zero has no initial term")
        exps = min(f.terms, key=self.key)
        return Monomial(f.terms[exps], exps)

    def __repr__(self):
        return "VariableOrder(%r%s)" % (self.vars, ", rho=%r" % self.rho if self.rho else "")


PT = "PT"
NT = "NT"
MIXED = "Mixed"


class FactorClass(NamedTuple):
    kind: str  # PT, NT or Mixed
    initial: Monomial


def classify_factor(f: LaurentPolynomial, var: str, order: VariableOrder) -> FactorClass:
    """Classify a denominator factor relative to one variable.

    PT means the reciprocal expands with only nonnegative powers of var
    (the initial term sits at the factor's lowest var exponent), NT means
    only powers at or below the negated top exponent (initial term at the
    highest var exponent), Mixed anything else.
    """
    f = order.align(f)
    init = order.initial_term(f)
    i = order.vars.index(var)
    lo = f.min_exp(var)
    hi = f.max_exp(var)
    e = init.exps[i]
    if lo == hi:
        kind = PT  # var-free factors invert harmlessly
    elif e == lo:
        kind = PT
    elif e == hi:
        kind = NT
    else:
        kind = MIXED
    return FactorClass(kind, init)
