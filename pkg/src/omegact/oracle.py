"""Brute-force oracles.

Everything here is deliberately naive: direct enumeration, dynamic
programming over walk positions, floating-point root-of-unity sums, and
termwise series expansion.  The only shared code with the fast engine is
the exact-algebra layer, so agreement between the two is meaningful
evidence of correctness.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .elliott import ElliottRational
from .laurent import Exponents, LaurentPolynomial


class CoefficientTable:
    """A finite window of series coefficients, keyed by exponent tuples."""

    __slots__ = ("vars", "data")

    def __init__(self, vars: Sequence[str], data: Optional[Dict[Exponents, Fraction]] = None):
        self.vars = tuple(vars)
        self.data: Dict[Exponents, Fraction] = {}
        if data:
            for e, c in data.items():
                c = Fraction(c)
                if c:
                    self.data[tuple(e)] = c

    def get(self, exps: Exponents) -> Fraction:
        return self.data.get(tuple(exps), Fraction(0))

    def add(self, exps: Exponents, c):
        e = tuple(exps)
        s = self.data.get(e, Fraction(0)) + c
        if s:
            self.data[e] = s
        else:
            self.data.pop(e, None)

    def __eq__(self, other):
        if not isinstance(other, CoefficientTable):
            return NotImplemented
        return self.vars == other.vars and self.data == other.data

    __hash__ = None

    def __len__(self):
        return len(self.data)

    def items(self):
        return self.data.items()

    def as_laurent(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.vars, dict(self.data))

    def __repr__(self):
        return "CoefficientTable(%r, %d entries)" % (self.vars, len(self.data))


# ----------------------------------------------------------------------
# linear Diophantine systems


def enumerate_solutions(
    matrix: Sequence[Sequence[int]],
    shift: Sequence[int],
    nvars: int,
    degree_bound: int,
    strict: bool = False,
) -> CoefficientTable:
    """All alpha in N^n with matrix*alpha + shift = 0 and |alpha| <= bound.

    With strict=True every coordinate must be >= 1.  The table maps each
    solution to 1, so it doubles as a truncated generating function.
    """
    rows = [list(map(int, row)) for row in matrix]
    shift = list(map(int, shift)) if shift else [0] * len(rows)
    if len(shift) != len(rows):
        raise ValueError("shift length does not match row count")
    vars = tuple("x%d" % (i + 1) for i in range(nvars))
    table = CoefficientTable(vars)
    lo = 1 if strict else 0

    def rec(i: int, remaining: int, alpha: List[int]):
        if i == nvars:
            for row, b in zip(rows, shift):
                if sum(r * a for r, a in zip(row, alpha)) + b != 0:
                    return
            table.add(tuple(alpha), Fraction(1))
            return
        for v in range(lo, remaining + 1):
            alpha.append(v)
            rec(i + 1, remaining - v, alpha)
            alpha.pop()

    if nvars * lo <= degree_bound:
        rec(0, degree_bound, [])
    return table


# ----------------------------------------------------------------------
# truncated constant terms


def truncated_ct(
    F: ElliottRational,
    ct_vars: Sequence[str],
    bounds: Dict[str, Tuple[int, int]],
) -> CoefficientTable:
    """Series coefficients of CT over ct_vars, inside a box of exponents.

    Works directly from the geometric expansion of each denominator
    factor.  The ratio rhs/lhs of a canonical factor is order positive,
    so a partial target that drops below zero in the order can never be
    reached and the search is pruned there; this makes the enumeration
    exact with no truncation window on intermediate products.
    """
    order = F.order
    vars = order.vars
    ct_set = set(ct_vars)
    for v in ct_set:
        if v not in vars:
            raise ValueError("unknown variable %r" % v)
    free = [v for v in vars if v not in ct_set]
    for v in free:
        if v not in bounds:
            raise ValueError("missing bounds for variable %r" % v)

    nv = len(vars)
    zero = (0,) * nv
    ratios: List[Tuple[Exponents, Fraction, int]] = []
    base_shift = [0] * nv
    for f in F.factors:
        e = tuple(r - l for r, l in zip(f.rhs.exps, f.lhs.exps))
        ratios.append((e, f.rhs.coeff, f.mult))
        for i, l in enumerate(f.lhs.exps):
            base_shift[i] -= f.mult * l

    cmp = order.compare
    nf = len(ratios)

    def dfs(i: int, tau: Exponents, weight: Fraction) -> Fraction:
        if tau == zero and i == nf:
            return weight
        if cmp(tau, zero) < 0:
            return Fraction(0)
        if i == nf:
            return Fraction(0)
        e, rc, m = ratios[i]
        total = Fraction(0)
        k = 0
        cur = tau
        while True:
            if cmp(cur, zero) < 0:
                break
            w = weight if k == 0 else weight * rc ** k * comb(m - 1 + k, k)
            total += dfs(i + 1, cur, w)
            k += 1
            cur = tuple(a - b for a, b in zip(tau, (x * k for x in e)))
        return total

    table_vars = tuple(free)
    table = CoefficientTable(table_vars)
    free_idx = [vars.index(v) for v in free]
    spans = [range(bounds[v][0], bounds[v][1] + 1) for v in free]
    for combo in product(*spans):
        target = [0] * nv
        for i, v in zip(free_idx, combo):
            target[i] = v
        acc = Fraction(0)
        for nexps, nc in F.numerator.iter_terms():
            tau = tuple(t - n - b for t, n, b in zip(target, nexps, base_shift))
            acc += dfs(0, tau, nc)
        if acc:
            table.add(combo, acc)
    return table


# ----------------------------------------------------------------------
# lattice walks


def _slit_ok(pos: Tuple[int, ...]) -> bool:
    return not (pos[1] == 0 and pos[0] <= 0)


def count_walks(
    steps,
    constraint,
    length: int,
    start: Optional[Tuple[int, ...]] = None,
    window: Optional[Dict[int, Tuple[int, int]]] = None,
) -> CoefficientTable:
    """Endpoint counts of constrained walks of an exact length.

    steps is either an explicit list of step vectors or a descriptor
    {"all_ge": (m1, ..., mk)} meaning every integer vector that is
    componentwise >= the minimum (an infinite set; then a reporting
    window is required and pruning uses the fact that each later step
    can decrease a coordinate by at most -m_i).

    constraint is one of "none", "slit", "not_above_diagonal",
    "quarter", or ("height_band", lo, hi).
    """
    descriptor = None
    if isinstance(steps, dict):
        descriptor = tuple(int(m) for m in steps["all_ge"])
        dim = len(descriptor)
    else:
        steps = [tuple(int(c) for c in s) for s in steps]
        if not steps:
            raise ValueError("empty step set")
        dim = len(steps[0])

    band = None
    if isinstance(constraint, tuple) and constraint[0] == "height_band":
        band = (int(constraint[1]), int(constraint[2]))
        constraint = "height_band"
    if constraint == "quarter":
        start = start if start is not None else (1,) * dim
    else:
        start = start if start is not None else (0,) * dim
    start = tuple(start)

    def allowed(pos: Tuple[int, ...]) -> bool:
        if constraint == "none":
            return True
        if constraint == "slit":
            return _slit_ok(pos)
        if constraint == "not_above_diagonal":
            return pos[1] <= pos[0]
        if constraint == "quarter":
            return all(c >= 1 for c in pos)
        if constraint == "height_band":
            return band[0] <= pos[0] <= band[1]
        raise ValueError("unknown constraint %r" % (constraint,))

    if descriptor is not None and window is None:
        raise ValueError("unbounded step set requires a reporting window")

    layer: Dict[Tuple[int, ...], int] = {start: 1}
    for k in range(length):
        nxt: Dict[Tuple[int, ...], int] = {}
        remaining = length - k - 1
        for pos, cnt in layer.items():
            if descriptor is None:
                moves = steps
            else:
                # enumerate steps keeping the endpoint reachable within the window
                spans = []
                for i, m in enumerate(descriptor):
                    hi = window[i][1] - pos[i] - remaining * m
                    if hi < m:
                        spans = None
                        break
                    spans.append(range(m, hi + 1))
                if spans is None:
                    continue
                moves = product(*spans)
            for s in moves:
                new = tuple(p + d for p, d in zip(pos, s))
                if not allowed(new):
                    continue
                if descriptor is not None:
                    # cannot come back below the window floor
                    if any(new[i] + remaining * descriptor[i] > window[i][1] for i in range(dim)):
                        continue
                nxt[new] = nxt.get(new, 0) + cnt
        layer = nxt

    vars = tuple("p%d" % (i + 1) for i in range(dim))
    table = CoefficientTable(vars)
    for pos, cnt in layer.items():
        if window is not None and any(
            not (window[i][0] <= pos[i] <= window[i][1]) for i in range(dim)
        ):
            continue
        table.add(pos, Fraction(cnt))
    return table


# ----------------------------------------------------------------------
# Dedekind sums, floating point


def dedekind_float(n: int, a: Sequence[int]) -> float:
    """Sum over nontrivial n-th roots of unity of prod (w^a_i+1)/(w^a_i-1)."""
    if n < 1:
        raise ValueError("modulus must be positive")
    total = 0.0 + 0.0j
    for k in range(1, n):
        w = cmath.exp(2j * cmath.pi * k / n)
        term = 1.0 + 0.0j
        for ai in a:
            z = w ** ai
            d = z - 1.0
            if abs(d) < 1e-12:
                raise ZeroDivisionError("root of unity collides with a_i = %d" % ai)
            term *= (z + 1.0) / d
        total += term
    return total.real


# ----------------------------------------------------------------------
# binomial identity suite


def gbinom(m: int, j: int) -> Fraction:
    """Generalized binomial coefficient; zero for negative lower index."""
    if j < 0:
        return Fraction(0)
    num = Fraction(1)
    for i in range(j):
        num *= m - i
    return num / factorial(j)


def _fib(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _cap_trunc(p: LaurentPolynomial, caps: Dict[str, int]) -> LaurentPolynomial:
    idx = [(p.vars.index(v), c) for v, c in caps.items()]
    out = LaurentPolynomial(p.vars)
    out.terms = {
        e: c for e, c in p.terms.items() if all(e[i] <= cap for i, cap in idx)
    }
    return out


def _geom_trunc(u: LaurentPolynomial, caps: Dict[str, int]) -> LaurentPolynomial:
    """1/(1-u) truncated to the caps; u must have nonnegative exponents, no constant."""
    if any(any(x < 0 for x in e) for e in u.terms) or (0,) * len(u.vars) in u.terms:
        raise ValueError("geometric expansion needs a series with positive order")
    acc = LaurentPolynomial.one(u.vars)
    power = LaurentPolynomial.one(u.vars)
    while True:
        power = _cap_trunc(power * u, caps)
        if power.is_zero():
            return acc
        acc = acc + power


def check_row_sum(nmax: int) -> bool:
    return all(sum(comb(n, k) for k in range(n + 1)) == 2 ** n for n in range(nmax + 1))


def check_half_sum(nmax: int) -> bool:
    for n in range(1, nmax + 1):
        s = sum(Fraction(comb(n + k - 1, k), 2 ** k) for k in range(n))
        if s != Fraction(2) ** (n - 1):
            return False
    return True


def check_fibonacci(nmax: int) -> bool:
    return all(
        sum(comb(n - k, k) for k in range(n // 2 + 1)) == _fib(n + 1)
        for n in range(nmax + 1)
    )


def saalschutz_lhs(a: int, d: int, e: int, n: int) -> Fraction:
    return sum(
        (-1) ** k * gbinom(a + k - 1, k) * gbinom(a + e, n - k) * gbinom(d + e + k - 1, e)
        for k in range(n + 1)
    )


def saalschutz_rhs(a: int, d: int, e: int, n: int) -> Fraction:
    return gbinom(d - a + n - 1, n) * gbinom(d + e - 1, e - n)


def check_saalschutz(cap: int) -> bool:
    """Alternating sum == product form == series coefficient of the 4-variable gf."""
    vars = ("x1", "x2", "x3", "x4")
    caps = {v: cap for v in vars}

    def mono(c, **exps):
        e = [exps.get(v, 0) for v in vars]
        return LaurentPolynomial.monomial(vars, c, tuple(e))

    one = LaurentPolynomial.one(vars)
    x1, x2, x3, x4 = (LaurentPolynomial.variable(vars, v) for v in vars)
    num = (one - x3) * (one - x3 - x3 * x4)
    u1 = x1 + x3 - x1 * x3 - x1 * x3 * x4
    u2 = x2 + x3 + x3 * x4
    gf = _cap_trunc(num * _geom_trunc(u1, caps) * _geom_trunc(u2, caps), caps)
    for a in range(cap + 1):
        for d in range(cap + 1):
            for e in range(cap + 1):
                for n in range(cap + 1):
                    lhs = saalschutz_lhs(a, d, e, n)
                    if lhs != saalschutz_rhs(a, d, e, n):
                        return False
                    if lhs != gf.coefficient((a, d, e, n)):
                        return False
    return True


def super_catalan(m: int, n: int) -> Fraction:
    return Fraction(factorial(2 * m) * factorial(2 * n), factorial(m) * factorial(n) * factorial(m + n))


def check_super_catalan(cap: int) -> bool:
    """Closed form is integral and satisfies the recurrence its gf implies.

    Clearing the square roots, (x+y-4xy)*G = x*sigma(x) + y*sigma(y)
    with sigma the central binomial series, which coefficientwise says
    S(m-1,n) + S(m,n-1) - 4*S(m-1,n-1) = [x^m y^n](x*sigma(x)+y*sigma(y)).
    """
    for m in range(cap + 1):
        for n in range(cap + 1 - m):
            if super_catalan(m, n).denominator != 1:
                return False
    for m in range(cap + 1):
        if super_catalan(m, 0) != comb(2 * m, m):
            return False
    # interior coefficients of x*sigma(x) + y*sigma(y) vanish
    for m in range(1, cap + 1):
        for n in range(1, cap + 1 - m):
            lhs = super_catalan(m - 1, n) + super_catalan(m, n - 1)
            if lhs != 4 * super_catalan(m - 1, n - 1):
                return False
    return True


def dyson_ct(a: Sequence[int]) -> Fraction:
    """Constant term of prod_{i != j} (1 - z_i/z_j)^(a_j), by direct expansion."""
    n = len(a)
    vars = tuple("z%d" % (i + 1) for i in range(n))
    prod_poly = LaurentPolynomial.one(vars)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            e = [0] * n
            e[i] = 1
            e[j] = -1
            base = LaurentPolynomial.one(vars) - LaurentPolynomial.monomial(vars, 1, tuple(e))
            prod_poly = prod_poly * base ** a[j]
    return prod_poly.coefficient((0,) * n)


def check_dyson(nmax: int, acap: int) -> bool:
    for n in (2, nmax):
        for a in product(range(acap + 1), repeat=n):
            expect = Fraction(factorial(sum(a)))
            for ai in a:
                expect /= factorial(ai)
            if dyson_ct(a) != expect:
                return False
    return True


def binomial_suite(caps: Optional[Dict[str, int]] = None) -> Dict[str, bool]:
    caps = caps or {}
    return {
        "row_sum": check_row_sum(caps.get("row_sum", 12)),
        "half_sum": check_half_sum(caps.get("half_sum", 12)),
        "fibonacci": check_fibonacci(caps.get("fibonacci", 16)),
        "saalschutz": check_saalschutz(caps.get("saalschutz", 4)),
        "super_catalan": check_super_catalan(caps.get("super_catalan", 8)),
        "dyson": check_dyson(3, caps.get("dyson", 3)),
    }
