"""Truncated series over Elliott-rational coefficients and walk pipelines.

Series in an implicit time variable t carry exact multivariate rational
coefficients.  Logs and exponentials run through the g'h = h' recurrence
so no coefficient field extension is ever needed; the sign-split of
coefficients (the unique three-way factorization) routes through the
constant-term engine.  On top of this sit the slit-plane, bounded-Dyck,
diagonal-Catalan and symmetric quarter-plane counting pipelines.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .elliott import ElliottRational
from .laurent import LaurentPolynomial
from .omega import ct_lambda, split_parts
from .ordering import VariableOrder
from .unipoly import UPoly, series_inverse

DEFAULT_ORDER = 8


class TruncatedSeries:
    """sum c_n t^n for n <= trunc, with ElliottRational coefficients."""

    __slots__ = ("order", "trunc", "coeffs")

    def __init__(self, order: VariableOrder, coeffs: Sequence, trunc: Optional[int] = None):
        self.order = order
        cs = list(coeffs)
        if trunc is None:
            trunc = len(cs) - 1 if cs else DEFAULT_ORDER
        self.trunc = int(trunc)
        if self.trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = cs[: self.trunc + 1]
        zero = ElliottRational.zero(order)
        while len(cs) < self.trunc + 1:
            cs.append(zero)
        self.coeffs = [self._lift(c) for c in cs]

    def _lift(self, c) -> ElliottRational:
        if isinstance(c, ElliottRational):
            return c
        if isinstance(c, LaurentPolynomial):
            return ElliottRational(self.order, self.order.align(c))
        return ElliottRational.constant(self.order, c)

    # ------------------------------------------------------------------

    @classmethod
    def zeros(cls, order: VariableOrder, trunc: int) -> "TruncatedSeries":
        return cls(order, [], trunc)

    @classmethod
    def constant(cls, order: VariableOrder, c, trunc: int) -> "TruncatedSeries":
        s = cls.zeros(order, trunc)
        s.coeffs[0] = s._lift(c)
        return s

    def clone_coeffs(self) -> List[ElliottRational]:
        return list(self.coeffs)

    def __getitem__(self, n: int) -> ElliottRational:
        if 0 <= n <= self.trunc:
            return self.coeffs[n]
        raise IndexError("coefficient %d beyond truncation %d" % (n, self.trunc))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def _meet(self, other: "TruncatedSeries") -> int:
        return min(self.trunc, other.trunc)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.order, other, self.trunc)
        n = self._meet(other)
        return TruncatedSeries(
            self.order, [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n
        )

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return TruncatedSeries(self.order, [-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.order, other, self.trunc)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._meet(other)
            out = [ElliottRational.zero(self.order) for _ in range(n + 1)]
            for i in range(n + 1):
                ci = self.coeffs[i]
                if ci.is_zero():
                    continue
                for j in range(n + 1 - i):
                    cj = other.coeffs[j]
                    if cj.is_zero():
                        continue
                    out[i + j] = out[i + j] + ci * cj
            return TruncatedSeries(self.order, out, n)
        return TruncatedSeries(
            self.order, [c * self._lift(other) for c in self.coeffs], self.trunc
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries.constant(self.order, 1, self.trunc)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._meet(other)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    __hash__ = None

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k; negative k requires the low coefficients to vanish."""
        if k >= 0:
            return TruncatedSeries(
                self.order, [ElliottRational.zero(self.order)] * k + self.coeffs, self.trunc
            )
        if any(not c.is_zero() for c in self.coeffs[: -k]):
            raise ValueError("shift below t^0 with nonzero low coefficients")
        return TruncatedSeries(self.order, self.coeffs[-k:], self.trunc + k)

    def dilate(self, k: int) -> "TruncatedSeries":
        """Substitute t -> t^k."""
        if k < 1:
            raise ValueError("dilation power must be positive")
        out = [ElliottRational.zero(self.order) for _ in range(self.trunc + 1)]
        for n, c in enumerate(self.coeffs):
            if n * k > self.trunc:
                break
            out[n * k] = c
        return TruncatedSeries(self.order, out, self.trunc)

    def map_coefficients(self, fn: Callable[[ElliottRational], ElliottRational]) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [fn(c) for c in self.coeffs], self.trunc)

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise ZeroDivisionError("series has no inverse: zero constant coefficient")
        inv0 = c0.reciprocal()
        out = [inv0]
        for n in range(1, self.trunc + 1):
            acc = ElliottRational.zero(self.order)
            for k in range(1, n + 1):
                if not self.coeffs[k].is_zero():
                    acc = acc + self.coeffs[k] * out[n - k]
            out.append((-acc) * inv0)
        return TruncatedSeries(self.order, out, self.trunc)

    def log(self) -> "TruncatedSeries":
        one = ElliottRational.one(self.order)
        if not self.coeffs[0] == one:
            raise ValueError("log needs constant coefficient 1")
        g = [ElliottRational.zero(self.order)]
        for n in range(1, self.trunc + 1):
            acc = self.coeffs[n]
            for k in range(1, n):
                if not g[k].is_zero() and not self.coeffs[n - k].is_zero():
                    acc = acc - g[k] * self.coeffs[n - k] * Fraction(k, n)
            g.append(acc.cancel_common())
        return TruncatedSeries(self.order, g, self.trunc)

    def exp(self) -> "TruncatedSeries":
        if not self.coeffs[0].is_zero():
            raise ValueError("exp needs zero constant coefficient")
        h = [ElliottRational.one(self.order)]
        for n in range(1, self.trunc + 1):
            acc = ElliottRational.zero(self.order)
            for k in range(1, n + 1):
                if not self.coeffs[k].is_zero() and not h[n - k].is_zero():
                    acc = acc + self.coeffs[k] * h[n - k] * Fraction(k, n)
            h.append(acc.cancel_common())
        return TruncatedSeries(self.order, h, self.trunc)

    def __str__(self):
        bits = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            bits.append("(%s)*t^%d" % (c.canonical_str(), n))
        return " + ".join(bits) if bits else "0"

    def __repr__(self):
        return "TruncatedSeries(%s)" % self


# ----------------------------------------------------------------------
# expansion of rational functions in powers of t


class StepSet(NamedTuple):
    """A step weight: the full transfer weight is t * gamma."""

    gamma: ElliottRational
    finite_steps: Optional[Tuple[Tuple[int, ...], ...]] = None

    @classmethod
    def from_steps(cls, steps: Sequence[Sequence[int]], vars: Sequence[str] = ("x", "y")) -> "StepSet":
        vars = tuple(vars)
        order = VariableOrder(vars)
        total = LaurentPolynomial.zero(vars)
        for s in steps:
            total = total + LaurentPolynomial.monomial(vars, 1, tuple(int(d) for d in s))
        return cls(ElliottRational(order, total), tuple(tuple(int(d) for d in s) for s in steps))


def geometric_series(gamma: ElliottRational, trunc: int) -> TruncatedSeries:
    """1/(1 - t*gamma) = sum gamma^n t^n."""
    coeffs = [ElliottRational.one(gamma.order)]
    for _ in range(trunc):
        coeffs.append(coeffs[-1] * gamma)
    return TruncatedSeries(gamma.order, coeffs, trunc)


def _binom_frac(n: int, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= Fraction(n - i, i + 1)
    return out


def _t_split(p: LaurentPolynomial, ti: int) -> dict:
    """{t-exponent: t-free LaurentPolynomial} for the terms of p."""
    buckets = {}
    for e, c in p.terms.items():
        e0 = tuple(0 if i == ti else x for i, x in enumerate(e))
        buckets.setdefault(e[ti], {})[e0] = c
    return {k: LaurentPolynomial(p.vars, d) for k, d in buckets.items()}


def _t_convolve(a: dict, b: dict, cap: int) -> dict:
    out = {}
    for ka, pa in a.items():
        for kb, pb in b.items():
            k = ka + kb
            if k > cap:
                continue
            prod = pa * pb
            if k in out:
                out[k] = out[k] + prod
            else:
                out[k] = prod
    return {k: p for k, p in out.items() if not p.is_zero()}


def series_from_rational(f, tvar: str, trunc: int) -> TruncatedSeries:
    """Expand in powers of tvar; coefficients keep all other variables.

    Accepts an ElliottRational, a StepSet (expanded geometrically), or a
    pair (numerator, factor list).  Every denominator factor involving
    tvar must have a monomial part free of tvar and all remaining terms
    with positive tvar exponent; anything else has no power-series
    expansion here.  Uncancelled negative powers of tvar raise.
    """
    if isinstance(f, StepSet):
        return geometric_series(f.gamma, trunc)
    if isinstance(f, ElliottRational):
        order = f.order
        num = f.numerator
        raw = [(g.as_laurent(order.vars), g.mult) for g in f.factors]
    else:
        num, raw_in = f
        order = VariableOrder(num.vars)
        raw = [(order.align(p), int(m)) for p, m in raw_in]
    vars = order.vars
    if tvar not in vars:
        raise ValueError("series variable %r not in context" % tvar)
    ti = vars.index(tvar)

    table = _t_split(num, ti)
    carried: List[Tuple[LaurentPolynomial, int]] = []
    for g, mult in raw:
        if not g.involves(tvar):
            carried.append((g, mult))
            continue
        base = {e: c for e, c in g.terms.items() if e[ti] == 0}
        rest = {e: c for e, c in g.terms.items() if e[ti] != 0}
        if len(base) != 1:
            raise ValueError(
                "factor %s does not expand in powers of %s (its %s-free part is not a monomial)"
                % (g, tvar, tvar)
            )
        if any(e[ti] < 0 for e in rest):
            raise ValueError("factor %s has negative %s exponents" % (g, tvar))
        head = LaurentPolynomial(vars, base)
        ratio = _t_split(LaurentPolynomial(vars, rest).divide_by_monomial(head) * -1, ti)
        # 1/g^mult = head^-mult * sum_k C(mult-1+k, k) ratio^k
        floor = min((k for k in table), default=0)
        cap = trunc - min(floor, 0)
        geom = {0: LaurentPolynomial.one(vars)}
        pow_r = {0: LaurentPolynomial.one(vars)}
        k = 1
        while k <= cap:
            pow_r = _t_convolve(pow_r, ratio, cap)
            if not pow_r:
                break
            cmk = _binom_frac(mult - 1 + k, k)
            for kt, p in pow_r.items():
                scaled = p * cmk
                if kt in geom:
                    geom[kt] = geom[kt] + scaled
                else:
                    geom[kt] = scaled
            k += 1
        table = _t_convolve(table, geom, trunc)
        inv_head = LaurentPolynomial.one(vars).divide_by_monomial(head) ** mult
        table = {kt: p * inv_head for kt, p in table.items()}

    neg = [k for k in table if k < 0]
    if neg:
        raise ValueError("pole at %s = 0 of order %d" % (tvar, -min(neg)))
    coeffs = []
    for n in range(trunc + 1):
        lp = table.get(n, LaurentPolynomial.zero(vars))
        coeffs.append(ElliottRational(order, lp, list(carried)))
    return TruncatedSeries(order, coeffs, trunc)


# ----------------------------------------------------------------------
# sign parts of coefficients


def coefficient_part(F: ElliottRational, var: str, which: str) -> ElliottRational:
    """The named part of F along var: minus, ct, plus, nonneg, or nonpos."""
    neg, ct, plus = split_parts(F, var)
    if which == "minus":
        return neg
    if which == "ct":
        return ct
    if which == "plus":
        return plus
    if which == "nonneg":
        return (ct + plus).cancel_common()
    if which == "nonpos":
        return (neg + ct).cancel_common()
    raise ValueError("unknown part %r" % which)


# ----------------------------------------------------------------------
# positive roots and the constant-term form of Lagrange inversion


def _poly_in_var(G: LaurentPolynomial, var: str) -> List[LaurentPolynomial]:
    vi = G.vars.index(var)
    if G.terms and min(e[vi] for e in G.terms) < 0:
        raise ValueError("%s must enter polynomially" % var)
    deg = max((e[vi] for e in G.terms), default=0)
    return [G.coefficient_in(var, k) for k in range(deg + 1)]


def _lp_to_series(p: LaurentPolynomial, order: VariableOrder, tvar: str, trunc: int) -> TruncatedSeries:
    vars = order.vars
    ti = vars.index(tvar)
    coeffs = [LaurentPolynomial.zero(vars) for _ in range(trunc + 1)]
    for e, c in p.terms.items():
        k = e[ti]
        if k < 0:
            raise ValueError("negative %s exponent in %s" % (tvar, p))
        if k <= trunc:
            e0 = tuple(0 if i == ti else x for i, x in enumerate(e))
            coeffs[k] = coeffs[k] + LaurentPolynomial.monomial(vars, c, e0)
    return TruncatedSeries(order, coeffs, trunc)


def positive_root(
    G: LaurentPolynomial,
    var: str,
    tvar: str,
    trunc: int,
    order: Optional[VariableOrder] = None,
) -> TruncatedSeries:
    """The unique root of G in t*K[[t]], solved degree by degree.

    G must vanish at (var, t) = (0, 0) and its linear coefficient in var
    must be invertible at t = 0.
    """
    order = order or VariableOrder(G.vars)
    vars = order.vars
    G = G.embed(vars) if G.vars != vars else G
    cof = _poly_in_var(G, var)
    if len(cof) < 2:
        raise ValueError("no %s term to solve for" % var)
    czero = _lp_to_series(cof[0], order, tvar, trunc)
    if not czero.coeffs[0].is_zero():
        raise ValueError("G(0, 0) must vanish")
    lin0 = cof[1].substitute_zero(tvar) if cof[1].involves(tvar) else cof[1]
    if lin0.is_zero() or not lin0.is_monomial():
        raise ValueError("linear coefficient %s is not invertible at t = 0" % cof[1])
    a_inv = ElliottRational(order, LaurentPolynomial.one(vars), []) * (
        LaurentPolynomial.one(vars).divide_by_monomial(lin0)
    )

    root = TruncatedSeries.zeros(order, trunc)
    series_cof = [_lp_to_series(c, order, tvar, trunc) for c in cof]
    for n in range(1, trunc + 1):
        # evaluate G at the current partial root by Horner
        val = series_cof[-1]
        for c in reversed(series_cof[:-1]):
            val = val * root + c
        rn = val.coeffs[n]
        if rn.is_zero():
            continue
        root.coeffs[n] = (-rn) * a_inv
    # final residual check
    val = series_cof[-1]
    for c in reversed(series_cof[:-1]):
        val = val * root + c
    if not val.is_zero():
        raise AssertionError("positive_root failed to cancel G")
    return root


def evaluate_at_series(F, var: str, root: TruncatedSeries, tvar: str) -> TruncatedSeries:
    """F with var replaced by the series root; t-powers of F spread out."""
    order = root.order
    trunc = root.trunc
    if isinstance(F, LaurentPolynomial):
        F = ElliottRational(order, order.align(F))
    out = None
    num_cof = _poly_in_var(F.numerator, var)
    acc = _lp_to_series(num_cof[-1], order, tvar, trunc)
    for c in reversed(num_cof[:-1]):
        acc = acc * root + _lp_to_series(c, order, tvar, trunc)
    out = acc
    for f in F.factors:
        base = f.as_laurent(order.vars)
        if not base.involves(var) and not base.involves(tvar):
            scalar = ElliottRational(order, LaurentPolynomial.one(order.vars), [(base, 1)])
            out = out.map_coefficients(lambda c, s=scalar: c * s)
            continue
        cofs = _poly_in_var(base, var)
        ev = _lp_to_series(cofs[-1], order, tvar, trunc)
        for c in reversed(cofs[:-1]):
            ev = ev * root + _lp_to_series(c, order, tvar, trunc)
        inv = ev.inverse()
        for _ in range(f.mult):
            out = out * inv
    return out


def lagrange_ct(F, G: LaurentPolynomial, var: str, tvar: str, trunc: int,
                order: Optional[VariableOrder] = None) -> TruncatedSeries:
    """CT_var of var*F/G as a t-series: F/G' evaluated at the positive root."""
    order = order or VariableOrder(G.vars)
    root = positive_root(G, var, tvar, trunc, order)
    dG = order.align(G).derivative(var)
    denom = evaluate_at_series(ElliottRational(order, dG), var, root, tvar)
    numer = evaluate_at_series(F, var, root, tvar)
    return numer * denom.inverse()


# ----------------------------------------------------------------------
# divided differences


def elliott_derivative(F: ElliottRational, var: str) -> ElliottRational:
    order = F.order
    vars = order.vars
    total = ElliottRational(order, F.numerator.derivative(var), list(F.factors))
    for f in F.factors:
        base = f.as_laurent(vars)
        db = base.derivative(var)
        if db.is_zero():
            continue
        extra = list(F.factors) + [(base, 1)]
        total = total + ElliottRational(order, F.numerator * db * Fraction(-f.mult), extra)
    return total.cancel_common()


def divided_difference(Q: ElliottRational, var: str, us: Sequence) -> ElliottRational:
    """Iterated divided differences (Q(x) - Q(u))/(x - u), earliest u first.

    Each u is a variable name or a monomial; u equal to the main variable
    takes the confluent limit, the derivative.
    """
    order = Q.order
    vars = order.vars
    out = Q
    for u in us:
        if isinstance(u, str):
            if u == var:
                out = elliott_derivative(out, var)
                continue
            u_lp = LaurentPolynomial.variable(vars, u)
        else:
            u_lp = order.align(u)
        x_lp = LaurentPolynomial.variable(vars, var)
        if u_lp == x_lp:
            out = elliott_derivative(out, var)
            continue
        shifted = out.substitute_monomials({var: u_lp})
        diff = out - shifted
        num = diff.numerator.exact_div(x_lp - u_lp)
        out = ElliottRational(order, num, list(diff.factors)).cancel_common()
    return out


# ----------------------------------------------------------------------
# the three-way factorization


class ThirdDecomposition(NamedTuple):
    minus: TruncatedSeries
    zero: TruncatedSeries
    plus: TruncatedSeries

    def product(self) -> TruncatedSeries:
        return self.minus * self.zero * self.plus


def third_decomposition(h: TruncatedSeries, var: str) -> ThirdDecomposition:
    """h = h_minus * h_zero * h_plus with x-supports negative/free/positive.

    Computed as exp of the sign-parts of log h; needs h(t=0) = 1.
    """
    g = h.log()
    parts = {"minus": [], "ct": [], "plus": []}
    for c in g.coeffs:
        neg, ct, plus = split_parts(c, var)
        parts["minus"].append(neg)
        parts["ct"].append(ct)
        parts["plus"].append(plus)
    mk = lambda key: TruncatedSeries(h.order, parts[key], h.trunc).exp()
    return ThirdDecomposition(mk("minus"), mk("ct"), mk("plus"))


# ----------------------------------------------------------------------
# univariate coefficient extraction from a rational coefficient


def laurent_series_coefficient(F: ElliottRational, var: str, k: int) -> Fraction:
    """[var^k] of a univariate-in-var Elliott function, expanded at 0."""
    vars = F.order.vars
    vi = vars.index(var)
    for v in vars:
        if v != var and (F.numerator.involves(v) or any(
            f.as_laurent(vars).involves(v) for f in F.factors
        )):
            raise ValueError("coefficient extraction needs a univariate function")
    if F.numerator.is_zero():
        return Fraction(0)
    s = min(e[vi] for e in F.numerator.terms)
    if k - s < 0:
        return Fraction(0)
    m = k - s + 1
    coeffs = [Fraction(0)] * m
    for e, c in F.numerator.terms.items():
        d = e[vi] - s
        if d < m:
            coeffs[d] += c
    num = UPoly.rational(var, coeffs)
    den = UPoly.rational(var, [1])
    for f in F.factors:
        base = f.as_laurent(vars)
        bl = [Fraction(0)] * (max(e[vi] for e in base.terms) + 1)
        if min(e[vi] for e in base.terms) < 0:
            raise ValueError("factor %s is not a power series in %s" % (base, var))
        for e, c in base.terms.items():
            bl[e[vi]] += c
        den = den * UPoly.rational(var, bl) ** f.mult
    if not den[0]:
        raise ValueError("denominator vanishes at %s = 0" % var)
    inv = series_inverse(den, m)
    return (num * inv)[m - 1]


# ----------------------------------------------------------------------
# pipelines


def slit_plane(steps: StepSet, trunc: int = 6):
    """Slit-plane walk data for a y-bilateral step set.

    Returns S_x (CT_y of the free walk series), the strictly-positive-x
    part of log S_x, the smallest ending abscissa p with its walk series
    S_p0, and the back-step series B with 1 - B(1/x, t) =
    exp(-(log S_x)_0 - (log S_x)_-).
    """
    gamma = steps.gamma
    order = gamma.order
    vars = order.vars
    if "y" not in vars or "x" not in vars:
        raise ValueError("slit pipeline expects variables x and y")
    free = geometric_series(gamma, trunc)
    sx = free.map_coefficients(lambda c: ct_lambda(c, "y"))
    lg = sx.log()
    minus, ct, plus = [], [], []
    for c in lg.coeffs:
        n, z, p = split_parts(c, "x")
        minus.append(n)
        ct.append(z)
        plus.append(p)
    log_s0 = TruncatedSeries(order, plus, trunc)
    low = TruncatedSeries(order, [a + b for a, b in zip(minus, ct)], trunc)
    b_series = 1 - (-low).exp()

    p = None
    coeff_fns: List[Fraction] = []
    for k in range(1, 64):
        vals = [laurent_series_coefficient(c, "x", k) for c in log_s0.coeffs]
        if any(vals):
            p = k
            coeff_fns = vals
            break
    return {
        "S_x": sx,
        "log_S0": log_s0,
        "B": b_series,
        "p": p,
        "S_p0": coeff_fns,
    }


def slit_full_series(steps: StepSet, trunc: int) -> TruncatedSeries:
    """S(x, y; t): all walks avoiding the nonpositive x-axis after the start."""
    data = slit_plane(steps, trunc)
    free = geometric_series(steps.gamma, trunc)
    return free * (1 - data["B"])


def dyck_bounded(m: Optional[int], trunc: int = DEFAULT_ORDER):
    """Nonnegative walks with steps +-1 bounded above by m (None: unbounded).

    B counts nonempty-start returns (the y^-1 corrector), T the top-edge
    corrector; H is the full height-marked series with y tracking height.
    """
    vars = ("y",)
    order = VariableOrder(vars)
    gy = LaurentPolynomial(("y", "t"), {(1, 0): 1, (0, 1): -1, (2, 1): -1})
    oyt = VariableOrder(("y", "t"))
    Y = positive_root(gy, "y", "t", trunc, oyt)
    Y = TruncatedSeries(order, [c.numerator.embed(vars).constant_value() for c in Y.coeffs], trunc)

    one = TruncatedSeries.constant(order, 1, trunc)
    if m is None:
        B = Y
        T = TruncatedSeries.zeros(order, trunc)
        mp = None
    else:
        if m < 0:
            raise ValueError("height bound must be nonnegative")
        mp = m + 1
        ym = Y ** (2 * mp)
        den = (one - Y ** (2 * mp + 2)).inverse()
        B = Y * (one - ym) * den
        T = (Y ** mp - Y ** (mp + 2)) * den

    y = LaurentPolynomial.variable(vars, "y")
    yinv = LaurentPolynomial.variable(vars, "y", -1)
    gam = ElliottRational(order, y + yinv)
    geom = geometric_series(gam, trunc)
    corr = one - B.map_coefficients(lambda c: c * ElliottRational(order, yinv))
    if mp is not None:
        ytop = LaurentPolynomial.variable(vars, "y", mp)
        corr = corr - T.map_coefficients(lambda c: c * ElliottRational(order, ytop))
    H = corr * geom
    return {"B": B, "T": T, "H": H}


def dyck_height_coefficient(H: TruncatedSeries, length: int, height: int) -> Fraction:
    c = H[length]
    if c.factors:
        raise ValueError("expected polynomial coefficients")
    return c.numerator.coefficient((height,))


def catalan_diagonal_paths(trunc: int) -> List[Fraction]:
    """Paths with unit right/up steps never above the diagonal, by length.

    The generating function (1 - yC(xy))/(1 - x - y) evaluated on the
    diagonal x = y = t, via the positive root of x - x^2 - y.
    """
    vars = ("x", "y")
    order = VariableOrder(vars)
    G = LaurentPolynomial(vars, {(1, 0): 1, (2, 0): -1, (0, 1): -1})
    X = positive_root(G, "x", "y", trunc, order)  # X = y*C(y)
    consts = [c.numerator.constant_value() if not c.is_zero() else Fraction(0) for c in X.coeffs]

    tor = VariableOrder(("t",))
    # t*C(t^2) = X(y -> t^2)/t
    tc = [Fraction(0)] * (trunc + 1)
    for n, c in enumerate(consts):
        k = 2 * n - 1
        if 0 <= k <= trunc:
            tc[k] = c
    tct2 = TruncatedSeries(tor, [ElliottRational.constant(tor, v) for v in tc], trunc)
    two_t = TruncatedSeries(
        tor,
        [ElliottRational.zero(tor), ElliottRational.constant(tor, 2)],
        trunc,
    )
    one = TruncatedSeries.constant(tor, 1, trunc)
    ptt = (one - tct2) * (one - two_t).inverse()
    return [
        c.numerator.constant_value() if not c.is_zero() else Fraction(0) for c in ptt.coeffs
    ]


def quarter_plane_symmetric(steps: StepSet, trunc: int = DEFAULT_ORDER):
    """Quarter-plane walks from (1,1) staying strictly positive, y-symmetric steps.

    Solves the boundary pieces V (y-boundary), H (x-boundary) and O (the
    corner term) from the positive roots in x and in y, then assembles
    Q = (xy - H - V - O) / (1 - t*gamma).
    """
    gamma = steps.gamma
    order = gamma.order
    vars = order.vars
    if "x" not in vars or "y" not in vars:
        raise ValueError("quarter-plane pipeline expects variables x and y")
    if gamma.factors:
        raise ValueError("step weight must be a Laurent polynomial")
    gp = gamma.numerator
    xi, yi = vars.index("x"), vars.index("y")
    for e in gp.terms:
        if abs(e[xi]) > 1 or abs(e[yi]) > 1:
            raise ValueError("steps must have |dx| <= 1 and |dy| <= 1")
    yinv = LaurentPolynomial.variable(vars, "y", -1)
    flipped = gp.substitute_monomials({"y": yinv})
    if not flipped == gp:
        raise ValueError("step set is not symmetric in y")

    ext = vars + ("t",) if "t" not in vars else vars
    oxt = VariableOrder(ext)
    t_lp = LaurentPolynomial.variable(ext, "t")
    gpe = gp.embed(ext)
    x_lp = LaurentPolynomial.variable(ext, "x")
    y_lp = LaurentPolynomial.variable(ext, "y")

    if gp.is_zero():
        zero = TruncatedSeries.zeros(order, trunc)
        q = TruncatedSeries.zeros(order, trunc)
        q.coeffs[0] = ElliottRational(
            order, LaurentPolynomial.monomial(vars, 1, tuple(
                1 if i in (xi, yi) else 0 for i in range(len(vars))
            ))
        )
        return {"V": zero, "H": zero, "O": zero, "Q": q}

    Gx = x_lp - t_lp * x_lp * gpe
    X = positive_root(Gx, "x", "t", trunc, oxt)
    Gy = y_lp - t_lp * y_lp * gpe
    Yroot = positive_root(Gy, "y", "t", trunc, oxt)

    def drop_t(series: TruncatedSeries) -> TruncatedSeries:
        return TruncatedSeries(
            order,
            [ElliottRational(order, c.numerator.embed(vars),
                             [(f.as_laurent(ext).embed(vars), f.mult) for f in c.factors])
             for c in series.coeffs],
            series.trunc,
        )

    yinv_ext = LaurentPolynomial.variable(ext, "y", -1)
    vfull = X.map_coefficients(lambda c: c * (y_lp - yinv_ext))
    V = vfull.map_coefficients(lambda c: coefficient_part(c, "y", "plus"))

    # compose V at y = Y: the coefficients of V are polynomials in y
    comp = TruncatedSeries.zeros(oxt, trunc)
    for n, c in enumerate(V.coeffs):
        if c.is_zero():
            continue
        if c.factors:
            raise ValueError("expected polynomial boundary coefficients")
        piece = TruncatedSeries.zeros(oxt, trunc)
        for e, co in c.numerator.terms.items():
            k = e[ext.index("y")]
            if k < 0 or any(x for i, x in enumerate(e) if i != ext.index("y")):
                raise ValueError("V coefficient is not a positive y-polynomial")
            piece = piece + (Yroot ** k) * co
        comp = comp + piece.shift(n)
    W = Yroot.map_coefficients(lambda c: c * ElliottRational(oxt, x_lp)) - comp

    H = W.map_coefficients(lambda c: coefficient_part(c, "x", "plus"))
    O = W.map_coefficients(lambda c: coefficient_part(c, "x", "ct"))
    negpart = W - H - O
    if not negpart.is_zero():
        raise AssertionError("negative-x residue in the quarter-plane boundary")

    xy = ElliottRational(oxt, x_lp * y_lp)
    kernel_num = TruncatedSeries.constant(oxt, xy, trunc) - H - V - O
    geom = geometric_series(ElliottRational(oxt, gpe), trunc)
    Q = kernel_num * geom
    return {
        "V": drop_t(V),
        "H": drop_t(H),
        "O": drop_t(O),
        "Q": drop_t(Q),
    }


def series_table(series: TruncatedSeries, length: int) -> dict:
    """The Laurent-polynomial coefficient of t^length as an exponent table."""
    c = series[length]
    if c.factors:
        raise ValueError("coefficient is not polynomial")
    return dict(c.numerator.terms)
