"""Constant-term and nonnegative-part operators on Elliott functions.

Eliminating one variable lam from N / prod (lam^j - z)^m splits the
function into a lam-polynomial head plus one proper block per core.  A
block contributes to the constant term only when its core is PT (the
root z is order-smaller than lam^j); NT blocks expand into strictly
negative powers and drop out.  Cofactors of the other cores are obtained
from closed-form binomial inverses, so no linear systems are solved and
no general polynomial gcds are taken.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .elliott import BinomialFactor, ElliottRational
from .laurent import Exponents, LaurentPolynomial
from .ordering import MIXED, NT, PT, Monomial, VariableOrder


def _gbinom(q: int, i: int) -> Fraction:
    # binomial coefficient with arbitrary integer upper index
    num = Fraction(1)
    for k in range(i):
        num *= q - k
    return num / math.factorial(i)


def _mono_pow(m: Monomial, p: int) -> Monomial:
    return Monomial(m.coeff ** p, tuple(e * p for e in m.exps))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return Monomial(a.coeff * b.coeff, tuple(x + y for x, y in zip(a.exps, b.exps)))


def _pad(exps: Exponents, n: int) -> Exponents:
    return exps + (0,) * (n - len(exps))


class _Core:
    __slots__ = ("j", "z", "mult", "kind")

    def __init__(self, j: int, z: Monomial, mult: int, kind: Optional[str] = None):
        self.j = j
        self.z = z
        self.mult = mult
        self.kind = kind

    def poly(self, vars: Sequence[str], li: int) -> LaurentPolynomial:
        e = [0] * len(vars)
        e[li] = self.j
        return LaurentPolynomial.monomial(vars, 1, tuple(e)) - self.z.as_laurent(vars)


def _core_form(f: BinomialFactor, li: int, nvars: int):
    """factor == u * (lam^j - z) with z lam-free, or u * (lam-free binomial).

    Returns (u: Monomial, j, z: Monomial or None, free: (lhs', rhs') or None).
    """
    a = f.lhs.exps
    rc, re = f.rhs.coeff, f.rhs.exps
    j1, j2 = a[li], re[li]
    if j1 == j2:
        u_exps = tuple(j1 if i == li else 0 for i in range(nvars))
        lhs2 = tuple(0 if i == li else e for i, e in enumerate(a))
        rhs2 = tuple(0 if i == li else e for i, e in enumerate(re))
        return Monomial(Fraction(1), u_exps), 0, None, (Monomial(Fraction(1), lhs2), Monomial(rc, rhs2))
    if j1 > j2:
        j = j1 - j2
        u_exps = tuple(j2 if i == li else a[i] for i in range(nvars))
        z_exps = tuple(0 if i == li else re[i] - a[i] for i in range(nvars))
        return Monomial(Fraction(1), u_exps), j, Monomial(rc, z_exps), None
    j = j2 - j1
    u_exps = tuple(j1 if i == li else re[i] for i in range(nvars))
    z_exps = tuple(0 if i == li else a[i] - re[i] for i in range(nvars))
    return Monomial(-rc, u_exps), j, Monomial(Fraction(1) / rc, z_exps), None


def _rem_core(p: LaurentPolynomial, li: int, core: _Core, vars: Sequence[str]) -> LaurentPolynomial:
    """p modulo (lam^j - z)^mult, lam exponents reduced into [0, mult*j).

    lam^d with d = q*j + r rewrites through lam^j = z + D, D the core:
    (z + D)^q = sum_i C(q, i) z^(q-i) D^i truncated at i = mult, exact for
    any integer q because z is an invertible monomial.
    """
    j, m = core.j, core.mult
    top = m * j
    core_pows: List[LaurentPolynomial] = [LaurentPolynomial.one(vars)]
    base = core.poly(vars, li)
    for _ in range(m - 1):
        core_pows.append(core_pows[-1] * base)
    out = LaurentPolynomial.zero(vars)
    pending: Dict[Exponents, Fraction] = {}
    for exps, c in p.terms.items():
        d = exps[li]
        if 0 <= d < top:
            prev = pending.get(exps, Fraction(0)) + c
            if prev:
                pending[exps] = prev
            else:
                pending.pop(exps, None)
            continue
        q, r0 = divmod(d, j)
        stem_exps = tuple(r0 if i == li else e for i, e in enumerate(exps))
        stem = LaurentPolynomial.monomial(vars, c, stem_exps)
        acc = LaurentPolynomial.zero(vars)
        for i in range(m):
            w = _gbinom(q, i)
            if not w:
                continue
            zpow = _mono_pow(core.z, q - i)
            acc = acc + core_pows[i] * zpow.as_laurent(vars) * w
        out = out + stem * acc
    out = out + LaurentPolynomial(vars, pending)
    return out


def _finv_num(j_s: int, z_s: Monomial, j_i: int, z_i: Monomial, li: int, vars) -> LaurentPolynomial:
    """Numerator of the inverse of (lam^j_i - z_i) modulo (lam^j_s - z_s).

    The denominator is delta = z_s^(j_i/g) - z_i^(j_s/g); the product
    (lam^j_i - z_i) * num is delta modulo (lam^j_s - z_s).
    """
    g = math.gcd(j_s, j_i)
    jp, kp = j_s // g, j_i // g
    out = LaurentPolynomial.zero(vars)
    for l in range(jp):
        zp = _mono_pow(z_i, jp - 1 - l)
        e = tuple(l * kp if i == li else zp.exps[i] for i in range(len(vars)))
        out = out + LaurentPolynomial.monomial(vars, zp.coeff, e)
    return out


def _delta(j_s: int, z_s: Monomial, j_i: int, z_i: Monomial, vars) -> LaurentPolynomial:
    g = math.gcd(j_s, j_i)
    jp, kp = j_s // g, j_i // g
    return _mono_pow(z_s, kp).as_laurent(vars) - _mono_pow(z_i, jp).as_laurent(vars)


def _cofactor(target: _Core, other: _Core, li: int, vars):
    """(A, delta, dpow): A/delta^dpow inverts (lam^j_i - z_i)^m_i mod target^m_s."""
    r_num = _finv_num(target.j, target.z, other.j, other.z, li, vars)
    s_num = _finv_num(other.j, other.z, target.j, target.z, li, vars)
    delta = _delta(target.j, target.z, other.j, other.z, vars)
    if delta.is_zero():
        raise AssertionError("non-coprime cores escaped collision handling")
    m_s, m_i = target.mult, other.mult
    dpow = m_i + m_s - 1
    if m_s == 1 and m_i == 1:
        return _rem_core(r_num, li, target, vars), delta, 1
    # A = sum_u C(m_i-1+u, u) r^m_i s^u core^u, scaled onto delta^dpow;
    # s carries denominator -delta, hence the (-1)^u
    core_poly = target.poly(vars, li)
    r_pow = _rem_core(r_num, li, target, vars)
    rm = LaurentPolynomial.one(vars)
    for _ in range(m_i):
        rm = _rem_core(rm * r_pow, li, target, vars)
    acc = LaurentPolynomial.zero(vars)
    s_term = LaurentPolynomial.one(vars)  # (s_num * core)^u, reduced
    delta_pows = [LaurentPolynomial.one(vars)]
    for _ in range(m_s - 1):
        delta_pows.append(delta_pows[-1] * delta)
    for u in range(m_s):
        w = Fraction(math.comb(m_i - 1 + u, u)) * (-1) ** u
        acc = acc + _rem_core(rm * s_term * delta_pows[m_s - 1 - u], li, target, vars) * w
        if u + 1 < m_s:
            s_term = _rem_core(s_term * s_num * core_poly, li, target, vars)
    return acc, delta, dpow


def _rank(matrix: Sequence[Sequence[int]]) -> int:
    a = [[Fraction(x) for x in row] for row in matrix]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = Fraction(1) / a[r][c]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c] * inv
                for jj in range(cols):
                    a[i][jj] -= f * a[r][jj]
        r += 1
        if r == rows:
            break
    return r


# ----------------------------------------------------------------------
# single-variable elimination


def _eliminate(F: ElliottRational, lam: str, mode: str):
    order = F.order
    vars = order.vars
    if lam not in vars:
        raise ValueError("variable %r not in context %r" % (lam, vars))
    li = vars.index(lam)
    nv = len(vars)

    carried: List[Tuple[LaurentPolynomial, int]] = []
    P = F.numerator
    merged: Dict[Tuple[int, Fraction, Exponents], _Core] = {}
    for f in F.factors:
        base = f.as_laurent(vars)
        if not base.involves(lam):
            carried.append((base, f.mult))
            continue
        u, j, z, free = _core_form(f, li, nv)
        P = P * (u.as_laurent(vars) ** (-f.mult))
        if j == 0:
            lhs2, rhs2 = free
            carried.append((lhs2.as_laurent(vars) - rhs2.as_laurent(vars), f.mult))
            continue
        key = (j, z.coeff, z.exps)
        if key in merged:
            merged[key].mult += f.mult
        else:
            merged[key] = _Core(j, z, f.mult)

    cores = list(merged.values())
    unit_j = lambda j: tuple(j if i == li else 0 for i in range(nv))
    for c in cores:
        cmpv = order.compare(c.z.exps, unit_j(c.j))
        c.kind = PT if cmpv < 0 else NT

    # ------------------------------------------------------------------
    # proportional cores: split with temporary variables, restore later

    def collide(a: _Core, b: _Core) -> bool:
        g = math.gcd(a.j, b.j)
        return _mono_pow(a.z, b.j // g) == _mono_pow(b.z, a.j // g)

    parent = list(range(len(cores)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(cores)):
        for k in range(i + 1, len(cores)):
            if collide(cores[i], cores[k]):
                ri, rk = find(i), find(k)
                if ri != rk:
                    parent[rk] = ri

    groups: Dict[int, List[int]] = {}
    for i in range(len(cores)):
        groups.setdefault(find(i), []).append(i)
    split_targets = [g for g in groups.values() if len(g) > 1]

    subs: Dict[str, Monomial] = {}
    ext_order = order
    if split_targets:
        temp_names = []
        counter = 0
        for grp in split_targets:
            for idx in grp[1:]:
                counter += 1
                temp_names.append("_w%d" % counter)
        ext_vars = vars + tuple(temp_names)
        if order.rho is None:
            ext_order = VariableOrder(ext_vars)
        else:
            n0 = len(vars)
            nt = len(ext_vars)
            rho = [[0] * nt for _ in range(nt)]
            for i in range(n0):
                for k in range(n0):
                    rho[i][k] = order.rho[i][k]
            for i in range(n0, nt):
                rho[i][i] = 1
            ext_order = VariableOrder(ext_vars, rho)
        nv2 = len(ext_vars)
        P = P.embed(ext_vars)
        carried = [(c.embed(ext_vars), m) for c, m in carried]
        counter = 0
        for c in cores:
            c.z = Monomial(c.z.coeff, _pad(c.z.exps, nv2))
        for grp in split_targets:
            for idx in grp[1:]:
                counter += 1
                name = "_w%d" % counter
                wi = ext_vars.index(name)
                orig = cores[idx].z
                subs[name] = orig
                e = tuple(1 if i == wi else 0 for i in range(nv2))
                cores[idx].z = Monomial(Fraction(1), e)
    evars = ext_order.vars

    # ------------------------------------------------------------------
    # lam-polynomial head

    if P.is_zero():
        return ElliottRational.zero(order)

    if cores:
        shift = max(0, -P.min_exp(lam))
        lam_c = LaurentPolynomial.variable(evars, lam, shift) if shift else LaurentPolynomial.one(evars)
        qfull = lam_c
        for c in cores:
            qfull = qfull * c.poly(evars, li) ** c.mult
        head_poly, _ = (P * lam_c).divmod_in_var(qfull, lam)
    else:
        head_poly = P

    if mode == "ct":
        head = head_poly.coefficient_in(lam, 0)
    else:
        kept = LaurentPolynomial(evars)
        kept.terms = {e: c for e, c in head_poly.terms.items() if e[li] >= 0}
        head = kept.substitute_one(lam)
    total = ElliottRational(ext_order, head, list(carried))

    # ------------------------------------------------------------------
    # one proper block per PT core

    for s in cores:
        if s.kind != PT:
            continue
        num = _rem_core(P, li, s, evars)
        extra: List[Tuple[LaurentPolynomial, int]] = []
        for o in cores:
            if o is s:
                continue
            A, delta, dpow = _cofactor(s, o, li, evars)
            num = _rem_core(num * A, li, s, evars)
            extra.append((delta, dpow))
        if mode == "ct":
            val = num.coefficient_in(lam, 0)
            zinv = _mono_pow(s.z, -s.mult)
            val = val * zinv.as_laurent(evars) * Fraction((-1) ** s.mult)
            term = ElliottRational(ext_order, val, extra + list(carried))
        else:
            core_at_1 = LaurentPolynomial.one(evars) - s.z.as_laurent(evars)
            if core_at_1.is_zero():
                raise ZeroDivisionError(
                    "nonnegative part hits a pole at %s = 1 (core root is 1)" % lam
                )
            val = num.substitute_one(lam)
            term = ElliottRational(
                ext_order, val, extra + list(carried) + [(core_at_1, s.mult)]
            )
        total = total + term

    total = total.cancel_common()

    for name, zmono in subs.items():
        total = _restore_temp(total, name, zmono, ext_order)

    if ext_order is not order:
        total = ElliottRational(
            order,
            total.numerator.embed(vars),
            [(f.as_laurent(evars).embed(vars), f.mult) for f in total.factors],
        )
    return total


def _restore_temp(R: ElliottRational, w: str, z: Monomial, order: VariableOrder) -> ElliottRational:
    vars = order.vars
    z_lp = z.as_laurent(vars)
    w_lp = LaurentPolynomial.variable(vars, w)
    vanish_order = 0
    unit_num = LaurentPolynomial.one(vars)
    new_factors: List[Tuple[LaurentPolynomial, int]] = []
    for f in R.factors:
        base = f.as_laurent(vars)
        if not base.involves(w):
            new_factors.append((base, f.mult))
            continue
        image = base.substitute_monomials({w: z_lp})
        if not image.is_zero():
            new_factors.append((image, f.mult))
            continue
        # base = c1*X*w^d - c2*Y vanishing at w = z: it factors as
        # c1*X*(w - z)*sum_l w^l z^(d-1-l); the sum evaluates to d*z^(d-1)
        wi = vars.index(w)
        terms = list(base.terms.items())
        (e1, c1) = terms[0] if terms[0][0][wi] else terms[1]
        d = e1[wi]
        if d < 1:
            raise AssertionError("unexpected temp-variable exponent in %s" % base)
        x_exps = tuple(0 if i == wi else e for i, e in enumerate(e1))
        cof = _mono_mul(Monomial(c1 * d, x_exps), _mono_pow(z, d - 1))
        unit_num = unit_num * (cof.as_laurent(vars) ** (-f.mult))
        vanish_order += f.mult
    num = R.numerator
    if vanish_order:
        binom = w_lp - z_lp
        for _ in range(vanish_order):
            try:
                num = num.exact_div(binom)
            except ValueError as exc:
                raise AssertionError(
                    "temp-variable back-substitution: vanishing order mismatch"
                ) from exc
    num = num.substitute_monomials({w: z_lp}) * unit_num
    return ElliottRational(order, num, new_factors).cancel_common()


# ----------------------------------------------------------------------
# public operators


def ct_lambda(F: ElliottRational, lam: str) -> ElliottRational:
    """Constant term in one variable, all other variables kept symbolic."""
    return _eliminate(F, lam, "ct")


def pt_lambda_at_one(F: ElliottRational, lam: str) -> ElliottRational:
    """The nonnegative-power part in lam, evaluated at lam = 1."""
    return _eliminate(F, lam, "pt")


def omega_ct(F: ElliottRational, lams: Sequence[str]) -> ElliottRational:
    for lam in lams:
        F = ct_lambda(F, lam)
    return F


def omega_geq(F: ElliottRational, lams: Sequence[str]) -> ElliottRational:
    for lam in lams:
        F = pt_lambda_at_one(F, lam)
    return F


def split_parts(F: ElliottRational, lam: str) -> Tuple[ElliottRational, ElliottRational, ElliottRational]:
    """(negative, constant, strictly positive) parts of F along lam.

    The pieces are Elliott functions again: head terms split by lam sign
    and each PT block belongs entirely to the nonnegative part.
    """
    order = F.order
    vars = order.vars
    li = vars.index(lam)

    # rebuild the elimination by hand to keep lam in the PT blocks
    carried: List[Tuple[LaurentPolynomial, int]] = []
    P = F.numerator
    merged: Dict[Tuple[int, Fraction, Exponents], _Core] = {}
    for f in F.factors:
        base = f.as_laurent(vars)
        if not base.involves(lam):
            carried.append((base, f.mult))
            continue
        u, j, z, free = _core_form(f, li, len(vars))
        P = P * (u.as_laurent(vars) ** (-f.mult))
        if j == 0:
            lhs2, rhs2 = free
            carried.append((lhs2.as_laurent(vars) - rhs2.as_laurent(vars), f.mult))
            continue
        key = (j, z.coeff, z.exps)
        if key in merged:
            merged[key].mult += f.mult
        else:
            merged[key] = _Core(j, z, f.mult)
    cores = list(merged.values())
    unit_j = lambda j: tuple(j if i == li else 0 for i in range(len(vars)))
    for c in cores:
        c.kind = PT if order.compare(c.z.exps, unit_j(c.j)) < 0 else NT
    for i in range(len(cores)):
        for k in range(i + 1, len(cores)):
            g = math.gcd(cores[i].j, cores[k].j)
            if _mono_pow(cores[i].z, cores[k].j // g) == _mono_pow(cores[k].z, cores[i].j // g):
                raise ValueError("split_parts does not handle proportional cores")

    if P.is_zero():
        zero = ElliottRational.zero(order)
        return zero, zero, zero

    if cores:
        shift = max(0, -P.min_exp(lam))
        lam_c = LaurentPolynomial.variable(vars, lam, shift) if shift else LaurentPolynomial.one(vars)
        qfull = lam_c
        for c in cores:
            qfull = qfull * c.poly(vars, li) ** c.mult
        head_poly, _ = (P * lam_c).divmod_in_var(qfull, lam)
    else:
        head_poly = P

    ct_head = head_poly.coefficient_in(lam, 0)
    pos_head = LaurentPolynomial(vars)
    pos_head.terms = {e: c for e, c in head_poly.terms.items() if e[li] > 0}
    nonneg = ElliottRational(order, ct_head + pos_head, list(carried))
    ct_part = ElliottRational(order, ct_head, list(carried))

    for s in cores:
        if s.kind != PT:
            continue
        num = _rem_core(P, li, s, vars)
        extra: List[Tuple[LaurentPolynomial, int]] = []
        for o in cores:
            if o is s:
                continue
            A, delta, dpow = _cofactor(s, o, li, vars)
            num = _rem_core(num * A, li, s, vars)
            extra.append((delta, dpow))
        block = ElliottRational(
            order, num, extra + list(carried) + [(s.poly(vars, li), s.mult)]
        )
        nonneg = nonneg + block
        val = num.coefficient_in(lam, 0)
        zinv = _mono_pow(s.z, -s.mult)
        val = val * zinv.as_laurent(vars) * Fraction((-1) ** s.mult)
        ct_part = ct_part + ElliottRational(order, val, extra + list(carried))

    nonneg = nonneg.cancel_common()
    ct_part = ct_part.cancel_common()
    neg = (F - nonneg).cancel_common()
    plus = (nonneg - ct_part).cancel_common()
    return neg, ct_part, plus


# ----------------------------------------------------------------------
# Elliott reduction: the identity-rewriting route to the constant term


def elliott_reduce(F: ElliottRational, lam: str, max_steps: int = 200000) -> ElliottRational:
    """Constant term in lam via the classical reduction identity.

    1/((1-A)(1-B)) with A carrying positive and B negative lam powers
    rewrites as 1/(1-AB) * (1/(1-A) + 1/(1-B) - 1); iterating makes every
    term single-signed in lam, where the constant term is read off by a
    bounded coin-change enumeration.
    """
    order = F.order
    vars = order.vars
    li = vars.index(lam)
    one_exps = (0,) * len(vars)

    carried: List[BinomialFactor] = []
    ratios: List[Monomial] = []
    P = F.numerator
    for f in F.factors:
        base = f.as_laurent(vars)
        if not base.involves(lam):
            carried.append(f)
            continue
        # (lhs - rhs)^m = lhs^m (1 - rhs/lhs)^m
        ratio = Monomial(f.rhs.coeff, tuple(r - l for r, l in zip(f.rhs.exps, f.lhs.exps)))
        P = P * (f.lhs.as_laurent(vars) ** (-f.mult))
        ratios.extend([ratio] * f.mult)

    stack: List[Tuple[Fraction, Exponents, Tuple[Monomial, ...], Tuple[Monomial, ...]]] = []
    for exps, c in P.terms.items():
        stack.append((c, exps, tuple(ratios), ()))

    pieces: List[ElliottRational] = []
    steps = 0
    while stack:
        steps += 1
        if steps > max_steps:
            raise RuntimeError(
                "elliott_reduce exceeded %d steps with %d terms pending"
                % (max_steps, len(stack))
            )
        c, exps, active, free = stack.pop()
        plus = [m for m in active if m.exps[li] > 0]
        minus = [m for m in active if m.exps[li] < 0]
        lam_free = [m for m in active if m.exps[li] == 0]
        if lam_free:
            extra = []
            for m in lam_free:
                if m.exps == one_exps:
                    # (1 - const) scales the coefficient
                    if m.coeff == 1:
                        raise ZeroDivisionError("factor (1 - 1) in reduction")
                    c = c / (1 - m.coeff)
                else:
                    extra.append(m)
            active = tuple(plus + minus)
            free = free + tuple(extra)
        if plus and minus:
            a, b = plus[0], minus[0]
            rest = list(active)
            rest.remove(a)
            rest.remove(b)
            prod = _mono_mul(a, b)
            if prod.exps == one_exps and prod.coeff == 1:
                # b = 1/a: 1/(1-b) = -a/(1-a)
                stack.append(
                    (-c * a.coeff, tuple(x + y for x, y in zip(exps, a.exps)), tuple(rest + [a, a]), free)
                )
                continue
            stack.append((c, exps, tuple(rest + [prod, a]), free))
            stack.append((c, exps, tuple(rest + [prod, b]), free))
            stack.append((-c, exps, tuple(rest + [prod]), free))
            continue
        # terminal: single-signed in lam
        d = exps[li]
        signs = plus or minus
        sols: List[Exponents] = []

        def enum(i: int, need: int, acc: Exponents, weight: Fraction):
            if i == len(signs):
                if need == 0:
                    e = tuple(x if k != li else 0 for k, x in enumerate(acc))
                    contrib.append((weight, e))
                return
            step = signs[i].exps[li]
            k = 0
            cur = need
            while (cur >= 0 and step > 0) or (cur <= 0 and step < 0):
                enum(
                    i + 1,
                    cur,
                    acc if k == 0 else tuple(x + k * y for x, y in zip(acc, signs[i].exps)),
                    weight if k == 0 else weight * signs[i].coeff ** k,
                )
                k += 1
                cur = need - k * step

        contrib: List[Tuple[Fraction, Exponents]] = []
        if not signs:
            if d == 0:
                contrib.append((Fraction(1), exps))
        else:
            enum(0, -d, exps, Fraction(1))
        if contrib:
            acc_terms: Dict[Exponents, Fraction] = {}
            for w, e in contrib:
                s = acc_terms.get(e, Fraction(0)) + c * w
                if s:
                    acc_terms[e] = s
                else:
                    acc_terms.pop(e, None)
            num = LaurentPolynomial(vars, acc_terms)
            if num.is_zero():
                continue
            raw = [(LaurentPolynomial.one(vars) - m.as_laurent(vars), 1) for m in free]
            raw.extend(carried)
            pieces.append(ElliottRational(order, num, raw))

    total = ElliottRational.zero(order)
    for p in pieces:
        total = total + p
    return total.cancel_common()


# ----------------------------------------------------------------------
# linear Diophantine generating functions


class DiophantineSystem(NamedTuple):
    matrix: Tuple[Tuple[int, ...], ...]
    shift: Tuple[int, ...]
    strict: bool = False

    @property
    def nrows(self) -> int:
        return len(self.matrix)

    @property
    def nvars(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0


def make_system(matrix, shift=None, strict=False) -> DiophantineSystem:
    rows = tuple(tuple(int(x) for x in row) for row in matrix)
    if not rows or len({len(r) for r in rows}) != 1:
        raise ValueError("matrix must be rectangular and nonempty")
    b = tuple(int(x) for x in shift) if shift else (0,) * len(rows)
    if len(b) != len(rows):
        raise ValueError("shift length must match row count")
    return DiophantineSystem(rows, b, strict)


def crude_gf(system: DiophantineSystem) -> ElliottRational:
    """The crude generating function whose lambda constant term solves the system.

    Lambda variables come first in the order (so every factor expands),
    then one marker per unknown.  The shift enters as a lambda monomial;
    strict systems multiply every marker monomial in once.
    """
    r, n = system.nrows, system.nvars
    lams = tuple("l%d" % (i + 1) for i in range(r))
    xs = tuple("x%d" % (i + 1) for i in range(n))
    vars = lams + xs
    order = VariableOrder(vars)
    num_exps = list(system.shift) + [0] * n
    factors = []
    for i in range(n):
        col = [system.matrix[k][i] for k in range(r)]
        e = col + [0] * n
        e[r + i] = 1
        mono = LaurentPolynomial.monomial(vars, 1, tuple(e))
        factors.append((LaurentPolynomial.one(vars) - mono, 1))
        if system.strict:
            num_exps = [a + b for a, b in zip(num_exps, e)]
    num = LaurentPolynomial.monomial(vars, 1, tuple(num_exps))
    return ElliottRational(order, num, factors)


def lambda_names(system: DiophantineSystem) -> Tuple[str, ...]:
    return tuple("l%d" % (i + 1) for i in range(system.nrows))


def solution_gf(system: DiophantineSystem, elim_order: Optional[Sequence[str]] = None) -> ElliottRational:
    """E(x) or, for strict systems, the all-positive variant."""
    F = crude_gf(system)
    lams = list(elim_order) if elim_order else list(lambda_names(system))
    expected = set(lambda_names(system))
    if set(lams) != expected:
        raise ValueError("elimination order must cover exactly %s" % sorted(expected))
    F = omega_ct(F, lams)
    xs = tuple("x%d" % (i + 1) for i in range(system.nvars))
    return ElliottRational(
        VariableOrder(xs),
        F.numerator.embed(xs),
        [(f.as_laurent(F.order.vars).embed(xs), f.mult) for f in F.factors],
    )


def check_reciprocity(system: DiophantineSystem, degree: int = 10) -> dict:
    """Compare E(x) with (-1)^(n-r) Ebar(1/x), cross-checking both series.

    Returns a report dict; a strict side that is identically zero is
    reported as out of scope for the identity rather than a failure.
    """
    from . import oracle

    r = _rank(system.matrix)
    n = system.nvars
    homogeneous = not any(system.shift)
    report = {
        "rank": r,
        "rows": system.nrows,
        "n": n,
        "applicable": r == system.nrows and homogeneous,
        "strict_empty": False,
        "identity_holds": None,
        "series_match": None,
    }
    if not report["applicable"]:
        report["message"] = (
            "matrix rows are dependent; the identity needs full row rank"
            if homogeneous
            else "inhomogeneous system; the identity is stated for b = 0"
        )
        return report
    E = solution_gf(DiophantineSystem(system.matrix, system.shift, False))
    Ebar = solution_gf(DiophantineSystem(system.matrix, system.shift, True))
    if Ebar.is_zero():
        table = oracle.enumerate_solutions(system.matrix, system.shift, n, degree, strict=True)
        report["strict_empty"] = True
        report["identity_holds"] = None
        report["message"] = (
            "no all-positive solutions (oracle agrees to degree %d); identity hypothesis violated"
            % degree
            if len(table) == 0
            else "engine says the strict side vanishes but the oracle found solutions"
        )
        report["series_match"] = len(table) == 0
        return report
    xs = E.order.vars
    images = {
        v: LaurentPolynomial.monomial(xs, 1, tuple(-1 if i == k else 0 for i in range(len(xs))))
        for k, v in enumerate(xs)
    }
    flipped = Ebar.substitute_monomials(images) * Fraction((-1) ** (n - r))
    report["identity_holds"] = E == flipped

    table = oracle.enumerate_solutions(system.matrix, system.shift, n, degree, strict=False)
    report["series_match"] = series_matches_table(E, table, degree)
    return report


def series_matches_table(E: ElliottRational, table, degree: int) -> bool:
    """Does the expansion of E agree with the table up to total degree?

    Checked by clearing denominators: every term of N - T*D with total
    degree at most the bound must vanish.  Requires the denominator to
    have nonnegative support with a nonzero constant term, which holds
    for the generating functions of solution sets.
    """
    vars = E.order.vars
    D = E.denominator_poly()
    if any(any(x < 0 for x in e) for e in D.terms) or not D.coefficient((0,) * len(vars)):
        raise ValueError("denominator is not a power-series unit; cannot compare")
    T = LaurentPolynomial(vars, {tuple(e): c for e, c in table.items()})
    diff = E.numerator - T * D
    return all(sum(e) > degree for e in diff.terms)


# ----------------------------------------------------------------------


def monomial_substitute_ct_check(Phi: ElliottRational, images: Dict[str, LaurentPolynomial]):
    """Full constant terms of Phi before and after a monomial substitution.

    The exponent matrix of the images must be nonsingular; under that
    condition the two constant terms agree and both are returned.
    """
    vars = Phi.order.vars
    missing = [v for v in vars if v not in images]
    if missing:
        raise ValueError("images missing for %s" % missing)
    matrix = []
    for v in vars:
        c, exps = images[v].single_term()
        matrix.append(list(exps))
    if _rank(matrix) != len(vars):
        raise ValueError("singular exponent matrix; the substitution does not preserve CT")
    before = omega_ct(Phi, vars)
    after = omega_ct(Phi.substitute_monomials(images), vars)
    return before, after
