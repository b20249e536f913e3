"""Command line driver: expression parsing, dispatch, deterministic output.

Expressions use integer literals, declared identifiers, + - * / ^ and
parentheses; ^ binds tightest and takes a literal (possibly negative)
integer exponent, then unary minus, then * and /, then + and -.  The
lowering keeps denominators factored so the Elliott form is recognized
without refactoring.  Exit codes: 0 on success, 1 on a domain error
reported by an engine, 2 on a usage error (bad flags, malformed
expressions, undeclared variables).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .ctrational import hadamard, series_coefficients
from .dedekind import DedekindInstance, dedekind_sum, reciprocity_check
from .elliott import ElliottRational
from .fields import RationalFunction
from .laurent import LaurentPolynomial
from .omega import (
    ct_lambda,
    elliott_reduce,
    make_system,
    omega_ct,
    omega_geq,
    check_reciprocity,
    solution_gf,
    lambda_names,
    DiophantineSystem,
)
from .ordering import VariableOrder
from .ppfraction import (
    frac_at,
    frac_at_origin,
    frac_at_prime,
    ppfraction_split,
)
from .serieslab import (
    StepSet,
    TruncatedSeries,
    catalan_diagonal_paths,
    dyck_bounded,
    dyck_height_coefficient,
    quarter_plane_symmetric,
    slit_full_series,
    slit_plane,
)
from .unipoly import UPoly, poly_divmod
from . import oracle


class UsageError(Exception):
    pass


class ExprError(UsageError):
    def __init__(self, offset: int, message: str):
        super().__init__("syntax error at offset %d: %s" % (offset, message))
        self.offset = offset


# ----------------------------------------------------------------------
# tokenizer and Pratt parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")

# AST nodes: ("int", v) ("var", name) ("neg", a)
#            ("add"|"sub"|"mul"|"div", a, b) ("pow", a, k)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ExprError(at, "unexpected character %r" % stripped[0])
        if m.group(1):
            tokens.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2):
            tokens.append(("ident", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


_LBP = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
_UNARY_BP = 30


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str):
        kind, val, off = self.peek()
        if kind != "op" or val != op:
            raise ExprError(off, "expected %r" % op)
        return self.advance()

    def parse(self):
        node = self.expression(0)
        kind, val, off = self.peek()
        if kind != "end":
            raise ExprError(off, "unexpected %r" % (val,))
        return node

    def expression(self, rbp: int):
        left = self.nud(self.advance())
        while True:
            kind, val, off = self.peek()
            if kind != "op" or _LBP.get(val, 0) <= rbp:
                break
            self.advance()
            left = self.led(val, off, left)
        return left

    def nud(self, token):
        kind, val, off = token
        if kind == "num":
            return ("int", val)
        if kind == "ident":
            return ("var", val)
        if kind == "op" and val == "-":
            return ("neg", self.expression(_UNARY_BP))
        if kind == "op" and val == "(":
            node = self.expression(0)
            self.expect_op(")")
            return node
        what = "end of input" if kind == "end" else repr(val)
        raise ExprError(off, "expected an expression, found %s" % what)

    def led(self, op: str, off: int, left):
        if op == "^":
            sign = 1
            kind, val, o2 = self.peek()
            if kind == "op" and val == "-":
                sign = -1
                self.advance()
                kind, val, o2 = self.peek()
            if kind != "num":
                raise ExprError(o2, "exponent must be an integer literal")
            self.advance()
            return ("pow", left, sign * val)
        names = {"+": "add", "-": "sub", "*": "mul", "/": "div"}
        right = self.expression(_LBP[op])
        return (names[op], left, right)


def parse_expression(text: str):
    return _Parser(text).parse()


# ----------------------------------------------------------------------
# lowering: AST -> factored rational (numerator, [(factor, mult), ...])


class Rat:
    """A rational kept factored on both sides, as typed."""

    __slots__ = ("vars", "nums", "dens")

    def __init__(self, vars, nums, dens):
        self.vars = vars
        self.nums = nums
        self.dens = dens

    def num_product(self) -> LaurentPolynomial:
        out = LaurentPolynomial.one(self.vars)
        for p, m in self.nums:
            out = out * p ** m
        return out

    def den_product(self) -> LaurentPolynomial:
        out = LaurentPolynomial.one(self.vars)
        for p, m in self.dens:
            out = out * p ** m
        return out


def lower(ast, vars: Sequence[str]) -> Rat:
    vars = tuple(vars)

    def leaf(p: LaurentPolynomial) -> Rat:
        return Rat(vars, [(p, 1)], [])

    def rec(node) -> Rat:
        tag = node[0]
        if tag == "int":
            return leaf(LaurentPolynomial.constant(vars, node[1]))
        if tag == "var":
            if node[1] not in vars:
                raise UsageError(
                    "unknown variable %r; declared: %s" % (node[1], ", ".join(vars))
                )
            return leaf(LaurentPolynomial.variable(vars, node[1]))
        if tag == "neg":
            r = rec(node[1])
            return Rat(vars, r.nums + [(LaurentPolynomial.constant(vars, -1), 1)], r.dens)
        if tag in ("add", "sub"):
            a, b = rec(node[1]), rec(node[2])
            na = a.num_product() * b.den_product()
            nb = b.num_product() * a.den_product()
            num = na + nb if tag == "add" else na - nb
            return Rat(vars, [(num, 1)], a.dens + b.dens)
        if tag == "mul":
            a, b = rec(node[1]), rec(node[2])
            return Rat(vars, a.nums + b.nums, a.dens + b.dens)
        if tag == "div":
            a, b = rec(node[1]), rec(node[2])
            if any(p.is_zero() for p, _ in b.nums):
                raise ZeroDivisionError("division by zero in expression")
            return Rat(vars, a.nums + b.dens, a.dens + b.nums)
        if tag == "pow":
            a, k = rec(node[1]), node[2]
            if k >= 0:
                return Rat(vars, [(p, m * k) for p, m in a.nums],
                           [(p, m * k) for p, m in a.dens])
            k = -k
            if any(p.is_zero() for p, _ in a.nums):
                raise ZeroDivisionError("zero raised to a negative power")
            return Rat(vars, [(p, m * k) for p, m in a.dens],
                       [(p, m * k) for p, m in a.nums])
        raise AssertionError("unhandled node %r" % (tag,))

    return rec(ast)


def to_elliott(rat: Rat, order: VariableOrder) -> ElliottRational:
    return ElliottRational(order, rat.num_product(), rat.dens)


def _lp_to_upoly(p: LaurentPolynomial, var: str) -> UPoly:
    if any(v != var and p.involves(v) for v in p.vars):
        raise UsageError("expected a univariate expression in %s, got %s" % (var, p))
    vi = p.vars.index(var)
    if p.is_zero():
        return UPoly.rational(var, [])
    if min(e[vi] for e in p.terms) < 0:
        raise UsageError("negative powers of %s are not allowed here" % var)
    coeffs = [Fraction(0)] * (max(e[vi] for e in p.terms) + 1)
    for e, c in p.terms.items():
        coeffs[e[vi]] += c
    return UPoly.rational(var, coeffs)


def to_rational_function(rat: Rat, var: str) -> RationalFunction:
    num = _lp_to_upoly(rat.num_product(), var)
    den = UPoly.rational(var, [1])
    for p, m in rat.dens:
        den = den * _lp_to_upoly(p, var) ** m
    return RationalFunction(num, den)


def parse_rational(text: str, vars: Sequence[str]) -> Rat:
    return lower(parse_expression(text), vars)


# ----------------------------------------------------------------------
# printers

_POW = re.compile(r"\^(-?\d+)")


def _latex_from_plain(s: str) -> str:
    s = _POW.sub(lambda m: "^{%s}" % m.group(1), s)
    return s.replace("*", " ")


def latex_str(F) -> str:
    if isinstance(F, ElliottRational):
        num = _latex_from_plain(str(F.numerator))
        if not F.factors:
            return num
        den = "".join(
            "(%s)%s" % (_latex_from_plain(f.base_str(F.order.vars)),
                        "^{%d}" % f.mult if f.mult > 1 else "")
            for f in F.factors
        )
        return "\\frac{%s}{%s}" % (num, den)
    if isinstance(F, RationalFunction):
        s = str(F)
        if "/" in s:
            num, _, den = s.partition("/")
            return "\\frac{%s}{%s}" % (
                _latex_from_plain(num.strip("()")),
                _latex_from_plain(den.strip("()")),
            )
        return _latex_from_plain(s)
    return _latex_from_plain(str(F))


def _frac_str(q) -> str:
    return str(q)


def _json_fraction(q) -> str:
    return str(Fraction(q))


def rational_function_json(f: RationalFunction) -> dict:
    return {
        "var": f.var,
        "numerator": [_json_fraction(c) for c in f.num.coeffs],
        "denominator": [_json_fraction(c) for c in f.den.coeffs],
    }


class Output:
    """Collects lines; flushes to stdout or --out FILE."""

    def __init__(self, path: Optional[str]):
        self.path = path
        self.lines: List[str] = []

    def say(self, text: str = ""):
        self.lines.append(text)

    def emit_json(self, obj):
        self.lines = [json.dumps(obj, indent=2, sort_keys=True)]

    def flush(self):
        text = "\n".join(self.lines)
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)


# ----------------------------------------------------------------------
# shared helpers


def _parse_vars(spec: str) -> Tuple[str, ...]:
    names = tuple(v.strip() for v in spec.split(",") if v.strip())
    if not names:
        raise UsageError("empty variable list")
    if len(set(names)) != len(names):
        raise UsageError("duplicate variable in %r" % spec)
    return names


def _parse_steps(spec: str) -> List[Tuple[int, int]]:
    steps = []
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        bits = part.split(",")
        if len(bits) != 2:
            raise UsageError("bad step %r; expected dx,dy" % part)
        steps.append((int(bits[0]), int(bits[1])))
    return steps


def _read_system(path: str, strict: bool) -> DiophantineSystem:
    rows = []
    shift = None
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("b:"):
                shift = [int(x) for x in line[2:].split()]
                continue
            rows.append([int(x) for x in line.split()])
    if not rows:
        raise UsageError("no matrix rows in %s" % path)
    return make_system(rows, shift, strict)


def _default_truncate(args) -> int:
    if getattr(args, "truncate", None) is not None:
        return args.truncate
    env = os.environ.get("OMEGACT_TRUNCATE")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError("OMEGACT_TRUNCATE must be an integer, got %r" % env)
    return 8


def _geq_via_slack(F: ElliottRational, lams: Sequence[str]) -> ElliottRational:
    """Independent route: each kept-part operator as a slack-variable CT.

    Appending the slack variable puts it outermost, so 1/(1 - s/lam)
    expands with the whole kept part of lam and CT followed by s = 1
    reproduces the nonnegative-part operator.
    """
    cur = F
    for k, lam in enumerate(lams):
        order = cur.order
        s = "_s%d" % (k + 1)
        ext = order.vars + (s,)
        lifted = cur.with_order(VariableOrder(ext))
        li, si = ext.index(lam), ext.index(s)
        e = [0] * len(ext)
        e[li], e[si] = -1, 1
        slack = LaurentPolynomial.one(ext) - LaurentPolynomial.monomial(ext, 1, tuple(e))
        lifted = ElliottRational(
            lifted.order,
            lifted.numerator,
            [(f.as_laurent(ext), f.mult) for f in lifted.factors] + [(slack, 1)],
        )
        cur = ct_lambda(lifted, lam).substitute_one(s).with_order(order)
    return cur


# ----------------------------------------------------------------------
# subcommand handlers


def _cmd_omega(args, out: Output) -> int:
    mode = args.mode
    if args.system:
        if mode != "ct":
            raise UsageError("--system supports only the ct mode")
        system = _read_system(args.system, args.strict)
        elim = _parse_vars(args.elim_order) if args.elim_order else None
        E = solution_gf(system, elim)
        if args.json:
            out.emit_json({"E": E.to_json_dict()})
        elif args.latex:
            out.say(latex_str(E))
        else:
            out.say(E.canonical_str())
        return 0

    if not args.expr and not args.batch:
        raise UsageError("an expression, --batch FILE, or --system FILE is required")
    if not args.vars:
        raise UsageError("--vars is required with an expression")
    if not args.eliminate:
        raise UsageError("--eliminate is required with an expression")
    vars = _parse_vars(args.vars)
    lams = _parse_vars(args.eliminate)
    for lam in lams:
        if lam not in vars:
            raise UsageError("eliminated variable %r is not declared" % lam)
    order = VariableOrder(vars)

    def run_one(text: str) -> str:
        F = to_elliott(parse_rational(text, vars), order)
        op = omega_ct if mode == "ct" else omega_geq
        R = op(F, lams)
        if args.cross_check:
            if mode == "ct":
                alt = F
                for lam in lams:
                    alt = elliott_reduce(alt, lam)
            else:
                alt = _geq_via_slack(F, lams)
            if not R == alt:
                raise ValueError(
                    "cross-check failed:\n  engine: %s\n  alternate route: %s"
                    % (R.canonical_str(), alt.canonical_str())
                )
        remaining = tuple(v for v in vars if v not in lams)
        R = R.with_order(VariableOrder(remaining))
        if args.latex:
            return latex_str(R)
        if args.json:
            return json.dumps(R.to_json_dict(), sort_keys=True)
        return R.canonical_str()

    if args.batch:
        with open(args.batch) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                out.say(run_one(line))
    else:
        out.say(run_one(args.expr))
    return 0


def _cmd_count(args, out: Output) -> int:
    system = _read_system(args.system, False)
    E = solution_gf(system)
    Ebar = solution_gf(DiophantineSystem(system.matrix, system.shift, True))
    report = check_reciprocity(system, args.degree)
    if args.json:
        payload = {
            "E": E.to_json_dict(),
            "Ebar": Ebar.to_json_dict(),
            "report": {k: v for k, v in report.items()},
        }
        out.emit_json(payload)
    else:
        out.say("E(x) = %s" % E.canonical_str())
        out.say("Ebar(x) = %s" % Ebar.canonical_str())
        out.say("rank %d of %d rows in %d unknowns" % (report["rank"], report["rows"], report["n"]))
        for key in ("applicable", "strict_empty", "identity_holds", "series_match"):
            out.say("%s: %s" % (key, json.dumps(report[key])))
        if "message" in report:
            out.say("note: %s" % report["message"])
    ok = report["series_match"] is not False and report["identity_holds"] is not False
    return 0 if ok else 1


def _infer_var(rat: Rat, declared: Optional[str]) -> str:
    if declared:
        return declared
    seen = [v for v in rat.vars]
    return seen[0]


def _pfd_vars(text: str, varflag: Optional[str]) -> Tuple[str, ...]:
    idents = sorted(set(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text)))
    if varflag:
        if idents and idents != [varflag]:
            raise UsageError(
                "expression mentions %s but --var is %s" % (", ".join(idents), varflag)
            )
        return (varflag,)
    if len(idents) != 1:
        raise UsageError("expected exactly one variable, found: %s" % (", ".join(idents) or "none"))
    return (idents[0],)


def _cmd_pfd(args, out: Output) -> int:
    vars = _pfd_vars(args.expr, args.var)
    var = vars[0]
    rat = parse_rational(args.expr, vars)
    N = _lp_to_upoly(rat.num_product(), var)
    merged: Dict[str, Tuple[UPoly, int]] = {}
    for p, m in rat.dens:
        up = _lp_to_upoly(p, var)
        key = str(up)
        if key in merged:
            merged[key] = (merged[key][0], merged[key][1] + m)
        else:
            merged[key] = (up, m)
    D = UPoly.rational(var, [1])
    for up, m in merged.values():
        D = D * up ** m

    if args.prime:
        p_up = _lp_to_upoly(parse_rational(args.prime, vars).num_product(), var)
        p_mod, k, blocks = frac_at_prime(N, D, p_up)
        if args.json:
            out.emit_json({
                "modulus": [str(c) for c in p_mod.coeffs],
                "multiplicity": k,
                "blocks": [[str(c) for c in h.coeffs] for h in blocks],
            })
        else:
            out.say("modulus: %s" % p_mod)
            for j, h in enumerate(blocks, 1):
                out.say("(%s - alpha)^%d: %s" % (var, j, h))
        return 0

    if args.at_origin is not None:
        part = frac_at_origin(N, D, args.at_origin)
        if args.json:
            out.emit_json({
                "numerator": [str(c) for c in part.numerator.coeffs],
                "factor": [str(c) for c in part.factor.coeffs],
            })
        else:
            out.say(str(part))
        return 0

    factors = [up ** m for up, m in merged.values()]
    split = ppfraction_split(N, factors)
    if args.cross_check:
        total = split.polynomial_part * D
        for part in split.parts:
            q, r = poly_divmod(D, part.factor)
            if not r.is_zero():
                raise ValueError("cross-check failed: %s does not divide the denominator" % part.factor)
            total = total + part.numerator * q
        if not total == N:
            raise ValueError("cross-check failed: recombination differs from the input")
    if args.json:
        out.emit_json({
            "polynomial": [str(c) for c in split.polynomial_part.coeffs],
            "parts": [
                {
                    "numerator": [str(c) for c in part.numerator.coeffs],
                    "factor": [str(c) for c in part.factor.coeffs],
                }
                for part in split.parts
            ],
        })
    else:
        out.say("poly: %s" % split.polynomial_part)
        for part in split.parts:
            out.say(str(part))
    return 0


def _cmd_dedekind(args, out: Output) -> int:
    if args.reciprocity:
        a = [int(x) for x in args.values]
        if len(a) < 1:
            raise UsageError("reciprocity needs at least one entry")
        report = reciprocity_check(a)
        if args.json:
            out.emit_json({
                "a": a,
                "lhs": _json_fraction(report.lhs),
                "rhs": _json_fraction(report.rhs),
                "equal": report.equal,
            })
        else:
            out.say("lhs = %s" % report.lhs)
            out.say("rhs = %s" % report.rhs)
            out.say("equal: %s" % json.dumps(report.equal))
        return 0 if report.equal else 1

    if len(args.values) < 2:
        raise UsageError("usage: dedekind N A1 [A2 ...]")
    n = int(args.values[0])
    a = [int(x) for x in args.values[1:]]
    inst = DedekindInstance.make(n, a)
    value = dedekind_sum(inst)
    if args.cross_check:
        approx = oracle.dedekind_float(n, a)
        if abs(float(value) - approx) > 1e-9:
            raise ValueError(
                "cross-check failed: exact %s vs float %.12f" % (value, approx)
            )
    if args.json:
        out.emit_json({"n": n, "a": a, "value": _json_fraction(value)})
    else:
        out.say("d(%d; %s) = %s" % (n, ", ".join(map(str, a)), value))
    return 0


def _steps_or_default(args) -> List[Tuple[int, int]]:
    if args.steps:
        return _parse_steps(args.steps)
    return [(1, 0), (-1, 0), (0, 1), (0, -1)]


def _series_constants(ts) -> List[Fraction]:
    outv = []
    for c in ts.coeffs:
        outv.append(Fraction(0) if c.is_zero() else c.numerator.constant_value())
    return outv


def _table_lines(c: ElliottRational, vars: Tuple[str, ...]) -> List[str]:
    items = sorted(c.numerator.terms.items())
    bits = []
    for e, v in items:
        mono = "*".join(
            "%s^%d" % (vars[i], e[i]) for i in range(len(vars)) if e[i]
        ) or "1"
        bits.append("%s: %s" % (mono, v))
    return bits


def _cmd_walks(args, out: Output) -> int:
    trunc = _default_truncate(args)
    kind = args.kind

    if kind == "catalan":
        counts = catalan_diagonal_paths(trunc)
        if args.cross_check:
            for L in range(trunc + 1):
                tab = oracle.count_walks([(1, 0), (0, 1)], "not_above_diagonal", L)
                want = sum(tab.data.values(), Fraction(0))
                if counts[L] != want:
                    raise ValueError(
                        "cross-check failed at length %d: engine %s vs oracle %s"
                        % (L, counts[L], want)
                    )
        if args.json:
            out.emit_json({"counts": [_json_fraction(c) for c in counts]})
        else:
            for L, c in enumerate(counts):
                out.say("length %d: %s" % (L, c))
        return 0

    if kind == "dyck":
        if args.bound is None and not args.unbounded:
            raise UsageError("dyck needs a height bound or --unbounded")
        m = None if args.unbounded else args.bound
        data = dyck_bounded(m, trunc)
        if args.cross_check:
            hi = m if m is not None else trunc + 1
            for L in range(trunc + 1):
                tab = oracle.count_walks([(1,), (-1,)], ("height_band", 0, hi), L)
                for h in range(0, hi + 1):
                    got = dyck_height_coefficient(data["H"], L, h)
                    if got != tab.get((h,)):
                        raise ValueError(
                            "cross-check failed at length %d height %d: engine %s vs oracle %s"
                            % (L, h, got, tab.get((h,)))
                        )
        if args.json:
            out.emit_json({
                "B": [_json_fraction(c) for c in _series_constants(data["B"])],
                "T": [_json_fraction(c) for c in _series_constants(data["T"])],
                "H": [
                    {"length": L, "heights": {
                        str(e[0]): _json_fraction(v)
                        for e, v in sorted(data["H"][L].numerator.terms.items())
                    }}
                    for L in range(trunc + 1)
                ],
            })
        else:
            out.say("B: %s" % ", ".join(str(c) for c in _series_constants(data["B"])))
            out.say("T: %s" % ", ".join(str(c) for c in _series_constants(data["T"])))
            for L in range(trunc + 1):
                out.say("t^%d  %s" % (L, "  ".join(_table_lines(data["H"][L], ("y",)))))
        return 0

    if kind == "quarter":
        steps = _steps_or_default(args)
        ss = StepSet.from_steps(steps)
        data = quarter_plane_symmetric(ss, trunc)
        Q = data["Q"]
        if args.cross_check:
            for L in range(trunc + 1):
                tab = oracle.count_walks(steps, "quarter", L)
                got = dict(Q[L].numerator.terms)
                want = dict(tab.items())
                if got != want:
                    raise ValueError(
                        "cross-check failed at length %d: engine %s vs oracle %s"
                        % (L, got, want)
                    )
        if args.json:
            out.emit_json({
                "Q": [
                    {"length": L, "coefficients": {
                        "x^%d*y^%d" % e: _json_fraction(v)
                        for e, v in sorted(Q[L].numerator.terms.items())
                    }}
                    for L in range(trunc + 1)
                ]
            })
        else:
            for L in range(trunc + 1):
                out.say("t^%d  %s" % (L, "  ".join(_table_lines(Q[L], ("x", "y")))))
        return 0

    if kind == "slit":
        if args.gamma:
            vars = _parse_vars(args.vars) if args.vars else ("x", "y")
            order = VariableOrder(vars)
            gamma = to_elliott(parse_rational(args.gamma, vars), order)
            ss = StepSet(gamma)
            finite = None
        else:
            finite = _steps_or_default(args)
            ss = StepSet.from_steps(finite)
        data = slit_plane(ss, trunc)
        if args.cross_check:
            if finite is None:
                raise UsageError("--cross-check for slit needs an explicit step set")
            S = slit_full_series(ss, trunc)
            for L in range(trunc + 1):
                tab = oracle.count_walks(finite, "slit", L)
                got = dict(S[L].numerator.terms)
                want = dict(tab.items())
                if got != want:
                    raise ValueError(
                        "cross-check failed at length %d: engine %s vs oracle %s"
                        % (L, got, want)
                    )
        if args.json:
            out.emit_json({
                "p": data["p"],
                "S_p0": [_json_fraction(c) for c in data["S_p0"]],
                "S_x": [c.to_json_dict() for c in data["S_x"].coeffs],
            })
        else:
            out.say("p = %s" % data["p"])
            out.say("S_p0 coefficients: %s" % ", ".join(str(c) for c in data["S_p0"]))
        return 0

    raise UsageError("unknown walk kind %r" % kind)


def _cmd_hadamard(args, out: Output) -> int:
    vars_f = _pfd_vars(args.f, args.var)
    vars_g = _pfd_vars(args.g, args.var)
    if vars_f != vars_g:
        raise UsageError("both series must use the same variable")
    var = vars_f[0]
    f = to_rational_function(parse_rational(args.f, vars_f), var)
    g = to_rational_function(parse_rational(args.g, vars_g), var)
    result = hadamard(f, g)
    count = args.count
    coeffs = series_coefficients(result, count)
    if args.cross_check:
        fa = series_coefficients(f, count)
        ga = series_coefficients(g, count)
        for n in range(count):
            if coeffs[n] != fa[n] * ga[n]:
                raise ValueError(
                    "cross-check failed at n=%d: %s vs %s*%s"
                    % (n, coeffs[n], fa[n], ga[n])
                )
    if args.json:
        payload = rational_function_json(result)
        payload["coefficients"] = [_json_fraction(c) for c in coeffs]
        out.emit_json(payload)
    elif args.latex:
        out.say(latex_str(result))
    else:
        out.say(str(result))
        out.say("coefficients: %s" % ", ".join(str(c) for c in coeffs))
    return 0


def _cmd_oracle(args, out: Output) -> int:
    what = args.what
    if what == "walks":
        steps = _parse_steps(args.steps) if args.steps else [(1, 0), (-1, 0), (0, 1), (0, -1)]
        constraint = args.constraint
        if constraint.startswith("band:"):
            lo, hi = constraint[5:].split(",")
            constraint = ("height_band", int(lo), int(hi))
        start = tuple(int(x) for x in args.start.split(",")) if args.start else None
        tab = oracle.count_walks(steps, constraint, args.length, start=start)
        rows = sorted(tab.items())
        if args.json:
            out.emit_json({"%s" % (e,): _json_fraction(v) for e, v in rows})
        else:
            for e, v in rows:
                out.say("%s: %s" % (e, v))
        return 0
    if what == "solutions":
        path = args.system or (args.values[0] if args.values else None)
        if not path:
            raise UsageError("solutions needs --system FILE")
        system = _read_system(path, args.strict)
        tab = oracle.enumerate_solutions(
            system.matrix, system.shift, system.nvars, args.degree, strict=args.strict
        )
        for e, v in sorted(tab.items()):
            out.say("%s: %s" % (e, v))
        return 0
    if what == "dedekind":
        if len(args.values) < 2:
            raise UsageError("dedekind needs N A1 [A2 ...]")
        n = int(args.values[0])
        a = [int(x) for x in args.values[1:]]
        out.say("%.12f" % oracle.dedekind_float(n, a))
        return 0
    if what == "dyson":
        if not args.values:
            raise UsageError("dyson needs A1 [A2 ...]")
        a = [int(x) for x in args.values]
        out.say(str(oracle.dyson_ct(a)))
        return 0
    if what == "binomial":
        results = oracle.binomial_suite()
        for key in sorted(results):
            out.say("%s: %s" % (key, json.dumps(results[key])))
        return 0 if all(results.values()) else 1
    raise UsageError("unknown oracle %r" % what)


# ----------------------------------------------------------------------
# argument wiring


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="omegact",
        description="Exact constant-term extraction, partition analysis, "
        "Dedekind sums, and lattice-path pipelines.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, latex=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", help="write output to FILE instead of stdout")
        if latex:
            p.add_argument("--latex", action="store_true", help="LaTeX form of the result")

    om = sub.add_parser("omega", help="constant-term and kept-part operators")
    om.add_argument("mode", choices=("ct", "geq"))
    om.add_argument("expr", nargs="?", help="rational expression")
    om.add_argument("--vars", help="comma-separated variable order, innermost first")
    om.add_argument("--eliminate", help="comma-separated variables to eliminate, in order")
    om.add_argument("--system", help="matrix file; rows of integers, optional b: line")
    om.add_argument("--strict", action="store_true", help="all-positive solutions")
    om.add_argument("--elim-order", help="lambda elimination order for --system")
    om.add_argument("--cross-check", action="store_true", help="verify via an independent route")
    om.add_argument("--batch", help="file of expressions, one per line")
    common(om)

    ct = sub.add_parser("count", help="solution generating function and reciprocity report")
    ct.add_argument("system", help="matrix file")
    ct.add_argument("--degree", type=int, default=10, help="series comparison degree")
    common(ct, latex=False)

    pf = sub.add_parser("pfd", help="partial fraction decompositions")
    pf.add_argument("expr", help="univariate rational expression with factored denominator")
    pf.add_argument("--var", help="variable name (inferred when unique)")
    pf.add_argument("--at-origin", type=int, metavar="M", help="block of the t^M factor at the origin")
    pf.add_argument("--prime", metavar="POLY", help="block over Q[alpha]/(POLY)")
    pf.add_argument("--cross-check", action="store_true", help="recombine and compare")
    common(pf, latex=False)

    dd = sub.add_parser("dedekind", help="generalized Dedekind sums")
    dd.add_argument("values", nargs="+", help="N A1 A2 ... (or A1..Am with --reciprocity)")
    dd.add_argument("--reciprocity", action="store_true", help="check the reciprocity identity")
    dd.add_argument("--cross-check", action="store_true", help="compare with the float oracle")
    common(dd, latex=False)

    wk = sub.add_parser("walks", help="lattice-path pipelines")
    wk.add_argument("kind", choices=("slit", "dyck", "quarter", "catalan"))
    wk.add_argument("bound", nargs="?", type=int, help="height bound (dyck)")
    wk.add_argument("--unbounded", action="store_true", help="no height bound (dyck)")
    wk.add_argument("--steps", help="step set, e.g. '1,0;-1,0;0,1;0,-1'")
    wk.add_argument("--gamma", help="step weight as a rational expression (slit)")
    wk.add_argument("--vars", help="variables for --gamma (default x,y)")
    wk.add_argument("--truncate", type=int, help="series order (default OMEGACT_TRUNCATE or 8)")
    wk.add_argument("--cross-check", action="store_true", help="compare with the walk oracle")
    common(wk, latex=False)

    hd = sub.add_parser("hadamard", help="coefficientwise product of two rational series")
    hd.add_argument("f")
    hd.add_argument("g")
    hd.add_argument("--var", help="series variable (inferred when unique)")
    hd.add_argument("--count", type=int, default=12, help="coefficients to print")
    hd.add_argument("--cross-check", action="store_true", help="verify coefficientwise")
    common(hd)

    orc = sub.add_parser("oracle", help="brute-force reference computations")
    orc.add_argument("what", choices=("walks", "solutions", "dedekind", "dyson", "binomial"))
    orc.add_argument("values", nargs="*", help="numeric arguments")
    orc.add_argument("--steps", help="step set for walks")
    orc.add_argument("--constraint", default="none",
                     help="none|slit|quarter|not_above_diagonal|band:lo,hi")
    orc.add_argument("--length", type=int, default=4)
    orc.add_argument("--start", help="start point i,j")
    orc.add_argument("--system", help="matrix file (solutions)")
    orc.add_argument("--degree", type=int, default=10)
    orc.add_argument("--strict", action="store_true")
    common(orc, latex=False)

    return ap


_HANDLERS = {
    "omega": _cmd_omega,
    "count": _cmd_count,
    "pfd": _cmd_pfd,
    "dedekind": _cmd_dedekind,
    "walks": _cmd_walks,
    "hadamard": _cmd_hadamard,
    "oracle": _cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    out = Output(getattr(args, "out", None))
    try:
        code = _HANDLERS[args.command](args, out)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, ArithmeticError, RuntimeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
