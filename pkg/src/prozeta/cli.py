"""Command-line frontend.

Subcommands map one-to-one onto the library: `decomp`, `zeta-local`,
`funceq`, `coeffs`, `euler`, `oracle coset`, and the `lie` verification
group.  Results go to stdout as text or, with --json, as a structured
document in which every unbounded integer is a decimal string.

Exit codes: 0 success (checks agree), 1 a verified check came out false,
2 usage or input errors (including primes dividing the conductor).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from prozeta import exactalg
from prozeta.exactalg import (
    BiPoly,
    BiRatFunc,
    IntPoly,
    denominator_factorization,
    is_prime,
    poly_to_str,
    series_coeffs,
)
from prozeta.numberfield import (
    ConductorError,
    DecompType,
    ReducibleError,
    CertificationError,
    certify_irreducible,
    decomposition_type,
)
from prozeta.zetacore import (
    dirichlet_coeffs,
    euler_partial,
    local_factor,
    local_factor_for,
    local_factor_quadratic,
    quadratic_expand_coeffs,
    symmetry_check,
    vsum_coeffs,
)
from prozeta import liecheck
from prozeta import padic_oracle


class InputError(ValueError):
    """Bad user input: maps to exit code 2."""


# ---------------------------------------------------------------------------
# polynomial expression parser
# ---------------------------------------------------------------------------

class PolyParseError(InputError):
    def __init__(self, pos: int, message: str):
        self.pos = pos
        super().__init__("at position %d: %s" % (pos + 1, message))


def _tokenize(src: str):
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(("INT", int(src[i:j]), i))
            i = j
            continue
        if ch == "x":
            tokens.append(("VAR", "x", i))
            i += 1
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch == "/":
            raise PolyParseError(i, "non-integer coefficient: '/' is not allowed")
        if ch == ".":
            raise PolyParseError(i, "non-integer coefficient: '.' is not allowed")
        raise PolyParseError(i, "unexpected character %r" % ch)
    tokens.append(("END", None, len(src)))
    return tokens


class _PolyParser:
    """Recursive descent over: expr := term (+|- term)*;
    term := unary (* unary)*; unary := - unary | power;
    power := atom (^ INT)*; atom := INT | x | ( expr )."""

    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind:
            raise PolyParseError(tok[2], "expected %s, found %r" % (kind, tok[1]))
        self.k += 1
        return tok

    def parse(self) -> IntPoly:
        poly = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise PolyParseError(tok[2], "unexpected %r" % (tok[1],))
        return poly

    def expr(self) -> IntPoly:
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> IntPoly:
        acc = self.unary()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self) -> IntPoly:
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> IntPoly:
        base = self.atom()
        while self.peek()[0] == "^":
            self.take()
            tok = self.take("INT")
            base = base ** tok[1]
        return base

    def atom(self) -> IntPoly:
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            return IntPoly([tok[1]])
        if tok[0] == "VAR":
            self.take()
            return IntPoly([0, 1])
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise PolyParseError(tok[2], "expected a polynomial atom, found %r"
                             % (tok[1],))


def parse_poly(src: str) -> IntPoly:
    """Parse an integer polynomial in x with + - * ^ and parentheses."""
    return _PolyParser(src).parse()


# ---------------------------------------------------------------------------
# output documents
# ---------------------------------------------------------------------------

@dataclass
class OutputDoc:
    kind: str
    data: dict

    def render_json(self) -> str:
        return json.dumps({"kind": self.kind, "data": self.data},
                          indent=2, sort_keys=True)

    @staticmethod
    def parse_json(text: str) -> "OutputDoc":
        obj = json.loads(text)
        return OutputDoc(obj["kind"], obj["data"])

    def __eq__(self, other):
        return (isinstance(other, OutputDoc) and self.kind == other.kind
                and self.data == other.data)


def render_json(doc: OutputDoc) -> str:
    return doc.render_json()


def _coeff_str(c) -> str:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return "%d/%d" % (c.numerator, c.denominator)
    return str(c)


def _bipoly_jsonable(p: BiPoly):
    items = sorted(p.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))
    return [[a, b, _coeff_str(c)] for (a, b), c in items]


def ratfunc_jsonable(r: BiRatFunc):
    out = {"num": _bipoly_jsonable(r.num), "den": _bipoly_jsonable(r.den)}
    fact = denominator_factorization(r.den)
    out["den_factors"] = ([[a, b, m] for (a, b), m in fact]
                          if fact is not None else None)
    return out


def _factored_den_str(r: BiRatFunc):
    fact = denominator_factorization(r.den)
    if fact is None:
        return "(%s)" % exactalg.bipoly_to_str(r.den)
    parts = []
    for (a, b), mult in fact:
        mono = []
        if a:
            mono.append("X" if a == 1 else "X^%d" % a)
        if b:
            mono.append("Y" if b == 1 else "Y^%d" % b)
        base = "(1 - %s)" % "*".join(mono)
        parts.append(base if mult == 1 else base + "^%d" % mult)
    return "".join(parts)


def ratfunc_text(r: BiRatFunc) -> str:
    return "(%s) / %s" % (exactalg.bipoly_to_str(r.num), _factored_den_str(r))


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (OutputDoc, exit_code)
# ---------------------------------------------------------------------------

def _require_prime(p: int) -> int:
    if not is_prime(p):
        raise InputError("%d is not prime" % p)
    return p


def _certified(poly: IntPoly) -> IntPoly:
    if poly.degree < 2:
        raise InputError("polynomial must have degree >= 2")
    if not poly.is_monic():
        raise InputError("polynomial must be monic")
    try:
        certify_irreducible(poly)
    except ReducibleError as err:
        raise InputError(str(err))
    except CertificationError as err:
        raise InputError(str(err))
    return poly


def cmd_decomp(args):
    f = _certified(parse_poly(args.poly))
    p = _require_prime(args.p)
    d = decomposition_type(f, p)
    doc = OutputDoc("decomp", {
        "poly": poly_to_str(f),
        "p": str(p),
        "e": list(d.e),
        "f": list(d.f),
    })
    text = "prime %d in %s: %s" % (p, poly_to_str(f), d)
    return doc, text, 0


def cmd_zeta_local(args):
    f = _certified(parse_poly(args.poly))
    p = _require_prime(args.p)
    lf = local_factor_for(f, p)
    doc = OutputDoc("zeta-local", {
        "poly": poly_to_str(f),
        "p": str(p),
        "e": list(lf.decomp.e),
        "f": list(lf.decomp.f),
        "family": lf.family,
        "value": ratfunc_jsonable(lf.value),
    })
    text = "prime %d in %s: %s\nW(X, Y) = %s" % (
        p, poly_to_str(f), lf.decomp, ratfunc_text(lf.value))
    return doc, text, 0


def _decomp_from_args(args) -> tuple:
    if args.type_n is not None:
        es = [int(t) for t in args.type_e.split(",")]
        fs = [int(t) for t in args.type_f.split(",")]
        d = DecompType(tuple(es), tuple(fs))
        if d.degree != args.type_n:
            raise InputError("sum of e_i f_i is %d, not n=%d"
                             % (d.degree, args.type_n))
        return args.type_n, d, None
    if args.poly is None or args.p is None:
        raise InputError("give either <poly> <p> or --type n=,e=,f=")
    f = _certified(parse_poly(args.poly))
    p = _require_prime(args.p)
    return f.degree, decomposition_type(f, p), f


def cmd_funceq(args):
    n, d, f = _decomp_from_args(args)
    if n == 2:
        lf = local_factor_quadratic(d)
    else:
        lf = local_factor(n, d)
    sym = symmetry_check(lf.value)
    data = {
        "n": n,
        "e": list(d.e),
        "f": list(d.f),
        "symmetry": None if sym is None else
            {"sign": sym.sign, "a": sym.a, "b": sym.b},
    }
    doc = OutputDoc("funceq", data)
    if sym is None:
        text = "no functional equation: the inverted function is not a " \
               "signed monomial multiple of the original"
    else:
        text = "functional equation: W(1/X, 1/Y) = %sX^%d Y^%d W(X, Y)" % (
            "" if sym.sign == 1 else "-", sym.a, sym.b)
    return doc, text, 0


def cmd_coeffs(args):
    f = _certified(parse_poly(args.poly))
    p = _require_prime(args.p)
    K = args.max_k
    d = decomposition_type(f, p)
    n = f.degree
    series = dirichlet_coeffs(n, d, p, K)
    if n == 2:
        oracle = quadratic_expand_coeffs(d, p, K)
        oracle_name = "direct-expansion"
    else:
        oracle = vsum_coeffs(n, d, p, K)
        oracle_name = "v-sum"
    agree = series == oracle
    doc = OutputDoc("coeffs", {
        "poly": poly_to_str(f),
        "p": str(p),
        "max_k": K,
        "series": [str(c) for c in series],
        "oracle": [str(c) for c in oracle],
        "oracle_name": oracle_name,
        "agree": agree,
    })
    lines = ["prime %d in %s: %s" % (p, poly_to_str(f), d),
             "%-6s %-28s %-28s" % ("k", "series b_(p^k)", oracle_name)]
    for k in range(K + 1):
        lines.append("%-6d %-28d %-28d" % (k, series[k], oracle[k]))
    lines.append("agreement: %s" % ("yes" if agree else "NO"))
    return doc, "\n".join(lines), 0 if agree else 1


def cmd_euler(args):
    f = _certified(parse_poly(args.poly))
    table = euler_partial(f, args.primes, args.index)
    doc = OutputDoc("euler", {
        "poly": poly_to_str(f),
        "prime_bound": args.primes,
        "index_bound": args.index,
        "coefficients": {str(m): str(b) for m, b in sorted(table.items())},
    })
    lines = ["global coefficients of %s (primes <= %d, indices <= %d):"
             % (poly_to_str(f), args.primes, args.index)]
    for m, b in sorted(table.items()):
        lines.append("  b_%d = %d" % (m, b))
    return doc, "\n".join(lines), 0


def _q_to_p_f(q: int):
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            f = 0
            qq = q
            while qq % p == 0:
                qq //= p
                f += 1
            if qq != 1:
                raise InputError("q must be a prime power, got %d" % q)
            return p, f
    raise InputError("q must be a prime power >= 2, got %d" % q)


def cmd_oracle_coset(args):
    p, f = _q_to_p_f(args.q)
    env_n = os.environ.get("PROZETA_PRECISION")
    max_m = args.max_m if args.max_m is not None else args.e * args.v
    N = int(env_n) if env_n else 2 * max_m + 4
    spec = padic_oracle.LocalFieldSpec(p, args.e, f, N)
    count = padic_oracle.count_in_S(spec, args.v)
    formula = padic_oracle.haar_count_formula(args.q, args.e, args.v)
    agree = count == formula
    data = {
        "q": args.q, "e": args.e, "v": args.v, "precision": N,
        "count": str(count), "formula": str(formula), "agree": agree,
    }
    lines = ["coset count for q=%d, e=%d, v=%d: %d" % (args.q, args.e, args.v, count),
             "closed form (1 - q^(ev+1))/(1 - q): %d" % formula,
             "agreement: %s" % ("yes" if agree else "NO")]
    code = 0 if agree else 1
    if args.max_m is not None:
        rep = padic_oracle.transversal_distinctness(spec, args.max_m)
        data["distinctness"] = {"n_reps": rep.n_reps,
                                "collisions": len(rep.collisions)}
        lines.append("distinctness at depth %d: %d representatives, %d collisions"
                     % (args.max_m, rep.n_reps, len(rep.collisions)))
        if not rep.passed:
            code = 1
    return OutputDoc("oracle-coset", data), "\n".join(lines), code


def cmd_lie_check(args):
    f = _certified(parse_poly(args.poly))
    L = liecheck.build_lattice(f, args.ell)
    rep = liecheck.check_lie_axioms(L)
    doc = OutputDoc("lie-check", {
        "poly": poly_to_str(f),
        "ell": args.ell,
        "rank": L.rank,
        "antisymmetry_violations": len(rep.antisymmetry_violations),
        "jacobi_violations": len(rep.jacobi_violations),
        "center_dim": rep.center_dim,
        "center_is_z_span": rep.center_is_z_span,
        "passed": rep.passed,
    })
    lines = ["lattice for %s, ell=%d (rank %d):" % (poly_to_str(f), args.ell, L.rank)]
    lines += ["  " + ln for ln in rep.lines()]
    lines.append("result: %s" % ("pass" if rep.passed else "FAIL"))
    return doc, "\n".join(lines), 0 if rep.passed else 1


def cmd_lie_sigma(args):
    f = _certified(parse_poly(args.poly))
    sigma = liecheck.solve_sigma(f)
    C = liecheck.companion_matrix(f)
    ok = (liecheck.det_bareiss(sigma) in (1, -1)
          and liecheck.mat_eq(liecheck.mat_mul(sigma, C),
                              liecheck.mat_mul(liecheck.mat_transpose(C), sigma)))
    doc = OutputDoc("lie-sigma", {
        "poly": poly_to_str(f),
        "sigma": [[str(c) for c in row] for row in sigma],
        "det": str(liecheck.det_bareiss(sigma)),
        "verified": ok,
    })
    lines = ["sigma for %s:" % poly_to_str(f)]
    for row in sigma:
        lines.append("  [" + "  ".join("%4d" % c for c in row) + "]")
    lines.append("det = %d, intertwines companion transpose: %s"
                 % (liecheck.det_bareiss(sigma), "yes" if ok else "NO"))
    return doc, "\n".join(lines), 0 if ok else 1


def cmd_lie_iso(args):
    f = _certified(parse_poly(args.poly))
    if f.degree != 2:
        raise InputError("the isomorphism check needs a quadratic polynomial")
    ok = liecheck.verify_quadratic_iso(f)
    doc = OutputDoc("lie-iso", {"poly": poly_to_str(f), "passed": ok})
    text = "Heisenberg-over-integers isomorphism for %s: %s" % (
        poly_to_str(f), "verified" if ok else "FAILED")
    return doc, text, 0 if ok else 1


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="prozeta",
        description="Exact local zeta factors of the nilpotent Lie lattices "
                    "attached to irreducible monic polynomials, with "
                    "enumeration oracles and structure verification.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--seed", type=int, default=0,
                    help="seed for the randomized equal-degree splitting")
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decomp", help="decomposition type of a prime")
    d.add_argument("poly")
    d.add_argument("p", type=int)
    d.set_defaults(handler=cmd_decomp)

    z = sub.add_parser("zeta-local", help="local zeta factor at a prime")
    z.add_argument("poly")
    z.add_argument("p", type=int)
    z.set_defaults(handler=cmd_zeta_local)

    fe = sub.add_parser("funceq", help="functional-equation detection")
    fe.add_argument("poly", nargs="?")
    fe.add_argument("p", nargs="?", type=int)
    fe.add_argument("--type", dest="type_spec", nargs="+", default=None,
                    metavar="KEY=VAL",
                    help="n=<n> e=<e1,..> f=<f1,..> instead of poly/prime")
    fe.set_defaults(handler=cmd_funceq)

    co = sub.add_parser("coeffs", help="Dirichlet coefficients, both oracles")
    co.add_argument("poly")
    co.add_argument("p", type=int)
    co.add_argument("--max-k", type=int, default=10, dest="max_k")
    co.set_defaults(handler=cmd_coeffs)

    eu = sub.add_parser("euler", help="multiplicative global coefficients")
    eu.add_argument("poly")
    eu.add_argument("--primes", type=int, required=True,
                    help="use local factors at primes up to this bound")
    eu.add_argument("--index", type=int, required=True,
                    help="tabulate b_m for m up to this bound")
    eu.set_defaults(handler=cmd_euler)

    orc = sub.add_parser("oracle", help="p-adic enumeration oracles")
    orc_sub = orc.add_subparsers(dest="oracle_command", required=True)
    oc = orc_sub.add_parser("coset", help="coset count vs closed form")
    oc.add_argument("--q", type=int, required=True, help="residue field size")
    oc.add_argument("--e", type=int, required=True, help="ramification degree")
    oc.add_argument("--v", type=int, required=True, help="valuation of the scalar")
    oc.add_argument("--max-m", type=int, default=None, dest="max_m",
                    help="also run pairwise distinctness to this depth")
    oc.set_defaults(handler=cmd_oracle_coset)

    lie = sub.add_parser("lie", help="Lie lattice verification")
    lie_sub = lie.add_subparsers(dest="lie_command", required=True)
    lc = lie_sub.add_parser("check", help="Lie axioms and center")
    lc.add_argument("poly")
    lc.add_argument("--ell", type=int, default=1)
    lc.set_defaults(handler=cmd_lie_check)
    ls = lie_sub.add_parser("sigma", help="symmetric unimodular intertwiner")
    ls.add_argument("poly")
    ls.set_defaults(handler=cmd_lie_sigma)
    li = lie_sub.add_parser("iso", help="quadratic Heisenberg isomorphism")
    li.add_argument("poly")
    li.set_defaults(handler=cmd_lie_iso)

    return ap


def _parse_type_spec(args):
    """Split --type tokens 'n=3 e=1,1 f=1,2' into components."""
    args.type_n = None
    args.type_e = None
    args.type_f = None
    if getattr(args, "type_spec", None):
        for token in args.type_spec:
            key, _, val = token.partition("=")
            if not val:
                raise InputError("--type expects n=<n> e=<e1,..> f=<f1,..>")
            if key == "n":
                args.type_n = int(val)
            elif key == "e":
                args.type_e = val
            elif key == "f":
                args.type_f = val
            else:
                raise InputError("unknown --type key %r" % key)
        if args.type_n is None or args.type_e is None or args.type_f is None:
            raise InputError("--type expects n=<n> e=<e1,..> f=<f1,..>")


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    exactalg.DEFAULT_SEED = args.seed
    try:
        _parse_type_spec(args)
        doc, text, code = args.handler(args)
    except ConductorError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except InputError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except padic_oracle.EnumerationBudgetError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except ValueError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    if args.json:
        print(doc.render_json())
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
