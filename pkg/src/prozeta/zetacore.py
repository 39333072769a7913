"""Local zeta factors of the Lie lattices, as exact rational functions.

The general family (degree n >= 3) is built from an alternating sum over
subsets of the places above p; the quadratic family is a product of
shifted copies of a single two-factor function.  Both come with an
independent coefficient oracle: the general family has a geometric v-sum
whose v-th term feeds exactly the coefficient of Y^{(n+2)v}, and the
quadratic family a direct double-geometric expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from prozeta.exactalg import (
    BiPoly,
    BiRatFunc,
    IntPoly,
    is_prime,
    primes_up_to,
    ratfunc_normalize,
    invert_vars,
    series_coeffs,
)
from prozeta.numberfield import (
    ConductorError,
    DecompType,
    certify_irreducible,
    conductor_coprime,
    decomposition_type,
)

GENERAL = "general-n>=3"
QUADRATIC = "quadratic"


@dataclass(frozen=True)
class LocalFactor:
    """A local zeta factor W(X, Y): evaluate at (p, p^-s) to get the
    Dirichlet series of the lattice at p."""

    n: int
    decomp: DecompType
    value: BiRatFunc
    family: str


@dataclass(frozen=True)
class SymmetryResult:
    """Witness of r(1/X, 1/Y) = sign * X^a Y^b * r(X, Y)."""

    sign: int
    a: int
    b: int


# ---------------------------------------------------------------------------
# the alternating-sum combinatorial function
# ---------------------------------------------------------------------------

Assignment = Union[Fraction, int, tuple]


@dataclass(frozen=True)
class PhiSpec:
    """Assignment of a value to each subset of {1..r}: either a monomial
    X^a Y^b given as a pair (a, b), or a rational number.  The value 1 is
    a pole and is rejected."""

    r: int
    assignment: dict

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("r must be >= 0")
        subsets = all_subsets(self.r)
        if set(self.assignment) != set(subsets):
            raise ValueError("assignment must cover exactly the %d subsets"
                             % (1 << self.r))
        for key, val in self.assignment.items():
            if _value_is_one(val):
                raise ZeroDivisionError("pole of Phi: X_I = 1 for I = %s"
                                        % (sorted(key),))

def all_subsets(r: int):
    out = []
    for mask in range(1 << r):
        out.append(frozenset(i + 1 for i in range(r) if mask >> i & 1))
    return out


def _value_is_one(val) -> bool:
    if isinstance(val, tuple):
        return val == (0, 0)
    return Fraction(val) == 1


def _phi_term(val, inverted: bool) -> BiRatFunc:
    """X_I/(1 - X_I), or its value after X_I -> 1/X_I.

    For a monomial M the inverted term is M^-1/(1 - M^-1) = -1/(1 - M),
    which clears the negative exponents symbolically."""
    if isinstance(val, tuple):
        a, b = val
        mono = BiPoly.monomial(a, b)
        one = BiPoly.const(1)
        if inverted:
            return ratfunc_normalize(-one, one - mono)
        return ratfunc_normalize(mono, one - mono)
    v = Fraction(val)
    if inverted:
        v = Fraction(1) / v
    return BiRatFunc.const(v / (1 - v))


def phi_eval(spec: PhiSpec, inverted: bool = False):
    """Exact value of the alternating sum over subsets of X_I/(1 - X_I).

    Returns a Fraction when every assigned value is rational, else a
    BiRatFunc.  With inverted=True every X_I is replaced by its inverse
    (poles re-checked)."""
    if inverted:
        for key, val in spec.assignment.items():
            if not isinstance(val, tuple) and Fraction(val) == 0:
                raise ZeroDivisionError("pole of Phi: X_I^-1 undefined for I = %s"
                                        % (sorted(key),))
    symbolic = any(isinstance(v, tuple) for v in spec.assignment.values())
    if not symbolic:
        total = Fraction(0)
        for key, val in spec.assignment.items():
            v = Fraction(val)
            if inverted:
                v = Fraction(1) / v
            total += (-1) ** len(key) * v / (1 - v)
        return total
    terms = [(-1) ** len(key) * _phi_term(val, inverted)
             for key, val in spec.assignment.items()]
    return _sum_ratfuncs(terms)


def _sum_ratfuncs(terms):
    """Balanced merge; keeps intermediate denominators as small as the
    final reduced form allows."""
    if not terms:
        return BiRatFunc.const(0)
    work = list(terms)
    while len(work) > 1:
        nxt = []
        for i in range(0, len(work) - 1, 2):
            nxt.append(work[i] + work[i + 1])
        if len(work) % 2:
            nxt.append(work[-1])
        work = nxt
    return work[0]


def phi_reciprocity_check(spec: PhiSpec) -> bool:
    """Exact check that inverting every variable negates the sum.

    Holds for every r >= 1; for r = 0 the two sides differ by the constant
    1, and the check reports that honestly by returning False."""
    lhs = phi_eval(spec, inverted=True)
    rhs = phi_eval(spec)
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        return lhs == -rhs
    if isinstance(lhs, Fraction):
        lhs = BiRatFunc.const(lhs)
    if isinstance(rhs, Fraction):
        rhs = BiRatFunc.const(rhs)
    return lhs == -rhs


# ---------------------------------------------------------------------------
# local factors
# ---------------------------------------------------------------------------

def local_factor(n: int, d: DecompType) -> LocalFactor:
    """The local factor for degree n >= 3 and decomposition type d:

        prod_i 1/(1 - X^{f_i}) *
        sum_{I subset [r]} (-1)^{|I|} X^{sum_I f_i} / (1 - X^{4n + sum_I e_i f_i} Y^{n+2})

    assembled over the common denominator and reduced to canonical form.
    """
    if n == 2:
        raise ValueError("use quadratic family")
    if n < 2:
        raise ValueError("degree must be >= 2")
    if d.degree != n:
        raise ValueError("decomposition type has degree %d, expected %d"
                         % (d.degree, n))
    r = d.r
    # group subsets by the Y-factor exponent a_I = 4n + sum_I e_i f_i;
    # the numerator coefficient of the group is sum (-1)^{|I|} X^{sum_I f_i}
    groups = {}
    for mask in range(1 << r):
        s_ef = sum(d.e[i] * d.f[i] for i in range(r) if mask >> i & 1)
        s_f = sum(d.f[i] for i in range(r) if mask >> i & 1)
        a = 4 * n + s_ef
        sign = -1 if bin(mask).count("1") % 2 else 1
        g = groups.setdefault(a, {})
        g[(s_f, 0)] = g.get((s_f, 0), 0) + sign
    exps = sorted(groups)
    den = BiPoly.const(1)
    for fi in d.f:
        den = den * BiPoly.one_minus(fi, 0)
    for a in exps:
        den = den * BiPoly.one_minus(a, n + 2)
    num = BiPoly.const(0)
    for a in exps:
        coeff = BiPoly(groups[a])
        rest = BiPoly.const(1)
        for a2 in exps:
            if a2 != a:
                rest = rest * BiPoly.one_minus(a2, n + 2)
        num = num + coeff * rest
    value = ratfunc_normalize(num, den)
    _check_first_coefficient(value)
    return LocalFactor(n, d, value, GENERAL)


_QUADRATIC_TYPES = {
    DecompType((1,), (2,)),
    DecompType((1, 1), (1, 1)),
    DecompType((2,), (1,)),
}


def local_factor_quadratic(d: DecompType) -> LocalFactor:
    """Quadratic local factor: product over places of
    1/((1 - X^{4f_i} Y^{2f_i})(1 - X^{5f_i} Y^{2f_i}))."""
    if d not in _QUADRATIC_TYPES:
        raise ValueError("invalid quadratic decomposition type %s" % (d,))
    den = BiPoly.const(1)
    for fi in d.f:
        den = den * BiPoly.one_minus(4 * fi, 2 * fi)
        den = den * BiPoly.one_minus(5 * fi, 2 * fi)
    value = ratfunc_normalize(BiPoly.const(1), den)
    _check_first_coefficient(value)
    return LocalFactor(2, d, value, QUADRATIC)


def _check_first_coefficient(value: BiRatFunc):
    # value at Y = 0 must be identically 1: equal Y-degree-0 slices
    num_y0 = {a: c for (a, b), c in value.num.terms.items() if b == 0}
    den_y0 = {a: c for (a, b), c in value.den.terms.items() if b == 0}
    if num_y0 != den_y0:
        raise ArithmeticError("local factor does not start with 1 (bug)")


def local_factor_for(f: IntPoly, p: int) -> LocalFactor:
    """Local factor of the lattice attached to an irreducible monic f at a
    conductor-coprime prime p."""
    d = decomposition_type(f, p)
    if f.degree == 2:
        return local_factor_quadratic(d)
    return local_factor(f.degree, d)


# ---------------------------------------------------------------------------
# functional-equation detection
# ---------------------------------------------------------------------------

def _monomial_quotient(p: BiPoly, q: BiPoly):
    """If p == c * X^da Y^db * q for a scalar c (da, db possibly negative),
    return (c, da, db), else None."""
    if p.is_zero() or q.is_zero() or len(p.terms) != len(q.terms):
        return None
    (pa, pb), pc = p.leading()
    (qa, qb), qc = q.leading()
    da, db = pa - qa, pb - qb
    c = Fraction(pc) / Fraction(qc)
    for (a, b), coeff in q.terms.items():
        if p.terms.get((a + da, b + db)) != c * coeff:
            return None
    return c, da, db


def symmetry_check(r: BiRatFunc) -> Optional[SymmetryResult]:
    """Detect r(1/X, 1/Y) = sign * X^a Y^b * r(X, Y); None when the
    quotient is not a signed monomial."""
    if r.is_zero():
        raise ValueError("symmetry of the zero function is undefined")
    inv = invert_vars(r)
    qn = _monomial_quotient(inv.num, r.num)
    qd = _monomial_quotient(inv.den, r.den)
    if qn is not None and qd is not None:
        cn, na, nb = qn
        cd, da, db = qd
        c = cn / cd
        if c in (1, -1):
            return SymmetryResult(int(c), na - da, nb - db)
        return None
    # canonical forms admit no aligned-shift witness; fall back to the
    # full quotient to rule a monomial in or out
    quot = inv / r
    if quot.num.is_monomial() and quot.den.is_monomial():
        (na, nb), cn = quot.num.leading()
        (da, db), cd = quot.den.leading()
        c = Fraction(cn) / Fraction(cd)
        if c in (1, -1):
            return SymmetryResult(int(c), na - da, nb - db)
    return None


# ---------------------------------------------------------------------------
# Dirichlet coefficients, two ways
# ---------------------------------------------------------------------------

def dirichlet_coeffs(n: int, d: DecompType, p: int, K: int):
    """Coefficients of p^{-ks}, k = 0..K, of the local factor at p,
    extracted from the rational function.  Each must be a nonnegative
    integer (they count subalgebras); anything else raises."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    if n < 2:
        raise ValueError("degree must be >= 2")
    lf = local_factor_quadratic(d) if n == 2 else local_factor(n, d)
    coeffs = series_coeffs(lf.value, p, K)
    out = []
    for k, c in enumerate(coeffs):
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(
                "integrality violated: coefficient of Y^%d is %s" % (k, c))
        out.append(int(c))
    return out


def vsum_coeffs(n: int, d: DecompType, p: int, K: int):
    """Independent oracle for dirichlet_coeffs (degree >= 3): the v-th term
    of the geometric sum contributes

        p^{4nv} * prod_i (1 + p^{f_i} + ... + p^{f_i e_i v})

    to the coefficient of Y^{(n+2)v}, and nothing anywhere else."""
    if n < 3:
        raise ValueError("the geometric v-sum applies to degree >= 3 only")
    if d.degree != n:
        raise ValueError("decomposition type has degree %d, expected %d"
                         % (d.degree, n))
    if not is_prime(p):
        raise ValueError("p must be prime")
    out = [0] * (K + 1)
    V = K // (n + 2) + 1
    for v in range(V + 1):
        k = (n + 2) * v
        if k > K:
            break
        term = p ** (4 * n * v)
        for ei, fi in zip(d.e, d.f):
            term *= sum(p ** (fi * j) for j in range(ei * v + 1))
        out[k] = term
    return out


def quadratic_expand_coeffs(d: DecompType, p: int, K: int):
    """Independent oracle for the quadratic family: brute-force expansion
    of each place's double geometric series, then convolution."""
    if d not in _QUADRATIC_TYPES:
        raise ValueError("invalid quadratic decomposition type %s" % (d,))
    coeffs = [1] + [0] * K
    for fi in d.f:
        place = [0] * (K + 1)
        u = 0
        while 2 * fi * u <= K:
            v = 0
            while 2 * fi * (u + v) <= K:
                place[2 * fi * (u + v)] += p ** (fi * (4 * u + 5 * v))
                v += 1
            u += 1
        coeffs = [sum(coeffs[j] * place[k - j] for j in range(k + 1))
                  for k in range(K + 1)]
    return coeffs


def euler_partial(f: IntPoly, prime_bound: int, index_bound: int):
    """Global Dirichlet coefficients b_m for every m <= index_bound whose
    prime support lies below prime_bound, assembled multiplicatively from
    the local coefficient lists.

    Any prime <= prime_bound dividing the conductor aborts the run: a
    silently skipped prime would corrupt every coefficient it divides.
    """
    certify_irreducible(f)
    n = f.degree
    local = {}
    for p in primes_up_to(prime_bound):
        if not conductor_coprime(f, p):
            raise ConductorError(
                "prime %d divides the conductor; shrink the prime bound" % p)
        kmax = 0
        while p ** (kmax + 1) <= index_bound:
            kmax += 1
        d = decomposition_type(f, p, check_conductor=False)
        if n == 2:
            local[p] = dirichlet_coeffs(2, d, p, kmax)
        else:
            local[p] = dirichlet_coeffs(n, d, p, kmax)
    out = {}
    for m in range(1, index_bound + 1):
        rest = m
        b = 1
        for p, coeffs in local.items():
            if rest % p == 0:
                k = 0
                while rest % p == 0:
                    rest //= p
                    k += 1
                b *= coeffs[k]
        if rest == 1:
            out[m] = b
    return out


# ---------------------------------------------------------------------------
# helpers shared with tests and the CLI
# ---------------------------------------------------------------------------

def all_decomposition_types(n: int):
    """Every decomposition type of degree n: multisets of (e, f) pairs with
    sum e_i f_i = n, enumerated as nondecreasing pair sequences."""
    out = []

    def rec(remaining, min_pair, acc):
        if remaining == 0:
            es = tuple(e for e, _ in acc)
            fs = tuple(f for _, f in acc)
            out.append(DecompType(es, fs))
            return
        for e in range(1, remaining + 1):
            for fi in range(1, remaining // e + 1):
                pair = (e, fi)
                if pair >= min_pair:
                    rec(remaining - e * fi, pair, acc + [pair])

    rec(n, (1, 1), [])
    return out


def partitions(n: int):
    """All partitions of n as nonincreasing tuples."""
    out = []

    def rec(remaining, maximum, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, maximum), 0, -1):
            rec(remaining - part, part, acc + [part])

    rec(n, n, [])
    return out
