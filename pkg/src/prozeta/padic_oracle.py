"""Enumeration oracle over truncated p-adic fields: materialize the coset
transversal of SL_2 over the ring of integers inside SL_2 of the field,
decide coset equality with valuation-tracked arithmetic, and count the
transversal members that a given integrality condition keeps.

The modeled field is the degree-f unramified extension of Q_p extended by
a root of x^e - p; elements live in O_F / p^M, i.e. are known to M*e
pi-adic digits.  Digits use polynomial representatives of the residue
field rather than the multiplicative lifts: every quantity verified here
(coset distinctness, integrality counts) only sees valuations, which are
lift-independent.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache

from prozeta.exactalg import ModPoly, is_prime


class PrecisionError(ArithmeticError):
    """The working precision cannot decide the requested valuation sign."""


class EnumerationBudgetError(ValueError):
    """The requested transversal is larger than the enumeration budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__("enumeration needs %d representatives, budget is %d"
                         % (required, budget))


DEFAULT_ENUM_BUDGET = 200000


def enum_budget() -> int:
    return int(os.environ.get("PROZETA_ENUM_BUDGET", DEFAULT_ENUM_BUDGET))


@dataclass(frozen=True)
class LocalFieldSpec:
    """A finite extension of Q_p with ramification degree e and residue
    degree f, truncated to pi-adic precision N."""

    p: int
    e: int
    f: int
    N: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError("p must be prime")
        if self.e < 1 or self.f < 1:
            raise ValueError("e and f must be >= 1")
        if self.N < 1:
            raise ValueError("precision N must be >= 1")

    @property
    def q(self) -> int:
        return self.p ** self.f


def default_spec(p: int, e: int, f: int, max_m: int) -> LocalFieldSpec:
    """Working precision suited to comparing representatives of depth <= max_m."""
    return LocalFieldSpec(p, e, f, 2 * max_m + 4)


# ---------------------------------------------------------------------------
# the truncated ring O_F / p^M
# ---------------------------------------------------------------------------

def _find_irreducible(p: int, f: int):
    """Deterministic monic irreducible of degree f over F_p, smallest in
    lexicographic coefficient order."""
    if f == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=f):
        h = ModPoly(list(tail) + [1], p)
        if h.degree == f and _mod_irreducible(h):
            return tuple(h.coeffs)
    raise ArithmeticError("no irreducible polynomial found (impossible)")


def _mod_irreducible(h: ModPoly) -> bool:
    from prozeta.exactalg import is_irreducible_mod_p
    return is_irreducible_mod_p(h)


@lru_cache(maxsize=None)
def _context(spec: LocalFieldSpec) -> "_RingContext":
    return _RingContext(spec)


class _RingContext:
    """Arithmetic in (Z/p^M)[u]/(h(u))[t]/(t^e - p), which is O_F / p^M.

    Elements are e-tuples of f-tuples of ints in [0, p^M); index i, j is
    the coefficient of u^j t^i.  M is chosen so that e*M >= N, giving at
    least N exact pi-adic digits.
    """

    def __init__(self, spec: LocalFieldSpec):
        self.spec = spec
        self.p = spec.p
        self.e = spec.e
        self.f = spec.f
        self.M = -(-spec.N // spec.e)
        self.pM = spec.p ** self.M
        self.h = _find_irreducible(spec.p, spec.f)
        self.zero_u = (0,) * spec.f
        self.zero = tuple(self.zero_u for _ in range(spec.e))
        one_u = (1,) + (0,) * (spec.f - 1)
        self.one = (one_u,) + (self.zero_u,) * (spec.e - 1)

    # -- residue-coefficient (u-polynomial) arithmetic ----------------------

    def umul(self, a, b):
        f, pM = self.f, self.pM
        prod = [0] * (2 * f - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    prod[i + j] = (prod[i + j] + ca * cb) % pM
        # reduce by the monic h: u^f = -(h_0 + ... + h_{f-1} u^{f-1})
        for k in range(2 * f - 2, f - 1, -1):
            top = prod[k]
            if top:
                prod[k] = 0
                for j in range(f):
                    prod[k - f + j] = (prod[k - f + j] - top * self.h[j]) % pM
        return tuple(prod[:f])

    def uadd(self, a, b):
        pM = self.pM
        return tuple((x + y) % pM for x, y in zip(a, b))

    def uscale(self, a, c):
        pM = self.pM
        return tuple(x * c % pM for x in a)

    # -- ring arithmetic -----------------------------------------------------

    def radd(self, x, y):
        return tuple(self.uadd(a, b) for a, b in zip(x, y))

    def rneg(self, x):
        pM = self.pM
        return tuple(tuple(-c % pM for c in a) for a in x)

    def rmul(self, x, y):
        e = self.e
        acc = [list(self.zero_u) for _ in range(e)]
        for i, a in enumerate(x):
            if any(a):
                for j, b in enumerate(y):
                    if any(b):
                        term = self.umul(a, b)
                        k = i + j
                        if k >= e:
                            k -= e
                            term = self.uscale(term, self.p)
                        row = acc[k]
                        for idx, c in enumerate(term):
                            row[idx] = (row[idx] + c) % self.pM
        return tuple(tuple(row) for row in acc)

    def rmul_t_power(self, x, k: int):
        """Multiply by pi^k = t^k (k >= 0)."""
        scale, shift = divmod(k, self.e)
        if scale:
            x = tuple(self.uscale(a, self.p ** scale) for a in x)
        if shift:
            e = self.e
            out = [None] * e
            for i in range(e):
                src = (i - shift) % e
                a = x[src]
                if i < shift:
                    a = self.uscale(a, self.p)
                out[i] = a
            x = tuple(out)
        return x

    def rfrom_int(self, c: int):
        cu = (c % self.pM,) + (0,) * (self.f - 1)
        return (cu,) + (self.zero_u,) * (self.e - 1)

    def valuation(self, x):
        """pi-adic valuation of a ring element, or None when x = 0 mod p^M
        (meaning only v >= e*M is known)."""
        best = None
        for i, a in enumerate(x):
            vd = None
            for c in a:
                if c:
                    v = 0
                    while c % self.p == 0:
                        c //= self.p
                        v += 1
                    vd = v if vd is None else min(vd, v)
            if vd is not None:
                cand = self.e * vd + i
                best = cand if best is None else min(best, cand)
        return best

    def divisible_by_pi_power(self, x, k: int) -> bool:
        """Exact test x in (pi^k); requires k <= e*M."""
        if k > self.e * self.M:
            raise PrecisionError("precision insufficient; raise N")
        for i, a in enumerate(x):
            need = -(-(k - i) // self.e)      # ceil((k - i) / e)
            if need > 0:
                pw = self.p ** need
                if any(c % pw for c in a):
                    return False
        return True


# ---------------------------------------------------------------------------
# valuation-tracked field elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocalElt:
    """Field element numer / pi^down with numer in O_F / p^M.

    The absolute precision is e*M - down pi-adic digits; integrality tests
    are exact as long as down <= e*M.
    """

    spec: LocalFieldSpec
    down: int
    numer: tuple

    @staticmethod
    def from_int(spec: LocalFieldSpec, c: int) -> "LocalElt":
        ctx = _context(spec)
        return LocalElt(spec, 0, ctx.rfrom_int(c))

    @staticmethod
    def pi_power(spec: LocalFieldSpec, k: int) -> "LocalElt":
        ctx = _context(spec)
        if k >= 0:
            return LocalElt(spec, 0, ctx.rmul_t_power(ctx.one, k))
        return LocalElt(spec, -k, ctx.one)

    @staticmethod
    def from_digits(spec: LocalFieldSpec, digits) -> "LocalElt":
        """sum_i [lambda_i] pi^i for digits lambda_i in the residue field
        (each an f-tuple of ints mod p)."""
        ctx = _context(spec)
        acc = ctx.zero
        for i, d in enumerate(digits):
            if any(d):
                lift = (tuple(c % ctx.pM for c in d),) + (ctx.zero_u,) * (ctx.e - 1)
                acc = ctx.radd(acc, ctx.rmul_t_power(lift, i))
        return LocalElt(spec, 0, acc)

    def __add__(self, other):
        ctx = _context(self.spec)
        d = max(self.down, other.down)
        a = ctx.rmul_t_power(self.numer, d - self.down)
        b = ctx.rmul_t_power(other.numer, d - other.down)
        return LocalElt(self.spec, d, ctx.radd(a, b))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        ctx = _context(self.spec)
        return LocalElt(self.spec, self.down, ctx.rneg(self.numer))

    def __mul__(self, other):
        ctx = _context(self.spec)
        return LocalElt(self.spec, self.down + other.down,
                        ctx.rmul(self.numer, other.numer))

    def is_integral(self) -> bool:
        """v >= 0, decided exactly (raises PrecisionError when the stored
        digits cannot decide)."""
        if self.down == 0:
            return True
        ctx = _context(self.spec)
        return ctx.divisible_by_pi_power(self.numer, self.down)

    def valuation(self):
        """Exact pi-adic valuation; PrecisionError when the element is
        indistinguishable from zero at this precision."""
        ctx = _context(self.spec)
        v = ctx.valuation(self.numer)
        if v is None:
            raise PrecisionError("precision insufficient; raise N")
        return v - self.down

    def is_zero_at_precision(self) -> bool:
        ctx = _context(self.spec)
        return ctx.valuation(self.numer) is None

    def equals(self, other) -> bool:
        """Equality at working precision."""
        return (self - other).is_zero_at_precision()


def _mat_mul2(A, B):
    return [[A[0][0] * B[0][0] + A[0][1] * B[1][0],
             A[0][0] * B[0][1] + A[0][1] * B[1][1]],
            [A[1][0] * B[0][0] + A[1][1] * B[1][0],
             A[1][0] * B[0][1] + A[1][1] * B[1][1]]]


def _mat_inv_det1(B):
    return [[B[1][1], -B[0][1]], [-B[1][0], B[0][0]]]


# ---------------------------------------------------------------------------
# coset representatives
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CosetRep:
    """Transversal member: kind A is [[pi^m, 0], [pi^-m k, pi^-m]] with
    k from I_{2m}; kind B is [[0, -pi^m], [pi^-m, -pi^{-m+1} k]] with
    k from I_{2m-1}."""

    kind: str
    m: int
    digits: tuple

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError("kind must be 'A' or 'B'")
        if self.kind == "A" and self.m < 0:
            raise ValueError("kind A needs m >= 0")
        if self.kind == "B" and self.m < 1:
            raise ValueError("kind B needs m >= 1")

    def matrix(self, spec: LocalFieldSpec):
        kappa = LocalElt.from_digits(spec, self.digits)
        if self.kind == "A":
            return [[LocalElt.pi_power(spec, self.m), LocalElt.from_int(spec, 0)],
                    [kappa * LocalElt.pi_power(spec, -self.m),
                     LocalElt.pi_power(spec, -self.m)]]
        return [[LocalElt.from_int(spec, 0), -LocalElt.pi_power(spec, self.m)],
                [LocalElt.pi_power(spec, -self.m),
                 -(kappa * LocalElt.pi_power(spec, -(self.m - 1)))]]

    def det(self, spec: LocalFieldSpec) -> LocalElt:
        M = self.matrix(spec)
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]


def _digit_space(spec: LocalFieldSpec):
    return list(itertools.product(range(spec.p), repeat=spec.f))


def transversal_size(q: int, max_m: int) -> int:
    return (sum(q ** (2 * m) for m in range(max_m + 1))
            + sum(q ** (2 * m - 1) for m in range(1, max_m + 1)))


def enum_reps(spec: LocalFieldSpec, max_m: int, budget: int = None):
    """All transversal members of depth <= max_m: kind A with kappa over
    I_{2m} for m <= max_m, kind B with kappa over I_{2m-1} for
    1 <= m <= max_m."""
    if max_m < 0:
        raise ValueError("max_m must be >= 0")
    if budget is None:
        budget = enum_budget()
    required = transversal_size(spec.q, max_m)
    if required > budget:
        raise EnumerationBudgetError(required, budget)
    space = _digit_space(spec)
    out = []
    for m in range(max_m + 1):
        for digits in itertools.product(space, repeat=2 * m):
            out.append(CosetRep("A", m, tuple(digits)))
    for m in range(1, max_m + 1):
        for digits in itertools.product(space, repeat=2 * m - 1):
            out.append(CosetRep("B", m, tuple(digits)))
    return out


def same_coset(spec: LocalFieldSpec, r1: CosetRep, r2: CosetRep) -> bool:
    """True iff r1 and r2 represent the same right coset, i.e. r1 * r2^-1
    is integral.  Needs N >= 2 max(m1, m2) + 2."""
    need = 2 * max(r1.m, r2.m) + 2
    if spec.N < need:
        raise PrecisionError("precision insufficient; raise N to %d" % need)
    P = _mat_mul2(r1.matrix(spec), _mat_inv_det1(r2.matrix(spec)))
    return all(P[i][j].is_integral() for i in range(2) for j in range(2))


@dataclass
class DistinctnessReport:
    n_reps: int
    collisions: list

    @property
    def passed(self) -> bool:
        return not self.collisions


def transversal_distinctness(spec: LocalFieldSpec, max_m: int,
                             budget: int = None) -> DistinctnessReport:
    """Exhaustive pairwise check that the listed representatives lie in
    pairwise distinct cosets."""
    reps = enum_reps(spec, max_m, budget)
    collisions = []
    mats = [r.matrix(spec) for r in reps]
    invs = [_mat_inv_det1(m) for m in mats]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            P = _mat_mul2(mats[i], invs[j])
            if all(P[a][b].is_integral() for a in range(2) for b in range(2)):
                collisions.append((reps[i], reps[j]))
    return DistinctnessReport(len(reps), collisions)


# ---------------------------------------------------------------------------
# the integrality count behind the measure computation
# ---------------------------------------------------------------------------

def _membership(spec: LocalFieldSpec, rep: CosetRep, a: LocalElt) -> bool:
    """Is [[a m11, m12], [a m21, m22]] integral for the rep's matrix?"""
    M = rep.matrix(spec)
    return ((a * M[0][0]).is_integral() and M[0][1].is_integral()
            and (a * M[1][0]).is_integral() and M[1][1].is_integral())


def count_in_S(spec: LocalFieldSpec, v: int, method: str = "auto") -> int:
    """Number of transversal members (depth up to e*v) whose scaled matrix
    is integral, for a scalar of valuation v.

    method 'enumerate' materializes every representative; 'grouped' walks
    one representative per leading-digit valuation class and multiplies by
    the class size, which is exact because the only kappa-dependent entry
    of the membership matrix sees kappa through its valuation alone.
    """
    if v < 0:
        raise ValueError("v must be >= 0")
    max_m = spec.e * v
    need = 2 * max_m + 2
    spec_w = spec if spec.N >= need else LocalFieldSpec(spec.p, spec.e,
                                                        spec.f, need + 2)
    a = LocalElt.from_int(spec_w, spec_w.p ** v)
    if method == "auto":
        method = ("enumerate"
                  if transversal_size(spec.q, max_m) <= min(20000, enum_budget())
                  else "grouped")
    if method == "enumerate":
        reps = enum_reps(spec_w, max_m)
        return sum(1 for rep in reps if _membership(spec_w, rep, a))
    if method != "grouped":
        raise ValueError("method must be 'auto', 'enumerate' or 'grouped'")
    q = spec.q
    one_digit = (1,) + (0,) * (spec.f - 1)
    zero_digit = (0,) * spec.f
    total = 0
    for kind, m_lo, length_of in (("A", 0, lambda m: 2 * m),
                                  ("B", 1, lambda m: 2 * m - 1)):
        for m in range(m_lo, max_m + 1):
            length = length_of(m)
            # class: all digits zero
            rep = CosetRep(kind, m, (zero_digit,) * length)
            if _membership(spec_w, rep, a):
                total += 1
            # classes by position of the first nonzero digit
            for j in range(length):
                digits = ((zero_digit,) * j + (one_digit,)
                          + (zero_digit,) * (length - j - 1))
                rep = CosetRep(kind, m, digits)
                if _membership(spec_w, rep, a):
                    total += (q - 1) * q ** (length - j - 1)
    return total


def haar_count_formula(q: int, e: int, v: int) -> int:
    """(1 - q^(e v + 1)) / (1 - q), the predicted measure."""
    return (q ** (e * v + 1) - 1) // (q - 1)
