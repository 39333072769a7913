"""Number-field side of the computation: irreducibility certification for
the defining polynomial, the conductor-coprimality test that gates every
formula, and the decomposition type of a rational prime.

Only data derivable from f mod p is ever used: ramification indices and
residue degrees come from the factorization of f over F_p, which is valid
precisely when p does not divide the index [O_K : Z[beta]].  That index
condition is decided by Dedekind's criterion; no integral basis is
computed anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from prozeta.exactalg import (
    IntPoly,
    ModPoly,
    discriminant,
    factor_mod_p,
    gcd_intpoly,
    is_prime,
    poly_to_str,
)


class ReducibleError(ValueError):
    """Raised when a polynomial required to be irreducible is not.

    Carries a nontrivial factor as evidence."""

    def __init__(self, poly: IntPoly, factor: IntPoly):
        self.poly = poly
        self.factor = factor
        super().__init__("reducible: %s has factor %s"
                         % (poly_to_str(poly), poly_to_str(factor)))


class CertificationError(ValueError):
    """Raised when irreducibility can be neither established nor refuted."""


class ConductorError(ValueError):
    """Raised for primes dividing the conductor: no formula applies there."""


# ---------------------------------------------------------------------------
# decomposition types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecompType:
    """Ramification indices e and residue degrees f of the primes above p,
    in canonical order (sorted by (f_i, e_i))."""

    e: tuple
    f: tuple

    def __post_init__(self):
        if len(self.e) != len(self.f) or not self.e:
            raise ValueError("e and f must be nonempty vectors of equal length")
        if any(x < 1 for x in self.e) or any(x < 1 for x in self.f):
            raise ValueError("ramification indices and residue degrees are >= 1")
        pairs = sorted(zip(self.f, self.e))
        object.__setattr__(self, "f", tuple(fi for fi, _ in pairs))
        object.__setattr__(self, "e", tuple(ei for _, ei in pairs))

    @property
    def r(self) -> int:
        return len(self.e)

    @property
    def degree(self) -> int:
        return sum(ei * fi for ei, fi in zip(self.e, self.f))

    def is_unramified(self) -> bool:
        return all(ei == 1 for ei in self.e)

    def __str__(self):
        return "e=%s f=%s" % (tuple(self.e), tuple(self.f))


# ---------------------------------------------------------------------------
# irreducibility certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IrreducibilityCertificate:
    """Re-checkable witness of irreducibility over Q.

    method is one of 'mod-p-irreducible', 'degree-pattern-sieve',
    'divisor-search'; witness_primes lists the primes the conclusion rests
    on, and lift_exponent records the Hensel precision for divisor-search.
    """

    method: str
    witness_primes: tuple
    lift_exponent: int = 0

    def recheck(self, f: IntPoly) -> bool:
        """Re-establish the conclusion from the stored witnesses alone."""
        if self.method == "mod-p-irreducible":
            (p,) = self.witness_primes
            factors = factor_mod_p(f, p)
            return len(factors) == 1 and factors[0][1] == 1
        if self.method == "degree-pattern-sieve":
            n = f.degree
            possible = set(range(n + 1))
            for p in self.witness_primes:
                pattern = [g.degree for g, mult in factor_mod_p(f, p)
                           for _ in range(mult)]
                possible &= _subset_sums(pattern)
            return not (possible - {0, n})
        if self.method == "divisor-search":
            (p,) = self.witness_primes
            return _divisor_search(f, p, self.lift_exponent) is None
        raise ValueError("unknown certification method %r" % (self.method,))


def _subset_sums(pattern):
    sums = {0}
    for d in pattern:
        sums |= {s + d for s in sums}
    return sums


def _hensel_step(f: IntPoly, g: IntPoly, h: IntPoly, s: ModPoly, t: ModPoly,
                 p: int, m: int):
    """One linear Hensel step: from f = g*h mod m to mod m*p.

    Requires s*g + t*h = 1 mod p with g, h monic.  Returns updated (g, h).
    """
    diff = f - g * h
    e = ModPoly([c // m for c in diff.coeffs], p)
    gbar = ModPoly.from_intpoly(g, p)
    hbar = ModPoly.from_intpoly(h, p)
    u = (t * e) % gbar
    v = (e - u * hbar) // gbar
    g2 = g + m * u.to_intpoly()
    h2 = h + m * v.to_intpoly()
    return g2, h2


def _hensel_lift_factors(f: IntPoly, p: int, modular, k: int):
    """Lift the monic irreducible factors of f mod p (f squarefree mod p)
    to monic integer polynomials whose product is f mod p^k."""

    def lift_pair(target: IntPoly, facs):
        if len(facs) == 1:
            reduced = [c % p ** k for c in target.coeffs]
            return [IntPoly(reduced)]
        half = len(facs) // 2
        left, right = facs[:half], facs[half:]
        gbar = ModPoly([1], p)
        for fac in left:
            gbar = gbar * fac
        hbar = ModPoly([1], p)
        for fac in right:
            hbar = hbar * fac
        one, s, t = gbar.xgcd(hbar)
        if not one.is_one():
            raise ArithmeticError("non-coprime Hensel split (bug)")
        g = gbar.to_intpoly()
        h = hbar.to_intpoly()
        m = p
        while m < p ** k:
            g, h = _hensel_step(target, g, h, s, t, p, m)
            m *= p
            g = IntPoly([c % m for c in g.coeffs])
            h = IntPoly([c % m for c in h.coeffs])
        return lift_pair(g, left) + lift_pair(h, right)

    return lift_pair(f, modular)


def _coefficient_bound(f: IntPoly) -> int:
    """Bound on the absolute coefficients of any monic divisor of f."""
    norm = sum(c * c for c in f.coeffs)
    root = isqrt(norm) + 1
    return 2 ** f.degree * root * (f.degree + 1)


def _divisor_search(f: IntPoly, p: int, k: int):
    """Zassenhaus-style search for a monic factor of degree <= deg(f)/2.

    Returns a factor (IntPoly) or None if f has no such factor, which for
    monic f means irreducibility.
    """
    n = f.degree
    modular = [g for g, _ in factor_mod_p(f, p)]
    pk = p ** k
    lifted = _hensel_lift_factors(f, p, modular, k)
    half = pk // 2
    r = len(lifted)
    for mask in range(1, 2 ** r - 1):
        deg = sum(lifted[i].degree for i in range(r) if mask >> i & 1)
        if deg == 0 or deg > n // 2:
            continue
        cand = IntPoly([1])
        for i in range(r):
            if mask >> i & 1:
                cand = cand * lifted[i]
                cand = IntPoly([c % pk for c in cand.coeffs])
        cand = IntPoly([c - pk if c > half else c for c in cand.coeffs])
        if cand.degree == deg and cand.divides(f):
            return cand
    return None


CERTIFY_PRIME_SCAN = 25


def certify_irreducible(f: IntPoly) -> IrreducibilityCertificate:
    """Certify that a monic integer polynomial of degree >= 2 is
    irreducible over Q.

    Three tiers, from cheap to exhaustive: (a) f irreducible mod some
    good prime, (b) the factor-degree patterns across the scanned primes
    rule out every proper divisor degree, (c) a Hensel-lifted divisor
    search that either produces a factor or excludes them all.  Raises
    ReducibleError (with a factor) or CertificationError; never accepts
    silently.
    """
    n = f.degree
    if n < 2:
        raise ValueError("certification requires degree >= 2")
    if not f.is_monic():
        raise ValueError("certification requires a monic polynomial")
    disc = discriminant(f)
    if disc == 0:
        fac = gcd_intpoly(f, f.derivative())
        raise ReducibleError(f, fac.primitive())

    good_primes = []
    patterns = {}
    p = 2
    while len(good_primes) < CERTIFY_PRIME_SCAN:
        if is_prime(p) and disc % p != 0:
            good_primes.append(p)
            factors = factor_mod_p(f, p)
            if len(factors) == 1 and factors[0][1] == 1:
                return IrreducibilityCertificate("mod-p-irreducible", (p,))
            patterns[p] = [g.degree for g, mult in factors for _ in range(mult)]
        p += 1

    possible = set(range(n + 1))
    sieve_witnesses = []
    for q in good_primes:
        before = possible
        possible = possible & _subset_sums(patterns[q])
        if possible != before:
            sieve_witnesses.append(q)
        if not (possible - {0, n}):
            return IrreducibilityCertificate("degree-pattern-sieve",
                                             tuple(sieve_witnesses))

    # tier (c): pick the scanned prime with the fewest modular factors
    best = min(good_primes, key=lambda q: len(patterns[q]))
    bound = _coefficient_bound(f)
    k = 1
    while best ** k <= 2 * bound:
        k += 1
    factor = _divisor_search(f, best, k)
    if factor is not None:
        raise ReducibleError(f, factor)
    if n // 2 < 1:
        raise CertificationError("certification failed")
    return IrreducibilityCertificate("divisor-search", (best,), k)


# ---------------------------------------------------------------------------
# conductor coprimality (Dedekind's criterion) and decomposition type
# ---------------------------------------------------------------------------

def conductor_coprime(f: IntPoly, p: int) -> bool:
    """True iff p does not divide the index [O_K : Z[beta]].

    Fast path: p not dividing disc(f).  Otherwise Dedekind's criterion:
    with f = prod g_i^{e_i} mod p, g = prod g_i, and h a monic lift of
    f/g mod p, the prime is coprime to the conductor iff
    gcd((f - g*h)/p, g, h) = 1 in F_p[x].
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    if discriminant(f) % p != 0:
        return True
    factors = factor_mod_p(f, p)
    gbar = ModPoly([1], p)
    for g_i, _ in factors:
        gbar = gbar * g_i
    fbar = ModPoly.from_intpoly(f, p)
    hbar = fbar // gbar
    g = gbar.to_intpoly()
    h = hbar.to_intpoly()
    diff = f - g * h
    M = IntPoly([c // p for c in diff.coeffs])
    Mbar = ModPoly.from_intpoly(M, p)
    return gbar.gcd(hbar).gcd(Mbar).is_one()


def decomposition_type(f: IntPoly, p: int, check_conductor: bool = True) -> DecompType:
    """Decomposition type (e, f) of p in the field defined by f.

    Requires p coprime to the conductor; otherwise the factorization of
    f mod p does not reflect the splitting of p and we refuse.
    """
    if check_conductor and not conductor_coprime(f, p):
        raise ConductorError(
            "prime %d divides the conductor of %s; the local factor "
            "formula does not apply" % (p, poly_to_str(f)))
    factors = factor_mod_p(f, p)
    es = tuple(mult for _, mult in factors)
    fs = tuple(g.degree for g, _ in factors)
    d = DecompType(es, fs)
    if d.degree != f.degree:
        raise ArithmeticError("decomposition degree mismatch (bug)")
    return d
