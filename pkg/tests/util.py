"""Shared independent oracles for the test suite.

These deliberately avoid the library's own code paths: the resultant
oracle is a Sylvester determinant, the factorization oracle is exhaustive
search over monic polynomials, so agreement is meaningful.
"""

from fractions import Fraction

from prozeta.exactalg import IntPoly, ModPoly


def sylvester_resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant via the Sylvester matrix and fraction-free elimination."""
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        return 0
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - i - len(fc)))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - i - len(gc)))
    return _det_bareiss(rows)


def _det_bareiss(M) -> int:
    n = len(M)
    if n == 0:
        return 1
    a = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def sylvester_discriminant(f: IntPoly) -> int:
    n = f.degree
    res = sylvester_resultant(f, f.derivative())
    val = Fraction((-1) ** (n * (n - 1) // 2) * res, f.lc)
    assert val.denominator == 1
    return int(val)


def all_monic_modpolys(p: int, degree: int):
    """Every monic polynomial of exactly the given degree over F_p."""
    out = []

    def rec(coeffs):
        if len(coeffs) == degree:
            out.append(ModPoly(coeffs + [1], p))
            return
        for c in range(p):
            rec(coeffs + [c])

    rec([])
    return out


def brute_force_factor(f: IntPoly, p: int):
    """Factor f mod p by exhaustive trial division over monic polynomials
    of increasing degree.  Returns sorted [(ModPoly, multiplicity)]."""
    work = ModPoly.from_intpoly(f, p).monic()
    factors = {}
    d = 1
    while work.degree > 0:
        if d > work.degree:
            break
        found = False
        for cand in all_monic_modpolys(p, d):
            q, r = work.divmod(cand)
            if r.is_zero():
                factors[cand] = factors.get(cand, 0) + 1
                work = q
                found = True
                break
        if not found:
            d += 1
    if work.degree > 0:
        factors[work.monic()] = factors.get(work.monic(), 0) + 1
    return sorted(factors.items(), key=lambda t: (t[0].degree, t[0].coeffs))


def random_monic(rng, degree: int, bound: int = 9) -> IntPoly:
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)] + [1]
    return IntPoly(coeffs)


def random_irreducible(rng, degree: int, bound: int = 9) -> IntPoly:
    from prozeta.numberfield import certify_irreducible, ReducibleError, \
        CertificationError
    while True:
        f = random_monic(rng, degree, bound)
        try:
            certify_irreducible(f)
            return f
        except (ReducibleError, CertificationError):
            continue
