"""Exact arithmetic kernel: integer and mod-p univariate polynomials, and
bivariate rational functions in X, Y over the rationals.

Everything here is immutable and computes exactly; there is no floating
point anywhere.  Bivariate rational functions are kept in a canonical
coprime form (see :class:`BiRatFunc`), so equality of values is equality
of objects.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd as _igcd


# ---------------------------------------------------------------------------
# coefficient helpers
# ---------------------------------------------------------------------------

def _qnorm(c):
    """Collapse a Fraction with denominator 1 to a plain int (fast path)."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


# ---------------------------------------------------------------------------
# IntPoly: univariate polynomials over Z
# ---------------------------------------------------------------------------

class IntPoly:
    """Univariate polynomial with integer coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError("integer coefficients required, got %r" % (c,))
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly([])

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly([1])

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly([0, 1])

    @staticmethod
    def monomial(deg: int, c: int = 1) -> "IntPoly":
        return IntPoly([0] * deg + [c])

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __repr__(self):
        return "IntPoly(%s)" % (poly_to_str(self),)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly([])
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Evaluate with Horner; accepts int, Fraction or anything with * and +."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mod(self, x: int, p: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_shift(self, c: int) -> "IntPoly":
        """Return f(x + c)."""
        out = IntPoly.zero()
        shift = IntPoly([c, 1])
        for coeff in reversed(self.coeffs):
            out = out * shift + IntPoly([coeff])
        return out

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _igcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def pseudo_rem(self, other: "IntPoly") -> "IntPoly":
        """Pseudo-remainder: lc(other)^(da-db+1) * self mod other, over Z."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        rem = list(self.coeffs)
        db, lb = other.degree, other.lc
        steps = len(rem) - 1 - db + 1
        if steps <= 0:
            return IntPoly([c * lb ** max(steps, 0) for c in rem]) if steps == 0 else self
        for _ in range(steps):
            if len(rem) - 1 < db:
                rem = [c * lb for c in rem]
                continue
            top = rem[-1]
            rem = [c * lb for c in rem[:-1]]
            off = len(rem) - db
            for j in range(db):
                rem[off + j] -= top * other.coeffs[j]
            while rem and rem[-1] == 0:
                rem.pop()
        return IntPoly(rem)

    def divmod_exact(self, other: "IntPoly"):
        """Quotient and remainder over Q, returned as (quot, rem) with
        Fraction coefficients collapsed back to ints when possible."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        db = other.degree
        lb = Fraction(other.lc)
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < db:
                break
            q = rem[-1] / lb
            quot[len(rem) - 1 - db] = q
            for j in range(db + 1):
                rem[len(rem) - 1 - db + j] -= q * other.coeffs[j]
            rem.pop()
        return quot, [c for c in rem]

    def div_exact(self, other: "IntPoly") -> "IntPoly":
        """Exact division over Z; raises if not divisible."""
        quot, rem = self.divmod_exact(other)
        if any(rem):
            raise ValueError("inexact polynomial division")
        out = []
        for q in quot:
            if q.denominator != 1:
                raise ValueError("inexact polynomial division")
            out.append(int(q))
        return IntPoly(out)

    def divides(self, other: "IntPoly") -> bool:
        try:
            other.div_exact(self)
            return True
        except ValueError:
            return False


_MOD_GCD_PRIMES = [2305843009213693951]      # 2^61 - 1


def _nth_word_prime(i: int) -> int:
    """i-th prime of a memoized descending scan below 2^62."""
    n = _MOD_GCD_PRIMES[-1]
    while len(_MOD_GCD_PRIMES) <= i:
        n -= 2
        if is_prime(n):
            _MOD_GCD_PRIMES.append(n)
    return _MOD_GCD_PRIMES[i]


def _gcd_intpoly_prs(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive pseudo-remainder sequence; coefficient growth makes this
    usable only at small degrees, where it is simple and dependable."""
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b).primitive()
        a, b = b, r
    return a.primitive()


def _modpoly_gcd_coeffs(ac, bc, p):
    """Monic gcd of two coefficient lists over F_p, as a coefficient list."""
    a = [c % p for c in ac]
    b = [c % p for c in bc]

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(a), trim(b)
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            q = a[-1] * inv % p
            if q:
                off = len(a) - 1 - db
                for j in range(db):
                    a[off + j] = (a[off + j] - q * b[j]) % p
            a.pop()
            trim(a)
        a, b = b, trim(a)
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd_intpoly(a: IntPoly, b: IntPoly) -> IntPoly:
    """Gcd over Z, primitive with positive leading coefficient, scaled by
    the gcd of the integer contents.

    Modular images decide the degree; candidates are reconstructed by CRT
    with a symmetric lift and verified by trial division, so the result is
    exact whatever the primes did.  Small degrees fall back to the
    pseudo-remainder sequence.
    """
    if a.is_zero():
        return b.primitive() * abs(b.content()) if not b.is_zero() else IntPoly.zero()
    if b.is_zero():
        return a.primitive() * abs(a.content())
    g_cont = _igcd(abs(a.content()), abs(b.content()))
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    if b.degree == 0:
        return IntPoly([g_cont])
    if a.degree <= 12:
        return _gcd_intpoly_prs(a, b) * g_cont

    lc_bound = _igcd(a.lc, b.lc)
    best_deg = None
    crt_res = None
    crt_mod = 1
    prev_lift = None
    for i in range(25):
        p = _nth_word_prime(i)
        if a.lc % p == 0 or b.lc % p == 0:
            continue
        img = _modpoly_gcd_coeffs(a.coeffs, b.coeffs, p)
        d = len(img) - 1
        if d == 0:
            return IntPoly([g_cont])
        if best_deg is None or d < best_deg:
            best_deg = d
            crt_res, crt_mod, prev_lift = None, 1, None
        elif d > best_deg:
            continue
        scale = lc_bound % p
        img = [c * scale % p for c in img]
        if crt_res is None:
            crt_res, crt_mod = img, p
        else:
            combined = []
            m1, m2 = crt_mod, p
            inv = pow(m1 % m2, -1, m2)
            for c1, c2 in zip(crt_res, img + [0] * (len(crt_res) - len(img))):
                t = (c2 - c1) % m2 * inv % m2
                combined.append(c1 + m1 * t)
            crt_res, crt_mod = combined, m1 * m2
        half = crt_mod // 2
        lift = [c - crt_mod if c > half else c for c in crt_res]
        if lift == prev_lift:
            cand = IntPoly(lift).primitive()
            if cand.divides(a) and cand.divides(b):
                return cand * g_cont
        prev_lift = lift
    # modular route kept failing (astronomically unlikely); stay exact
    return _gcd_intpoly_prs(a, b) * g_cont


def resultant(f: IntPoly, g: IntPoly) -> Fraction:
    """Resultant of two integer polynomials, computed by the Euclidean
    recursion over Q.  Always exact; an integer for integer inputs."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    if f.degree < g.degree:
        sign = (-1) ** (f.degree * g.degree)
        return sign * resultant(g, f)
    if g.degree == 0:
        return Fraction(g.lc) ** f.degree
    quot, rem = f.divmod_exact(g)
    rem_cs = list(rem)
    while rem_cs and rem_cs[-1] == 0:
        rem_cs.pop()
    if not rem_cs:
        return Fraction(0)
    # rem has rational coefficients; clear them and track the scale
    den_lcm = 1
    for c in rem_cs:
        c = _as_fraction(c)
        den_lcm = den_lcm * c.denominator // _igcd(den_lcm, c.denominator)
    rem_int = IntPoly([int(_as_fraction(c) * den_lcm) for c in rem_cs])
    dr = rem_int.degree
    scale = Fraction(g.lc) ** (f.degree - dr) * Fraction(1, den_lcm) ** g.degree
    sign = (-1) ** (f.degree * g.degree)
    return sign * scale * resultant(g, rem_int)


def discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant requires degree >= 1")
    res = resultant(f, f.derivative())
    d = Fraction((-1) ** (n * (n - 1) // 2)) * res / f.lc
    if d.denominator != 1:
        raise ArithmeticError("non-integral discriminant (bug)")
    return int(d)


def poly_to_str(f: IntPoly, var: str = "x") -> str:
    """Render an IntPoly the way the CLI prints it, e.g. ``x^3 - 2``."""
    if f.is_zero():
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            xk = var if k == 1 else "%s^%d" % (var, k)
            body = xk if abs(c) == 1 else "%d*%s" % (abs(c), xk)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# primality (needed to validate the p in factor_mod_p)
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int):
    """Sieve of Eratosthenes, inclusive."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            start = p * p
            sieve[start:n + 1:p] = b"\x00" * ((n - start) // p + 1)
    return [i for i, v in enumerate(sieve) if v]


# ---------------------------------------------------------------------------
# ModPoly: univariate polynomials over F_p  (p prime)
# ---------------------------------------------------------------------------

class ModPoly:
    """Dense univariate polynomial over F_p, low degree first."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.p = p

    @staticmethod
    def from_intpoly(f: IntPoly, p: int) -> "ModPoly":
        return ModPoly(f.coeffs, p)

    def to_intpoly(self, symmetric: bool = False) -> IntPoly:
        if symmetric:
            half = self.p // 2
            return IntPoly([c - self.p if c > half else c for c in self.coeffs])
        return IntPoly(list(self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        return (isinstance(other, ModPoly) and self.p == other.p
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(("ModPoly", self.p, self.coeffs))

    def __repr__(self):
        return "ModPoly(%s, p=%d)" % (poly_to_str(IntPoly(list(self.coeffs))), self.p)

    def __neg__(self):
        return ModPoly([-c for c in self.coeffs], self.p)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ModPoly(out, self.p)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ModPoly([other * c for c in self.coeffs], self.p)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ModPoly([], self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] = (out[i + j] + ca * cb) % self.p
        return ModPoly(out, self.p)

    __rmul__ = __mul__

    def monic(self) -> "ModPoly":
        if self.is_zero() or self.lc == 1:
            return self
        inv = pow(self.lc, -1, self.p)
        return self * inv

    def divmod(self, other: "ModPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        inv = pow(other.lc, -1, p)
        quot = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db:
            q = rem[-1] * inv % p
            if q:
                quot[len(rem) - 1 - db] = q
                for j in range(db):
                    rem[len(rem) - 1 - db + j] = (rem[len(rem) - 1 - db + j]
                                                  - q * other.coeffs[j]) % p
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return ModPoly(quot, p), ModPoly(rem, p)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def gcd(self, other: "ModPoly") -> "ModPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "ModPoly"):
        """Extended gcd: returns (g, s, t) with s*self + t*other = g, g monic."""
        p = self.p
        r0, r1 = self, other
        s0, s1 = ModPoly([1], p), ModPoly([], p)
        t0, t1 = ModPoly([], p), ModPoly([1], p)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = pow(r0.lc, -1, p)
        return r0 * inv, s0 * inv, t0 * inv

    def pow_mod(self, k: int, modulus: "ModPoly") -> "ModPoly":
        result = ModPoly([1], self.p)
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return result

    def derivative(self) -> "ModPoly":
        return ModPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.p)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc


def _mod_squarefree_parts(f: ModPoly):
    """Squarefree decomposition over F_p: list of (squarefree factor, multiplicity)."""
    p = f.p
    out = []

    def pth_root(g: ModPoly) -> ModPoly:
        # g is a polynomial in x^p; over F_p its p-th root drops exponents by p
        cs = [0] * (g.degree // p + 1)
        for i in range(0, g.degree + 1, p):
            cs[i // p] = g[i]
        return ModPoly(cs, p)

    def sff(g: ModPoly, mult: int):
        d = g.derivative()
        if d.is_zero():
            sff(pth_root(g), mult * p)
            return
        c = g.gcd(d)
        w = g // c
        i = 1
        while not w.is_one():
            y = w.gcd(c)
            z = w // y
            if not z.is_one():
                out.append((z.monic(), i * mult))
            w = y
            c = c // y
            i += 1
        if not c.is_one():
            sff(pth_root(c), mult * p)

    sff(f.monic(), 1)
    return out


def _distinct_degree(f: ModPoly):
    """Distinct-degree split of a squarefree monic f: list of (product, degree)."""
    p = f.p
    out = []
    x = ModPoly([0, 1], p)
    h = x
    g = f
    d = 0
    while g.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, g)
        comm = g.gcd(h - x)
        if not comm.is_one():
            out.append((comm, d))
            g = g // comm
            h = h % g
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _equal_degree_split(f: ModPoly, d: int, rng: random.Random):
    """Cantor-Zassenhaus split of monic squarefree f = product of irreducibles
    of the same degree d.  Returns the list of irreducible factors."""
    p = f.p
    n = f.degree
    if n == d:
        return [f]
    while True:
        a = ModPoly([rng.randrange(p) for _ in range(n)], p)
        if a.degree < 1:
            continue
        if p == 2:
            # trace map over F_{2^d}
            t = ModPoly([], p)
            b = a
            for _ in range(d):
                t = (t + b) % f
                b = (b * b) % f
            g = f.gcd(t)
        else:
            b = a.pow_mod((p ** d - 1) // 2, f)
            g = f.gcd(b - ModPoly([1], p))
        if 0 < g.degree < n:
            return (_equal_degree_split(g.monic(), d, rng)
                    + _equal_degree_split((f // g).monic(), d, rng))


DEFAULT_SEED = 0


def factor_mod_p(f: IntPoly, p: int, seed=None):
    """Factor f mod p into monic irreducibles.

    Returns a list of (ModPoly, multiplicity) sorted by (degree, coeffs).
    Each factor is re-checked irreducible (Rabin test) before returning.
    The equal-degree stage is randomized; `seed` pins the splitting choices
    (module default when omitted).  The sorted output is the same for
    every seed.
    """
    if not is_prime(p):
        raise ValueError("composite p: %d" % p)
    if f.degree < 1:
        raise ValueError("factor_mod_p requires degree >= 1")
    if f.lc % p == 0:
        raise ValueError("p divides the leading coefficient")
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    fbar = ModPoly.from_intpoly(f, p).monic()
    factors = []
    for sqf, mult in _mod_squarefree_parts(fbar):
        for prod, d in _distinct_degree(sqf):
            for irr in _equal_degree_split(prod.monic(), d, rng):
                factors.append((irr.monic(), mult))
    factors.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    for g, _ in factors:
        if not is_irreducible_mod_p(g):
            raise ArithmeticError("factor failed irreducibility certification (bug)")
    return factors


def is_irreducible_mod_p(f: ModPoly) -> bool:
    """Rabin irreducibility test over F_p."""
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    p = f.p
    f = f.monic()
    x = ModPoly([0, 1], p)
    h = x.pow_mod(p ** n, f)       # x^(p^n) mod f
    if not (h - x).is_zero():
        return False
    nprimes = set()
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            nprimes.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        nprimes.add(m)
    for t in nprimes:
        h = x.pow_mod(p ** (n // t), f)
        if not f.gcd(h - x).is_one():
            return False
    return True


# ---------------------------------------------------------------------------
# BiPoly: bivariate polynomials over Q  (sparse dict representation)
# ---------------------------------------------------------------------------

def _grlex_key(mono):
    a, b = mono
    return (a + b, a)


class BiPoly:
    """Sparse polynomial in X, Y over Q: {(x_exp, y_exp): coefficient}.

    Coefficients are ints when integral, Fractions otherwise; zero
    coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for (a, b), c in (terms.items() if isinstance(terms, dict) else terms):
                if a < 0 or b < 0:
                    raise ValueError("negative exponent in BiPoly")
                c = _qnorm(c if isinstance(c, (int, Fraction)) else Fraction(c))
                if c:
                    d[(a, b)] = d.get((a, b), 0) + c
                    if not d[(a, b)]:
                        del d[(a, b)]
        self.terms = d

    # -- constructors --------------------------------------------------------

    @staticmethod
    def const(c) -> "BiPoly":
        c = _qnorm(c if isinstance(c, (int, Fraction)) else Fraction(c))
        return BiPoly({(0, 0): c} if c else {})

    @staticmethod
    def monomial(a: int, b: int, c=1) -> "BiPoly":
        return BiPoly({(a, b): c})

    @staticmethod
    def one_minus(a: int, b: int) -> "BiPoly":
        """The ubiquitous factor 1 - X^a Y^b."""
        if a == 0 and b == 0:
            return BiPoly({})
        return BiPoly({(0, 0): 1, (a, b): -1})

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): 1}

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_value(self):
        return self.terms.get((0, 0), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def deg_x(self) -> int:
        return max((a for a, _ in self.terms), default=-1)

    def deg_y(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    def leading(self):
        """(monomial, coeff) maximal in graded-lex order (X before Y)."""
        if not self.terms:
            raise ValueError("leading term of zero polynomial")
        m = max(self.terms, key=_grlex_key)
        return m, self.terms[m]

    def trailing(self):
        """(monomial, coeff) minimal in graded-lex order (X before Y)."""
        if not self.terms:
            raise ValueError("trailing term of zero polynomial")
        m = min(self.terms, key=_grlex_key)
        return m, self.terms[m]

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(("BiPoly", tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return "BiPoly(%s)" % (bipoly_to_str(self),)

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self):
        return BiPoly({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _qnorm(s)
            elif m in out:
                del out[m]
        r = BiPoly.__new__(BiPoly)
        r.terms = out
        return r

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _qnorm(other)
            if not other:
                return BiPoly({})
            return BiPoly({m: c * other for m, c in self.terms.items()})
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                m = (a1 + a2, b1 + b2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        r = BiPoly.__new__(BiPoly)
        r.terms = {m: _qnorm(c) for m, c in out.items()}
        return r

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, da: int, db: int) -> "BiPoly":
        """Multiply by the monomial X^da Y^db (exponents must stay >= 0)."""
        return BiPoly({(a + da, b + db): c for (a, b), c in self.terms.items()})

    def mirror(self, A: int, B: int) -> "BiPoly":
        """X^A Y^B * self(1/X, 1/Y); requires A >= deg_x, B >= deg_y."""
        return BiPoly({(A - a, B - b): c for (a, b), c in self.terms.items()})

    def eval(self, x, y):
        acc = Fraction(0)
        for (a, b), c in self.terms.items():
            acc += Fraction(c) * Fraction(x) ** a * Fraction(y) ** b
        return acc

    def subs_x(self, x):
        """Substitute X = x; returns dense list of Fractions indexed by Y-degree."""
        x = Fraction(x)
        out = [Fraction(0)] * (self.deg_y() + 1 if self.terms else 1)
        for (a, b), c in self.terms.items():
            out[b] += Fraction(c) * x ** a
        return out

    def div_exact(self, d: "BiPoly") -> "BiPoly":
        """Exact division; raises ValueError when d does not divide self."""
        if d.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_zero():
            return BiPoly({})
        if d.is_constant():
            c = Fraction(d.constant_value())
            return BiPoly({m: Fraction(v) / c for m, v in self.terms.items()})
        rem = dict(self.terms)
        (da, db), dc = d.leading()
        out = {}
        while rem:
            m = max(rem, key=_grlex_key)
            a, b = m
            if a < da or b < db:
                raise ValueError("inexact bivariate division")
            q = _qnorm(Fraction(rem[m]) / dc)
            qm = (a - da, b - db)
            out[qm] = q
            for (xa, xb), xc in d.terms.items():
                t = (qm[0] + xa, qm[1] + xb)
                s = rem.get(t, 0) - q * xc
                if s:
                    rem[t] = _qnorm(s)
                elif t in rem:
                    del rem[t]
        return BiPoly(out)

    def divides(self, other: "BiPoly") -> bool:
        try:
            other.div_exact(self)
            return True
        except ValueError:
            return False

    # -- conversions used by the gcd machinery --------------------------------

    def clear_denominators(self):
        """Return (integer BiPoly, lcm of coefficient denominators)."""
        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // _igcd(den, c.denominator)
        if den == 1:
            return self, 1
        return BiPoly({m: int(c * den) for m, c in self.terms.items()}), den

    def rational_content(self) -> Fraction:
        """Positive rational c such that self / c is integer-primitive."""
        if self.is_zero():
            return Fraction(1)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            fc = _as_fraction(c)
            num_gcd = _igcd(num_gcd, fc.numerator)
            den_lcm = den_lcm * fc.denominator // _igcd(den_lcm, fc.denominator)
        return Fraction(num_gcd, den_lcm)


def bipoly_to_str(p: BiPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for (a, b) in sorted(p.terms, key=_grlex_key):
        c = p.terms[(a, b)]
        mono = []
        if a:
            mono.append("X" if a == 1 else "X^%d" % a)
        if b:
            mono.append("Y" if b == 1 else "Y^%d" % b)
        if not mono:
            body = str(abs(c) if not isinstance(c, Fraction) else abs(c))
        else:
            mstr = "*".join(mono)
            body = mstr if abs(c) == 1 else "%s*%s" % (abs(c), mstr)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


# -- bivariate gcd over Q ----------------------------------------------------
#
# Strategy: split off the content with respect to Y (a univariate gcd over
# Z[X]), then compute the gcd of the Y-primitive parts by evaluation and
# interpolation: specialize X at points over a word-size prime, take
# univariate gcds in Y, interpolate the X-dependence back, and certify the
# lifted candidate by exact trial division.  A subresultant pseudo-remainder
# sequence remains as the (slow, always-exact) fallback.

_GCD_PRIMES = (2147483629, 2147483647, 4294967291)


def _to_yx(p: BiPoly):
    """Integer BiPoly -> list over Y-degree of IntPoly in X."""
    dy = p.deg_y()
    rows = [dict() for _ in range(dy + 1)]
    for (a, b), c in p.terms.items():
        rows[b][a] = c
    out = []
    for row in rows:
        if row:
            cs = [0] * (max(row) + 1)
            for a, c in row.items():
                cs[a] = c
            out.append(IntPoly(cs))
        else:
            out.append(IntPoly.zero())
    return out


def _from_yx(rows) -> BiPoly:
    terms = {}
    for b, poly in enumerate(rows):
        for a, c in enumerate(poly.coeffs):
            if c:
                terms[(a, b)] = c
    return BiPoly(terms)


def _yx_trim(rows):
    while rows and rows[-1].is_zero():
        rows.pop()
    return rows


def _yx_content(rows) -> IntPoly:
    g = IntPoly.zero()
    for r in rows:
        g = gcd_intpoly(g, r)
        if g.degree == 0 and g.lc == 1:
            break
    return g


def _yx_scale_div(rows, d: IntPoly):
    return [r.div_exact(d) for r in rows]


def _yx_prem(A, B):
    """Pseudo-remainder in (Z[X])[Y]."""
    A = list(A)
    db = len(B) - 1
    lb = B[-1]
    steps = len(A) - 1 - db + 1
    for _ in range(steps):
        if len(A) - 1 < db:
            A = [lb * c for c in A]
            continue
        top = A[-1]
        A = [lb * c for c in A[:-1]]
        off = len(A) - db
        for j in range(db):
            A[off + j] = A[off + j] - top * B[j]
        A = _yx_trim(A)
        if not A:
            break
    return A


def _subresultant_gcd_yx(A, B):
    """Primitive gcd of primitive A, B in (Z[X])[Y], both of positive Y-degree."""
    if len(A) < len(B):
        A, B = B, A
    g = IntPoly.one()
    h = IntPoly.one()
    while True:
        d = (len(A) - 1) - (len(B) - 1)
        R = _yx_prem(A, B)
        if not R:
            res = _yx_scale_div(B, _yx_content(B))
            return res
        if len(R) - 1 == 0:
            return [IntPoly.one()]
        divisor = g * h ** d
        A, B = B, _yx_scale_div(R, divisor)
        g = A[-1]
        if d == 0:
            # h unchanged
            pass
        elif d == 1:
            h = g
        else:
            h = (g ** d).div_exact(h ** (d - 1))


def _yx_div_exact(A, D):
    """Exact division in (Q[X])[Y] of yx lists, integer coefficients;
    raises ValueError when D does not divide A."""
    if not D:
        raise ZeroDivisionError("division by zero")
    A = list(A)
    dD = len(D) - 1
    lead = D[-1]
    quot = [IntPoly.zero()] * max(len(A) - dD, 0)
    while len(A) - 1 >= dD:
        if A[-1].is_zero():
            A.pop()
            continue
        q = A[-1].div_exact(lead)           # raises if inexact
        quot[len(A) - 1 - dD] = q
        for j in range(dD + 1):
            A[len(A) - 1 - dD + j] = A[len(A) - 1 - dD + j] - q * D[j]
        if not A[-1].is_zero():
            raise ValueError("inexact division (bug)")
        A.pop()
    if any(not r.is_zero() for r in A):
        raise ValueError("inexact bivariate division")
    return quot


def _gcd_yx_modular(A, B):
    """Gcd of Y-primitive integer yx polynomials with positive Y-degree,
    by evaluation/interpolation over a word prime, verified by exact trial
    division.  Returns None when every attempt failed (caller falls back)."""
    gamma = gcd_intpoly(A[-1], B[-1])
    degx_a = max(c.degree for c in A)
    degx_b = max(c.degree for c in B)
    max_points = min(degx_a, degx_b) + gamma.degree + 4
    dy_cap = min(len(A), len(B)) - 1

    for i in range(4):
        p = _nth_word_prime(i)
        result = _gcd_yx_at_prime(A, B, gamma, p, max_points, dy_cap)
        if result == "coprime":
            return [IntPoly.one()]
        if result is not None:
            return result
    return None


def _gcd_yx_at_prime(A, B, gamma, p, max_points, dy_cap):
    """One prime's evaluate/interpolate/verify pass.  Returns a verified
    yx gcd, the string 'coprime', or None."""
    best_dy = None
    ts, basis = [], [1]              # basis = prod (X - t_j) mod p, low-first
    interp = []                      # list over X-degree of Y-vectors mod p
    t = 0
    points_tried = 0
    while points_tried < max_points:
        t += 1
        if t >= p:
            return None
        if gamma.eval_mod(t, p) == 0:
            continue
        fa = [poly.eval_mod(t, p) for poly in A]
        fb = [poly.eval_mod(t, p) for poly in B]
        if fa[-1] == 0 or fb[-1] == 0:
            continue
        points_tried += 1
        g = _modpoly_gcd_coeffs(fa, fb, p)
        dy = len(g) - 1
        if dy == 0:
            return "coprime"
        if best_dy is None or dy < best_dy:
            best_dy = dy
            ts, basis, interp = [], [1], []
        elif dy > best_dy:
            continue
        scale = gamma.eval_mod(t, p)
        g = [c * scale % p for c in g] + [0] * (dy_cap + 1 - len(g))
        # Newton step: dd = (g - interp(t)) / basis(t)
        interp_at_t = [0] * (dy_cap + 1)
        tk = 1
        for xdeg, vec in enumerate(interp):
            for y, c in enumerate(vec):
                interp_at_t[y] = (interp_at_t[y] + c * tk) % p
            tk = tk * t % p
        basis_at_t = 0
        tk = 1
        for c in basis:
            basis_at_t = (basis_at_t + c * tk) % p
            tk = tk * t % p
        inv = pow(basis_at_t, -1, p)
        dd = [(gv - iv) * inv % p for gv, iv in zip(g, interp_at_t)]
        if any(dd):
            while len(interp) < len(basis):
                interp.append([0] * (dy_cap + 1))
            for xdeg, bc in enumerate(basis):
                if bc:
                    row = interp[xdeg]
                    for y, c in enumerate(dd):
                        if c:
                            row[y] = (row[y] + bc * c) % p
            ts.append(t)
            basis = [0] + basis
            for k in range(len(basis) - 1):
                basis[k] = (basis[k] - t * basis[k + 1]) % p
        else:
            # interpolant stable: lift symmetrically and certify
            cand = _interp_to_yx(interp, p)
            if cand is not None:
                try:
                    _yx_div_exact(A, cand)
                    _yx_div_exact(B, cand)
                    return cand
                except ValueError:
                    pass
            ts.append(t)
            basis = [0] + basis
            for k in range(len(basis) - 1):
                basis[k] = (basis[k] - t * basis[k + 1]) % p
    return None


def _interp_to_yx(interp, p):
    """Symmetric lift of the interpolated gcd candidate, Y-primitive."""
    if not interp:
        return None
    half = p // 2
    dy = max((len(vec) for vec in interp), default=0)
    rows = []
    for y in range(dy):
        cs = []
        for xdeg in range(len(interp)):
            c = interp[xdeg][y] if y < len(interp[xdeg]) else 0
            cs.append(c - p if c > half else c)
        rows.append(IntPoly(cs))
    rows = _yx_trim(rows)
    if not rows:
        return None
    cont = _yx_content(rows)
    if cont.is_zero():
        return None
    return _yx_scale_div(rows, cont)


def gcd_bipoly(P: BiPoly, Q: BiPoly) -> BiPoly:
    """Gcd over Q[X, Y], integer-primitive with positive graded-lex leading
    coefficient (constant 1 when coprime)."""
    if P.is_zero() and Q.is_zero():
        return BiPoly({})
    if P.is_zero() or Q.is_zero():
        src = Q if P.is_zero() else P
        g, _ = src.clear_denominators()
        c = g.rational_content()
        g = g * (Fraction(1) / c)
        _, lcc = g.leading()
        return g * (-1) if lcc < 0 else g

    def _strip(poly: BiPoly):
        sa = min(a for a, _ in poly.terms)
        sb = min(b for _, b in poly.terms)
        if sa == 0 and sb == 0:
            return poly, 0, 0
        return BiPoly({(a - sa, b - sb): c for (a, b), c in poly.terms.items()}), sa, sb

    Pi, _ = P.clear_denominators()
    Qi, _ = Q.clear_denominators()
    Pi, pa_off, pb_off = _strip(Pi)
    Qi, qa_off, qb_off = _strip(Qi)
    min_a = min(pa_off, qa_off)
    min_b = min(pb_off, qb_off)

    ya = _yx_trim(_to_yx(Pi))
    yb = _yx_trim(_to_yx(Qi))
    dyA, dyB = len(ya) - 1, len(yb) - 1

    if dyA == 0 and dyB == 0:
        g_poly = gcd_intpoly(ya[0], yb[0])
        g = _from_yx([g_poly])
    else:
        cA = _yx_content(ya)
        cB = _yx_content(yb)
        gc = gcd_intpoly(cA, cB)
        if dyA == 0:
            g_poly = gcd_intpoly(ya[0], cB)
            g = _from_yx([g_poly])
        elif dyB == 0:
            g_poly = gcd_intpoly(yb[0], cA)
            g = _from_yx([g_poly])
        else:
            pa = _yx_scale_div(ya, cA)
            pb = _yx_scale_div(yb, cB)
            gpp = _gcd_yx_modular(pa, pb)
            if gpp is None:
                gpp = _subresultant_gcd_yx(pa, pb)
                gpp = _yx_scale_div(gpp, _yx_content(gpp))
            g = _from_yx([gc * c for c in gpp])

    g = g.shift(min_a, min_b)
    c = g.rational_content()
    g = g * (Fraction(1) / c)
    _, lcc = g.leading()
    if lcc < 0:
        g = g * (-1)
    return g


# ---------------------------------------------------------------------------
# BiRatFunc: canonical rational functions in X, Y
# ---------------------------------------------------------------------------

class BiRatFunc:
    """Rational function num/den in Q(X, Y), always in canonical form:
    gcd(num, den) = 1, den integer-primitive and scaled so its lowest
    graded-lex term (X before Y) has positive coefficient, e.g. 1 - X^4 Y^2
    rather than X^4 Y^2 - 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly):
        r = ratfunc_normalize(num, den)
        self.num = r.num
        self.den = r.den

    @staticmethod
    def const(c) -> "BiRatFunc":
        return BiRatFunc(BiPoly.const(c), BiPoly.const(1))

    @staticmethod
    def from_poly(p: BiPoly) -> "BiRatFunc":
        return BiRatFunc(p, BiPoly.const(1))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        return (isinstance(other, BiRatFunc)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash(("BiRatFunc", hash(self.num), hash(self.den)))

    def __repr__(self):
        return "BiRatFunc((%s) / (%s))" % (bipoly_to_str(self.num),
                                           bipoly_to_str(self.den))

    def __neg__(self):
        r = BiRatFunc.__new__(BiRatFunc)
        r.num = -self.num
        r.den = self.den
        return r

    def __add__(self, other):
        if not isinstance(other, BiRatFunc):
            other = BiRatFunc.const(other)
        if self.den == other.den:
            return ratfunc_normalize(self.num + other.num, self.den)
        return ratfunc_normalize(self.num * other.den + other.num * self.den,
                                 self.den * other.den)

    def __sub__(self, other):
        if not isinstance(other, BiRatFunc):
            other = BiRatFunc.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ratfunc_normalize(self.num * other, self.den)
        return ratfunc_normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return ratfunc_normalize(self.num, self.den * other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return ratfunc_normalize(self.num * other.den, self.den * other.num)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return Fraction(self.num.constant_value()) / Fraction(self.den.constant_value())


def ratfunc_normalize(num: BiPoly, den: BiPoly) -> BiRatFunc:
    """Canonical coprime representative of num/den."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero")
    if num.is_zero():
        r = BiRatFunc.__new__(BiRatFunc)
        r.num = BiPoly({})
        r.den = BiPoly.const(1)
        return r
    g = gcd_bipoly(num, den)
    if not g.is_one():
        num = num.div_exact(g)
        den = den.div_exact(g)
    c = den.rational_content()
    _, low = den.trailing()
    if low < 0:
        c = -c
    inv = Fraction(1) / c
    num = num * inv
    den = den * inv
    r = BiRatFunc.__new__(BiRatFunc)
    r.num = num
    r.den = den
    return r


def ratfunc_equal(a: BiRatFunc, b: BiRatFunc) -> bool:
    """Value equality: num(a)*den(b) == num(b)*den(a).

    Canonical forms make this the same as structural equality, but the
    cross-multiplication route stays available as an independent check."""
    return a.num * b.den == b.num * a.den


def invert_vars(r: BiRatFunc) -> BiRatFunc:
    """Canonical form of r(1/X, 1/Y): both numerator and denominator are
    multiplied by the minimal clearing monomial X^A Y^B."""
    if r.num.is_zero():
        return r
    A = max(r.num.deg_x(), r.den.deg_x())
    B = max(r.num.deg_y(), r.den.deg_y())
    return ratfunc_normalize(r.num.mirror(A, B), r.den.mirror(A, B))


def eval_rat(r: BiRatFunc, x, y) -> Fraction:
    """Exact value at (x, y); raises at poles."""
    dv = r.den.eval(x, y)
    if dv == 0:
        raise ZeroDivisionError("evaluation at pole")
    return r.num.eval(x, y) / dv


def series_coeffs(r: BiRatFunc, x_value, K: int):
    """Taylor coefficients of Y^0..Y^K of r(x_value, Y), exact rationals."""
    if K < 0:
        raise ValueError("K must be >= 0")
    den = r.den.subs_x(x_value)
    if den[0] == 0:
        raise ZeroDivisionError("non-expandable at Y = 0")
    num = r.num.subs_x(x_value)
    d0 = den[0]
    out = []
    for k in range(K + 1):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / d0)
    return out


def denominator_factorization(den: BiPoly):
    """Try to express den as prod (1 - X^a Y^b)^mult (times a constant).

    Returns a sorted list of ((a, b), mult), or None when den is not a
    product of such binomials.  Greedy and deterministic: the smallest
    positive monomial present must be the smallest monomial of some factor.
    """
    if den.is_zero():
        return None
    work = den
    out = {}
    while not work.is_constant():
        positives = [m for m in work.terms if m != (0, 0)]
        if (0, 0) not in work.terms or not positives:
            return None
        a, b = min(positives, key=_grlex_key)
        factor = BiPoly.one_minus(a, b)
        try:
            work = work.div_exact(factor)
        except ValueError:
            return None
        out[(a, b)] = out.get((a, b), 0) + 1
    if work.constant_value() != 1:
        return None
    return sorted(out.items(), key=lambda kv: _grlex_key(kv[0]))
