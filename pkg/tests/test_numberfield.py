import random

import pytest

from prozeta.exactalg import IntPoly, ModPoly, discriminant, factor_mod_p
from prozeta.numberfield import (
    CertificationError,
    ConductorError,
    DecompType,
    ReducibleError,
    certify_irreducible,
    conductor_coprime,
    decomposition_type,
)

from util import random_irreducible, random_monic


def P(*coeffs):
    return IntPoly(list(coeffs))


CUBIC = P(-2, 0, 0, 1)          # x^3 - 2


# ---------------------------------------------------------------------------
# DecompType
# ---------------------------------------------------------------------------

def test_decomp_type_canonical_order():
    d = DecompType((1, 3, 1), (2, 1, 1))
    assert d.f == (1, 1, 2)
    assert d.e == (1, 3, 1)     # sorted by (f_i, e_i): (1,1), (1,3), (2,1)
    assert d.degree == 6
    assert d.r == 3


def test_decomp_type_validation():
    with pytest.raises(ValueError):
        DecompType((), ())
    with pytest.raises(ValueError):
        DecompType((1, 0), (1, 1))
    with pytest.raises(ValueError):
        DecompType((1,), (1, 1))


# ---------------------------------------------------------------------------
# irreducibility certification
# ---------------------------------------------------------------------------

def test_certify_cubic_mod_p():
    cert = certify_irreducible(CUBIC)
    assert cert.method == "mod-p-irreducible"
    assert cert.witness_primes == (7,)      # first good prime where it is inert
    assert discriminant(CUBIC) % 7 != 0
    assert cert.recheck(CUBIC)


def test_certify_rejects_x2_minus_1():
    with pytest.raises(ReducibleError) as err:
        certify_irreducible(P(-1, 0, 1))
    factor = err.value.factor
    assert 0 < factor.degree < 2
    assert factor.divides(P(-1, 0, 1))


def test_certify_x4_plus_1_needs_deeper_tier():
    # reducible modulo every prime, so tier (a) can never fire
    f = P(1, 0, 0, 0, 1)
    for p in (3, 5, 7, 11, 13, 17):
        assert len(factor_mod_p(f, p)) > 1
    cert = certify_irreducible(f)
    assert cert.method in ("degree-pattern-sieve", "divisor-search")
    assert cert.recheck(f)


def test_certify_finds_factor_of_composite_products():
    rng = random.Random(11)
    for _ in range(10):
        a = random_irreducible(rng, 2, 4)
        b = random_irreducible(rng, rng.randint(2, 3), 4)
        f = a * b
        if discriminant(f) == 0:
            continue
        with pytest.raises(ReducibleError) as err:
            certify_irreducible(f)
        assert err.value.factor.divides(f)
        assert 0 < err.value.factor.degree < f.degree


def test_certify_zero_discriminant_is_reducible():
    with pytest.raises(ReducibleError):
        certify_irreducible(P(0, 0, 1))     # x^2


def test_certify_random_irreducibles_recheck():
    rng = random.Random(12)
    for deg in (2, 3, 4, 5, 6):
        f = random_irreducible(rng, deg)
        assert certify_irreducible(f).recheck(f)


# ---------------------------------------------------------------------------
# conductor coprimality
# ---------------------------------------------------------------------------

def test_conductor_cubic_all_primes():
    # Z[2^(1/3)] is the full ring of integers, so every prime is coprime
    assert conductor_coprime(CUBIC, 2)
    assert conductor_coprime(CUBIC, 3)
    assert conductor_coprime(CUBIC, 5)


def test_conductor_x2_plus_3_at_2():
    # index of Z[sqrt(-3)] in the integers of Q(sqrt(-3)) is 2
    assert not conductor_coprime(P(3, 0, 1), 2)
    assert conductor_coprime(P(3, 0, 1), 3)     # ramified but coprime


def test_conductor_true_when_disc_coprime():
    rng = random.Random(13)
    for _ in range(40):
        f = random_irreducible(rng, rng.randint(2, 5))
        p = rng.choice([2, 3, 5, 7, 11, 13, 17])
        if discriminant(f) % p != 0:
            assert conductor_coprime(f, p)


# ---------------------------------------------------------------------------
# decomposition types of primes
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("p,e,f", [
    (31, (1, 1, 1), (1, 1, 1)),
    (5, (1, 1), (1, 2)),
    (3, (3,), (1,)),
    (7, (1,), (3,)),
    (2, (3,), (1,)),
])
def test_decomposition_cubic(p, e, f):
    d = decomposition_type(CUBIC, p)
    assert d.e == e and d.f == f


def test_decomposition_refuses_conductor_divisor():
    with pytest.raises(ConductorError, match="conductor"):
        decomposition_type(P(3, 0, 1), 2)


def test_decomposition_degree_sum():
    rng = random.Random(14)
    for _ in range(30):
        f = random_irreducible(rng, rng.randint(2, 6))
        p = rng.choice([2, 3, 5, 7, 11, 13])
        if not conductor_coprime(f, p):
            continue
        d = decomposition_type(f, p)
        assert d.degree == f.degree


def test_decomposition_unramified_when_disc_coprime():
    rng = random.Random(15)
    for _ in range(30):
        f = random_irreducible(rng, rng.randint(2, 5))
        p = rng.choice([2, 3, 5, 7, 11, 13])
        if discriminant(f) % p != 0:
            d = decomposition_type(f, p)
            assert d.is_unramified()


def test_decomposition_stable_under_shift():
    rng = random.Random(16)
    for _ in range(15):
        f = random_irreducible(rng, rng.randint(2, 4), 5)
        c = rng.randint(-3, 3)
        g = f.compose_shift(c)
        for p in (5, 7, 11, 13):
            if conductor_coprime(f, p) and conductor_coprime(g, p):
                assert decomposition_type(f, p) == decomposition_type(g, p)
