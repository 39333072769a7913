import random
from fractions import Fraction

import pytest

from prozeta.exactalg import IntPoly
from prozeta.liecheck import (
    FieldElt,
    LieLattice,
    build_lattice,
    charpoly,
    check_lie_axioms,
    companion_matrix,
    det_bareiss,
    det_fraction,
    mat_eq,
    mat_identity,
    mat_mul,
    mat_transpose,
    random_sl2_element,
    rho1_matrix,
    rho2_matrix,
    rho3_matrix,
    solve_sigma,
    verify_automorphism,
    verify_quadratic_iso,
    verify_rho2,
)
from prozeta.numberfield import ReducibleError

from util import random_irreducible


CUBIC = IntPoly([-2, 0, 0, 1])


# ---------------------------------------------------------------------------
# lattice construction
# ---------------------------------------------------------------------------

def test_bracket_table_x2_plus_1():
    L = build_lattice(IntPoly([1, 0, 1]), 1)
    # C = [[0, 1], [-1, 0]]: [x1, y1] = z1, [x1, y2] = z2
    assert L.bracket_basis(0, 2) == (0, 0, 0, 0, 1, 0)
    assert L.bracket_basis(0, 3) == (0, 0, 0, 0, 0, 1)
    assert L.bracket_basis(1, 2) == (0, 0, 0, 0, 0, -1)


def test_bracket_table_cubic_last_row():
    L = build_lattice(CUBIC, 1)
    # companion last row of x^3 - 2 is (2, 0, 0): [x3, y1] = 2 z2
    assert L.bracket_basis(2, 3) == (0, 0, 0, 0, 0, 0, 0, 2)


def test_center_elements_bracket_to_zero():
    L = build_lattice(CUBIC, 1)
    for i in range(L.rank):
        assert L.bracket_basis(L.rank - 2, i) == (0,) * L.rank
        assert L.bracket_basis(L.rank - 1, i) == (0,) * L.rank


def test_build_lattice_rejects_reducible():
    with pytest.raises(ReducibleError):
        build_lattice(IntPoly([-1, 0, 1]), 1)


def test_lattice_rank():
    assert build_lattice(CUBIC, 1).rank == 8
    assert build_lattice(CUBIC, 2).rank == 14


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

def test_axioms_pass_for_cubic():
    rep = check_lie_axioms(build_lattice(CUBIC, 1))
    assert rep.passed
    assert rep.center_dim == 2


def test_axioms_detect_corrupted_antisymmetry():
    L = build_lattice(CUBIC, 1)
    table = dict(L.table)
    table[(0, 3)] = (0, 0, 0, 0, 0, 7, 0, 0)   # clobber [x1, y1+...] one way only
    bad = LieLattice(L.rank, L.labels, table)
    rep = check_lie_axioms(bad)
    assert rep.antisymmetry_violations


def test_center_of_x2_plus_x_plus_1():
    rep = check_lie_axioms(build_lattice(IntPoly([1, 1, 1]), 1))
    assert rep.center_is_z_span


def test_axioms_with_ell_2():
    rep = check_lie_axioms(build_lattice(IntPoly([1, 0, 1]), 2))
    assert rep.passed


# ---------------------------------------------------------------------------
# companion matrix and charpoly
# ---------------------------------------------------------------------------

def test_companion_matrix_shape():
    C = companion_matrix(IntPoly([-2, 0, 0, 1]))
    assert C == [[0, 1, 0], [0, 0, 1], [2, 0, 0]]


def test_charpoly_of_companion_is_delta():
    rng = random.Random(31)
    for _ in range(15):
        deg = rng.randint(1, 6)
        delta = IntPoly([rng.randint(-6, 6) for _ in range(deg)] + [1])
        assert charpoly(companion_matrix(delta)) == delta


# ---------------------------------------------------------------------------
# sigma
# ---------------------------------------------------------------------------

def test_sigma_x2_plus_1():
    assert solve_sigma(IntPoly([1, 0, 1])) == [[0, 1], [1, 0]]


def test_sigma_generic_quadratic():
    for b in (-3, 0, 2, 7):
        for c in (1, 2, 5):
            f = IntPoly([c, b, 1])
            sigma = solve_sigma(f)
            assert sigma == [[b, 1], [1, 0]]


def test_sigma_cubic_verified():
    sigma = solve_sigma(CUBIC)
    C = companion_matrix(CUBIC)
    assert det_bareiss(sigma) in (1, -1)
    assert mat_eq(mat_transpose(sigma), sigma)
    assert mat_eq(mat_mul(sigma, C), mat_mul(mat_transpose(C), sigma))


def test_sigma_random_fields():
    rng = random.Random(32)
    for deg in (2, 3, 4, 5, 6):
        for _ in range(3):
            f = random_irreducible(rng, deg, 6)
            sigma = solve_sigma(f)
            C = companion_matrix(f)
            assert det_bareiss(sigma) in (1, -1)
            assert mat_eq(mat_transpose(sigma), sigma)
            assert mat_eq(mat_mul(sigma, C), mat_mul(mat_transpose(C), sigma))


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

def test_identity_is_automorphism():
    L = build_lattice(CUBIC, 1)
    assert verify_automorphism(L, mat_identity(L.rank))


def test_singular_matrix_rejected():
    L = build_lattice(CUBIC, 1)
    with pytest.raises(ZeroDivisionError):
        verify_automorphism(L, [[0] * L.rank for _ in range(L.rank)])


def test_rho1_scaling_is_automorphism():
    L = build_lattice(CUBIC, 1)
    assert verify_automorphism(L, rho1_matrix(L, 3))
    assert verify_automorphism(L, rho1_matrix(L, Fraction(2, 5)))


def test_rho3_translation_is_automorphism():
    rng = random.Random(33)
    L = build_lattice(CUBIC, 1)
    cvec = [rng.randint(-9, 9) for _ in range(12)]
    assert verify_automorphism(L, rho3_matrix(L, cvec))


def test_automorphisms_compose():
    rng = random.Random(34)
    L = build_lattice(CUBIC, 1)
    g = rho1_matrix(L, 2)
    h = rho3_matrix(L, [rng.randint(-4, 4) for _ in range(12)])
    assert verify_automorphism(L, g) and verify_automorphism(L, h)
    assert verify_automorphism(L, mat_mul(g, h))


def test_non_automorphism_detected():
    L = build_lattice(CUBIC, 1)
    g = mat_identity(L.rank)
    g[0][0] = 2     # scale x1 alone: breaks [x1, y1] = z1
    assert not verify_automorphism(L, g)


# ---------------------------------------------------------------------------
# rho2
# ---------------------------------------------------------------------------

def test_rho2_identity():
    one = FieldElt.one(CUBIC)
    zero = FieldElt.zero(CUBIC)
    assert verify_rho2(CUBIC, [[one, zero], [zero, one]])


def test_rho2_unipotent_beta():
    one = FieldElt.one(CUBIC)
    zero = FieldElt.zero(CUBIC)
    beta = FieldElt.gen(CUBIC)
    assert verify_rho2(CUBIC, [[one, beta], [zero, one]])


def test_rho2_rotation():
    one = FieldElt.one(CUBIC)
    zero = FieldElt.zero(CUBIC)
    assert verify_rho2(CUBIC, [[zero, -one], [one, zero]])


def test_rho2_determinant_one_required():
    one = FieldElt.one(CUBIC)
    zero = FieldElt.zero(CUBIC)
    two = FieldElt.const(CUBIC, 2)
    with pytest.raises(ValueError, match="determinant"):
        verify_rho2(CUBIC, [[two, zero], [zero, one]])


def test_rho2_has_determinant_one_embedding():
    rng = random.Random(35)
    A = random_sl2_element(CUBIC, rng)
    g = rho2_matrix(CUBIC, A)
    assert det_fraction(g) == 1


def test_rho2_random_elements():
    rng = random.Random(36)
    for f in (CUBIC, IntPoly([3, 1, 0, 0, 1]), IntPoly([2, 0, 1, 0, 0, 1])):
        for _ in range(8):
            A = random_sl2_element(f, rng)
            assert verify_rho2(f, A)


# ---------------------------------------------------------------------------
# quadratic isomorphism
# ---------------------------------------------------------------------------

def test_iso_gaussian_case():
    assert verify_quadratic_iso(IntPoly([1, 0, 1]))


def test_iso_golden_ratio_case():
    assert verify_quadratic_iso(IntPoly([-1, -1, 1]))


def test_iso_rejects_square():
    with pytest.raises(ReducibleError):
        verify_quadratic_iso(IntPoly([0, 0, 1]))


def test_iso_rejects_non_quadratic():
    with pytest.raises(ValueError):
        verify_quadratic_iso(CUBIC)
