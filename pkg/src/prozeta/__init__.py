"""Exact local zeta functions of a family of class-two nilpotent Lie
lattices attached to primary polynomials, plus the enumeration oracles
that cross-check every formula."""

from prozeta.exactalg import (
    BiPoly,
    BiRatFunc,
    IntPoly,
    ModPoly,
    discriminant,
    eval_rat,
    factor_mod_p,
    invert_vars,
    ratfunc_equal,
    ratfunc_normalize,
    series_coeffs,
)
from prozeta.numberfield import (
    ConductorError,
    DecompType,
    IrreducibilityCertificate,
    ReducibleError,
    certify_irreducible,
    conductor_coprime,
    decomposition_type,
)
from prozeta.zetacore import (
    LocalFactor,
    PhiSpec,
    SymmetryResult,
    dirichlet_coeffs,
    euler_partial,
    local_factor,
    local_factor_quadratic,
    phi_eval,
    phi_reciprocity_check,
    symmetry_check,
    vsum_coeffs,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "BiRatFunc",
    "IntPoly",
    "ModPoly",
    "discriminant",
    "eval_rat",
    "factor_mod_p",
    "invert_vars",
    "ratfunc_equal",
    "ratfunc_normalize",
    "series_coeffs",
    "ConductorError",
    "DecompType",
    "IrreducibilityCertificate",
    "ReducibleError",
    "certify_irreducible",
    "conductor_coprime",
    "decomposition_type",
    "LocalFactor",
    "PhiSpec",
    "SymmetryResult",
    "dirichlet_coeffs",
    "euler_partial",
    "local_factor",
    "local_factor_quadratic",
    "phi_eval",
    "phi_reciprocity_check",
    "symmetry_check",
    "vsum_coeffs",
]
