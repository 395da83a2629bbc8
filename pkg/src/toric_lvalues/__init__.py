"""Exact lattice algebra, Herbrand quotients, local L-factors and special
values of L-functions of quadratic norm tori at s = 0 and s = 1."""

from .cyclic import CyclicModule, TateGroups, herbrand_quotient, tate_cohomology
from .errors import InputError, PrecisionError, VerificationError
from .euler import (
    ConstantSheafChi,
    QuadraticTorusReport,
    chi_constant_z,
    chi_constructible,
    chi_finite_constant,
    chi_negligible,
    norm_torus_report,
    zeta_s_comparison,
)
from .lattice import AbHom, FgAbGroup, IntMatrix, SmithForm, smith_normal_form
from .local import (
    LocalLeadingTerm,
    LocalPlaceData,
    crosscheck_local,
    local_l_polynomial,
    local_leading_direct,
    local_leading_formula,
    local_order,
)
from .lseries import LeadingValue, QuadraticCharacter, b1_chi, functional_ratio, l_at_one, l_at_zero, remove_euler_factors
from .quadratic import (
    FundamentalUnit,
    QuadraticField,
    TorusInvariants,
    class_number_imaginary,
    class_number_real,
    fundamental_unit,
    kronecker_character,
    torus_invariants,
)
from .sequences import (
    LatticeExactSequence,
    NineDiagram,
    check_exactness,
    nu_real,
    torsion_alternating_product,
    verify_3x3,
    verify_det_tor,
)

__version__ = "0.1.0"

__all__ = [
    "AbHom",
    "ConstantSheafChi",
    "CyclicModule",
    "FgAbGroup",
    "FundamentalUnit",
    "InputError",
    "IntMatrix",
    "LatticeExactSequence",
    "LeadingValue",
    "LocalLeadingTerm",
    "LocalPlaceData",
    "NineDiagram",
    "PrecisionError",
    "QuadraticCharacter",
    "QuadraticField",
    "QuadraticTorusReport",
    "SmithForm",
    "TateGroups",
    "TorusInvariants",
    "VerificationError",
    "b1_chi",
    "check_exactness",
    "chi_constant_z",
    "chi_constructible",
    "chi_finite_constant",
    "chi_negligible",
    "class_number_imaginary",
    "class_number_real",
    "crosscheck_local",
    "functional_ratio",
    "fundamental_unit",
    "herbrand_quotient",
    "kronecker_character",
    "l_at_one",
    "l_at_zero",
    "local_l_polynomial",
    "local_leading_direct",
    "local_leading_formula",
    "local_order",
    "norm_torus_report",
    "nu_real",
    "remove_euler_factors",
    "smith_normal_form",
    "tate_cohomology",
    "torsion_alternating_product",
    "torus_invariants",
    "verify_3x3",
    "verify_det_tor",
    "zeta_s_comparison",
]
