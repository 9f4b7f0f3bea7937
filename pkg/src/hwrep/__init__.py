"""Exact irreps, characters, fusion rules and finite Fourier transforms of HW(2^s)."""

from .cyclotomic import CycInt, root
from .errors import (
    HwError,
    NonCanonicalLabelError,
    NotRationalIntegerError,
    ParameterError,
    ResourceLimitError,
)
from .fourier import (
    EigenSystem,
    eigensystem_y,
    fourier_FD,
    omega_matrix,
    standard_fourier,
    verify_fourier_relations,
)
from .fusion import (
    FusionTable,
    FusionTerm,
    fuse,
    fusion_coeff_bruteforce,
    fusion_coeff_closed,
    fusion_table,
)
from .characters import (
    CharacterTable,
    CharValue,
    character,
    character_norm_squared,
    character_table,
    characters_equal,
)
from .group import (
    ConjugacyClass,
    GroupElement,
    GroupParams,
    class_count_formula,
    conjugacy_class_of,
    conjugate,
    enumerate_classes,
    inverse,
    multiply,
    two_adic_valuation,
)
from .reps import (
    IrrepLabel,
    LittleGroupDesc,
    MonomialMatrix,
    Orbit,
    canonicalize_label,
    enumerate_distinct_orbits,
    enumerate_irreps,
    generator_matrices,
    irrep_count_formula,
    irrep_matrix,
    is_faithful,
    little_group,
    monomial_multiply,
    monomial_to_dense,
    orbit_of,
)
from .verify import VerifyReport, run_verification

__version__ = "0.1.0"
