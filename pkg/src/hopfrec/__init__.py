"""Exact reconstruction between finite dimensional split semisimple Hopf
algebras and skeletal fusion category data with a fiber functor, with
machine verification of every axiom over cyclotomic arithmetic."""

from .errors import (
    ConductorMismatch,
    DecompositionGap,
    DivisionByZero,
    HopfrecError,
    Incomplete,
    NonInvertibleJ,
    NonRigid,
    NotACocycle,
    NotSplitOrNotSemisimple,
    ParseError,
    ReconstructionAxiomFailure,
    RoundTripFailure,
    SchemaError,
    ShapeError,
    SkeletalizationFailure,
)
from .fusion import (
    FiberData,
    FusionSkeleton,
    compute_delta,
    copairing_matrix,
    pairing_matrix,
    validate_fiber,
    verify_category,
    verify_duality,
    verify_pentagon,
    verify_tensorator,
)
from .examples import (
    EXAMPLES,
    gen_drinfeld_double,
    gen_function_algebra,
    gen_group_algebra,
    gen_pointed_category,
    gen_pointed_fiber,
)
from .groups import GroupTable, cyclic_group, direct_product, symmetric_group, trivial_group
from .hopf import (
    AlgebraPresentation,
    HopfPresentation,
    check_algebra,
    check_antipode,
    check_bialgebra,
    check_hopf_morphism,
    run_hopf_checks,
    tensor_hopf,
)
from .matrices import Matrix, block_diag, mat_inverse, mat_kernel, mat_solve, permutation_matrix
from .reconstruct import (
    ReconstructionResult,
    endf_algebra,
    endf_basis,
    endf_offsets,
    reconstruct_hopf,
    transport_along,
    transport_matrix,
    zeta_modules,
)
from .repcat import (
    Decomposition,
    ModuleRep,
    SliceMorphismData,
    decompose,
    dual_module,
    gamma_roundtrip,
    hom_space,
    skeletalize,
    tensor_module,
    trivial_module,
    verify_irreps,
)
from .reports import CheckReport, Failure
from .scalars import Scalar, cyclotomic_poly, phi_degree, sc
from .serialize import dumps, load, loads, save

__all__ = [
    "AlgebraPresentation",
    "CheckReport",
    "ConductorMismatch",
    "Decomposition",
    "DecompositionGap",
    "DivisionByZero",
    "Failure",
    "FiberData",
    "FusionSkeleton",
    "GroupTable",
    "HopfPresentation",
    "HopfrecError",
    "Incomplete",
    "Matrix",
    "ModuleRep",
    "NonInvertibleJ",
    "NonRigid",
    "NotACocycle",
    "NotSplitOrNotSemisimple",
    "ParseError",
    "ReconstructionAxiomFailure",
    "ReconstructionResult",
    "RoundTripFailure",
    "Scalar",
    "SchemaError",
    "ShapeError",
    "SkeletalizationFailure",
    "SliceMorphismData",
    "EXAMPLES",
    "block_diag",
    "check_algebra",
    "check_antipode",
    "check_bialgebra",
    "check_hopf_morphism",
    "compute_delta",
    "copairing_matrix",
    "cyclic_group",
    "cyclotomic_poly",
    "decompose",
    "direct_product",
    "dual_module",
    "dumps",
    "endf_algebra",
    "endf_basis",
    "endf_offsets",
    "gamma_roundtrip",
    "gen_drinfeld_double",
    "gen_function_algebra",
    "gen_group_algebra",
    "gen_pointed_category",
    "gen_pointed_fiber",
    "hom_space",
    "load",
    "loads",
    "mat_inverse",
    "mat_kernel",
    "mat_solve",
    "pairing_matrix",
    "permutation_matrix",
    "phi_degree",
    "reconstruct_hopf",
    "run_hopf_checks",
    "save",
    "sc",
    "skeletalize",
    "symmetric_group",
    "tensor_hopf",
    "tensor_module",
    "transport_along",
    "transport_matrix",
    "trivial_group",
    "trivial_module",
    "validate_fiber",
    "verify_category",
    "verify_duality",
    "verify_irreps",
    "verify_pentagon",
    "verify_tensorator",
    "zeta_modules",
]
