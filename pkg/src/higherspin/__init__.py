"""Exact representation theory and spectra for higher spin fields on round spheres."""
from .branching import (
    BranchingList,
    BundleDescriptor,
    BundleKind,
    Family,
    FamilyMember,
    branch,
    contains,
    family_generic_mismatch,
    form_bundle,
    frobenius_decompose,
    generic_decompose,
    make_bundle,
    spinor_bundle,
    spinor_form_bundle,
    sym_bundle,
)
from .errors import (
    AbsentOperator,
    DegreeOutOfRange,
    FactorizationViolated,
    HigherSpinError,
    IncompleteTargets,
    InternalNonInteger,
    MixedParity,
    NotApplicable,
    NotASummand,
    NotDominant,
    RankMismatch,
    SingularElimination,
    UnsupportedFiber,
    WrongLength,
)
from .factorization import (
    FactorReport,
    b_factor_ev,
    grading_decomposition,
    tplus_factorization_check,
    verify_factorization,
)
from .killing import KillingDecomposition, killing_forms, killing_space_dim, primitive_killing
from .rep_core import (
    AlgebraDescriptor,
    IrrepLabel,
    casimir,
    delta_vector,
    parse_weight,
    validate_weight,
    weyl_dim,
)
from .spectra import OperatorKind, SpectrumLine, kernel_family, laplacian_ev, operator_ev, spectrum_table
from .weitzenboeck import (
    GradientTarget,
    WeitzenboeckSystem,
    build_system,
    conformal_weight,
    derive_identities,
    is_consequence,
    normalization,
    normalization_sq,
    relative_dim,
    shifted_casimir,
)

__all__ = [
    "AbsentOperator",
    "AlgebraDescriptor",
    "b_factor_ev",
    "branch",
    "BranchingList",
    "build_system",
    "BundleDescriptor",
    "BundleKind",
    "casimir",
    "conformal_weight",
    "contains",
    "DegreeOutOfRange",
    "delta_vector",
    "derive_identities",
    "FactorizationViolated",
    "FactorReport",
    "Family",
    "family_generic_mismatch",
    "FamilyMember",
    "form_bundle",
    "frobenius_decompose",
    "generic_decompose",
    "GradientTarget",
    "grading_decomposition",
    "HigherSpinError",
    "IncompleteTargets",
    "InternalNonInteger",
    "IrrepLabel",
    "is_consequence",
    "kernel_family",
    "killing_forms",
    "killing_space_dim",
    "KillingDecomposition",
    "laplacian_ev",
    "make_bundle",
    "MixedParity",
    "normalization",
    "normalization_sq",
    "NotApplicable",
    "NotASummand",
    "NotDominant",
    "operator_ev",
    "OperatorKind",
    "parse_weight",
    "primitive_killing",
    "RankMismatch",
    "relative_dim",
    "shifted_casimir",
    "SingularElimination",
    "spectrum_table",
    "SpectrumLine",
    "spinor_bundle",
    "spinor_form_bundle",
    "sym_bundle",
    "tplus_factorization_check",
    "UnsupportedFiber",
    "validate_weight",
    "verify_factorization",
    "WeitzenboeckSystem",
    "weyl_dim",
    "WrongLength",
]

__version__ = "0.1.0"
