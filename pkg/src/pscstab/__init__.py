"""Exact invariants of intersection-form isometries of simply connected
4-manifolds, and the stabilized positive-scalar-curvature checks built
on them.

All arithmetic is exact (integers, rationals, GF(2) bit rows); nothing
in this package uses floating point.
"""

from .catalog import (
    CatalogEntry,
    HypersurfaceInvariants,
    KahlerPscReport,
    get_entry,
    hypersurface,
    hypersurface_form,
    list_entries,
    psc_obstructed_kahler_example,
    standard_form_for,
)
from .errors import (
    DegeneracyError,
    DimensionError,
    GeneratorModeError,
    InputError,
    IsotropicVectorError,
    NonUnimodularFormWarning,
    NotAnIsometryError,
    SpinMismatchError,
    UnknownEntryError,
    ValidationError,
)
from .exact_linalg import (
    Mod2Matrix,
    RatMatrix,
    congruent_diagonalize,
    det_fraction,
    det_sign,
    mat_inverse,
    mod2_kernel_dim,
    mod2_rank,
    rat_kernel_dim,
    rat_rank,
)
from .generators import (
    CATALOG_PRODUCTS,
    DEFAULT_SEED,
    MODES,
    REFLECTIONS,
    SIGNED_PERMUTATIONS,
    IsometryGenerator,
    generate,
)
from .isometries import (
    FormIsometry,
    Pi0Class,
    SylvesterFrame,
    compose,
    delta_pm,
    eig1_dim_mod2,
    eig1_dim_rational,
    is_unit_component,
    iso_det,
    pi0_class,
    reflection,
    sylvester_frame,
    validate_isometry,
)
from .jsonio import (
    ProblemInput,
    canonical_dumps,
    form_to_json,
    loads_strict,
    matrix_to_json,
    parse_form,
    parse_int_matrix,
    parse_problem,
)
from .mapping_torus import (
    PhiValue,
    TorusBetti,
    in_spin_image,
    kervaire_semichar,
    phi_invariant,
    w2w3_mapping_torus,
    wang_betti_oracle,
)
from .quad_forms import (
    INDEFINITE,
    NEGATIVE_DEFINITE,
    POSITIVE_DEFINITE,
    FormSignature,
    SymForm,
    definiteness,
    direct_sum,
    is_even,
    signature_of,
    validate_form,
)
from .selftest import CheckResult, run_basic, run_extended
from .stabilization import (
    GUARANTEED,
    INCONCLUSIVE,
    ConditionCheck,
    PscVerdict,
    StabVerdict,
    check_product_stabilization,
    stable_psc_exists,
    stable_psc_from_signature,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG_PRODUCTS",
    "CatalogEntry",
    "CheckResult",
    "ConditionCheck",
    "DEFAULT_SEED",
    "DegeneracyError",
    "DimensionError",
    "FormIsometry",
    "FormSignature",
    "GUARANTEED",
    "GeneratorModeError",
    "HypersurfaceInvariants",
    "INCONCLUSIVE",
    "INDEFINITE",
    "InputError",
    "IsometryGenerator",
    "IsotropicVectorError",
    "KahlerPscReport",
    "MODES",
    "Mod2Matrix",
    "NEGATIVE_DEFINITE",
    "NonUnimodularFormWarning",
    "NotAnIsometryError",
    "POSITIVE_DEFINITE",
    "PhiValue",
    "Pi0Class",
    "ProblemInput",
    "PscVerdict",
    "REFLECTIONS",
    "RatMatrix",
    "SIGNED_PERMUTATIONS",
    "SpinMismatchError",
    "StabVerdict",
    "SylvesterFrame",
    "SymForm",
    "TorusBetti",
    "UnknownEntryError",
    "ValidationError",
    "canonical_dumps",
    "check_product_stabilization",
    "compose",
    "congruent_diagonalize",
    "definiteness",
    "delta_pm",
    "det_fraction",
    "det_sign",
    "direct_sum",
    "eig1_dim_mod2",
    "eig1_dim_rational",
    "form_to_json",
    "generate",
    "get_entry",
    "hypersurface",
    "hypersurface_form",
    "in_spin_image",
    "is_even",
    "is_unit_component",
    "iso_det",
    "kervaire_semichar",
    "list_entries",
    "loads_strict",
    "mat_inverse",
    "matrix_to_json",
    "mod2_kernel_dim",
    "mod2_rank",
    "parse_form",
    "parse_int_matrix",
    "parse_problem",
    "phi_invariant",
    "pi0_class",
    "psc_obstructed_kahler_example",
    "rat_kernel_dim",
    "rat_rank",
    "reflection",
    "run_basic",
    "run_extended",
    "signature_of",
    "stable_psc_exists",
    "stable_psc_from_signature",
    "standard_form_for",
    "sylvester_frame",
    "validate_form",
    "validate_isometry",
    "w2w3_mapping_torus",
    "wang_betti_oracle",
]
