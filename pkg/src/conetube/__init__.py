"""Numerical Jordan algebra toolkit for tube CR manifolds over cone orbits.

The package computes, for each simple formally real Jordan algebra, the
CR invariants of the tube manifolds sitting over the linear-automorphism
orbits of the symmetric cone: Levi kernels, finite nondegeneracy orders,
minimality, and the dimensions of the relevant field algebras, together
with Cayley-type maps between the tube, ball, and Siegel realizations.
"""

from .errors import (
    BlockViolation,
    BorderlineSpectrum,
    ClassificationError,
    ClosureViolation,
    ConditionStarViolated,
    ConetubeError,
    DimensionMismatch,
    FlowSingularity,
    IndexOutOfRange,
    InvalidBound,
    InvalidFrame,
    InvalidSignature,
    NotFinitelyNondegenerate,
    NotIdempotent,
    NotInHolomorphicTangent,
    NotInLightCone,
    NotSymplectic,
    NumericalFailure,
    SingularDenominator,
    SingularElement,
)
from .algebra import (
    AlgebraDescriptor,
    as_element,
    as_real_element,
    desk_algebras,
    element_to_matrix,
    generic_trace,
    jordan_inverse,
    jordan_product,
    lmul,
    make_algebra,
    matrix_to_element,
    multiplication_table,
    pquad,
    standard_frame,
    star,
    trace_form,
    trace_gram,
    triple_product,
    unit,
)
from .spectral import (
    JointPeirceData,
    PeirceData,
    Signature,
    SpectralData,
    generic_minors,
    joint_peirce,
    orbit_count,
    orbit_signature,
    peirce_projections,
    spectral_decompose,
    support_idempotent,
)
from .tube import (
    NondegeneracyResult,
    SubspaceBasis,
    TubeOrbit,
    aut1_basis,
    aut_germ_dimension,
    beta_map,
    condition_star_holds,
    cr_dimensions,
    levi_form,
    levi_kernel,
    make_orbit,
    minimality_check,
    nondegeneracy_order,
    tangent_data,
)
from .fields import (
    GlOmegaSpan,
    GradedField,
    NonresonanceResult,
    VanishingReport,
    bracket,
    diagonal_flow,
    diagonal_flow_coefficients,
    dim_table,
    euler_field,
    evaluate_field,
    expected_dim_table,
    field_derivative,
    gl_omega_span,
    monomial_weight,
    nonresonant,
    random_field,
    vanishing_conditions,
)
from .domains import (
    EXTERIOR,
    INTERIOR,
    SHILOV,
    SMOOTH_BOUNDARY,
    LieBallPoint,
    ball_to_spin,
    cayley,
    inverse_cayley,
    isotropy_dimension,
    lie_ball_membership,
    siegel_action,
    spin_to_ball,
    symplectic_form,
    symplectic_lie_algebra_basis,
)
from .serialize import (
    descriptor_from_json,
    descriptor_to_json,
    dumps_canonical,
    element_from_json,
    element_to_json,
    field_from_json,
    field_to_json,
    spectral_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraDescriptor",
    "BlockViolation",
    "BorderlineSpectrum",
    "ClassificationError",
    "ClosureViolation",
    "ConditionStarViolated",
    "ConetubeError",
    "DimensionMismatch",
    "EXTERIOR",
    "FlowSingularity",
    "GlOmegaSpan",
    "GradedField",
    "INTERIOR",
    "IndexOutOfRange",
    "InvalidBound",
    "InvalidFrame",
    "InvalidSignature",
    "JointPeirceData",
    "LieBallPoint",
    "NondegeneracyResult",
    "NonresonanceResult",
    "NotFinitelyNondegenerate",
    "NotIdempotent",
    "NotInHolomorphicTangent",
    "NotInLightCone",
    "NotSymplectic",
    "NumericalFailure",
    "PeirceData",
    "SHILOV",
    "SMOOTH_BOUNDARY",
    "Signature",
    "SingularDenominator",
    "SingularElement",
    "SpectralData",
    "SubspaceBasis",
    "TubeOrbit",
    "VanishingReport",
    "as_element",
    "as_real_element",
    "aut1_basis",
    "aut_germ_dimension",
    "ball_to_spin",
    "beta_map",
    "bracket",
    "cayley",
    "condition_star_holds",
    "cr_dimensions",
    "desk_algebras",
    "descriptor_from_json",
    "descriptor_to_json",
    "diagonal_flow",
    "diagonal_flow_coefficients",
    "dim_table",
    "dumps_canonical",
    "element_from_json",
    "element_to_json",
    "element_to_matrix",
    "euler_field",
    "evaluate_field",
    "expected_dim_table",
    "field_derivative",
    "field_from_json",
    "field_to_json",
    "generic_minors",
    "generic_trace",
    "gl_omega_span",
    "inverse_cayley",
    "isotropy_dimension",
    "joint_peirce",
    "jordan_inverse",
    "jordan_product",
    "levi_form",
    "levi_kernel",
    "lie_ball_membership",
    "lmul",
    "make_algebra",
    "make_orbit",
    "matrix_to_element",
    "minimality_check",
    "monomial_weight",
    "multiplication_table",
    "nondegeneracy_order",
    "nonresonant",
    "orbit_count",
    "orbit_signature",
    "peirce_projections",
    "pquad",
    "random_field",
    "siegel_action",
    "spectral_decompose",
    "spectral_to_json",
    "spin_to_ball",
    "standard_frame",
    "star",
    "support_idempotent",
    "symplectic_form",
    "symplectic_lie_algebra_basis",
    "tangent_data",
    "trace_form",
    "trace_gram",
    "triple_product",
    "unit",
    "vanishing_conditions",
]
