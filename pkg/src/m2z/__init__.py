"""Exact arithmetic for 2x2 integer matrix classes and their relatives:
the divisibility lattice with its hyper-distance, the per-prime posets,
Conway's big picture, divisor-count Dirichlet coefficients, and the
supernatural-number classification of extensions of Q by Z."""

from .bigpicture import (
    BigPictureVertex,
    PictureGraph,
    ball,
    bp_leq,
    delta,
    delta_direct,
    embed,
    export_dot,
    export_json,
    parse_vertex,
    unembed,
)
from .errors import (
    Degenerate,
    DomainError,
    LengthMismatch,
    NotAUnit,
    NotDivisible,
    NotPrimitive,
    NotRepresentable,
    NotUnimodular,
    PrimeMismatch,
    SingularMatrix,
)
from .localposet import (
    INFINITY,
    ExtNat,
    LocalClass,
    LocalType,
    classes_with_det_valuation,
    classify,
    downward_neighbors,
    local_class_count,
    local_leq,
    localize,
    upward_neighbors,
)
from .matrices import (
    CharacterSpec,
    IntMatrix2,
    MatrixClass,
    apply_automorphism,
    classes_with_det,
    divides,
    hnf,
    hyper_distance,
    join,
    level,
    meet,
    niveau,
    parse_matrix,
    primitive_decompose,
    quotient,
)
from .supernatural import (
    GOORMAGHTIGH_8191_NOTE,
    ONE,
    ZERO_EVERYWHERE,
    ComponentwiseProfinite,
    Equivalent,
    EquivVerdict,
    ExtMatrix,
    Indeterminate,
    MoebiusMatrix,
    NotEquivalent,
    equiv_decide,
    ext_membership,
    goormaghtigh_search,
    goormaghtigh_witness,
    is_extension,
    moebius_apply,
    multiply,
    p_infinity,
    parse_moebius,
    parse_supernatural,
    prime_power_witness,
    s_of,
    system_determinant,
)
from .zeta import (
    AX_PLUS_B,
    BIG_PICTURE,
    FULL_MONOID,
    CoefficientTable,
    axpb_count,
    count_classes_by_det,
    count_primitive_by_det,
    dirichlet_convolve,
    psi_coeffs,
    sigma_coeffs,
    square_indicator_coeffs,
)

__version__ = "0.1.0"
