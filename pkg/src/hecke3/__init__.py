"""Exact Hecke symmetries on a 3-dimensional space with polynomial symmetric algebra.

The package constructs every invertible solution R of the braid equation
with quadratic relation (R - q)(R + 1) = 0 whose R-symmetric algebra is the
polynomial algebra in 3 commuting variables, verifies all defining
identities bit-exactly over the rationals or an odd prime field, classifies
the solutions into eight types, and analyzes the classical r-matrices
r = R0 R - Id together with their carrier Lie subalgebras.
"""

from .errors import (
    CharacteristicTwo,
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    Hecke3Error,
    ImageNotInAlt2,
    InputError,
    InvalidConstraint,
    InvalidQ,
    NoHeckeParameter,
    NotAlternating,
    NotHeckeSym0,
    NotInAlt3,
    NotPrime,
    SingularBasis,
    SingularDeformation,
    SingularMatrix,
    ZeroBivector,
    ZeroQ,
)
from .fields import GF, QQ, Fp, PrimeField, Rationals, field_of, parse_field
from .linalg import Matrix
from .multilinear import (
    alt2_basis,
    alt3_generator,
    basis_vector,
    cyclic_shift,
    decompose_bivector,
    idx2,
    idx3,
    in_alt2_v,
    in_v_alt2,
    is_alt2,
    is_alt3,
    lift_left,
    lift_right,
    std_basis,
    subspace_query,
    tensor2,
    trivector_coeff,
    vol,
    vol_form,
    wedge2,
    wedge3,
    wedge_tv,
    wedge_vt,
)
from .heckecore import (
    FOperator,
    HeckeData,
    HeckeSymmetry,
    build_R,
    build_Y,
    build_Y_from_F,
    conjugate,
    deform,
    discriminant,
    extract_F,
    extract_q,
    flip_matrix,
    flip_symmetry,
    hecke_data_with_solved_q,
    pairing_form,
    solve_q,
    symmetric_form,
    t_operator,
)
from .verifier import (
    CheckReport,
    check_braid,
    check_component_identity,
    check_containments,
    check_cyclic_shift_identity,
    check_hecke,
    check_image_and_eigen,
    check_pairing_identities,
    fuzz,
    run_suite,
    sample_strategy_a,
    sample_strategy_b,
)
from .classify import (
    TYPE_LABELS,
    ClassificationReport,
    canonical,
    canonical_gram,
    check_value_tables,
    classify,
    invariance_suite,
    reference_r_matrix,
)
from .cybe import (
    FrobeniusResult,
    GlTensor,
    LieSubalgebra,
    carrier,
    check_cybe,
    check_symmetrized,
    classical_r,
    fingerprint,
    gl_tensor,
    is_frobenius,
    lie_subalgebra,
    matrix_unit,
    r21,
    reference_carriers,
)

__version__ = "0.1.0"
