"""Exact construction, verification, and existence decisions for weighing
matrices and orthogonal designs.

The package keeps every check in integer arithmetic: constructions return
:class:`~odforge.constructions.Witness` objects whose matrices have already
passed the relevant product identities, existence queries answer with
verified witnesses or re-checkable certificates, and the text interchange
format round-trips byte-for-byte.
"""

from .arith import (
    FrobeniusWitness,
    decompose_four_squares,
    decompose_three_squares,
    decompose_two_nonzero_squares,
    frobenius_representation,
    is_prime_power,
    is_sum_of_three_squares,
    prime_factorization,
)
from .constructions import (
    ConstructionError,
    Trace,
    UnsupportedParameterError,
    Witness,
    add_identity_variable,
    circulant_cw,
    collapse_od_to_weighing,
    combine_coprime,
    eight_block_od,
    goethals_seidel_od,
    merge_od_variables,
    od_from_weighing,
    odd_block_orders,
    rational_family_seed,
    replay,
    skew_od_pow2_four,
    small_od_provider,
    spread_circulant,
    symmetric_od_pow2,
    symmetric_w_square_odd,
    two_square_od,
)
from .existence import (
    BoundDerivation,
    ExistenceError,
    NotExistsCertificate,
    Query,
    Verdict,
    bound_N,
    exists_query,
    nonexistence_check,
)
from .gf import FiniteField, field_make, singer_zero_set
from .matfile import MatrixFileError, emit_matrix_file, parse_matrix_file
from .matrices import (
    CheckReport,
    IntMatrix,
    MatrixError,
    ODType,
    SignedVarMatrix,
    StructureReport,
    VerificationInternalError,
    WeighingType,
    structure_check,
    verify_od,
    verify_weighing,
)

__version__ = "0.1.0"

__all__ = [
    "FrobeniusWitness",
    "decompose_four_squares",
    "decompose_three_squares",
    "decompose_two_nonzero_squares",
    "frobenius_representation",
    "is_prime_power",
    "is_sum_of_three_squares",
    "prime_factorization",
    "ConstructionError",
    "Trace",
    "UnsupportedParameterError",
    "Witness",
    "add_identity_variable",
    "circulant_cw",
    "collapse_od_to_weighing",
    "combine_coprime",
    "eight_block_od",
    "goethals_seidel_od",
    "merge_od_variables",
    "od_from_weighing",
    "odd_block_orders",
    "rational_family_seed",
    "replay",
    "skew_od_pow2_four",
    "small_od_provider",
    "spread_circulant",
    "symmetric_od_pow2",
    "symmetric_w_square_odd",
    "two_square_od",
    "BoundDerivation",
    "ExistenceError",
    "NotExistsCertificate",
    "Query",
    "Verdict",
    "bound_N",
    "exists_query",
    "nonexistence_check",
    "FiniteField",
    "field_make",
    "singer_zero_set",
    "MatrixFileError",
    "emit_matrix_file",
    "parse_matrix_file",
    "CheckReport",
    "IntMatrix",
    "MatrixError",
    "ODType",
    "SignedVarMatrix",
    "StructureReport",
    "VerificationInternalError",
    "WeighingType",
    "structure_check",
    "verify_od",
    "verify_weighing",
    "__version__",
]
