"""Exact arithmetic layer: fields, Smith normal form, Laurent rings, ranks."""

from .fields import QQ, PrimeField, RationalField, prime_for_root_of_unity, primitive_root_of_unity
from .laurent import CharacterPoint, LaurentError, LaurentPoly
from .linalg import (
    HAVE_COMPILED_KERNEL,
    evaluate_matrix,
    matrix_rank_at,
    minors,
    nullspace,
    left_nullspace,
    poly_det,
    poly_rank_generic,
    rank_mod_p,
    rank_over_field,
    rank_rational,
    rref,
    primitive_vector,
    subspace_canonical,
    subspace_contains,
    subspace_dim,
    subspace_intersection,
    subspace_leq,
    subspace_sum,
)
from .smith import SmithForm, smith_normal_form, smith_with_transforms

__all__ = [
    "QQ",
    "PrimeField",
    "RationalField",
    "prime_for_root_of_unity",
    "primitive_root_of_unity",
    "CharacterPoint",
    "LaurentError",
    "LaurentPoly",
    "HAVE_COMPILED_KERNEL",
    "evaluate_matrix",
    "matrix_rank_at",
    "minors",
    "nullspace",
    "left_nullspace",
    "poly_det",
    "poly_rank_generic",
    "rank_mod_p",
    "rank_over_field",
    "rank_rational",
    "rref",
    "primitive_vector",
    "subspace_canonical",
    "subspace_contains",
    "subspace_dim",
    "subspace_intersection",
    "subspace_leq",
    "subspace_sum",
    "SmithForm",
    "smith_normal_form",
    "smith_with_transforms",
]
