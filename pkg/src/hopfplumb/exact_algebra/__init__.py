"""Exact integer/rational linear algebra and integer polynomials."""
from .linalg import (
    Inertia,
    KernelTooLarge,
    SingularMatrix,
    as_lists,
    char_poly,
    det,
    identity,
    int_matrix,
    integer_inverse,
    kernel_primitive,
    matrix_power,
    min_poly,
    nullity,
    nullspace,
    primitive_vector,
    rank,
    rational_inverse,
    solve,
    symmetric_signature,
    to_tuple,
)
from .poly import IntPolynomial, ZeroPolynomial, exact_quotient, poly_gcd, squarefree_decomposition
from .roots import count_real_roots, palindromic_reduction, sturm_sequence, unit_circle_root_count

__all__ = [
    "Inertia", "IntPolynomial", "KernelTooLarge", "SingularMatrix", "ZeroPolynomial",
    "as_lists", "char_poly", "count_real_roots", "det", "exact_quotient", "identity",
    "int_matrix", "integer_inverse", "kernel_primitive", "matrix_power", "min_poly",
    "nullity", "nullspace", "palindromic_reduction", "poly_gcd", "primitive_vector",
    "rank", "rational_inverse", "solve", "squarefree_decomposition", "sturm_sequence",
    "symmetric_signature", "to_tuple", "unit_circle_root_count",
]
