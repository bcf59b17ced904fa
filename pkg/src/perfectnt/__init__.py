"""Number-theoretic transforms over GF(p) built from perfect linear block codes.

The construction: take the parity-check matrix H of a perfect code,
inflate it to a square matrix H_e (null rows, parity-row sums, or the
full circulant of the check polynomial for cyclic codes), and form
T = H_e + lambda*I for an admissible lambda. The lambda-eigenspace of T
is exactly the code, T is invertible, and for cyclic codes T commutes
with cyclic shifts — giving a transform with shift and convolution
behavior analogous to the classical discrete-transform toolkit, with
exact arithmetic throughout.
"""

from .gf import FieldElement, ModulusMismatchError, PrimeField
from .poly import CyclicRing, FieldPoly, poly_gcd, reversed_coefficient_row
from .matrix import (
    FieldMatrix,
    SingularMatrixError,
    char_poly,
    circulant_from_first_row,
    determinant,
    format_matrix_json,
    format_matrix_text,
    inverse,
    kernel_basis,
    multiplicative_order,
    parse_matrix,
    rank,
    rref,
)
from .codes import (
    CodeSpec,
    UnsupportedParametersError,
    all_codewords,
    cyclic_hamming_parity_poly,
    cyclic_hamming_spec,
    format_code_spec,
    generator_from_parity,
    golay_spec,
    hamming74_systematic,
    hamming_parity_check,
    minimum_distance,
    parse_code_spec,
    perfect_witness,
    shortened_hamming_6_3,
    sphere_packing_sum,
)
from .transforms import (
    CheckResult,
    EigenvalueUnsuitableError,
    InflationStrategy,
    PropertyReport,
    TransformSpec,
    apply_via_polynomial,
    build_appendix_systematic,
    build_cyclic,
    build_extended_golay,
    build_standard,
    eigen_candidates,
    eigenspace,
    first_column_poly,
    format_transform,
    inflate,
    is_perfect_transform,
    rotate_right,
    verify_properties,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "CodeSpec",
    "CyclicRing",
    "EigenvalueUnsuitableError",
    "FieldElement",
    "FieldMatrix",
    "FieldPoly",
    "InflationStrategy",
    "ModulusMismatchError",
    "PrimeField",
    "PropertyReport",
    "SingularMatrixError",
    "TransformSpec",
    "UnsupportedParametersError",
    "all_codewords",
    "apply_via_polynomial",
    "build_appendix_systematic",
    "build_cyclic",
    "build_extended_golay",
    "build_standard",
    "char_poly",
    "circulant_from_first_row",
    "cyclic_hamming_parity_poly",
    "cyclic_hamming_spec",
    "determinant",
    "eigen_candidates",
    "eigenspace",
    "first_column_poly",
    "format_code_spec",
    "format_matrix_json",
    "format_matrix_text",
    "format_transform",
    "generator_from_parity",
    "golay_spec",
    "hamming74_systematic",
    "hamming_parity_check",
    "inflate",
    "inverse",
    "is_perfect_transform",
    "kernel_basis",
    "minimum_distance",
    "multiplicative_order",
    "parse_code_spec",
    "parse_matrix",
    "perfect_witness",
    "poly_gcd",
    "rank",
    "reversed_coefficient_row",
    "rotate_right",
    "rref",
    "shortened_hamming_6_3",
    "sphere_packing_sum",
    "verify_properties",
]
