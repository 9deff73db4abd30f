"""Tensor splitting solvers for multilinear systems A x^{m-1} = b with M-tensors."""

from ._core import (
    ConfigError,
    DimensionError,
    DuplicateEntryError,
    FormatError,
    NegativeRadicandError,
    NormalizationError,
    NotNonnegativeError,
    SingularEMatrixError,
    SplitPair,
    Tensor,
    VariantDomainError,
    build_preconditioner,
    check_conditions,
    classify,
    contract,
    elementwise_root,
    generate_example,
    identity_tensor,
    iteration_tensor,
    load_tensor,
    load_vector,
    majorization,
    make_splitting,
    matrix_tensor_product,
    normalize_system,
    precondition,
    solve,
    solve_example,
    spectral_radius,
    split_dlf,
    store_tensor,
    store_vector,
)

__all__ = [
    "ConfigError",
    "DimensionError",
    "DuplicateEntryError",
    "FormatError",
    "NegativeRadicandError",
    "NormalizationError",
    "NotNonnegativeError",
    "SingularEMatrixError",
    "SplitPair",
    "Tensor",
    "VariantDomainError",
    "build_preconditioner",
    "check_conditions",
    "classify",
    "contract",
    "elementwise_root",
    "generate_example",
    "identity_tensor",
    "iteration_tensor",
    "load_tensor",
    "load_vector",
    "majorization",
    "make_splitting",
    "matrix_tensor_product",
    "normalize_system",
    "precondition",
    "solve",
    "solve_example",
    "spectral_radius",
    "split_dlf",
    "store_tensor",
    "store_vector",
]
