"""Breadth and characteristic sequence of nilpotent Lie algebras, with exact arithmetic."""

from .exact_linalg import Matrix, format_rational, parse_rational
from .invariants import (
    SamplingConfig,
    breadth,
    breadth_from_sequence,
    characteristic_sequence,
    classify_b2,
    jordan_type_of,
    verify_theorem_b,
)
from .lie import Cochain2, LieAlgebra, Subspace, jacobi_check

__all__ = [
    "Cochain2", "LieAlgebra", "Matrix", "SamplingConfig", "Subspace", "breadth", "breadth_from_sequence",
    "characteristic_sequence", "classify_b2", "format_rational", "jacobi_check", "jordan_type_of",
    "parse_rational", "verify_theorem_b",
]
__version__ = "0.1.0"
