"""Invariants of isolated hypersurface singularities in exact rational
arithmetic: Milnor and Tjurina numbers, Newton polyhedra, Steenbrink
spectrum, Hodge ideal spectrum, and Tjurina subspectrum."""

__version__ = "0.1.0"

from .errors import (
    SingspecError,
    UnsupportedError,
    NonIsolatedError,
    ZeroJacobianError,
    DegenerateError,
    ResourceCapError,
)
from .polycore import (
    Polynomial,
    Spectrum,
    parse_polynomial,
    partial_derivative,
    op_P,
    op_P_tilde,
    spectrum_product_formula,
    spectrum_T,
    spectrum_symmetry_check,
    verify_hilbert_poincare,
    make_weights,
)

__all__ = [
    "SingspecError", "UnsupportedError", "NonIsolatedError",
    "ZeroJacobianError", "DegenerateError", "ResourceCapError",
    "Polynomial", "Spectrum", "parse_polynomial", "partial_derivative",
    "op_P", "op_P_tilde", "spectrum_product_formula", "spectrum_T",
    "spectrum_symmetry_check", "verify_hilbert_poincare", "make_weights",
]
