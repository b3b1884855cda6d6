"""Exact rational arithmetic: polynomials, contraction, dense linear algebra."""

from .linalg import (
    QMatrix,
    det,
    kernel,
    maximal_minors,
    poly_matrix_minors,
    primitive_integer_vector,
    rank,
    rref,
    rref_with_pivots,
    solve,
)
from .poly import (
    DimensionError,
    ExpVec,
    Poly,
    Ring,
    RingError,
    as_fraction,
    contract,
    monomial_index,
    monomials,
    multinomial,
    power_of_linear,
)

__all__ = [
    "DimensionError", "ExpVec", "Poly", "QMatrix", "Ring", "RingError", "as_fraction",
    "contract", "det", "kernel", "maximal_minors", "monomial_index", "monomials",
    "multinomial", "poly_matrix_minors", "power_of_linear", "primitive_integer_vector",
    "rank", "rref", "rref_with_pivots", "solve",
]
