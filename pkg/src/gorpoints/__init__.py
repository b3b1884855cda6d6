"""Decide whether finite point sets in projective space are arithmetically Gorenstein.

Everything is exact rational arithmetic.  The main entry point is
:func:`is_arithmetically_gorenstein`, which returns a certificate carrying the
relation ``alpha`` among the powers ``L_i^(s-1)``, the apolar form ``F`` and
the Hilbert function of its apolar algebra, or a structured failure reason.
"""

from .gorenstein import (
    AlphaHasZeroEntry,
    AlphaVector,
    DualDimensionTooSmall,
    GorensteinCertificate,
    KernelDimensionNotOne,
    Verdict,
    alpha_kernel,
    apolar_form,
    dgo_test,
    dual_module_dimension,
    inverse_system_generators,
    is_arithmetically_gorenstein,
    verify_g_admissible,
)
from .lifting import is_artinian_reduction, n0_table, nonliftable_test, waring_G
from .locus import LocusProblem, complete_to_gorenstein, minor_equations
from .pointset import Point, PointSet, choose_regular_form, hilbert_data, validate

__all__ = [
    "AlphaHasZeroEntry", "AlphaVector", "DualDimensionTooSmall", "GorensteinCertificate",
    "KernelDimensionNotOne", "LocusProblem", "Point", "PointSet", "Verdict",
    "alpha_kernel", "apolar_form", "choose_regular_form", "complete_to_gorenstein",
    "dgo_test", "dual_module_dimension", "hilbert_data", "inverse_system_generators",
    "is_arithmetically_gorenstein", "is_artinian_reduction", "minor_equations", "n0_table",
    "nonliftable_test", "validate", "verify_g_admissible", "waring_G",
]
