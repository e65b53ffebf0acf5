"""Exact rational linear algebra and polynomial machinery."""

from .qmat import QMat, Subspace, unit_vec, vec_add, vec_is_zero, vec_scale, vec_sub, vec_zero
from .qpoly import QPoly, sturm_chain, sturm_count
from .profiles import (
    PrimaryProfile,
    RootClassification,
    imaginary_part_split,
    negation_partner,
    poly_of_matrix,
    primary_profiles,
    profiles_charpoly,
    root_classes,
)
from .zassenhaus import factor_irreducible

__all__ = [
    "QMat",
    "Subspace",
    "QPoly",
    "sturm_chain",
    "sturm_count",
    "PrimaryProfile",
    "RootClassification",
    "primary_profiles",
    "profiles_charpoly",
    "poly_of_matrix",
    "negation_partner",
    "imaginary_part_split",
    "root_classes",
    "factor_irreducible",
    "unit_vec",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "vec_zero",
    "vec_is_zero",
]
