"""Pointed matroids, strong maps, and their Hall-algebra structure."""

from ._core import (
    Matroid,
    MatroidParseError,
    MatroidValidationError,
    antipode,
    check_flag_grids,
    duality_check,
    enumerate_classes,
    flag_count,
    hall_coproduct,
    hall_product,
    is_graphic,
    is_strong_map,
    matroid_of,
    mm_coproduct,
    structure_constant,
    verify_axioms,
)

__all__ = [
    "Matroid",
    "MatroidParseError",
    "MatroidValidationError",
    "antipode",
    "check_flag_grids",
    "duality_check",
    "enumerate_classes",
    "flag_count",
    "hall_coproduct",
    "hall_product",
    "is_graphic",
    "is_strong_map",
    "matroid_of",
    "mm_coproduct",
    "structure_constant",
    "verify_axioms",
]
