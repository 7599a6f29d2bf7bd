"""Pairwise k-neighborly joker string families.

Thin re-export of the compiled extension.  All heavy lifting lives in the
C++ core; this package only provides the import surface.
"""

from neighborly._core import (  # noqa: F401
    MAX_LENGTH,
    SOLVER_MAX_D,
    NeighborlyError,
    __version__,
    alon_bounds,
    antipode,
    asymptotic_ratio,
    box_to_string,
    build_family,
    concat,
    construction_report,
    cwxy_upper,
    diam,
    dist,
    distance_stats,
    exact_n,
    gkp_reference,
    inner,
    intersection_dimension,
    is_k_neighborly,
    lower_bound_formula,
    ratio_floor,
    simplified_upper,
    string_to_box,
    to_decimal,
    two_cell_lower,
    weight,
)

__all__ = [
    "MAX_LENGTH",
    "SOLVER_MAX_D",
    "NeighborlyError",
    "__version__",
    "alon_bounds",
    "antipode",
    "asymptotic_ratio",
    "box_to_string",
    "build_family",
    "concat",
    "construction_report",
    "cwxy_upper",
    "diam",
    "dist",
    "distance_stats",
    "exact_n",
    "gkp_reference",
    "inner",
    "intersection_dimension",
    "is_k_neighborly",
    "lower_bound_formula",
    "ratio_floor",
    "simplified_upper",
    "string_to_box",
    "to_decimal",
    "two_cell_lower",
    "weight",
]
