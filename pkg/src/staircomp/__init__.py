"""Exact counting of staircase patterns inside integer compositions.

The package computes, in exact integer arithmetic, the trivariate series
F(x, y, q) whose coefficient of x^a y^b q^s counts the compositions of a
with b parts containing exactly s staircase windows 1+, 2+, ..., m+, and
cross-checks every closed form against brute-force enumeration.
"""

from .determinants import (
    DET_DIM_LIMIT,
    DeterminantLimitError,
    SeriesMatrix,
    build_system,
    denominator_det,
    det_division_free,
    inner_block_det,
    inner_block_matrix,
    numerator_det,
    numerator_matrix,
    top_block_det,
    top_block_matrix,
)
from .genfun import (
    gf_at_q1,
    staircase_gf,
    staircase_gf_cramer,
    total_staircases,
    total_staircases_gf,
)
from .oracle import (
    MAX_ENUM_N,
    Composition,
    EnumerationLimitError,
    Histogram,
    compositions,
    count_staircases,
    staircase_histogram,
)
from .oracle import total_staircases as total_staircases_oracle
from .series import (
    DEFAULT_TRUNC,
    NonUnitError,
    TriSeries,
    monomial,
    one,
    variables,
    zero,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TRUNC",
    "DET_DIM_LIMIT",
    "MAX_ENUM_N",
    "Composition",
    "DeterminantLimitError",
    "EnumerationLimitError",
    "Histogram",
    "NonUnitError",
    "SeriesMatrix",
    "TriSeries",
    "build_system",
    "compositions",
    "count_staircases",
    "denominator_det",
    "det_division_free",
    "gf_at_q1",
    "inner_block_det",
    "inner_block_matrix",
    "monomial",
    "numerator_det",
    "numerator_matrix",
    "one",
    "staircase_gf",
    "staircase_gf_cramer",
    "staircase_histogram",
    "top_block_det",
    "top_block_matrix",
    "total_staircases",
    "total_staircases_gf",
    "total_staircases_oracle",
    "variables",
    "zero",
]
