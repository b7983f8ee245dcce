"""Exact Hankel determinants of Catalan and Narayana convolution powers.

The package computes, over Z and Z[t] with no floating point anywhere,
Hankel determinants of backward-shifted convolution powers of the Catalan
numbers and their Narayana refinements, and ships a verification suite that
mechanically re-derives the shift theorems, support patterns, closed forms,
generating-function identities and the weighted-lattice-path model behind
them.
"""

from .polyring import (
    ExactDivisionError,
    Scalar,
    T,
    UniPoly,
    binomial,
    exact_div,
    render_poly,
)
from .series import (
    INTEGER_RING,
    POLY_RING,
    Series,
    TruncationError,
    ring_of,
)
from .families import (
    CATALAN_CONV,
    NARAYANA_CONV,
    Family,
    catalan,
    catalan_conv,
    catalan_power_series,
    catalan_series,
    companion_poly,
    companion_poly_t,
    lucas,
    mixed_power_series,
    narayana,
    narayana_conv,
    narayana_series,
    narayana_series_weighted,
)
from .hankel import (
    SquareMatrix,
    catalan_det,
    det_fraction_free,
    hankel_matrix,
    narayana_det,
)
from .paths import (
    DEFAULT_CAP,
    EnumerationCapError,
    check_path_weight_identity,
    enumerate_paths,
    path_heights,
    path_weight,
    path_weight_sum,
    path_weight_sum_table,
)
from .report import CheckReport, encode_value, render_value, summarize
from .verify import DEFAULT_SEED, SUITES, check_reciprocal_duality, run_suite

__version__ = "0.1.0"

__all__ = [
    "CATALAN_CONV",
    "CheckReport",
    "DEFAULT_CAP",
    "DEFAULT_SEED",
    "EnumerationCapError",
    "ExactDivisionError",
    "Family",
    "INTEGER_RING",
    "NARAYANA_CONV",
    "POLY_RING",
    "SUITES",
    "Scalar",
    "Series",
    "SquareMatrix",
    "T",
    "TruncationError",
    "UniPoly",
    "binomial",
    "catalan",
    "catalan_conv",
    "catalan_det",
    "catalan_power_series",
    "catalan_series",
    "check_path_weight_identity",
    "check_reciprocal_duality",
    "companion_poly",
    "companion_poly_t",
    "det_fraction_free",
    "enumerate_paths",
    "encode_value",
    "exact_div",
    "hankel_matrix",
    "lucas",
    "mixed_power_series",
    "narayana",
    "narayana_conv",
    "narayana_det",
    "narayana_series",
    "narayana_series_weighted",
    "path_heights",
    "path_weight",
    "path_weight_sum",
    "path_weight_sum_table",
    "render_poly",
    "render_value",
    "ring_of",
    "run_suite",
    "summarize",
]
