"""Exact counting of peaks and valleys at a fixed height in Dyck paths."""

from .cfrac import (
    WeightSpec,
    catalan_cfrac,
    lemma_iterated_cfrac,
    lemma_rhs,
    peak_bivar_cfrac,
    rv_cfrac,
    weight_spec_from_json,
)
from .chebyshev import IntPoly, f_series_t, q_poly, r_series, u_inv_sq_series
from .gfcount import (
    GfQuery,
    catalan_power_coefficient,
    no_valley_band_gf,
    peak_gf,
    peak_k0_via_remark,
    peak1_nonempty_blocks_gf,
    stat_gf,
    valley_gf,
    valley0_binomial_literal,
    valley0_closed_count,
)
from .paths import (
    CountTable,
    DyckPath,
    PathError,
    StatKind,
    StatProfile,
    bounded_height_count,
    build_table,
    count_exact_dp,
    enumerate_paths,
    parse_path,
    psi,
    statistics,
    theta_forward,
    theta_inverse,
)
from .series import (
    BivarSeries,
    NonIntegralError,
    NonInvertibleError,
    Series,
    catalan_series,
)

__version__ = "0.1.0"

__all__ = [
    "BivarSeries",
    "CountTable",
    "DyckPath",
    "GfQuery",
    "IntPoly",
    "NonIntegralError",
    "NonInvertibleError",
    "PathError",
    "Series",
    "StatKind",
    "StatProfile",
    "WeightSpec",
    "bounded_height_count",
    "build_table",
    "catalan_cfrac",
    "catalan_power_coefficient",
    "catalan_series",
    "count_exact_dp",
    "enumerate_paths",
    "f_series_t",
    "lemma_iterated_cfrac",
    "lemma_rhs",
    "no_valley_band_gf",
    "parse_path",
    "peak_bivar_cfrac",
    "peak_gf",
    "peak_k0_via_remark",
    "peak1_nonempty_blocks_gf",
    "psi",
    "q_poly",
    "r_series",
    "rv_cfrac",
    "stat_gf",
    "statistics",
    "theta_forward",
    "theta_inverse",
    "u_inv_sq_series",
    "valley_gf",
    "valley0_binomial_literal",
    "valley0_closed_count",
    "weight_spec_from_json",
]
