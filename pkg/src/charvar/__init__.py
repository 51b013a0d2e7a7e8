"""Exact counting for conjugation actions on tuples of invertible matrices.

The package computes, as explicit polynomials in q, the number of
isomorphism classes of d-dimensional representations of a free group on m
generators over F_q: all orbits, the completely reducible ones, and the
absolutely irreducible / absolutely indecomposable ones.  Everything is
exact (integers and rationals only), built from a small truncated
power-series kernel with plethystic exponentials, and cross-checked by
brute-force enumeration over small finite fields and symmetric groups.
"""

from .arith import divisors, factorize, is_prime, mobius, partitions, totient
from .combinatorics import (
    CensusRow, SizeGuardError, census_series_checks, connected_tuples,
    connected_weight_poly, connected_weight_series, hall_subgroup_counts,
    inversions, length_gen_poly, limit_transform, perm_rep_census,
    q_factorial, q_int, subgroup_counts,
)
from .counting import (
    CharVarTable, IntegralityError, PositivityReport, TableRow,
    abs_ind_counts, abs_ind_series, abs_irr_counts, abs_irr_series,
    build_table, centralizer_weight, class_weight_series, default_dmax,
    e_polynomial, euler_characteristics, orbit_counts, orbit_series,
    positivity_report, rep_counts, rep_series, s_positive, uv_str,
)
from .fforacle import (
    ConjClass, OracleCensus, burnside_orbit_count, conjugacy_classes,
    gl_enumerate, gl_order, is_absolutely_indecomposable,
    is_absolutely_irreducible, orbit_census,
)
from .plethystic import Exp, Log, Pow, irreducible_poly_count, pow_product
from .qpoly import (
    ExactDivisionError, PoleError, QPoly, QRatFun, expand_in_s,
    from_s_coeffs, limit_at_1, poly_str, q, ratio,
)
from .tseries import TSeries
from .verify import CheckResult, all_passed, run_verification

__version__ = "0.1.0"

__all__ = [
    "CensusRow", "CharVarTable", "CheckResult", "ConjClass",
    "ExactDivisionError", "Exp", "IntegralityError", "Log", "OracleCensus",
    "PoleError", "PositivityReport", "Pow", "QPoly", "QRatFun",
    "SizeGuardError", "TSeries", "TableRow", "abs_ind_counts",
    "abs_ind_series", "abs_irr_counts", "abs_irr_series", "all_passed",
    "build_table", "burnside_orbit_count", "census_series_checks",
    "centralizer_weight", "class_weight_series", "conjugacy_classes",
    "connected_tuples", "connected_weight_poly", "connected_weight_series",
    "default_dmax", "divisors", "e_polynomial", "euler_characteristics",
    "expand_in_s", "factorize", "from_s_coeffs", "gl_enumerate", "gl_order",
    "hall_subgroup_counts", "inversions", "irreducible_poly_count",
    "is_absolutely_indecomposable", "is_absolutely_irreducible", "is_prime",
    "length_gen_poly", "limit_at_1", "limit_transform", "mobius",
    "orbit_census", "orbit_counts", "orbit_series", "partitions",
    "perm_rep_census", "poly_str", "positivity_report", "pow_product", "q",
    "q_factorial", "q_int", "ratio", "rep_counts", "rep_series",
    "run_verification", "s_positive", "subgroup_counts", "totient", "uv_str",
]
