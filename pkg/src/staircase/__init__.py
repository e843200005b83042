"""Exact arithmetic for staircase words and their generating functions."""
from .arith import BiPoly, BiSeries, Poly, RatFunc, series_expand
from .chebyshev import cheb_t, cheb_u, z_poly
from .genfunc import F_closed, G_closed, gamma_ratfunc, gf
from .qsums import q_closed, q_direct, verify_all, verify_q
from .wordstats import brute_distribution, dp_distribution, special_count, stat

__all__ = [
    "BiPoly", "BiSeries", "Poly", "RatFunc", "series_expand",
    "cheb_t", "cheb_u", "z_poly",
    "F_closed", "G_closed", "gamma_ratfunc", "gf",
    "q_closed", "q_direct", "verify_all", "verify_q",
    "brute_distribution", "dp_distribution", "special_count", "stat",
]
