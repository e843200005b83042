"""Closed-form generating functions for the linear and cyclic statistics.

Every closed form is built over ``RatFunc`` from second-kind Chebyshev
polynomials evaluated at a rational argument ``phi = (1 - y) / (2y)``.  The
values U_j(phi) are never expanded around x = 0; instead the cleared
numerators P_j = (2y)^j U_j(phi) are generated by the recurrence

    P_0 = 1,  P_1 = 2(1 - y),  P_{j+1} = 2(1 - y) P_j - (2y)^2 P_{j-1}

and U_j(phi) is the quotient P_j / (2y)^j.  The powers of 2y cancel during
gcd reduction, so the final forms are regular at x = 0.

Here y = x(t - 1) for the bivariate functions, y = -x for their t = 0
specialisations and y = x for the one-variable staircase functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from .arith import DEFAULT_ORDER, BiPoly, BiSeries, RatFunc, series_expand

K_MAX_SYMBOLIC = 8

X = BiPoly.x()
T = BiPoly.t()
Y_BIVARIATE = X * (T - 1)

WHICH = ("F", "G", "staircase", "cyclic-staircase", "hertzsprung", "cyclic-hertzsprung")


class PhiContext:
    """Cleared Chebyshev numerators P_0..P_k at phi = (1 - y) / (2y)."""

    def __init__(self, k: int, y: BiPoly):
        if k < 2:
            raise ValueError(f"alphabet size must be >= 2, got {k}")
        self.k = k
        self.y = y
        two_y_sq = (2 * y) ** 2
        p = [BiPoly.const(1), 2 * (1 - y)]
        for _ in range(k - 1):
            p.append(2 * (1 - y) * p[-1] - two_y_sq * p[-2])
        self.P: List[BiPoly] = p

    def u(self, j: int) -> RatFunc:
        """U_j(phi) as a rational function; U_{-1} = 0."""
        if j == -1:
            return RatFunc(BiPoly())
        return RatFunc(self.P[j], (2 * self.y) ** j)


def _gamma(ctx: PhiContext) -> RatFunc:
    k, y = ctx.k, ctx.y
    uk, uk1 = ctx.u(k), ctx.u(k - 1)
    one_3y = RatFunc(1 - 3 * y)
    return k / one_3y - RatFunc(2 * y) / one_3y**2 * ((uk - uk1 - 1) / uk)


_cache: Dict[tuple, RatFunc] = {}


def _memo(key, build):
    if key not in _cache:
        _cache[key] = build()
    return _cache[key]


def gamma_ratfunc(k: int) -> RatFunc:
    """The sum of all entries of C(x(t-1))^{-1}, in closed form."""
    return _memo(("gamma", k), lambda: _gamma(PhiContext(k, Y_BIVARIATE)))


def F_closed(k: int) -> RatFunc:
    """sum_n f_{n,k}(t) x^n = 1 / (1 - x*gamma)."""
    return _memo(("F", k), lambda: 1 / (1 - X * gamma_ratfunc(k)))


def _G_from(ctx: PhiContext, gamma: RatFunc) -> RatFunc:
    k, y = ctx.k, ctx.y
    uk, uk1 = ctx.u(k), ctx.u(k - 1)
    f = 1 / (1 - X * gamma)
    pre = RatFunc(1 + 3 * y, (1 - 3 * y) * (1 + y))
    mid = RatFunc(2 * y * (k + 1)) / (RatFunc(1 + 3 * y) * uk)
    inner = (1 - X * (1 + k - uk) / RatFunc(1 - 3 * y)) * f + uk1 - 1
    return 1 + pre * (f - mid * inner + k * y - 1)


def G_closed(k: int) -> RatFunc:
    """sum_n g_{n,k}(t) x^n, assembled term by term from the stated formula, unsimplified."""
    return _memo(("G", k), lambda: _G_from(PhiContext(k, Y_BIVARIATE), gamma_ratfunc(k)))


def D_closed(k: int) -> RatFunc:
    """Staircase words: 1 + x(k-(3k+2)x)/(1-3x)^2 + 2x^2/(1-3x)^2 (U_{k-1}+1)/U_k."""
    def build():
        ctx = PhiContext(k, X)
        one_3x_sq = RatFunc((1 - 3 * X) ** 2)
        return (1 + RatFunc(X * (k - (3 * k + 2) * X)) / one_3x_sq
                + RatFunc(2 * X * X) / one_3x_sq * ((ctx.u(k - 1) + 1) / ctx.u(k)))
    return _memo(("D", k), build)


def E_closed(k: int) -> RatFunc:
    """Cyclic staircase words."""
    def build():
        ctx = PhiContext(k, X)
        den = RatFunc((1 + X) * (1 - 3 * X))
        return (1 + RatFunc(k * X * (1 + 3 * X)) / den
                - RatFunc(2 * (k + 1) * X) * ctx.u(k - 1) / (den * ctx.u(k)))
    return _memo(("E", k), build)


def hertzsprung_closed(k: int) -> RatFunc:
    """Words with no adjacent letters within distance 1 (U at argument -(1+x)/(2x))."""
    def build():
        ctx = PhiContext(k, -X)
        uk, uk1 = ctx.u(k), ctx.u(k - 1)
        one_3x = RatFunc(1 + 3 * X)
        inv = (1 - RatFunc(k * X) / one_3x
               - RatFunc(2 * X * X) / one_3x**2 * ((uk - uk1 - 1) / uk))
        return 1 / inv
    return _memo(("H", k), build)


def cyclic_hertzsprung_closed(k: int) -> RatFunc:
    """Cyclic analogue, built from gamma(x, 0)."""
    def build():
        ctx = PhiContext(k, -X)
        uk, uk1 = ctx.u(k), ctx.u(k - 1)
        f = 1 / (1 - X * _gamma(ctx))
        pre = RatFunc(1 - 3 * X, (1 + 3 * X) * (1 - X))
        mid = RatFunc(2 * X * (k + 1)) / (RatFunc(1 - 3 * X) * uk)
        inner = (1 - X * (1 + k - uk) / RatFunc(1 + 3 * X)) * f + uk1 - 1
        return 1 + pre * (f + mid * inner - k * X - 1)
    return _memo(("CH", k), build)


CLOSED = {
    "F": F_closed,
    "G": G_closed,
    "staircase": D_closed,
    "cyclic-staircase": E_closed,
    "hertzsprung": hertzsprung_closed,
    "cyclic-hertzsprung": cyclic_hertzsprung_closed,
}


@dataclass(frozen=True)
class GFResult:
    closed: RatFunc
    series: BiSeries

    def coefficients(self) -> List[Fraction]:
        """x-coefficients of a series that does not involve t."""
        return [c[0] for c in self.series.coeffs]


def gf(which: str, k: int, order: int = DEFAULT_ORDER) -> GFResult:
    if which not in CLOSED:
        raise ValueError(f"which must be one of {WHICH}")
    if not 2 <= k <= K_MAX_SYMBOLIC:
        raise ValueError(f"closed forms are built for 2 <= k <= {K_MAX_SYMBOLIC}")
    closed = CLOSED[which](k)
    return GFResult(closed, series_expand(closed, order))


def F_series(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    return gf("F", k, order)


def G_series(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    return gf("G", k, order)


def staircase_gf(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    return gf("staircase", k, order)


def cyclic_staircase_gf(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    return gf("cyclic-staircase", k, order)


def hertzsprung_gf(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    return gf("hertzsprung", k, order)


def cyclic_hertzsprung_gf(k: int, order: int = DEFAULT_ORDER) -> GFResult:
    return gf("cyclic-hertzsprung", k, order)


def diagonal_extract(series: BiSeries, shift: int) -> List[Fraction]:
    """[x^n t^(n - shift)] for n = 0..order; shift 1 reads staircase, 0 cyclic staircase."""
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    return series.diagonal(shift)


def staircase_from_F(k: int, order: int = DEFAULT_ORDER) -> List[Fraction]:
    """Staircase counts by diagonal extraction from F; the empty word adds 1 at n = 0."""
    diag = diagonal_extract(F_series(k, order).series, 1)
    diag[0] += 1
    return diag


def cyclic_staircase_from_G(k: int, order: int = DEFAULT_ORDER) -> List[Fraction]:
    return diagonal_extract(G_series(k, order).series, 0)


# Reference values of the cyclic Hertzsprung generating function for small k.
_x = X


def cyclic_hertzsprung_reference() -> Dict[int, RatFunc]:
    return {
        2: RatFunc(BiPoly.const(1)),
        3: RatFunc(-(_x**2 + 1), (_x - 1) * (_x + 1)),
        4: RatFunc(-3 * _x**4 + 3 * _x**2 + 1, (_x**2 - _x - 1) * (_x**2 + _x - 1)),
        5: RatFunc(-12 * _x**4 + 4 * _x**3 + 6 * _x**2 + 1,
                   4 * _x**4 - 2 * _x**3 - 6 * _x**2 + 1),
    }


def closed_text(f: RatFunc) -> str:
    """Canonical text: expanded numerator / denominator, monomials descending."""
    return str(f)
