"""Chebyshev polynomials of both kinds over Q[x].

Second-kind polynomials accept negative indices via the backward recurrence,
which gives U_{-1} = 0 and U_{-n} = -U_{n-2}.
"""
from __future__ import annotations

import threading
from typing import List

from .arith import Poly

CACHE_LIMIT = 64

X = Poly.gen("x")


class ChebCache:
    """Grow-only table of T_n or U_n, n >= 0."""

    def __init__(self, kind: str, limit: int = CACHE_LIMIT):
        if kind not in ("first", "second"):
            raise ValueError(f"unknown kind {kind!r}")
        self.kind = kind
        self.limit = limit
        self.computed: List[Poly] = [Poly([1]), X if kind == "first" else 2 * X]
        self._lock = threading.Lock()

    def _extend(self, n: int) -> None:
        with self._lock:
            c = self.computed
            while len(c) <= n:
                c.append(2 * X * c[-1] - c[-2])

    def __getitem__(self, n: int) -> Poly:
        if n < 0:
            raise IndexError(n)
        if n >= len(self.computed):
            self._extend(max(n, self.limit))
        return self.computed[n]


_U = ChebCache("second")
_T = ChebCache("first")


def cheb_u(n: int) -> Poly:
    """U_n(x) for any integer n."""
    if n >= 0:
        return _U[n]
    if n == -1:
        return Poly()
    return -_U[-n - 2]


def cheb_t(n: int) -> Poly:
    """T_n(x), n >= 0."""
    if n < 0:
        raise ValueError(f"T_n is only defined here for n >= 0, got {n}")
    return _T[n]


def z_poly(k: int) -> Poly:
    """(U_k - U_{k-1} - 1) / (2(x - 1)), divided exactly.

    Negative k is accepted: U_n(1) = n + 1 holds for every integer n under the
    backward extension, so the division stays exact.
    """
    return (cheb_u(k) - cheb_u(k - 1) - 1).divexact(2 * X - 2)


def cheb_compose(outer: Poly, m: int) -> Poly:
    """outer(T_m(x))."""
    return outer.compose(cheb_t(m))


def u_of_t(n: int, m: int) -> Poly:
    """U_n(T_m(x))."""
    return cheb_compose(cheb_u(n), m)


def z_of_t(k: int, m: int) -> Poly:
    """Z_k(T_m(x))."""
    return cheb_compose(z_poly(k), m)


def product_identity_sides(i: int, j: int):
    """Both sides of U_i U_j = (U_{i-j} - xU_{i-j-1} - U_{i+j+2} + xU_{i+j+1}) / (2(1 - x^2)).

    Returned as (lhs, rhs numerator, rhs denominator).
    """
    lhs = cheb_u(i) * cheb_u(j)
    num = cheb_u(i - j) - X * cheb_u(i - j - 1) - cheb_u(i + j + 2) + X * cheb_u(i + j + 1)
    return lhs, num, 2 - 2 * X * X
