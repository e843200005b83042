from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from staircase.arith import Poly, RatFunc
from staircase.chebyshev import (ChebCache, cheb_compose, cheb_t, cheb_u,
                                 product_identity_sides, u_of_t, z_of_t, z_poly)

x = Poly.gen("x")


def test_u_examples():
    assert cheb_u(2) == 4 * x**2 - 1
    assert cheb_u(-1) == Poly()
    assert cheb_u(3)(2) == 56


def test_t_examples():
    assert cheb_t(2) == 2 * x**2 - 1
    assert cheb_t(3) == 4 * x**3 - 3 * x
    assert (cheb_u(4) - cheb_u(2)) * Fraction(1, 2) == 8 * x**4 - 8 * x**2 + 1


def test_negative_t_rejected():
    with pytest.raises(ValueError):
        cheb_t(-1)


def test_negative_u_convention():
    assert cheb_u(-2) == Poly([-1])
    for n in range(2, 10):
        assert cheb_u(-n) == -cheb_u(n - 2)


def test_z_examples():
    assert z_poly(1) == Poly([1])
    assert z_poly(2) == 2 * x + 1
    assert z_poly(0) == Poly()


def test_compose_examples():
    assert u_of_t(1, 2) == 4 * x**2 - 2
    assert u_of_t(0, 3) == Poly([1])
    assert cheb_compose(cheb_u(2), 2) * cheb_u(1) == cheb_u(5)
    assert cheb_u(5) == 32 * x**5 - 32 * x**3 + 6 * x
    assert z_of_t(2, 3) == z_poly(2).compose(cheb_t(3))


def test_recurrences_up_to_24():
    for n in range(2, 25):
        assert cheb_u(n) == 2 * x * cheb_u(n - 1) - cheb_u(n - 2)
        assert cheb_t(n) == 2 * x * cheb_t(n - 1) - cheb_t(n - 2)


def test_t_from_u():
    for n in range(0, 25):
        assert cheb_t(n) * 2 == cheb_u(n) - cheb_u(n - 2)


def test_z_definition():
    for k in range(-6, 25):
        assert z_poly(k) * (2 * x - 2) + 1 + cheb_u(k - 1) == cheb_u(k)


def test_product_identity():
    for i in range(11):
        for j in range(i + 1):
            lhs, num, den = product_identity_sides(i, j)
            assert RatFunc(lhs) == RatFunc(num, den)


@given(st.integers(1, 5), st.integers(1, 5))
def test_composition_factorisation(n, m):
    assert cheb_u(n * m - 1) == u_of_t(m - 1, n) * cheb_u(n - 1)


@given(st.integers(0, 12), st.integers(0, 6))
def test_t_composes(m, n):
    assert cheb_t(m).compose(cheb_t(n)) == cheb_t(m * n)


@given(st.integers(-30, 30))
def test_value_at_one(n):
    assert cheb_u(n)(1) == n + 1


def test_cache_grows_and_matches():
    c = ChebCache("second", limit=4)
    assert c[10] == cheb_u(10)
    assert len(c.computed) >= 11
    with pytest.raises(ValueError):
        ChebCache("third")
