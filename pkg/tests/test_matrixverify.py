import random
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from staircase.genfunc import F_closed
from staircase.matrixverify import (Singular, SingularParameter, alpha_sum_closed,
                                    alpha_vector, build_A, build_C, build_X,
                                    build_X_cases, build_X_counting, c_inverse_closed,
                                    check_c_inverse, check_decomposition,
                                    check_F_reconstruction, F_from_matrix_symbolic,
                                    gamma_alpha_check, identity, invert, matmul,
                                    partition_holds, random_points, report_csv,
                                    run_matrix_suite, sherman_morrison_check)

E1_X2 = [
    [0, 0, 1, 2, 2, 2, 2, 2],
    [1, 0, 1, 2, 3, 3, 3, 3],
    [2, 1, 0, 1, 2, 3, 3, 3],
    [3, 2, 1, 0, 1, 2, 3, 3],
    [3, 3, 2, 1, 0, 1, 2, 3],
    [3, 3, 3, 2, 1, 0, 1, 2],
    [3, 3, 3, 3, 2, 1, 0, 1],
    [2, 2, 2, 2, 2, 1, 0, 0],
]


def test_build_A_examples():
    assert build_A(2, Q(1, 5), 2) == [[Q(3, 5), Q(-2, 5)], [Q(-2, 5), Q(3, 5)]]
    x = Q(2, 7)
    assert build_A(4, x, 1) == [[(i == j) - x for j in range(4)] for i in range(4)]
    assert build_A(3, x, 0) == [[1, 0, -x], [0, 1, 0], [-x, 0, 1]]


def test_build_C_examples():
    assert build_C(4, 0) == identity(4)
    h = Q(1, 2)
    assert build_C(3, h) == [[h, -h, 0], [-h, h, -h], [0, -h, h]]
    assert check_decomposition(5, Q(3, 7), Q(-2, 3)).passed


def test_invert_examples():
    assert invert([[Q(3, 5), Q(-2, 5)], [Q(-2, 5), Q(3, 5)]]) == [[3, 2], [2, 3]]
    assert invert(identity(5)) == identity(5)
    with pytest.raises(Singular):
        invert(build_C(2, Q(1, 2)))


@given(st.integers(1, 6).flatmap(lambda n: st.lists(
    st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
             min_size=n, max_size=n), min_size=n, max_size=n)))
def test_invert_exact(m):
    try:
        inv = invert(m)
    except Singular:
        return
    assert matmul(m, inv) == identity(len(m))


def test_c_inverse_examples():
    c = c_inverse_closed(3, Q(1, 3))
    assert c[0][0] == Q(9, 4)
    assert c == invert(build_C(3, Q(1, 3)))
    assert c_inverse_closed(2, Q(1, 5)) == invert(build_C(2, Q(1, 5)))
    with pytest.raises(SingularParameter):
        c_inverse_closed(2, Q(1, 2))
    with pytest.raises(SingularParameter):
        c_inverse_closed(2, 0)


def test_c_inverse_random():
    rng = random.Random(5)
    for k in range(2, 7):
        for px, pt in random_points(k, 5, rng):
            y = px * (pt - 1)
            assert check_c_inverse(k, y).passed
            c = c_inverse_closed(k, y)
            assert all(c[i][j] == c[j][i] for i in range(k) for j in range(k))


def test_sherman_morrison():
    assert invert(build_A(2, Q(1, 5), 2)) == [[3, 2], [2, 3]]
    assert sherman_morrison_check(2, Q(1, 5), 2).passed
    assert sherman_morrison_check(4, Q(1, 7), 1).passed
    rng = random.Random(1)
    for k in range(2, 7):
        for px, pt in random_points(k, 5, rng):
            assert sherman_morrison_check(k, px, pt).passed


def test_gamma_alpha():
    assert gamma_alpha_check(2, Q(1, 5), 2).passed
    rng = random.Random(2)
    for k in range(2, 7):
        for px, pt in random_points(k, 5, rng):
            r = gamma_alpha_check(k, px, pt)
            assert r.passed, r.witness


def test_alpha_sum_at_two():
    for k in range(2, 10):
        assert sum(alpha_vector(k, 2)) == alpha_sum_closed(k, 2)


def test_F_reconstruction():
    rng = random.Random(3)
    for k in range(2, 7):
        for px, pt in random_points(k, 3, rng):
            assert check_F_reconstruction(k, px, pt).passed


def test_symbolic_inverse_small_k():
    for k in (2, 3, 4):
        assert F_from_matrix_symbolic(k) == F_closed(k)
    with pytest.raises(ValueError):
        F_from_matrix_symbolic(5)


def test_X_examples():
    assert build_X(2, 8) == E1_X2
    assert build_X(3, 8)[0][0] == 6
    assert build_X(1, 8)[0][:3] == [2, 2, 1]


def test_X_cases_match_counting():
    for k in range(5, 13):
        for w in (1, 2, 3):
            assert build_X_cases(w, k) == build_X_counting(w, k), (w, k)


def test_X2_literal_condition_misses_two_entries():
    literal = build_X_cases(2, 8, literal=True)
    diff = [(j + 1, s + 1) for j in range(8) for s in range(8) if literal[j][s] != E1_X2[j][s]]
    assert diff == [(2, 1), (3, 2)]


def test_X_small_k_by_counting():
    assert build_X(1, 3) == build_X_counting(1, 3)
    with pytest.raises(ValueError):
        build_X_cases(1, 4)


def test_partition():
    for k in range(2, 11):
        assert partition_holds(k)


def test_suite_and_report():
    res = run_matrix_suite(3, seed=4, points=2, x_k_max=5)
    assert all(r.passed for r in res)
    text = report_csv(res)
    assert text.splitlines()[0] == "check,k,point,result,witness"
    assert report_csv(run_matrix_suite(3, seed=4, points=2, x_k_max=5)) == text
