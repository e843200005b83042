"""Exact linear algebra behind the closed forms.

Pointwise checks at rational (x, t) of the matrix A(x,t), its decomposition
A = C(x(t-1)) - x 11^T, the closed-form inverse of C, the rank-one
(Sherman-Morrison) update, the row sums alpha_i, and the multiplicity
matrices X_1, X_2, X_3 used for the cyclic generating function.
"""
from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .arith import BiPoly, RatFunc, ZeroDenominator
from .chebyshev import cheb_u
from .genfunc import F_closed, gamma_ratfunc

Matrix = List[List]


class Singular(ZeroDivisionError):
    pass


class SingularParameter(ZeroDivisionError):
    """U_k vanishes at the Chebyshev argument, so the closed-form inverse is undefined."""


def _near(i: int, j: int) -> bool:
    return abs(i - j) <= 1


def identity(k: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return [[one if i == j else zero for j in range(k)] for i in range(k)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0])
    return [[sum((a[i][s] * b[s][j] for s in range(len(b))), a[i][0] * 0)
             for j in range(m)] for i in range(n)]


def total(m: Matrix):
    return sum((sum(row, m[0][0] * 0) for row in m), m[0][0] * 0)


def row_sums(m: Matrix) -> list:
    return [sum(row, row[0] * 0) for row in m]


def build_A(k: int, x, t) -> Matrix:
    """Entry (i,j): [i = j] - t*x if |i-j| <= 1, else -x."""
    return [[(1 if i == j else 0) - (t * x if _near(i, j) else x) for j in range(k)]
            for i in range(k)]


def build_C(k: int, y) -> Matrix:
    """Tridiagonal: 1 - y on the diagonal, -y beside it, 0 elsewhere."""
    return [[(1 - y if i == j else -y if _near(i, j) else y * 0) for j in range(k)]
            for i in range(k)]


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


def invert(m: Matrix) -> Matrix:
    """Exact inverse of a rational matrix.

    The matrix is scaled to integers, reduced by fraction-free (Bareiss)
    elimination on the augmented block [M | I], and solved by exact
    back substitution.
    """
    n = len(m)
    scale = 1
    for row in m:
        for v in row:
            scale = _lcm(scale, Fraction(v).denominator)
    a = [[int(Fraction(v) * scale) for v in row] + [int(i == j) for j in range(n)]
         for i, row in enumerate(m)]
    width = 2 * n
    prev = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise Singular("matrix is singular")
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
        for r in range(c + 1, n):
            for j in range(c + 1, width):
                a[r][j] = (a[c][c] * a[r][j] - a[r][c] * a[c][j]) // prev
            a[r][c] = 0
        prev = a[c][c]
    out = [[Fraction(0)] * n for _ in range(n)]
    for col in range(n):
        for r in range(n - 1, -1, -1):
            acc = Fraction(a[r][n + col])
            for j in range(r + 1, n):
                acc -= a[r][j] * out[j][col]
            out[r][col] = acc / a[r][r]
    return [[v * scale for v in row] for row in out]


def invert_symbolic(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse for matrices of RatFunc entries (small k only)."""
    n = len(m)
    one, zero = RatFunc(1), RatFunc(0)
    a = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if not a[r][c].is_zero()), None)
        if piv is None:
            raise Singular("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [v * inv for v in a[c]]
        for r in range(n):
            if r != c and not a[r][c].is_zero():
                f = a[r][c]
                a[r] = [v - f * w for v, w in zip(a[r], a[c])]
    return [row[n:] for row in a]


def build_A_symbolic(k: int) -> Matrix:
    """A(x,t) with RatFunc entries in x and t."""
    x, t = BiPoly.x(), BiPoly.t()
    return [[RatFunc(build_A(k, x, t)[i][j]) for j in range(k)] for i in range(k)]


def F_from_matrix_symbolic(k: int) -> RatFunc:
    """1 + x 1^T A^-1 1 by symbolic elimination; practical for k <= 4."""
    if k > 4:
        raise ValueError("symbolic inversion is limited to k <= 4")
    inv = invert_symbolic(build_A_symbolic(k))
    return 1 + RatFunc(BiPoly.x()) * total(inv)


def c_inverse_closed(k: int, y: Fraction) -> Matrix:
    """Closed-form inverse of C(y) via U_n at (1 - y) / (2y)."""
    y = Fraction(y)
    if y == 0:
        raise SingularParameter("y = 0")
    arg = (1 - y) / (2 * y)
    u = [cheb_u(n)(arg) for n in range(k + 1)]
    if u[k] == 0:
        raise SingularParameter(f"U_{k} vanishes at {arg}")
    scale = 1 / (y * u[k])
    return [[scale * (u[i] * u[k - 1 - j] if i <= j else u[j] * u[k - 1 - i])
             for j in range(k)] for i in range(k)]


def alpha_vector(k: int, arg: Fraction) -> List[Fraction]:
    """alpha_i = (U_{k-i}(U_i - 1) - U_{i-1}(U_{k-i-1} + 1)) / U_k, i = 1..k."""
    U = lambda n: cheb_u(n)(Fraction(arg))
    uk = U(k)
    return [(U(k - i) * (U(i) - 1) - U(i - 1) * (U(k - i - 1) + 1)) / uk
            for i in range(1, k + 1)]


def alpha_sum_closed(k: int, arg: Fraction) -> Fraction:
    """k - (U_k - U_{k-1} - 1) / ((arg - 1) U_k)."""
    arg = Fraction(arg)
    uk, uk1 = cheb_u(k)(arg), cheb_u(k - 1)(arg)
    return k - (uk - uk1 - 1) / ((arg - 1) * uk)


# ---------------------------------------------------------------------------
# pointwise checks
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    k: int
    point: Tuple[Fraction, ...]
    passed: bool
    witness: str = ""


def _pt(*vals) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in vals)


def _diff_witness(a: Matrix, b: Matrix) -> str:
    for i, (ra, rb) in enumerate(zip(a, b)):
        for j, (u, v) in enumerate(zip(ra, rb)):
            if u != v:
                return f"entry ({i + 1},{j + 1}): {u} != {v}"
    return ""


def check_invert(k: int, x: Fraction, t: Fraction) -> CheckResult:
    a = build_A(k, x, t)
    ok = matmul(a, invert(a)) == identity(k)
    return CheckResult("invert", k, _pt(x, t), ok, "" if ok else "A * A^-1 != I")


def check_decomposition(k: int, x: Fraction, t: Fraction) -> CheckResult:
    a = build_A(k, x, t)
    c = build_C(k, x * (t - 1))
    rhs = [[c[i][j] - x for j in range(k)] for i in range(k)]
    return CheckResult("decomposition", k, _pt(x, t), a == rhs, _diff_witness(a, rhs))


def check_c_inverse(k: int, y: Fraction) -> CheckResult:
    closed = c_inverse_closed(k, y)
    elim = invert(build_C(k, y))
    return CheckResult("c_inverse_closed", k, _pt(y), closed == elim, _diff_witness(closed, elim))


def sherman_morrison_check(k: int, x: Fraction, t: Fraction) -> CheckResult:
    """A^-1 = C^-1 + x C^-1 11^T C^-1 / (1 - x 1^T C^-1 1), C at x(t-1)."""
    x, t = Fraction(x), Fraction(t)
    ainv = invert(build_A(k, x, t))
    cinv = invert(build_C(k, x * (t - 1)))
    r = row_sums(cinv)
    col = [sum(cinv[i][j] for i in range(k)) for j in range(k)]
    denom = 1 - x * sum(r)
    rhs = [[cinv[i][j] + x * r[i] * col[j] / denom for j in range(k)] for i in range(k)]
    return CheckResult("sherman_morrison", k, _pt(x, t), ainv == rhs, _diff_witness(ainv, rhs))


def gamma_alpha_check(k: int, x: Fraction, t: Fraction) -> CheckResult:
    """1^T C^-1 1 = gamma(x,t); (C^-1 1)_i = alpha_i(phi) / (1 - 3y); sum of alpha_i."""
    x, t = Fraction(x), Fraction(t)
    y = x * (t - 1)
    phi = (1 - y) / (2 * y)
    cinv = invert(build_C(k, y))
    gamma = gamma_ratfunc(k)(x, t)
    problems = []
    if total(cinv) != gamma:
        problems.append(f"1^T C^-1 1 = {total(cinv)} but gamma = {gamma}")
    alpha = alpha_vector(k, phi)
    want = [a / (1 - 3 * y) for a in alpha]
    if row_sums(cinv) != want:
        problems.append("row sums of C^-1 differ from alpha_i / (1 - 3y)")
    if sum(alpha) != alpha_sum_closed(k, phi):
        problems.append(f"sum alpha = {sum(alpha)} but closed form = {alpha_sum_closed(k, phi)}")
    return CheckResult("gamma_alpha", k, _pt(x, t), not problems, "; ".join(problems))


def check_F_reconstruction(k: int, x: Fraction, t: Fraction) -> CheckResult:
    """1 + x 1^T A^-1 1 against the closed form of F."""
    x, t = Fraction(x), Fraction(t)
    lhs = 1 + x * total(invert(build_A(k, x, t)))
    rhs = F_closed(k)(x, t)
    return CheckResult("F_reconstruction", k, _pt(x, t), lhs == rhs,
                       "" if lhs == rhs else f"{lhs} != {rhs}")


# ---------------------------------------------------------------------------
# multiplicity matrices
# ---------------------------------------------------------------------------

def build_X_counting(which: int, k: int) -> List[List[int]]:
    """Entry (j,s): number of i in [k] meeting the defining condition."""
    conds: dict = {
        1: lambda i, j, s: _near(i, j) and _near(i, s),
        2: lambda i, j, s: _near(i, j) and not _near(i, s),
        3: lambda i, j, s: not _near(i, j) and not _near(i, s),
    }
    cond = conds[which]
    return [[sum(1 for i in range(1, k + 1) if cond(i, j, s)) for s in range(1, k + 1)]
            for j in range(1, k + 1)]


def _x1_case(k: int, j: int, s: int) -> int:
    if 2 <= s == j <= k - 1:
        return 3
    if (j, s) in ((1, 1), (k, k)) or abs(s - j) == 1:
        return 2
    if abs(s - j) == 2:
        return 1
    return 0


def _x2_case(k: int, j: int, s: int, literal: bool) -> int:
    # the literal condition 3 <= s = j - 1 misses (2,1) and (3,2); counting needs 1 <= s
    low = 3 if literal else 1
    if (j, s) in ((1, 2), (k, k - 1)) or s == j:
        return 0
    if ((j, s) in ((1, 3), (k, k - 2)) or 3 <= s == j + 1
            or low <= s == j - 1 <= k - 2):
        return 1
    if ((j == 1 and 4 <= s <= k) or (j == k and 1 <= s <= k - 3)
            or 4 <= s == j + 2 or s == j - 2 <= k - 3):
        return 2
    return 3


def _x3_case(k: int, j: int, s: int) -> int:
    if (j, s) in ((1, 1), (k, k)):
        return k - 2
    if (j, s) in ((1, 2), (2, 1), (k - 1, k), (k, k - 1)) or 2 <= j == s <= k - 1:
        return k - 3
    if ((j, s) in ((1, 3), (3, 1), (k - 2, k), (k, k - 2), (1, k), (k, 1))
            or 3 <= s == j + 1 <= k - 1 or 2 <= s == j - 1 <= k - 2):
        return k - 4
    if ((j == 1 and 4 <= s <= k - 1) or (j == k and 2 <= s <= k - 3)
            or (s == 1 and 4 <= j <= k - 1) or (s == k and 2 <= j <= k - 3)
            or 4 <= s == j + 2 <= k - 1 or 2 <= s == j - 2 <= k - 3):
        return k - 5
    return k - 6


def build_X_cases(which: int, k: int, literal: bool = False) -> List[List[int]]:
    """Multiplicity matrix from the case analysis (k >= 5).

    ``literal=True`` applies the X_2 case analysis literally; its condition
    ``3 <= s = j-1`` misses the entries (2,1) and (3,2).  The default reading
    uses ``1 <= s = j-1``, which agrees with direct counting.
    """
    if k < 5:
        raise ValueError("the case analysis needs k >= 5; use build_X_counting")
    rng = range(1, k + 1)
    if which == 1:
        return [[_x1_case(k, j, s) for s in rng] for j in rng]
    if which == 2:
        return [[_x2_case(k, j, s, literal) for s in rng] for j in rng]
    if which == 3:
        return [[_x3_case(k, j, s) for s in rng] for j in rng]
    raise ValueError("which must be 1, 2 or 3")


def build_X(which: int, k: int) -> List[List[int]]:
    """X_1, X_2 or X_3 for alphabet size k; case analysis for k >= 5, counting below."""
    if k < 5:
        return build_X_counting(which, k)
    return build_X_cases(which, k)


def partition_holds(k: int) -> bool:
    """(X_1)_js + (X_2)_js + (X_2)_sj + (X_3)_js = k for all j, s."""
    x1, x2, x3 = (build_X(w, k) for w in (1, 2, 3))
    return all(x1[j][s] + x2[j][s] + x2[s][j] + x3[j][s] == k
               for j in range(k) for s in range(k))


# ---------------------------------------------------------------------------
# random points and the report
# ---------------------------------------------------------------------------

def _small_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 20))


def _admissible(k: int, x: Fraction, t: Fraction) -> bool:
    y = x * (t - 1)
    if x == 0 or y == 0 or 1 - 3 * y == 0 or 1 + y == 0:
        return False
    phi = (1 - y) / (2 * y)
    if cheb_u(k)(phi) == 0 or phi == 1:
        return False
    try:
        cinv = invert(build_C(k, y))
        invert(build_A(k, x, t))
    except Singular:
        return False
    if 1 - x * total(cinv) == 0:
        return False
    try:
        F_closed(k)(x, t)
        gamma_ratfunc(k)(x, t)
    except ZeroDenominator:
        return False
    return True


def random_points(k: int, count: int, rng: random.Random) -> List[Tuple[Fraction, Fraction]]:
    """``count`` admissible rational points, resampling at any vanishing denominator."""
    pts = []
    while len(pts) < count:
        x, t = _small_rational(rng), _small_rational(rng)
        if _admissible(k, x, t):
            pts.append((x, t))
    return pts


POINT_CHECKS: List[Callable[[int, Fraction, Fraction], CheckResult]] = [
    check_invert,
    check_decomposition,
    sherman_morrison_check,
    gamma_alpha_check,
    check_F_reconstruction,
]


def run_matrix_suite(k_max: int = 6, seed: int = 0, points: int = 5,
                     x_k_max: Optional[int] = None) -> List[CheckResult]:
    """Every pointwise check at ``points`` seeded points for 2 <= k <= k_max,
    plus the multiplicity-matrix checks for 5 <= k <= max(k_max, 10)."""
    rng = random.Random(seed)
    out: List[CheckResult] = []
    for k in range(2, k_max + 1):
        for x, t in random_points(k, points, rng):
            for check in POINT_CHECKS:
                out.append(check(k, x, t))
            out.append(check_c_inverse(k, x * (t - 1)))
    for k in range(5, (x_k_max or max(k_max, 10)) + 1):
        out.append(CheckResult("x_partition", k, (), partition_holds(k)))
        for w in (1, 2, 3):
            cases, counted = build_X_cases(w, k), build_X_counting(w, k)
            out.append(CheckResult(f"x{w}_cases_vs_counting", k, (), cases == counted,
                                   _diff_witness(cases, counted)))
    return out


REPORT_COLUMNS = ["check", "k", "point", "result", "witness"]


def report_rows(results: Sequence[CheckResult]) -> List[list]:
    return [[r.name, r.k, " ".join(str(v) for v in r.point),
             "pass" if r.passed else "fail", r.witness] for r in results]


def report_csv(results: Sequence[CheckResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_COLUMNS)
    w.writerows(report_rows(results))
    return buf.getvalue()
