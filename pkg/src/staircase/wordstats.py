"""Distribution of the linear and cyclic "small variation" statistics on [k]^n.

``stat`` counts the positions i with |w_{i+1} - w_i| <= 1; the cyclic variant
also compares the last letter with the first.  Two independent enumerations
are provided: an odometer brute force over all k^n words and a transfer-matrix
dynamic program.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import List, Sequence

from .arith import Poly

BRUTE_BUDGET = 10**8

LINEAR = "linear"
CYCLIC = "cyclic"
KINDS = (LINEAR, CYCLIC)


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class TDist:
    """counts[m] = number of words of length n over [k] with statistic m."""

    counts: tuple
    n: int
    k: int
    kind: str

    def as_poly(self) -> Poly:
        return Poly(self.counts, "t")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def rows(self):
        for m, c in enumerate(self.counts):
            if c:
                yield self.n, self.k, self.kind, m, c


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def _length(n: int, kind: str) -> int:
    if kind == CYCLIC:
        return n + 1
    return max(n, 1)


def _near(a: int, b: int) -> bool:
    return abs(a - b) <= 1


def stat(word: Sequence[int], kind: str = LINEAR) -> int:
    """Number of (cyclically) adjacent positions whose letters differ by <= 1."""
    _check_kind(kind)
    n = len(word)
    s = sum(1 for i in range(n - 1) if _near(word[i + 1], word[i]))
    if kind == CYCLIC and n >= 1:
        s += _near(word[0], word[-1])
    return s


def brute_distribution(n: int, k: int, kind: str = LINEAR,
                       budget: int = BRUTE_BUDGET) -> TDist:
    """Histogram of ``stat`` over every word in [k]^n, by exhaustive enumeration."""
    _check_kind(kind)
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if k**n * max(n, 1) > budget:
        raise BudgetExceeded(f"{k}^{n} words exceed the enumeration budget {budget}")
    counts = [0] * _length(n, kind)
    word = [1] * n
    while True:
        counts[stat(word, kind)] += 1
        # odometer increment, last position fastest
        pos = n - 1
        while pos >= 0 and word[pos] == k:
            word[pos] = 1
            pos -= 1
        if pos < 0:
            break
        word[pos] += 1
    return TDist(tuple(counts), n, k, kind)


def _padd(a: List[int], b: List[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _step(state: List[List[int]], k: int) -> List[List[int]]:
    """Append one letter: weight t for a near step, 1 for a far one."""
    total = [0]
    for p in state:
        total = _padd(total, p)
    out = []
    for j in range(k):
        near = [0]
        for i in (j - 1, j, j + 1):
            if 0 <= i < k:
                near = _padd(near, state[i])
        far = [a - b for a, b in zip(total, near + [0] * (len(total) - len(near)))]
        out.append(_padd(far, [0] + near))
    return out


def dp_distribution(n: int, k: int, kind: str = LINEAR) -> TDist:
    """Same histogram as :func:`brute_distribution` via the transfer matrix.

    Linear words keep one polynomial in t per last letter; cyclic words keep
    one per (first letter, last letter) pair and close with the wrap-around
    factor.
    """
    _check_kind(kind)
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    length = _length(n, kind)
    if n == 0:
        return TDist(tuple([1] + [0] * (length - 1)), n, k, kind)

    if kind == LINEAR:
        state = [[1] for _ in range(k)]
        for _ in range(n - 1):
            state = _step(state, k)
        acc = [0]
        for p in state:
            acc = _padd(acc, p)
    else:
        acc = [0]
        for first in range(k):
            state = [[0] for _ in range(k)]
            state[first] = [1]
            for _ in range(n - 1):
                state = _step(state, k)
            for last, p in enumerate(state):
                acc = _padd(acc, [0] + p if _near(first, last) else p)
    acc = acc + [0] * (length - len(acc))
    return TDist(tuple(acc[:length]), n, k, kind)


SPECIAL = ("staircase", "cyclic_staircase", "hertzsprung", "cyclic_hertzsprung")


def special_count(n: int, k: int, which: str) -> int:
    """Number of staircase / Hertzsprung words (linear or cyclic) of length n."""
    if which not in SPECIAL:
        raise ValueError(f"which must be one of {SPECIAL}")
    if which == "staircase":
        if n == 0:
            return 1
        return dp_distribution(n, k, LINEAR).counts[n - 1]
    if which == "hertzsprung":
        return dp_distribution(n, k, LINEAR).counts[0]
    d = dp_distribution(n, k, CYCLIC)
    return d.counts[n] if which == "cyclic_staircase" else d.counts[0]


CSV_COLUMNS = ["n", "k", "kind", "m", "count"]


def distribution_csv(dists: Sequence[TDist]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for d in dists:
        w.writerows(d.rows())
    return buf.getvalue()
