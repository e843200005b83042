"""Exact polynomial, rational-function and truncated-series arithmetic.

Scalars are :class:`fractions.Fraction` throughout.  ``Poly`` is a dense
univariate polynomial, ``BiPoly`` a sparse polynomial in ``x`` and ``t``.
``RatFunc`` stores a reduced quotient of either kind and ``BiSeries`` a power
series in ``x`` truncated at a fixed order whose coefficients are polynomials
in ``t``.

All values are immutable.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.rings import ring as _sympy_ring

Scalar = Union[int, Fraction]

DEFAULT_ORDER = 12


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class ZeroDenominator(ZeroDivisionError):
    pass


class PoleAtOrigin(ArithmeticError):
    """The expansion point x = 0 is a pole of the rational function."""


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------

class Poly:
    """Dense polynomial over Q in one variable (``"x"`` or ``"t"``).

    ``coeffs[i]`` is the coefficient of ``var**i``.  The zero polynomial has an
    empty coefficient tuple.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "x"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)
        self.var = var

    @classmethod
    def const(cls, c: Scalar, var: str = "x") -> "Poly":
        return cls([c], var)

    @classmethod
    def gen(cls, var: str = "x") -> "Poly":
        return cls([0, 1], var)

    @classmethod
    def monomial(cls, deg: int, c: Scalar = 1, var: str = "x") -> "Poly":
        return cls([0] * deg + [c], var)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other], self.var)
        return NotImplemented

    def _var_with(self, other: "Poly") -> str:
        return self.var if self.degree > 0 or other.degree <= 0 else other.var

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)], self._var_with(other))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs], self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly((), self._var_with(other))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self._var_with(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly([1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other], self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        return self.degree <= 0 or self.var == other.var

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, value):
        """Horner evaluation; ``value`` may be a scalar or another polynomial."""
        acc = value * 0 if not isinstance(value, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        out = Poly((), inner.var)
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c:
                q = c / lead
                quot[i - dq] = q
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= q * b
        return Poly(quot, self.var), Poly(rem[:dq] if dq > 0 else (), self.var)

    def divexact(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise NotDivisible(f"({self}) / ({other}) leaves remainder {r}")
        return q

    def monic(self) -> "Poly":
        return self * (1 / self.lead) if self.coeffs else self

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def cancel(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        """Divide both ``self`` and ``other`` by their gcd."""
        g = self.gcd(other)
        if g.degree <= 0:
            return self, other
        return self.divexact(g), other.divexact(g)

    # RatFunc normalisation hooks
    def low_coeff(self) -> Fraction:
        for c in self.coeffs:
            if c:
                return c
        return Fraction(0)

    def terms(self) -> List[Tuple[Tuple[int, int], Fraction]]:
        """Nonzero terms keyed by (x-degree, t-degree)."""
        if self.var == "t":
            return [((0, i), c) for i, c in enumerate(self.coeffs) if c]
        return [((i, 0), c) for i, c in enumerate(self.coeffs) if c]

    def to_bipoly(self) -> "BiPoly":
        return BiPoly(dict(self.terms()))

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]}, {self.var!r})"

    def __str__(self):
        return format_terms(self.terms())


# ---------------------------------------------------------------------------
# bivariate
# ---------------------------------------------------------------------------

Monomial = Tuple[int, int]


@lru_cache(maxsize=None)
def _qq_ring():
    R, _, _ = _sympy_ring("x,t", QQ)
    return R


class BiPoly:
    """Sparse polynomial over Q in ``x`` and ``t``.

    Keys are ``(x_degree, t_degree)``; zero coefficients are never stored.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Dict[Monomial, Scalar] | None = None):
        self.coeffs: Dict[Monomial, Fraction] = {
            m: _frac(c) for m, c in (coeffs or {}).items() if c
        }
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        if isinstance(other, Poly):
            return other.to_bipoly()
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({m: c * other for m, c in self.coeffs.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                m = (a1 + a2, b1 + b2)
                out[m] = out.get(m, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    @property
    def x_degree(self) -> int:
        return max((a for a, _ in self.coeffs), default=-1)

    @property
    def t_degree(self) -> int:
        return max((b for _, b in self.coeffs), default=-1)

    def x_coeff(self, n: int) -> Poly:
        """Coefficient of ``x**n`` as a polynomial in ``t``."""
        deg = max((b for a, b in self.coeffs if a == n), default=-1)
        cs = [Fraction(0)] * (deg + 1)
        for (a, b), c in self.coeffs.items():
            if a == n:
                cs[b] = c
        return Poly(cs, "t")

    def __call__(self, x, t):
        """Evaluate at scalar (or polynomial) values of ``x`` and ``t``."""
        total = Fraction(0)
        for (a, b), c in self.coeffs.items():
            total = total + c * x**a * t**b
        return total

    def subs_t(self, t: Scalar) -> Poly:
        """Specialise ``t`` to a scalar, giving a polynomial in ``x``."""
        t = _frac(t)
        deg = self.x_degree
        cs = [Fraction(0)] * (deg + 1)
        for (a, b), c in self.coeffs.items():
            cs[a] += c * t**b
        return Poly(cs, "x")

    def terms(self) -> List[Tuple[Monomial, Fraction]]:
        return list(self.coeffs.items())

    def low_coeff(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[min(self.coeffs)]

    def _to_sympy(self):
        R = _qq_ring()
        return R({m: QQ(c.numerator, c.denominator) for m, c in self.coeffs.items()})

    @staticmethod
    def _from_sympy(p) -> "BiPoly":
        return BiPoly({
            m: Fraction(int(c.numerator), int(c.denominator)) for m, c in p.terms()
        })

    def gcd(self, other: "BiPoly") -> "BiPoly":
        g = self._to_sympy().gcd(other._to_sympy())
        return BiPoly._from_sympy(g)

    def cancel(self, other: "BiPoly") -> Tuple["BiPoly", "BiPoly"]:
        """Divide both ``self`` and ``other`` by their gcd."""
        if self.is_zero():
            return self, BiPoly.const(1)
        p, q = self._to_sympy(), other._to_sympy()
        g = p.gcd(q)
        if g.is_ground:
            return self, other
        return BiPoly._from_sympy(p.exquo(g)), BiPoly._from_sympy(q.exquo(g))

    def divexact(self, other: "BiPoly") -> "BiPoly":
        q, r = self._to_sympy().div(other._to_sympy())
        if r:
            raise NotDivisible(f"({self}) / ({other}) is not exact")
        return BiPoly._from_sympy(q)

    def __repr__(self):
        return f"BiPoly({{{', '.join(f'{m}: {c}' for m, c in sorted(self.coeffs.items()))}}})"

    def __str__(self):
        return format_terms(self.terms())


Polynomial = Union[Poly, BiPoly]


def format_terms(terms: Sequence[Tuple[Monomial, Fraction]]) -> str:
    """Canonical text: monomials ordered by (x-degree, t-degree) descending."""
    if not terms:
        return "0"
    out = []
    for (a, b), c in sorted(terms, reverse=True):
        mono = []
        if a:
            mono.append("x" if a == 1 else f"x^{a}")
        if b:
            mono.append("t" if b == 1 else f"t^{b}")
        mag = abs(c)
        if mono:
            body = "*".join(mono)
            if mag != 1:
                body = f"{mag}*{body}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """Reduced quotient of two polynomials.

    After construction ``num`` and ``den`` are coprime and the coefficient of
    the lowest monomial of ``den`` (ascending (x-degree, t-degree) order) is 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduce: bool = True):
        num = _as_poly(num)
        den = _as_poly(1 if den is None else den, like=num)
        num, den = _unify(num, den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            den = den * 0 + 1
        elif reduce:
            num, den = num.cancel(den)
        scale = den.low_coeff()
        if scale != 1:
            num, den = num * (1 / scale), den * (1 / scale)
        self.num = num
        self.den = den

    @property
    def is_bivariate(self) -> bool:
        return isinstance(self.num, BiPoly)

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, Poly, BiPoly)):
            return RatFunc(other, reduce=False)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDenominator("inverse of zero rational function")
        return RatFunc(self.den, self.num, reduce=False)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n, reduce=False)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, *point):
        """Pointwise evaluation; raises ZeroDenominator at a pole."""
        d = self.den(*point)
        if d == 0:
            raise ZeroDenominator(f"denominator vanishes at {point}")
        return self.num(*point) / d

    def subs_t(self, t: Scalar) -> "RatFunc":
        if not self.is_bivariate:
            return self
        return RatFunc(self.num.subs_t(t), self.den.subs_t(t))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _as_poly(p, like=None):
    if isinstance(p, (Poly, BiPoly)):
        return p
    if isinstance(p, (int, Fraction)):
        if isinstance(like, BiPoly):
            return BiPoly.const(p)
        return Poly([p], like.var if isinstance(like, Poly) else "x")
    raise TypeError(f"cannot make a polynomial from {type(p).__name__}")


def _unify(a, b):
    if isinstance(a, BiPoly) or isinstance(b, BiPoly):
        return (a if isinstance(a, BiPoly) else a.to_bipoly(),
                b if isinstance(b, BiPoly) else b.to_bipoly())
    if a.var != b.var:
        if a.degree <= 0:
            a = Poly(a.coeffs, b.var)
        elif b.degree <= 0:
            b = Poly(b.coeffs, a.var)
        else:
            return a.to_bipoly(), b.to_bipoly()
    return a, b


def normalize(num, den) -> RatFunc:
    """Reduce ``num/den`` and normalise the sign/scale of the denominator."""
    return RatFunc(num, den)


# ---------------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------------

class BiSeries:
    """Power series in ``x`` truncated after ``x**order``.

    ``coeffs[n]`` is the coefficient of ``x**n`` as a polynomial in ``t``.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Poly], order: int | None = None):
        order = len(coeffs) - 1 if order is None else order
        cs = [Poly(c.coeffs, "t") if isinstance(c, Poly) else Poly([c], "t")
              for c in coeffs[: order + 1]]
        cs += [Poly((), "t")] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: Tuple[Poly, ...] = tuple(cs)

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def at_t(self, t: Scalar) -> List[Fraction]:
        return [c(_frac(t)) for c in self.coeffs]

    def diagonal(self, shift: int) -> List[Fraction]:
        """``[x^n t^(n - shift)]`` for every n (0 where the exponent is negative)."""
        return [c[n - shift] if n - shift >= 0 else Fraction(0)
                for n, c in enumerate(self.coeffs)]

    def truncate(self, order: int) -> "BiSeries":
        return BiSeries(self.coeffs, min(order, self.order))

    def __repr__(self):
        return f"BiSeries(order={self.order}, {[str(c) for c in self.coeffs]})"


def _x_coeffs(p) -> List[Poly]:
    if isinstance(p, Poly):
        if p.var == "t":
            return [p]
        return [Poly([c], "t") for c in p.coeffs]
    return [p.x_coeff(n) for n in range(p.x_degree + 1)]


def series_expand(f: RatFunc, order: int = DEFAULT_ORDER) -> BiSeries:
    """Taylor coefficients of ``f`` at ``x = 0`` up to ``x**order``.

    Coefficients are polynomials in ``t``; each step divides exactly by the
    x-constant term of the denominator, so NotDivisible is raised when a
    coefficient would not be a polynomial in ``t`` (e.g. 1/(1+t)).
    """
    num = _x_coeffs(f.num)
    den = _x_coeffs(f.den)
    if not den or den[0].is_zero():
        raise PoleAtOrigin(f"denominator {f.den} vanishes at x = 0")
    d0 = den[0]
    zero = Poly((), "t")
    out: List[Poly] = []
    for n in range(order + 1):
        acc = num[n] if n < len(num) else zero
        for i in range(1, min(n, len(den) - 1) + 1):
            if not den[i].is_zero():
                acc = acc - den[i] * out[n - i]
        out.append(acc.divexact(d0) if d0.degree > 0 else acc * (1 / d0.lead))
    return BiSeries(out, order)


def series_times(s: BiSeries, p) -> BiSeries:
    """Multiply a truncated series by a polynomial and truncate."""
    pc = _x_coeffs(_as_poly(p))
    out = []
    for n in range(s.order + 1):
        acc = Poly((), "t")
        for i in range(min(n, len(pc) - 1) + 1):
            acc = acc + pc[i] * s[n - i]
        out.append(acc)
    return BiSeries(out, s.order)


def truncate_poly(p, order: int) -> BiSeries:
    return BiSeries(_x_coeffs(_as_poly(p)), order)
