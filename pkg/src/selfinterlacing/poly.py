"""Exact dense polynomials over the rationals.

Coefficients are stored in *descending* order: ``coeffs[k]`` multiplies
``z**(n - k)``.  This is the order used throughout the package and by the
text format ``"1 -2 -5 6"``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

from .errors import DomainError, Indeterminate, ParseError

Rational = Fraction | int

_TOKEN = re.compile(r"^[+-]?\d+(?:/[+-]?\d+)?$")
_SEPARATORS = re.compile(r"[\s,]+")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact coefficients")
    return Fraction(x)


@dataclass(frozen=True)
class Polynomial:
    """Immutable polynomial with exact rational coefficients, highest power first."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rational]):
        cs = [_frac(c) for c in coeffs]
        i = 0
        while i < len(cs) - 1 and cs[i] == 0:
            i += 1
        cs = cs[i:] or [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction -----------------------------------------------------

    @classmethod
    def constant(cls, c: Rational) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Rational = 1) -> "Polynomial":
        return cls([c] + [0] * k)

    @classmethod
    def from_ascending(cls, coeffs: Iterable[Rational]) -> "Polynomial":
        return cls(list(coeffs)[::-1])

    # -- basic accessors --------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[0]

    def a(self, k: int) -> Fraction:
        """Coefficient of ``z**(n-k)``; zero outside ``0..n``."""
        if 0 <= k <= self.degree:
            return self.coeffs[k]
        return Fraction(0)

    @property
    def ceil_half(self) -> int:
        """``[(n+1)/2]``: the number of poles of the associated function."""
        return (self.degree + 1) // 2

    @property
    def floor_half(self) -> int:
        """``[n/2]``."""
        return self.degree // 2

    def ascending(self) -> list[Fraction]:
        return list(reversed(self.coeffs))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Polynomial | Rational") -> "Polynomial":
        other = _as_poly(other)
        a, b = self.ascending(), other.ascending()
        return Polynomial.from_ascending(x + y for x, y in zip_longest(a, b, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial | Rational") -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "Polynomial | Rational") -> "Polynomial":
        return _as_poly(other) - self

    def __mul__(self, other: "Polynomial | Rational") -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = _frac(other)
            return Polynomial(x * c for x in self.coeffs)
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lc = other.leading
        if self.degree < dd or self.is_zero():
            return ZERO, self
        quot = []
        for i in range(len(rem) - dd):
            q = rem[i] / lc
            quot.append(q)
            if q:
                for j, y in enumerate(other.coeffs):
                    rem[i + j] -= q * y
        return Polynomial(quot), Polynomial(rem[len(rem) - dd:] if dd else [0])

    __divmod__ = divmod

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def evalf(self, x: complex | float) -> complex | float:
        acc = 0.0
        for c in self.coeffs:
            acc = acc * x + float(c)
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def scale_argument(self, t: Rational) -> "Polynomial":
        """``p(t*z)``."""
        t = _frac(t)
        n = self.degree
        return Polynomial(c * t ** (n - k) for k, c in enumerate(self.coeffs))

    def in_square(self, sign: int = 1) -> "Polynomial":
        """``p(sign * z**2)``."""
        out: list[Fraction] = []
        n = self.degree
        for k, c in enumerate(self.coeffs):
            out.append(c if sign > 0 or (n - k) % 2 == 0 else -c)
            if k < n:
                out.append(Fraction(0))
        return Polynomial(out)

    # -- text format ------------------------------------------------------

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _as_poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


ZERO = Polynomial([0])
ONE = Polynomial([1])
Z = Polynomial([1, 0])


def parse_poly(text: str) -> Polynomial:
    """Parse whitespace/comma separated rationals, highest power first."""
    tokens = [t for t in _SEPARATORS.split(text.strip()) if t]
    if not tokens:
        raise ParseError("empty polynomial")
    coeffs = []
    for tok in tokens:
        if not _TOKEN.match(tok):
            raise ParseError(f"malformed coefficient {tok!r}")
        try:
            coeffs.append(Fraction(tok))
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {tok!r}") from None
    return Polynomial(coeffs)


def from_roots(roots: Sequence[Rational], leading: Rational = 1) -> Polynomial:
    if _frac(leading) == 0:
        raise DomainError("leading coefficient must be nonzero")
    p = Polynomial([leading])
    for lam in roots:
        p = p * Polynomial([1, -_frac(lam)])
    return p


def derivative(p: Polynomial, k: int = 1) -> Polynomial:
    if k < 0:
        raise DomainError("derivative order must be nonnegative")
    cs = list(p.coeffs)
    for _ in range(k):
        n = len(cs) - 1
        if n <= 0:
            return ZERO
        cs = [c * (n - i) for i, c in enumerate(cs[:-1])]
    return Polynomial(cs)


def reflect(p: Polynomial) -> Polynomial:
    """Coefficients of ``p(-z)``."""
    n = p.degree
    return Polynomial(c if (n - k) % 2 == 0 else -c for k, c in enumerate(p.coeffs))


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero only if both inputs are zero)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def square_free_check(p: Polynomial) -> bool:
    if p.degree < 1:
        raise DomainError("square-free check needs degree >= 1")
    return gcd(p, derivative(p)).degree == 0


def square_free_part(p: Polynomial) -> Polynomial:
    return p // gcd(p, derivative(p))


@dataclass(frozen=True)
class EvenOddParts:
    """``p(z) = even(z**2) + z * odd(z**2)``."""

    even: Polynomial
    odd: Polynomial
    parity: int

    def recombine(self) -> Polynomial:
        return self.even.in_square() + Z * self.odd.in_square()


def even_odd_split(p: Polynomial) -> EvenOddParts:
    n = p.degree
    # a_k multiplies z^(n-k); it belongs to the even part when n-k is even
    even = [c for k, c in enumerate(p.coeffs) if (n - k) % 2 == 0]
    odd = [c for k, c in enumerate(p.coeffs) if (n - k) % 2 == 1]
    return EvenOddParts(Polynomial(even or [0]), Polynomial(odd or [0]), n % 2)


def dual_sign(k: int) -> int:
    """``(-1)**(k(k+1)/2)``: the sign pattern + - - + + - - ..."""
    return -1 if (k * (k + 1) // 2) % 2 else 1


def dual(p: Polynomial) -> Polynomial:
    """Multiply ``a_k`` by ``(-1)**(k(k+1)/2)``.

    Maps kind-I self-interlacing polynomials onto Hurwitz stable ones and back;
    the map is an involution.
    """
    return Polynomial(dual_sign(k) * c for k, c in enumerate(p.coeffs))


def dual_via_rotation(p: Polynomial) -> Polynomial:
    """Same result as :func:`dual`, computed from the even/odd parts evaluated at ``-z**2``."""
    parts = even_odd_split(p)
    r = p.degree // 2
    e = parts.even.in_square(-1)
    o = Z * parts.odd.in_square(-1)
    if p.degree % 2 == 0:
        return (e + o) * (-1) ** r
    return (e - o) * (-1) ** (r + 1)


def markov_family(p: Polynomial, j: int) -> Polynomial:
    """``even^(j)(z**2) + z * odd^(j)(z**2)`` for ``1 <= j <= [n/2] - 1``."""
    if p.degree < 2:
        raise DomainError("markov_family needs degree >= 2")
    r = p.degree // 2
    if not 1 <= j <= r - 1:
        raise DomainError(f"j={j} outside 1..{r - 1}")
    parts = even_odd_split(p)
    return derivative(parts.even, j).in_square() + Z * derivative(parts.odd, j).in_square()


@dataclass(frozen=True)
class TridiagonalSpec:
    """Symmetric tridiagonal matrix with ``b_1`` in the corner and ``b_2..b_n`` off the diagonal."""

    b: tuple[Fraction, ...]

    def __init__(self, b: Iterable[Rational]):
        bs = tuple(_frac(x) for x in b)
        if not bs or bs[0] == 0:
            raise DomainError("b_1 must be nonzero")
        if any(x <= 0 for x in bs[1:]):
            raise DomainError("b_k must be positive for k >= 2")
        object.__setattr__(self, "b", bs)

    def matrix(self) -> list[list[Fraction]]:
        n = len(self.b)
        m = [[Fraction(0)] * n for _ in range(n)]
        m[0][0] = self.b[0]
        for k in range(1, n):
            m[k - 1][k] = m[k][k - 1] = self.b[k]
        return m


def tridiagonal_char_poly(spec: TridiagonalSpec) -> Polynomial:
    """``det(zI - J)`` by the three-term recurrence."""
    prev, cur = ONE, Polynomial([1, -spec.b[0]])
    for bk in spec.b[1:]:
        prev, cur = cur, Z * cur - prev * (bk * bk)
    return cur


def elementary_symmetric(xs: Sequence[Rational], k: int) -> Fraction:
    if k < 0 or k > len(xs):
        raise DomainError(f"k={k} outside 0..{len(xs)}")
    # e[i] after processing a prefix; coefficient extraction from prod(1 + x t)
    e = [Fraction(1)] + [Fraction(0)] * k
    for x in xs:
        x = _frac(x)
        for i in range(k, 0, -1):
            e[i] += x * e[i - 1]
    return e[k]


def tan_sum_identity_check(xs: Sequence[Rational], margin: float = 1e-6) -> tuple[float, float]:
    """Return ``tan(sum(arctan(x)))`` in floats and the symmetric-function quotient.

    The quotient is ``(e1 - e3 + e5 - ...) / (1 - e2 + e4 - ...)``, evaluated
    exactly and converted at the end.  Raises :class:`Indeterminate` when the
    angle sits within ``margin`` of an odd multiple of pi/2.
    """
    n = len(xs)
    e = [elementary_symmetric(xs, k) for k in range(n + 1)]
    num = sum((e[k] * (-1) ** (k // 2) for k in range(1, n + 1, 2)), Fraction(0))
    den = sum((e[k] * (-1) ** (k // 2) for k in range(0, n + 1, 2)), Fraction(0))
    angle = math.fsum(math.atan(float(x)) for x in xs)
    if den == 0 or abs(math.cos(angle)) < margin:
        raise Indeterminate("tangent argument is at or near a pole")
    return math.tan(angle), float(num / den)
