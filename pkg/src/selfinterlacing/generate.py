"""Seedable generators for self-interlacing, stable, tridiagonal and random test polynomials."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from math import comb

from .errors import DomainError
from .poly import Polynomial, TridiagonalSpec, dual, from_roots


def random_rational(rng: random.Random, max_num: int = 40, max_den: int = 6) -> Fraction:
    """Positive rational ``k/d`` with ``1 <= k <= max_num`` and ``1 <= d <= max_den``."""
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def random_si(rng: random.Random, degree: int, kind: int = 1) -> Polynomial:
    """Expand roots with distinct magnitudes whose signs alternate, largest first.

    Kind I starts with a positive root, kind II with a negative one.
    """
    if degree < 1:
        raise DomainError("degree must be >= 1")
    if kind not in (1, 2):
        raise DomainError("kind must be 1 or 2")
    mags: set[Fraction] = set()
    while len(mags) < degree:
        mags.add(random_rational(rng))
    first = 1 if kind == 1 else -1
    roots = [first * (-1) ** i * m for i, m in enumerate(sorted(mags, reverse=True))]
    leading = Fraction(rng.choice((1, 1, 2, 3, 5)), rng.choice((1, 2)))
    return from_roots(roots, leading)


def random_stable(rng: random.Random, degree: int) -> Polynomial:
    """Product of ``(z + a)`` and ``(z**2 + b z + c)`` factors with ``a, b, c > 0``."""
    if degree < 1:
        raise DomainError("degree must be >= 1")
    quadratics = rng.randint(0, degree // 2)
    p = Polynomial([1])
    for _ in range(quadratics):
        p = p * Polynomial([1, random_rational(rng, 20, 4), random_rational(rng, 20, 4)])
    for _ in range(degree - 2 * quadratics):
        p = p * Polynomial([1, random_rational(rng, 20, 4)])
    return p


def random_tridiagonal(rng: random.Random, size: int, first_sign: int = 1) -> TridiagonalSpec:
    b1 = first_sign * random_rational(rng, 10, 3)
    return TridiagonalSpec([b1] + [random_rational(rng, 10, 3) for _ in range(size - 1)])


def random_polynomial(rng: random.Random, degree: int, bound: int = 9) -> Polynomial:
    """Integer coefficients uniform in ``[-bound, bound]`` with a nonzero leading term."""
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return Polynomial([lead] + [rng.randint(-bound, bound) for _ in range(degree)])


def binomial_dual(n: int, a) -> tuple[Polynomial, list[float]]:
    """``dual((z + a)**n)`` and its roots ``(-1)^(n-1) a tan(pi (4k+1) / (4n))``, ``k = 1..n``."""
    if n < 1:
        raise DomainError("n must be >= 1")
    a = Fraction(a)
    if a <= 0:
        raise DomainError("a must be positive")
    p = Polynomial([comb(n, k) * a**k for k in range(n + 1)])
    sign = -1 if (n - 1) % 2 else 1
    roots = sorted(sign * float(a) * math.tan(math.pi * (4 * k + 1) / (4 * n)) for k in range(1, n + 1))
    return dual(p), roots
