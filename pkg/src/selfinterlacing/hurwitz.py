"""Hurwitz matrices, exact minors, and the signed-minor relation between dual polynomials."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError
from .poly import Polynomial, dual


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Clear denominators row by row; returns the integer matrix and the product of scales."""
    out, scale = [], 1
    for row in rows:
        den = math.lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * den) for x in row])
        scale *= den
    return out, scale


def bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free elimination with row pivoting; destroys ``m``."""
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pk - mik * row_k[j]) // prev
        prev = pk
    return sign * m[n - 1][n - 1]


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("determinant of a non-square matrix")
    ints, scale = _integer_rows(rows)
    return Fraction(bareiss_det(ints), scale)


@dataclass(frozen=True)
class HurwitzMatrix:
    """``entry(i, j) = a_{2j-i}`` (1-based), zero outside ``0..n``."""

    rows: tuple[tuple[Fraction, ...], ...]
    source: Polynomial

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i - 1][j - 1]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]


def hurwitz_matrix(p: Polynomial) -> HurwitzMatrix:
    n = p.degree
    if n < 1:
        raise DomainError("Hurwitz matrix needs degree >= 1")
    rows = tuple(tuple(p.a(2 * j - i) for j in range(1, n + 1)) for i in range(1, n + 1))
    return HurwitzMatrix(rows, p)


@dataclass(frozen=True)
class MinorIndex:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __init__(self, rows: Iterable[int], cols: Iterable[int]):
        rows, cols = tuple(rows), tuple(cols)
        if len(rows) != len(cols) or not rows:
            raise DomainError("row and column index sets must be nonempty and equally long")
        for idx in (rows, cols):
            if any(b <= a for a, b in zip(idx, idx[1:])) or idx[0] < 1:
                raise DomainError(f"index set {idx} is not strictly increasing from 1")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def order(self) -> int:
        return len(self.rows)

    def sign_exponent(self) -> int:
        """``sum i(i-1)/2 + sum j``: the exponent relating minors of dual Hurwitz matrices."""
        return sum(i * (i - 1) // 2 for i in self.rows) + sum(self.cols)

    def sign(self) -> int:
        return -1 if self.sign_exponent() % 2 else 1


def minor(m: HurwitzMatrix, idx: MinorIndex) -> Fraction:
    if max(idx.rows) > m.n or max(idx.cols) > m.n:
        raise DomainError("minor index exceeds matrix size")
    sub = [[m.rows[i - 1][j - 1] for j in idx.cols] for i in idx.rows]
    return det(sub)


def leading_minors(p: Polynomial) -> list[Fraction]:
    """``[Delta_1, ..., Delta_n]``.

    Bareiss elimination without pivoting leaves ``Delta_k`` on the diagonal; if a
    pivot vanishes the remaining minors are computed one by one with pivoting.
    """
    h = hurwitz_matrix(p)
    n = h.n
    # one common scale so every leading block scales by den**k
    m, den = _integer_hurwitz(p)
    out: list[Fraction] = []
    prev = 1
    for k in range(n):
        pk = m[k][k]
        out.append(Fraction(pk, den ** (k + 1)))
        if pk == 0:
            break
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pk - mik * m[k][j]) // prev
        prev = pk
    for k in range(len(out), n):
        out.append(det([list(r[: k + 1]) for r in h.rows[: k + 1]]))
    return out


def minor_sign_relation_check(p: Polynomial, idx: MinorIndex) -> bool:
    """Check ``H(dual p)(idx) == sign(idx) * H(p)(idx)`` exactly."""
    return minor(hurwitz_matrix(dual(p)), idx) == idx.sign() * minor(hurwitz_matrix(p), idx)


def all_indices(n: int, order: int) -> Iterable[MinorIndex]:
    for rows in itertools.combinations(range(1, n + 1), order):
        for cols in itertools.combinations(range(1, n + 1), order):
            yield MinorIndex(rows, cols)


def sample_indices(n: int, max_full_order: int = 3, extra: int = 100, seed: int = 0) -> list[MinorIndex]:
    """Every minor of order <= ``max_full_order`` plus ``extra`` random larger ones."""
    out = [idx for k in range(1, min(max_full_order, n) + 1) for idx in all_indices(n, k)]
    if n > max_full_order and extra > 0:
        rng = random.Random(seed)
        for _ in range(extra):
            k = rng.randint(max_full_order + 1, n)
            rows = sorted(rng.sample(range(1, n + 1), k))
            cols = sorted(rng.sample(range(1, n + 1), k))
            out.append(MinorIndex(rows, cols))
    return out


@dataclass(frozen=True)
class MinorCheck:
    index: MinorIndex
    value: Fraction
    dual_value: Fraction
    signed_nonnegative: bool
    magnitudes_equal: bool

    @property
    def sign_relation(self) -> bool:
        """The dual-minor identity, which holds for every polynomial."""
        return self.dual_value == self.index.sign() * self.value

    @property
    def passed(self) -> bool:
        return self.signed_nonnegative and self.magnitudes_equal


@dataclass(frozen=True)
class TotalNonnegativityReport:
    checks: tuple[MinorCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[MinorCheck]:
        return [c for c in self.checks if not c.passed]

    @property
    def sign_relation_holds(self) -> bool:
        return all(c.sign_relation for c in self.checks)


def _integer_hurwitz(p: Polynomial) -> tuple[list[list[int]], int]:
    den = math.lcm(*(x.denominator for x in p.coeffs))
    h = hurwitz_matrix(p)
    return [[int(x * den) for x in row] for row in h.rows], den


def total_nonnegativity_spot_check(p: Polynomial, sample: Sequence[MinorIndex]) -> TotalNonnegativityReport:
    """Signed minors of ``H(p)`` must be >= 0 when ``p`` is kind-I self-interlacing,
    and every minor must match the dual's minor in absolute value."""
    if p.leading < 0:
        p = -p
    hp, den = _integer_hurwitz(p)
    hq, _ = _integer_hurwitz(dual(p))
    checks = []
    for idx in sample:
        if max(idx.rows) > len(hp) or max(idx.cols) > len(hp):
            raise DomainError("minor index exceeds matrix size")
        vp = bareiss_det([[hp[i - 1][j - 1] for j in idx.cols] for i in idx.rows])
        vq = bareiss_det([[hq[i - 1][j - 1] for j in idx.cols] for i in idx.rows])
        scale = den ** idx.order
        checks.append(
            MinorCheck(
                idx,
                Fraction(vp, scale),
                Fraction(vq, scale),
                idx.sign() * vp >= 0,
                abs(vp) == abs(vq),
            )
        )
    return TotalNonnegativityReport(tuple(checks))
