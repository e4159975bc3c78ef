"""The associated rational functions, their Laurent expansions at infinity, and Hankel minors.

``associated_phi(p)`` satisfies ``z*Phi(z**2) = (p(z) - (-1)**n p(-z)) / (p(z) + (-1)**n p(-z))``
and ``r_function(p)`` is ``(-1)**n p(-z) / p(z)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateError, DomainError
from .hurwitz import det, leading_minors
from .poly import Z, Polynomial, even_odd_split, gcd, reflect, square_free_check
from .realroots import IsolatingInterval, isolate_real_roots, root_sign


@dataclass(frozen=True)
class RationalFunction:
    """``num / den`` with ``den`` carrying a positive leading coefficient."""

    num: Polynomial
    den: Polynomial

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero():
            raise DegenerateError("zero denominator")
        if den.leading < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def reduced(self) -> "RationalFunction":
        """Lowest terms with a monic denominator."""
        g = gcd(self.num, self.den) if not self.num.is_zero() else self.den.monic()
        num, den = self.num // g, self.den // g
        lc = den.leading
        return RationalFunction(num * (1 / lc), den * (1 / lc))

    def equivalent(self, other: "RationalFunction") -> bool:
        return (self.num * other.den - other.num * self.den).is_zero()

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def to_json(self) -> dict:
        return {"num": str(self.num), "den": str(self.den)}


def associated_phi(p: Polynomial) -> RationalFunction:
    """``odd/even`` for even degree, ``even/(u*odd)`` for odd degree."""
    if p.degree < 1:
        raise DomainError("associated function needs degree >= 1")
    parts = even_odd_split(p)
    if p.degree % 2 == 0:
        return RationalFunction(parts.odd, parts.even)
    return RationalFunction(parts.even, Z * parts.odd)


def r_function(p: Polynomial) -> RationalFunction:
    if p.degree < 1:
        raise DomainError("R needs degree >= 1")
    num = reflect(p) * (-1) ** p.degree
    return RationalFunction(num, p)


@dataclass(frozen=True)
class LaurentCoeffs:
    """``f(z) = constant + s[0]/z + s[1]/z**2 + ...``"""

    constant: Fraction
    s: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.s)


def laurent_coeffs(f: RationalFunction, m: int) -> LaurentCoeffs:
    """Exact ``s_0..s_m`` of the expansion at infinity."""
    dn, dd = f.num.degree, f.den.degree
    if not f.num.is_zero() and dn > dd:
        raise DomainError("improper rational function has no expansion at infinity")
    # f = N(1/w)/D(1/w) with both padded to degree dd, expanded as a power series in w
    d = list(f.den.coeffs)
    nn = [Fraction(0)] * (dd - dn) + list(f.num.coeffs) if not f.num.is_zero() else [Fraction(0)] * (dd + 1)
    t: list[Fraction] = []
    for k in range(m + 2):
        acc = nn[k] if k <= dd else Fraction(0)
        for i in range(1, min(k, dd) + 1):
            acc -= d[i] * t[k - i]
        t.append(acc / d[0])
    return LaurentCoeffs(t[0], tuple(t[1:]))


def hankel_D(s: LaurentCoeffs, j: int) -> Fraction:
    """``det(s_{i+k})`` for ``0 <= i, k < j``."""
    if j < 1:
        raise DomainError("Hankel order must be positive")
    if len(s.s) < 2 * j - 1:
        raise DomainError(f"need {2 * j - 1} coefficients, have {len(s.s)}")
    return det([[s.s[i + k] for k in range(j)] for i in range(j)])


def hankel_Dhat(s: LaurentCoeffs, j: int) -> Fraction:
    """``det(s_{i+k+1})`` for ``0 <= i, k < j``."""
    if j < 1:
        raise DomainError("Hankel order must be positive")
    if len(s.s) < 2 * j:
        raise DomainError(f"need {2 * j} coefficients, have {len(s.s)}")
    return det([[s.s[i + k + 1] for k in range(j)] for i in range(j)])


@dataclass(frozen=True)
class HankelData:
    s: LaurentCoeffs
    D: tuple[Fraction, ...]
    Dhat: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "s": [str(x) for x in self.s.s],
            "D": [str(x) for x in self.D],
            "Dhat": [str(x) for x in self.Dhat],
        }


def hankel_data(f: RationalFunction, jd: int, jhat: int) -> HankelData:
    s = laurent_coeffs(f, max(2 * jd - 2, 2 * jhat - 1, 0))
    return HankelData(
        s,
        tuple(hankel_D(s, j) for j in range(1, jd + 1)),
        tuple(hankel_Dhat(s, j) for j in range(1, jhat + 1)),
    )


def phi_hankel(p: Polynomial) -> HankelData:
    """``D_1..D_l`` and ``Dhat_1..Dhat_r`` of the associated function."""
    return hankel_data(associated_phi(p), p.ceil_half, p.floor_half)


def r_hankel(p: Polynomial, count: int | None = None) -> HankelData:
    """``D_1..D_count(R)``; ``count`` defaults to the degree."""
    return hankel_data(r_function(p), p.degree if count is None else count, 0)


@dataclass(frozen=True)
class IdentityRow:
    j: int
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityReport:
    name: str
    rows: tuple[IdentityRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "rows": [{"j": r.j, "lhs": str(r.lhs), "rhs": str(r.rhs), "passed": r.passed} for r in self.rows],
        }


def hurwitz_formula_check(p: Polynomial) -> IdentityReport:
    """``D_j(Phi) = Delta_{2j-1}/a0^(2j-1)`` and ``Dhat_j(Phi) = (-1)^j Delta_{2j}/a0^(2j)``."""
    if p.degree < 1:
        raise DomainError("needs degree >= 1")
    delta = leading_minors(p)
    a0 = p.leading
    hd = phi_hankel(p)
    rows = [IdentityRow(j, hd.D[j - 1], delta[2 * j - 2] / a0 ** (2 * j - 1)) for j in range(1, p.ceil_half + 1)]
    # Dhat rows are tagged with negative j to keep the two families apart
    rows += [IdentityRow(-j, hd.Dhat[j - 1], (-1) ** j * delta[2 * j - 1] / a0 ** (2 * j)) for j in range(1, p.floor_half + 1)]
    return IdentityReport("hurwitz_formula", tuple(rows))


def lemma51_check(p: Polynomial) -> IdentityReport:
    """``a0^(2j) D_j(R) = (-1)^(j(j+1)/2) 2^j a0 Delta_{j-1} Delta_j`` for ``j = 1..n``."""
    if p.degree < 1:
        raise DomainError("needs degree >= 1")
    delta = [Fraction(1)] + leading_minors(p)
    a0 = p.leading
    hd = r_hankel(p)
    rows = []
    for j in range(1, p.degree + 1):
        sign = -1 if (j * (j + 1) // 2) % 2 else 1
        rows.append(IdentityRow(j, a0 ** (2 * j) * hd.D[j - 1], sign * 2**j * a0 * delta[j - 1] * delta[j]))
    return IdentityReport("hankel_r_minors", tuple(rows))


@dataclass(frozen=True)
class PoleReport:
    poles: tuple[IsolatingInterval, ...]
    pole_count: int
    expected_count: int
    square_free: bool
    all_real: bool
    poles_ok: bool
    upper_half_plane: bool

    @property
    def passed(self) -> bool:
        return self.square_free and self.all_real and self.poles_ok and self.upper_half_plane


def phi_pole_signs(p: Polynomial) -> PoleReport:
    """Pole locations of the associated function plus the Hankel sign test for its mapping property.

    Kind-I self-interlacing needs all poles positive (even degree) or
    nonnegative with exactly one at zero (odd degree), together with
    ``(-1)^j D_j(Phi) > 0``.
    """
    if p.degree < 1:
        raise DomainError("needs degree >= 1")
    if p.leading < 0:
        p = -p
    phi = associated_phi(p)
    den = phi.den
    expected = p.ceil_half
    sf = den.degree < 1 or square_free_check(den)
    poles: list[IsolatingInterval] = []
    all_real = False
    ok = False
    if sf and den.degree >= 1:
        poles = isolate_real_roots(den)
        all_real = len(poles) == den.degree
        signs = [root_sign(den, iv) for iv in poles]
        if p.degree % 2 == 0:
            ok = all(s > 0 for s in signs)
        else:
            ok = signs.count(0) == 1 and all(s >= 0 for s in signs)
    hd = phi_hankel(p)
    uhp = all((-1) ** j * d > 0 for j, d in enumerate(hd.D, start=1))
    return PoleReport(tuple(poles), den.degree, expected, sf, all_real, ok, uhp)
