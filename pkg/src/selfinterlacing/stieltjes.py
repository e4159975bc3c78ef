"""Stieltjes continued fractions of the associated function.

The ladder is::

    Phi(u) = 1 / (c1*u + 1 / (c2 + 1 / (c3*u + 1 / (c4 + ...))))

odd-indexed coefficients multiply ``u``, even-indexed ones are constants.  For an
even-degree source the ladder stops after a constant term (the next coefficient
is infinite); for an odd-degree source it stops after a ``c*u`` term.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateError, DomainError, NoStieltjesExpansion
from .hankel import RationalFunction, associated_phi
from .hurwitz import leading_minors
from .poly import ONE, Z, Polynomial


class Terminal(str, enum.Enum):
    FINITE = "finite"
    INFINITE_LAST = "infinite-last"


@dataclass(frozen=True)
class ContinuedFraction:
    c: tuple[Fraction, ...]
    terminal: Terminal

    def to_json(self) -> dict:
        return {"c": [str(x) for x in self.c], "terminal": self.terminal.value}


def _terminal_for(m: int) -> Terminal:
    return Terminal.INFINITE_LAST if m % 2 == 0 else Terminal.FINITE


def cf_expand(phi: RationalFunction) -> ContinuedFraction:
    """Euclidean ladder alternating ``c*u`` and constant quotients."""
    num, den = phi.num, phi.den
    if num.is_zero():
        raise NoStieltjesExpansion("zero function")
    if num.degree >= den.degree:
        raise DomainError("cf_expand needs a proper rational function")
    cs: list[Fraction] = []
    while True:
        # odd step: den/num must be c*u + proper
        if den.degree != num.degree + 1:
            raise NoStieltjesExpansion(f"degree pattern broke at c_{len(cs) + 1}")
        c = den.leading / num.leading
        cs.append(c)
        rem = den - Z * num * c
        if rem.is_zero():
            return ContinuedFraction(tuple(cs), Terminal.FINITE)
        # even step: num/rem must be a constant plus a proper part
        if rem.degree != num.degree:
            raise NoStieltjesExpansion(f"degree pattern broke at c_{len(cs) + 1}")
        c = num.leading / rem.leading
        cs.append(c)
        nxt = num - rem * c
        if nxt.is_zero():
            return ContinuedFraction(tuple(cs), Terminal.INFINITE_LAST)
        num, den = nxt, rem


def cf_coeffs_from_minors(p: Polynomial) -> ContinuedFraction:
    """``c_i = Delta_{i-1}^2 / (Delta_{i-2} Delta_i)`` for ``i = 1..n``.

    The minors are taken of the monic polynomial ``p / a0``, which is what makes
    ``Delta_{-1} = Delta_0 = 1`` the right convention for the first coefficient.
    """
    if p.degree < 1:
        raise DomainError("needs degree >= 1")
    a0 = p.leading
    delta = [Fraction(1), Fraction(1)] + [d / a0**k for k, d in enumerate(leading_minors(p), start=1)]
    if any(d == 0 for d in delta):
        raise DegenerateError("a Hurwitz minor vanishes; coefficient formula undefined")
    c = tuple(delta[i] ** 2 / (delta[i - 1] * delta[i + 1]) for i in range(1, p.degree + 1))
    return ContinuedFraction(c, _terminal_for(len(c)))


def cf_reconstruct(cf: ContinuedFraction) -> RationalFunction:
    """Fold the ladder back into ``num/den`` with a monic denominator."""
    if not cf.c:
        raise DomainError("empty continued fraction")
    if any(x == 0 for x in cf.c):
        raise DomainError("zero coefficient in continued fraction")

    def term(i: int) -> Polynomial:
        # i is 0-based; c_1, c_3, ... multiply u
        return Z * cf.c[i] if i % 2 == 0 else Polynomial([cf.c[i]])

    # value of the tail 1/(t_i + 1/(t_{i+1} + ...)) as num/den
    num, den = ONE, term(len(cf.c) - 1)
    for i in range(len(cf.c) - 2, -1, -1):
        num, den = den, term(i) * den + num
    lc = den.leading
    return RationalFunction(num * (1 / lc), den * (1 / lc))


def cf_sign_check(cf: ContinuedFraction, n: int) -> bool:
    """Kind-I pattern: ``(-1)^i c_i > 0`` for ``i <= 2r`` and, for odd ``n``, ``c_{2r+1} < 0``."""
    r = n // 2
    if len(cf.c) != n or cf.terminal != _terminal_for(n):
        return False
    if any((-1) ** i * cf.c[i - 1] <= 0 for i in range(1, 2 * r + 1)):
        return False
    return n % 2 == 0 or cf.c[2 * r] < 0


def phi_continued_fraction(p: Polynomial) -> ContinuedFraction:
    """Expansion of the associated function of ``p``; it must have ``deg p`` terms.

    A shorter ladder means ``p(z)`` and ``p(-z)`` share a factor that cancels in
    the associated function, and some Hurwitz minor vanishes.
    """
    cf = cf_expand(associated_phi(p))
    if len(cf.c) != p.degree:
        raise NoStieltjesExpansion(f"ladder has {len(cf.c)} terms, expected {p.degree} (common factor cancelled)")
    return cf

