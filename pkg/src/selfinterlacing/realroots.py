"""Sturm-chain real root isolation and the definitional oracles.

The self-interlacing oracle works straight from the root-ordering definition;
the stability oracle finds complex roots numerically.  Neither one touches a
Hurwitz or Hankel determinant, so both can be used to cross-check the
determinant criteria.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .errors import DomainError, EndpointError
from .poly import Polynomial, derivative, gcd, reflect, square_free_check, square_free_part

MAGNITUDE_BISECTION_CAP = 1024


@dataclass(frozen=True)
class IsolatingInterval:
    """Half-open interval ``(lo, hi]`` holding exactly one root."""

    lo: Fraction
    hi: Fraction
    sign_at_lo: int

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo < x <= self.hi

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi)}


class SIKind(str, enum.Enum):
    SI_I = "SI_I"
    SI_II = "SI_II"
    NOT_SI = "NOT_SI"


class SIReason(str, enum.Enum):
    NON_REAL_ROOTS = "non-real roots"
    REPEATED_ROOTS = "repeated roots"
    WRONG_SIGN_PATTERN = "wrong sign pattern"
    MAGNITUDE_ORDERING = "magnitude ordering violated"


class Stability(str, enum.Enum):
    STABLE = "STABLE"
    NOT_STABLE = "NOT_STABLE"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class SIVerdict:
    kind: SIKind
    reason: SIReason | None = None
    witnesses: tuple[IsolatingInterval, ...] = ()
    indeterminate: bool = False


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _primitive_sign_preserving(p: Polynomial) -> Polynomial:
    # dividing by |lc| keeps every sign the Sturm count looks at
    return p * (1 / abs(p.leading))


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    if p.degree < 1:
        raise DomainError("Sturm chain needs degree >= 1")
    chain = [p, derivative(p)]
    while True:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            return chain
        chain.append(-_primitive_sign_preserving(r))


def _variations(chain: list[Polynomial], x) -> int:
    signs = [s for s in (_sign(q(x)) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(p: Polynomial) -> Fraction:
    """Every root satisfies ``|z| < 1 + max |a_k / a_0|``."""
    lc = abs(p.leading)
    return 1 + max((abs(c) / lc for c in p.coeffs[1:]), default=Fraction(0))


def count_real_roots(p: Polynomial, lo, hi, chain: list[Polynomial] | None = None) -> int:
    """Number of distinct real roots in ``(lo, hi)``; the endpoints must not be roots."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise DomainError("need lo < hi")
    if p(lo) == 0 or p(hi) == 0:
        raise EndpointError("interval endpoint is a root")
    chain = chain or sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi)


def _split_point(p: Polynomial, lo: Fraction, hi: Fraction) -> Fraction:
    # avoid landing exactly on a root so every interval keeps p(lo) != 0
    for num, den in ((1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (3, 5)):
        m = lo + (hi - lo) * num / den
        if p(m) != 0:
            return m
    k = 6
    while True:
        m = lo + (hi - lo) / k
        if p(m) != 0:
            return m
        k += 1


def isolate_real_roots(p: Polynomial) -> list[IsolatingInterval]:
    """Disjoint isolating intervals for every real root, sorted ascending."""
    if p.degree < 1:
        return []
    if not square_free_check(p):
        raise DomainError("isolate_real_roots needs a square-free polynomial")
    chain = sturm_chain(p)
    b = cauchy_bound(p)
    out: list[IsolatingInterval] = []
    stack = [(-b, b, _variations(chain, -b), _variations(chain, b))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        count = vlo - vhi
        if count == 0:
            continue
        if count == 1:
            out.append(IsolatingInterval(lo, hi, _sign(p(lo))))
            continue
        m = _split_point(p, lo, hi)
        vm = _variations(chain, m)
        stack.append((lo, m, vlo, vm))
        stack.append((m, hi, vm, vhi))
    out.sort(key=lambda iv: iv.lo)
    return out


def _bisect(p: Polynomial, iv: IsolatingInterval) -> IsolatingInterval:
    m = iv.midpoint
    s = _sign(p(m))
    if s == 0 or s != iv.sign_at_lo:
        return IsolatingInterval(iv.lo, m, iv.sign_at_lo)
    return IsolatingInterval(m, iv.hi, s)


def refine(p: Polynomial, iv: IsolatingInterval, width) -> IsolatingInterval:
    """Bisect ``iv`` until its width is at most ``width``."""
    width = Fraction(width)
    if width <= 0:
        raise DomainError("width must be positive")
    while iv.width > width:
        iv = _bisect(p, iv)
    return iv


def root_sign(p: Polynomial, iv: IsolatingInterval) -> int:
    """Exact sign of the root isolated by ``iv`` (0 if that root is zero)."""
    if iv.contains(0) and p(0) == 0:
        return 0
    while True:
        if iv.lo >= 0:
            return 1
        if iv.hi <= 0:
            return -1
        iv = _bisect(p, iv)


def _magnitude(iv: IsolatingInterval) -> tuple[Fraction, Fraction] | None:
    if iv.lo >= 0:
        return iv.lo, iv.hi
    if iv.hi < 0:
        return -iv.hi, -iv.lo
    return None


def si_oracle(p: Polynomial) -> SIVerdict:
    """Classify by root positions: kind I, kind II, or not self-interlacing."""
    n = p.degree
    if n < 1:
        raise DomainError("si_oracle needs degree >= 1")
    if not square_free_check(p):
        return SIVerdict(SIKind.NOT_SI, SIReason.REPEATED_ROOTS)
    ivs = isolate_real_roots(p)
    if len(ivs) < n:
        return SIVerdict(SIKind.NOT_SI, SIReason.NON_REAL_ROOTS, tuple(ivs))
    # zero root or a pair +-lambda: magnitudes can never be separated
    if p.a(n) == 0 or gcd(p, reflect(p)).degree > 0:
        return SIVerdict(SIKind.NOT_SI, SIReason.MAGNITUDE_ORDERING, tuple(ivs))

    steps = 0
    while True:
        mags = [_magnitude(iv) for iv in ivs]
        if all(m is not None for m in mags):
            order = sorted(range(n), key=lambda i: mags[i][0], reverse=True)
            if all(mags[order[i]][0] >= mags[order[i + 1]][1] for i in range(n - 1)):
                break
        if steps >= MAGNITUDE_BISECTION_CAP:
            return SIVerdict(SIKind.NOT_SI, SIReason.MAGNITUDE_ORDERING, tuple(ivs), indeterminate=True)
        ivs = [_bisect(p, iv) for iv in ivs]
        steps += 1

    signs = [1 if ivs[i].lo >= 0 else -1 for i in order]
    if all(s == (-1) ** i for i, s in enumerate(signs)):
        return SIVerdict(SIKind.SI_I, None, tuple(ivs))
    if all(s == -((-1) ** i) for i, s in enumerate(signs)):
        return SIVerdict(SIKind.SI_II, None, tuple(ivs))
    return SIVerdict(SIKind.NOT_SI, SIReason.WRONG_SIGN_PATTERN, tuple(ivs))


@dataclass(frozen=True)
class StabilityResult:
    verdict: Stability
    roots: tuple[complex, ...] = field(default=())
    margin: float = 0.0


def stability_check(p: Polynomial, dps: int = 60, maxsteps: int = 400) -> StabilityResult:
    """Numerical root finding (simultaneous iteration in extended precision)."""
    if p.degree < 1:
        raise DomainError("stability oracle needs degree >= 1")
    q = square_free_part(p)
    margin = 1e-9 * float(cauchy_bound(p))
    if q.degree == 0:
        return StabilityResult(Stability.INDETERMINATE, (), margin)
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in q.coeffs]
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=maxsteps, extraprec=2 * dps)
        except mpmath.libmp.NoConvergence:
            return StabilityResult(Stability.INDETERMINATE, (), margin)
        roots = tuple(complex(r) for r in (roots if isinstance(roots, list) else [roots]))
    re = [z.real for z in roots]
    if any(x > margin for x in re):
        verdict = Stability.NOT_STABLE
    elif all(x < -margin for x in re):
        verdict = Stability.STABLE
    else:
        verdict = Stability.INDETERMINATE
    return StabilityResult(verdict, roots, margin)


def stability_oracle(p: Polynomial) -> Stability:
    return stability_check(p).verdict
