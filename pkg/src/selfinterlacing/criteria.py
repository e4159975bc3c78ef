"""Determinant and coefficient criteria for self-interlacing and stability, and the combined report."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .hankel import r_hankel, r_function
from .hurwitz import leading_minors
from .poly import Polynomial, dual, dual_sign, even_odd_split, gcd, reflect, square_free_check
from .realroots import (
    SIKind,
    Stability,
    cauchy_bound,
    isolate_real_roots,
    refine,
    si_oracle,
    stability_oracle,
)


def _normalized(p: Polynomial) -> tuple[Polynomial, bool]:
    if p.degree < 1:
        raise DomainError("classification needs degree >= 1")
    if p.leading < 0:
        return -p, True
    return p, False


@dataclass(frozen=True)
class Verdict:
    verdict: bool
    witness: tuple = ()
    boundary: bool = False

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "witness": [str(w) for w in self.witness], "boundary": self.boundary}


def stodola_check(p: Polynomial) -> bool:
    """Necessary condition: ``(-1)^(j(j+1)/2) a_j > 0`` for every ``j``."""
    return stodola(p).verdict


def stodola(p: Polynomial) -> Verdict:
    p, _ = _normalized(p)
    signed = tuple(dual_sign(j) * a for j, a in enumerate(p.coeffs))
    return Verdict(all(x > 0 for x in signed), signed, any(x == 0 for x in signed))


def si_hurwitz(p: Polynomial, delta: list[Fraction] | None = None) -> Verdict:
    """``(-1)^j Delta_{2j-1} > 0`` and ``Delta_{2j} > 0``."""
    p, _ = _normalized(p)
    delta = delta if delta is not None else leading_minors(p)
    odd = all((-1) ** j * delta[2 * j - 2] > 0 for j in range(1, p.ceil_half + 1))
    even = all(delta[2 * j - 1] > 0 for j in range(1, p.floor_half + 1))
    return Verdict(odd and even, tuple(delta), any(d == 0 for d in delta))


def si_hurwitz_criterion(p: Polynomial) -> bool:
    return si_hurwitz(p).verdict


def si_lienard(p: Polynomial, delta: list[Fraction] | None = None) -> Verdict:
    """Odd Hurwitz minors as above, even-indexed coefficients with ``(-1)^j a_{2j} > 0``."""
    p, _ = _normalized(p)
    delta = delta if delta is not None else leading_minors(p)
    odd_minors = [delta[2 * j - 2] for j in range(1, p.ceil_half + 1)]
    even_coeffs = [p.a(2 * j) for j in range(1, p.floor_half + 1)]
    ok = all((-1) ** j * d > 0 for j, d in enumerate(odd_minors, start=1)) and all(
        (-1) ** j * a > 0 for j, a in enumerate(even_coeffs, start=1)
    )
    witness = tuple(odd_minors) + tuple(even_coeffs)
    return Verdict(ok, witness, any(x == 0 for x in witness))


def si_lienard_chipart(p: Polynomial) -> bool:
    return si_lienard(p).verdict


def hurwitz(p: Polynomial, delta: list[Fraction] | None = None) -> Verdict:
    p, _ = _normalized(p)
    delta = delta if delta is not None else leading_minors(p)
    return Verdict(all(d > 0 for d in delta), tuple(delta), any(d == 0 for d in delta))


def hurwitz_classic(p: Polynomial) -> bool:
    return hurwitz(p).verdict


def stability_hankel(p: Polynomial) -> Verdict:
    """``(-1)^(j(j+1)/2) D_j(R) > 0`` for ``j = 1..n``."""
    p, _ = _normalized(p)
    d = r_hankel(p).D
    return Verdict(all(dual_sign(j) * x > 0 for j, x in enumerate(d, start=1)), d, any(x == 0 for x in d))


def stability_hankel_criterion(p: Polynomial) -> bool:
    return stability_hankel(p).verdict


@dataclass(frozen=True)
class DiscProbe:
    max_abs: float
    samples: int
    skipped: int

    @property
    def passed(self) -> bool:
        return self.max_abs < 1.0


def rhp_grid(samples: int, scale: float = 1.0) -> list[complex]:
    """Roughly ``samples`` points in the open right half-plane.

    Real parts are log-spaced from 1e-3 to 1e2 (times ``scale``), imaginary
    parts evenly spaced in ``[-10, 10]`` (times ``scale``).
    """
    nx = max(1, int(math.isqrt(samples)))
    ny = max(1, math.ceil(samples / nx))
    xs = [scale * 10 ** (-3 + 5 * i / max(nx - 1, 1)) for i in range(nx)]
    ys = [scale * (-10 + 20 * k / max(ny - 1, 1)) for k in range(ny)]
    pts = [complex(x, y) for x in xs for y in ys]
    return pts[:samples]


def rhp_unit_disc_probe(p: Polynomial, samples: int = 100, points: list[complex] | None = None) -> DiscProbe:
    """Floating point sup of ``|R(z)|`` over a right half-plane grid (advisory)."""
    p, _ = _normalized(p)
    rf = r_function(p)
    pts = points if points is not None else rhp_grid(samples, float(cauchy_bound(p)))
    best, skipped = 0.0, 0
    for z in pts:
        den = rf.den.evalf(z)
        if den == 0:
            skipped += 1
            continue
        best = max(best, abs(rf.num.evalf(z) / den))
    return DiscProbe(best, len(pts), skipped)


@dataclass(frozen=True)
class ArgumentResidual:
    interval: tuple[Fraction, Fraction]
    t: Fraction
    re: Fraction
    im: Fraction
    residual: Fraction


@dataclass(frozen=True)
class ArgumentReport:
    width: Fraction
    rows: tuple[ArgumentResidual, ...]
    bound_constant: Fraction

    @property
    def max_residual(self) -> Fraction:
        return max((r.residual for r in self.rows), default=Fraction(0))

    @property
    def bound(self) -> Fraction:
        return self.bound_constant * self.width

    @property
    def passed(self) -> bool:
        return all(r.residual <= self.bound for r in self.rows)


def dual_on_imaginary_axis(q: Polynomial, t: Fraction) -> tuple[Fraction, Fraction]:
    """``(Re q(it), Im q(it))`` from the even/odd split: ``q(it) = E(-t^2) + i t O(-t^2)``."""
    parts = even_odd_split(q)
    return parts.even(-t * t), t * parts.odd(-t * t)


def duality_argument_check(p: Polynomial, width) -> ArgumentReport:
    """At each real root ``lam`` of ``p``, ``q(i lam)`` must lie on a diagonal: ``Re = +-Im``.

    Roots are refined to ``width``; the residual at the midpoint is bounded by
    ``C * width`` where ``C`` is half a Lipschitz constant of ``Re -+ Im`` on
    the root enclosures.
    """
    p, _ = _normalized(p)
    width = Fraction(width)
    q = dual(p)
    n = q.degree
    rows = []
    ivs = [refine(p, iv, width) for iv in isolate_real_roots(p)]
    m = max((max(abs(iv.lo), abs(iv.hi)) for iv in ivs), default=Fraction(1))
    lip = sum(((n - k) * abs(c) * m ** max(n - k - 1, 0) for k, c in enumerate(q.coeffs) if k < n), Fraction(0))
    for iv in ivs:
        t = iv.midpoint
        re, im = dual_on_imaginary_axis(q, t)
        rows.append(ArgumentResidual((iv.lo, iv.hi), t, re, im, min(abs(re - im), abs(re + im))))
    return ArgumentReport(width, tuple(rows), lip / 2)


CRITERIA = ("stodola", "si_hurwitz", "si_lienard_chipart", "hurwitz_classic", "stability_hankel", "duality_consistency")


@dataclass
class ClassificationReport:
    input: str
    normalized: bool
    criteria: dict[str, Verdict]
    si_kind: SIKind
    oracle_si: SIKind
    oracle_stability: Stability
    consistent: bool
    flags: list[str] = field(default_factory=list)

    @property
    def decisive(self) -> bool:
        return not any(f in self.flags for f in ("boundary", "oracle_indeterminate", "stability_indeterminate"))

    def to_json(self) -> dict:
        return {
            "input": self.input,
            "normalized": self.normalized,
            "criteria": {k: v.to_json() for k, v in self.criteria.items()},
            "si_kind": self.si_kind.value,
            "oracle": {"si": self.oracle_si.value, "stability": self.oracle_stability.value},
            "consistent": self.consistent,
            "flags": list(self.flags),
        }


def classify(p: Polynomial) -> ClassificationReport:
    """Run every criterion on ``p`` and on its dual, both oracles, and the agreement checks."""
    source = str(p)
    p, flipped = _normalized(p)
    delta = leading_minors(p)
    q = dual(p)
    q_delta = leading_minors(q)

    st = stodola(p)
    sh = si_hurwitz(p, delta)
    lc = si_lienard(p, delta)
    hc = hurwitz(p, delta)
    hk = stability_hankel(p)
    hq = hurwitz(q, q_delta)
    dc = Verdict(sh.verdict == hq.verdict, (sh.verdict, hq.verdict), sh.boundary or hq.boundary)

    reflected, _ = _normalized(reflect(p))
    if sh.verdict:
        kind = SIKind.SI_I
    elif si_hurwitz(reflected).verdict:
        kind = SIKind.SI_II
    else:
        kind = SIKind.NOT_SI

    flags = []
    if flipped:
        flags.append("normalized_sign")
    boundary = any(d == 0 for d in delta)
    if boundary:
        flags.append("boundary")
    if gcd(p, reflect(p)).degree > 0:
        flags.append("shares_roots_with_reflection")
    if not square_free_check(p):
        flags.append("repeated_roots")

    oracle = si_oracle(p)
    if oracle.indeterminate:
        flags.append("oracle_indeterminate")
    stab = stability_oracle(p)
    if stab is Stability.INDETERMINATE:
        flags.append("stability_indeterminate")

    agreements = [dc.verdict, hc.verdict == hk.verdict]
    if not boundary:
        agreements.append(sh.verdict == lc.verdict)
        if not oracle.indeterminate:
            agreements.append(kind == oracle.kind)
    if oracle.kind is SIKind.SI_I:
        agreements.append(st.verdict)
    if stab is not Stability.INDETERMINATE:
        agreements.append(hc.verdict == (stab is Stability.STABLE))
    consistent = all(agreements)
    if not consistent:
        flags.append("inconsistent")

    crit = {
        "stodola": st,
        "si_hurwitz": sh,
        "si_lienard_chipart": lc,
        "hurwitz_classic": hc,
        "stability_hankel": hk,
        "duality_consistency": dc,
    }
    return ClassificationReport(source, flipped, crit, kind, oracle.kind, stab, consistent, flags)
