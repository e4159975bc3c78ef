"""Acceptance suite: one printed PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py`` (the lines appear in the terminal
summary) or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import random
import statistics
import time
from fractions import Fraction

import pytest

from selfinterlacing.criteria import (
    duality_argument_check,
    hurwitz_classic,
    rhp_unit_disc_probe,
    si_hurwitz_criterion,
    si_lienard_chipart,
    stability_hankel_criterion,
    stodola_check,
)
from selfinterlacing.errors import DegenerateError
from selfinterlacing.generate import (
    binomial_dual,
    random_polynomial,
    random_si,
    random_stable,
    random_tridiagonal,
)
from selfinterlacing.hankel import associated_phi, hurwitz_formula_check, lemma51_check
from selfinterlacing.hurwitz import leading_minors, sample_indices, total_nonnegativity_spot_check
from selfinterlacing.poly import Polynomial, derivative, dual, markov_family, tridiagonal_char_poly
from selfinterlacing.realroots import SIKind, Stability, isolate_real_roots, refine, si_oracle, stability_oracle
from selfinterlacing.stieltjes import cf_coeffs_from_minors, cf_expand, cf_sign_check, phi_continued_fraction

RESULTS: list[str] = []

FIXTURES_SI = [Polynomial([1, -1]), Polynomial([1, -1, -2]), Polynomial([1, -2, -5, 6])]


def report(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS.append(line)
    print(line)


def perturb(rng: random.Random, p: Polynomial) -> Polynomial:
    """Nudge one coefficient by a small relative amount; often crosses the SI/stable boundary."""
    cs = list(p.coeffs)
    k = rng.randrange(1, len(cs)) if len(cs) > 1 else 0
    scale = cs[k] if cs[k] != 0 else Fraction(1)
    cs[k] += scale * Fraction(rng.choice((-1, 1)) * rng.choice((1, 2, 5, 20)), 50)
    return Polynomial(cs)


def normalized(p: Polynomial) -> Polynomial:
    return -p if p.leading < 0 else p


def build_corpus(seed: int = 20240601):
    rng = random.Random(seed)
    si = [random_si(rng, rng.randint(2, 8)) for _ in range(200)]
    stable = [random_stable(rng, rng.randint(2, 8)) for _ in range(200)]
    mixed: list[Polynomial] = []
    while len(mixed) < 1000:
        family = len(mixed) % 3
        deg = rng.randint(1, 8)
        if family == 0:
            p = random_polynomial(rng, deg)
        elif family == 1:
            p = perturb(rng, random_si(rng, max(deg, 2)))
        else:
            p = dual(perturb(rng, random_stable(rng, max(deg, 2))))
        p = normalized(p)
        if p.degree >= 1 and all(d != 0 for d in leading_minors(p)):
            mixed.append(p)
    return si, stable, mixed


_CORPUS = None


def corpus():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = build_corpus()
    return _CORPUS


def test_criterion_1_binomial_example():
    start = time.perf_counter()
    worst, failures = 0.0, []
    for n in range(1, 9):
        for a in (Fraction(1), Fraction(2), Fraction(1, 2)):
            q, expected = binomial_dual(n, a)
            ivs = [refine(q, iv, Fraction(1, 10**12)) for iv in isolate_real_roots(q)]
            if len(ivs) != n:
                failures.append((n, a, "root count"))
                continue
            for iv, mu in zip(ivs, expected):
                err = abs(float(iv.midpoint) - mu)
                worst = max(worst, err)
                if iv.width > Fraction(1, 10**12) or err > 1e-10:
                    failures.append((n, a, mu))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 5
    report(1, ok, f"24 cases, max |mid - mu| = {worst:.2e}, {elapsed:.2f}s, failures={failures[:3]}")
    assert ok


def test_criterion_2_agreement():
    start = time.perf_counter()
    si, stable, mixed = corpus()
    bad_si = [p for p in si if not (
        si_oracle(p).kind is SIKind.SI_I
        and si_hurwitz_criterion(p)
        and si_lienard_chipart(p)
        and stodola_check(p)
        and cf_sign_check(phi_continued_fraction(p), p.degree)
    )]
    bad_stable = [p for p in stable if not (hurwitz_classic(p) and stability_hankel_criterion(p))]
    exceptions, si_count, stable_count, indeterminate = [], 0, 0, 0
    for p in mixed:
        oracle = si_oracle(p)
        stab = stability_oracle(p)
        sh = si_hurwitz_criterion(p)
        hc = hurwitz_classic(p)
        checks = [
            sh == si_lienard_chipart(p),
            sh == hurwitz_classic(dual(p)),
            hc == stability_hankel_criterion(p),
            oracle.kind is not SIKind.SI_I or stodola_check(p),
        ]
        if oracle.indeterminate or stab is Stability.INDETERMINATE:
            indeterminate += 1
        if not oracle.indeterminate:
            checks.append(sh == (oracle.kind is SIKind.SI_I))
        if stab is not Stability.INDETERMINATE:
            checks.append(hc == (stab is Stability.STABLE))
        if not all(checks):
            exceptions.append(str(p))
        si_count += sh
        stable_count += hc
    elapsed = time.perf_counter() - start
    ok = not bad_si and not bad_stable and not exceptions and indeterminate == 0
    report(
        2,
        ok,
        f"SI_I {200 - len(bad_si)}/200, stable {200 - len(bad_stable)}/200, "
        f"random {1000 - len(exceptions)}/1000 agree ({si_count} SI_I, {stable_count} stable, "
        f"{indeterminate} oracle-indeterminate), {elapsed:.1f}s",
    )
    assert ok, (bad_si[:3], bad_stable[:3], exceptions[:3])


def test_criterion_3_duality():
    si, stable, mixed = corpus()
    everything = si + stable + mixed
    mismatched = [p for p in everything if si_hurwitz_criterion(p) != hurwitz_classic(dual(p))]
    not_involution = [p for p in everything if str(dual(dual(p))) != str(p) or dual(dual(p)).coeffs != p.coeffs]
    ok = len(everything) == 1400 and not mismatched and not not_involution
    report(3, ok, f"{len(everything)} polynomials, {len(mismatched)} verdict mismatches, {len(not_involution)} involution failures")
    assert ok


def test_criterion_4_universal_identities():
    start = time.perf_counter()
    rng = random.Random(4)
    polys = [random_polynomial(rng, rng.randint(1, 8)) for _ in range(1000)]
    failures = {"hankel_r_minors": 0, "hurwitz_formula": 0, "minor_relation": 0, "cf_cross_path": 0}
    cf_defined = minors_checked = 0
    for i, p in enumerate(polys):
        failures["hankel_r_minors"] += not lemma51_check(p).passed
        failures["hurwitz_formula"] += not hurwitz_formula_check(p).passed
        sample = sample_indices(p.degree, 3, 100, seed=i)
        minors_checked += len(sample)
        failures["minor_relation"] += not total_nonnegativity_spot_check(p, sample).sign_relation_holds
        q = normalized(p)
        try:
            via_minors = cf_coeffs_from_minors(q)
        except DegenerateError:
            continue
        cf_defined += 1
        failures["cf_cross_path"] += cf_expand(associated_phi(q)) != via_minors
    elapsed = time.perf_counter() - start
    ok = not any(failures.values())
    report(
        4,
        ok,
        f"1000 random polynomials, {minors_checked} minor pairs, cf defined for {cf_defined}, "
        f"failures={failures}, {elapsed:.1f}s",
    )
    assert ok


def test_criterion_5_total_nonnegativity():
    rng = random.Random(5)
    failed, checked = [], 0
    for k in range(50):
        p = random_si(rng, rng.randint(2, 8))
        assert si_oracle(p).kind is SIKind.SI_I
        rep = total_nonnegativity_spot_check(p, sample_indices(p.degree, 3, 100, seed=k))
        checked += len(rep.checks)
        if not rep.passed:
            failed.append(str(p))
    ok = not failed
    report(5, ok, f"50 SI_I polynomials, {checked} minors checked, {len(failed)} failing polynomials")
    assert ok


def test_criterion_6_closure():
    rng = random.Random(6)
    failures, derived = [], 0
    for _ in range(100):
        p = random_si(rng, rng.randint(2, 8))
        family = [derivative(p, k) for k in range(p.degree)]
        family += [markov_family(p, j) for j in range(1, p.degree // 2)]
        derived += len(family)
        failures += [str(f) for f in family if si_oracle(f).kind is not SIKind.SI_I]
    ok = not failures
    report(6, ok, f"100 SI_I sources, {derived} derived polynomials, {len(failures)} not SI_I")
    assert ok


def test_criterion_7_tridiagonal():
    rng = random.Random(7)
    bad = 0
    for sign, kind in ((1, SIKind.SI_I), (-1, SIKind.SI_II)):
        for _ in range(100):
            spec = random_tridiagonal(rng, rng.randint(1, 8), sign)
            bad += si_oracle(tridiagonal_char_poly(spec)).kind is not kind
    ok = bad == 0
    report(7, ok, f"100 specs with b_1 > 0 and 100 with b_1 < 0, {bad} wrong kinds")
    assert ok


def test_criterion_8_argument_residuals():
    # A midpoint residual is |g'(lam)| times the midpoint-to-root distance, a
    # random fraction of the width.  The summed residual is dominated by a few
    # large-coefficient roots, so the shrink is judged on the median per-root
    # ratio; the summed ratio is printed alongside for reference.
    rng = random.Random(8)
    polys = FIXTURES_SI + [random_si(rng, rng.randint(2, 8)) for _ in range(50)]
    w = Fraction(1, 10**8)
    over_bound, exact_hits = 0, 0
    coarse, fine = Fraction(0), Fraction(0)
    ratios = []
    for p in polys:
        a = duality_argument_check(p, w)
        b = duality_argument_check(p, w / 16)
        over_bound += (not a.passed) + (not b.passed)
        coarse += sum(r.residual for r in a.rows)
        fine += sum(r.residual for r in b.rows)
        for ra, rb in zip(a.rows, b.rows):
            if ra.residual and rb.residual:
                ratios.append(ra.residual / rb.residual)
            else:
                exact_hits += 1
    median = float(statistics.median(ratios))
    summed = float(coarse / fine) if fine else math.inf
    ok = over_bound == 0 and median >= 10
    report(
        8,
        ok,
        f"{len(polys)} SI_I polynomials, {over_bound} bound violations, median per-root shrink {median:.1f}x "
        f"for 16x width ({len(ratios)} roots, {exact_hits} exact midpoints; summed ratio {summed:.1f}x)",
    )
    assert ok


def test_criterion_9_disc_probe():
    rng = random.Random(9)
    worst = 0.0
    for _ in range(50):
        p = random_stable(rng, rng.randint(1, 8))
        probe = rhp_unit_disc_probe(p, samples=100)
        worst = max(worst, probe.max_abs)
    ok = worst < 1 + 1e-9
    report(9, ok, f"50 stable polynomials, 100 grid points each, max |R| = {worst:.12f}")
    assert ok


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
