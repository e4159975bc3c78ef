from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import F1, F2, F3, F4, F5, polynomials, si_root_patterns
from selfinterlacing.criteria import (
    classify,
    duality_argument_check,
    dual_on_imaginary_axis,
    hurwitz_classic,
    rhp_grid,
    rhp_unit_disc_probe,
    si_hurwitz,
    si_hurwitz_criterion,
    si_lienard_chipart,
    stability_hankel,
    stability_hankel_criterion,
    stodola_check,
)
from selfinterlacing.errors import DomainError
from selfinterlacing.hurwitz import leading_minors
from selfinterlacing.poly import Polynomial, dual, from_roots, reflect
from selfinterlacing.realroots import SIKind, Stability, si_oracle


def P(*cs):
    return Polynomial(cs)


class TestStodola:
    def test_examples(self):
        assert stodola_check(F3)
        assert stodola_check(F2)
        assert not stodola_check(P(1, 1, -2))

    def test_negative_leading(self):
        assert stodola_check(-F3)


class TestSIHurwitz:
    def test_examples(self):
        assert si_hurwitz_criterion(F3)
        assert si_hurwitz_criterion(F2)
        v = si_hurwitz(F5)
        assert not v.verdict and v.boundary

    def test_witness(self):
        assert si_hurwitz(F3).witness == (-2, 4, 24)


class TestLienard:
    def test_examples(self):
        assert si_lienard_chipart(F3)
        assert si_lienard_chipart(F2)
        assert not si_lienard_chipart(P(1, -1, 2))


class TestClassic:
    def test_examples(self):
        assert hurwitz_classic(dual(F3))
        assert not hurwitz_classic(F3)
        assert hurwitz_classic(F4)
        assert leading_minors(F4) == [2, 2]


class TestStabilityHankel:
    def test_examples(self):
        v = stability_hankel(P(1, 1))
        assert v.verdict and v.witness == (-2,)
        assert not stability_hankel_criterion(F5)
        assert stability_hankel(F5).boundary
        assert stability_hankel_criterion(P(1, 1, 2))

    @settings(deadline=None)
    @given(polynomials(max_degree=7))
    def test_equivalence(self, p):
        assert hurwitz_classic(p) == stability_hankel_criterion(p)


class TestAgreement:
    @settings(max_examples=60, deadline=None)
    @given(polynomials(max_degree=6))
    def test_random(self, p):
        if p.leading < 0:
            p = -p
        if any(d == 0 for d in leading_minors(p)):
            return
        sh = si_hurwitz_criterion(p)
        assert sh == si_lienard_chipart(p)
        assert sh == hurwitz_classic(dual(p))
        oracle = si_oracle(p)
        if not oracle.indeterminate:
            assert sh == (oracle.kind is SIKind.SI_I)
        if oracle.kind is SIKind.SI_I:
            assert stodola_check(p)

    @settings(deadline=None)
    @given(si_root_patterns(max_degree=7))
    def test_constructed(self, roots):
        p = from_roots(roots)
        assert si_hurwitz_criterion(p) and si_lienard_chipart(p) and stodola_check(p)
        assert hurwitz_classic(dual(p)) and stability_hankel_criterion(dual(p))


class TestDiscProbe:
    def test_dual_f2(self):
        probe = rhp_unit_disc_probe(P(1, 1, 2), samples=100)
        assert probe.samples == 100 and probe.passed

    def test_far_right(self):
        pts = [complex(10, y) for y in range(-5, 6)]
        assert rhp_unit_disc_probe(P(1, 1), points=pts).max_abs < 0.9

    def test_near_axis(self):
        probe = rhp_unit_disc_probe(P(1, 1), points=[complex(1e-4, 0)])
        assert 0.999 < probe.max_abs < 1

    def test_unstable_exceeds(self):
        assert not rhp_unit_disc_probe(F2, samples=100).passed

    def test_grid(self):
        pts = rhp_grid(100)
        assert len(pts) == 100 and all(z.real > 0 for z in pts)


class TestDualityArgument:
    def test_axis_values(self):
        q = dual(F2)
        assert dual_on_imaginary_axis(q, Fraction(2)) == (-2, 2)
        assert dual_on_imaginary_axis(q, Fraction(-1)) == (1, -1)
        assert dual_on_imaginary_axis(dual(F1), Fraction(1)) == (1, 1)

    @pytest.mark.parametrize("p", [F1, F2, F3])
    def test_fixtures(self, p):
        rep = duality_argument_check(p, Fraction(1, 10**8))
        assert rep.passed and len(rep.rows) == p.degree

    def test_shrinks(self):
        p = from_roots([Fraction(7, 3), Fraction(-5, 4), Fraction(1, 7)])
        a = duality_argument_check(p, Fraction(1, 10**6))
        b = duality_argument_check(p, Fraction(1, 16 * 10**6))
        assert a.passed and b.passed
        assert sum(r.residual for r in b.rows) * 10 <= sum(r.residual for r in a.rows)


class TestClassify:
    def test_f3(self):
        r = classify(F3)
        assert r.si_kind is SIKind.SI_I and r.oracle_si is SIKind.SI_I
        assert r.consistent and r.decisive and r.flags == []
        assert r.criteria["duality_consistency"].verdict

    def test_dual_f3(self):
        r = classify(dual(F3))
        assert r.oracle_stability is Stability.STABLE and r.criteria["hurwitz_classic"].verdict
        assert classify(dual(dual(F3))).si_kind is SIKind.SI_I

    def test_f5(self):
        r = classify(F5)
        assert r.si_kind is SIKind.NOT_SI and r.oracle_si is SIKind.NOT_SI
        assert not r.criteria["hurwitz_classic"].verdict
        assert "shares_roots_with_reflection" in r.flags and "boundary" in r.flags
        assert not r.decisive

    def test_kind_two(self):
        r = classify(reflect(F3))
        assert r.si_kind is SIKind.SI_II and r.normalized and "normalized_sign" in r.flags
        assert r.consistent

    def test_degree_zero(self):
        with pytest.raises(DomainError):
            classify(P(4))

    def test_json_schema(self):
        doc = classify(F3).to_json()
        assert set(doc) == {"input", "normalized", "criteria", "si_kind", "oracle", "consistent", "flags"}
        assert set(doc["criteria"]) == {
            "stodola",
            "si_hurwitz",
            "si_lienard_chipart",
            "hurwitz_classic",
            "stability_hankel",
            "duality_consistency",
        }
        for v in doc["criteria"].values():
            assert isinstance(v["verdict"], bool) and all(isinstance(w, str) for w in v["witness"])
        assert doc["oracle"] == {"si": "SI_I", "stability": "NOT_STABLE"}
