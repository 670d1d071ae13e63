from fractions import Fraction as F

import pytest

from higherspin.branching import BundleKind, Family, spinor_form_members, spinor_member, sym_member
from higherspin.errors import FactorizationViolated, NotApplicable
from higherspin.factorization import (
    FactorReport,
    b_factor_ev,
    grading_decomposition,
    spinor_form_factor_evs,
    sym_a,
    sym_factor_ev,
    tplus_factorization_check,
    verify_factorization,
)
from higherspin.spectra import OperatorKind as O, laplacian_ev, operator_ev

import oracles


def test_b_factor_fixture():
    m = spinor_member(5, 1, 0, 1)
    assert b_factor_ev(0, m) == F(32, 5)
    assert b_factor_ev(0, m) == oracles.b_factor_direct(5, 1, 0, 1, 0)
    assert b_factor_ev(1, m) == 0
    assert laplacian_ev(m) == F(55, 4)


def test_b_factor_matches_direct_oracle():
    for n in range(3, 9):
        for j in range(4):
            for k in range(5):
                for s in range(j + 1):
                    m = spinor_member(n, j, k, s)
                    for sp in range(j + 1):
                        assert b_factor_ev(sp, m) == oracles.b_factor_direct(n, j, k, s, sp)


def test_lichnerowicz():
    for n in range(3, 11):
        for k in range(10):
            assert b_factor_ev(0, spinor_member(n, 0, k, 0)) == 0


def test_b_factor_domain():
    with pytest.raises(NotApplicable):
        b_factor_ev(2, spinor_member(5, 1, 0, 0))
    with pytest.raises(NotApplicable):
        b_factor_ev(0, sym_member(5, 1, 0, 0))


@pytest.mark.parametrize("kind", [BundleKind.SPINOR, BundleKind.SYM])
def test_vanishing_index_is_s(kind):
    for n in range(3, 9):
        for j in range(5):
            for rep in verify_factorization(kind, n, j, 8):
                assert isinstance(rep, FactorReport)
                assert rep.ok and rep.product == 0
                assert rep.zeros == [rep.member.s]
                assert len(rep.factor_evs) == j + 1


def test_sym_factor_closed_form():
    for n in range(4, 9):
        for j in range(4):
            for k in range(5):
                for s in range(j + 1):
                    m = sym_member(n, j, k, s)
                    assert sym_factor_ev(s, m) == 0
                    assert operator_ev(O.TPLUS, m) == sym_a(n, j, s) * k * (n + k + 2 * j - 1)


def test_spinor_form_two_factors():
    n, j = 6, 1
    for k in range(6):
        for m in spinor_form_members(n, j, k):
            first, second = spinor_form_factor_evs(m)
            if m.family is Family.SPINOR_FORM_UP:
                assert second == 0 and first != 0
            else:
                assert first == 0 and second != 0


def test_spinor_form_single_factor_cases():
    for n in range(3, 10):
        for k in range(4):
            for m in spinor_form_members(n, 0, k):
                assert spinor_form_factor_evs(m) == (0,)
    for mdeg in range(2, 5):
        for k in range(4):
            for m in spinor_form_members(2 * mdeg, mdeg, k):
                assert spinor_form_factor_evs(m) == (0,)


@pytest.mark.parametrize("n", range(3, 11))
def test_spinor_form_grid(n):
    for j in range(n // 2 + 1):
        assert all(rep.ok for rep in verify_factorization(BundleKind.SPINOR_FORM, n, j, 10))


def test_form_bundles_have_no_factorization():
    with pytest.raises(NotApplicable):
        verify_factorization(BundleKind.FORM, 5, 1, 2)


def test_violation_carries_report(monkeypatch):
    import higherspin.factorization as fz

    monkeypatch.setattr(fz, "b_factor_ev", lambda s, m, c=1: F(1))
    with pytest.raises(FactorizationViolated) as info:
        fz.verify_factorization(BundleKind.SPINOR, 5, 1, 0)
    assert info.value.report.factor_evs == (1, 1)


def test_tplus_form():
    m = spinor_member(5, 1, 0, 1)
    assert laplacian_ev(m) == 1 * 6 + 1 * 4 + F(30, 8)
    reps = tplus_factorization_check(4, 2, 10)
    assert len(reps) == 11 * 3
    assert all(r.ok for r in reps)
    for n in range(3, 10):
        for j in range(5):
            for r in tplus_factorization_check(n, j, 6):
                assert r.zeros == [r.member.s]


def test_grading():
    g = grading_decomposition(BundleKind.SYM, 4, 2, 5)
    assert sorted(g.slices) == [0, 1, 2]
    supports = [{(m.k, m.s) for m in g.slices[s]} for s in range(3)]
    assert not (supports[0] & supports[1] or supports[1] & supports[2] or supports[0] & supports[2])
    assert sum(len(x) for x in supports) == 6 * 3
    assert g.ok and g.kernel_equality

    g = grading_decomposition(BundleKind.SPINOR, 5, 3, 4)
    assert all(operator_ev(O.TMINUS, m) == 0 for m in g.slices[3])
    assert all(m.s == 0 for m in g.slices[0])
    assert g.filtration_ok and g.kernel_equality

    with pytest.raises(NotApplicable):
        grading_decomposition(BundleKind.FORM, 5, 1, 2)


def test_scaled_curvature():
    for c in (F(2), F(1, 3)):
        for rep in verify_factorization(BundleKind.SPINOR, 6, 2, 4, c):
            assert rep.ok
        for rep in verify_factorization(BundleKind.SPINOR_FORM, 7, 2, 4, c):
            assert rep.ok
