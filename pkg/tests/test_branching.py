from fractions import Fraction as F
import random

import pytest
from hypothesis import given, settings, strategies as st

from higherspin.branching import (
    BundleDescriptor,
    BundleKind,
    Family,
    branch,
    contains,
    family_generic_mismatch,
    form_bundle,
    frobenius_decompose,
    generic_decompose,
    make_bundle,
    spinor_bundle,
    spinor_form_bundle,
    sym_bundle,
)
from higherspin.errors import RankMismatch, UnsupportedFiber
from higherspin.rep_core import AlgebraDescriptor, IrrepLabel, weyl_dim
from higherspin.suites import random_dominant


def lab(n, *entries):
    return IrrepLabel.of(n, [F(e) for e in entries])


def test_branch_examples():
    kids = branch(lab(5, 1, 0)).children
    assert {c.weight for c in kids} == {(F(1), F(0)), (F(0), F(0))}
    kids = branch(lab(5, "1/2", "1/2")).children
    assert {c.weight for c in kids} == {(F(1, 2), F(1, 2)), (F(1, 2), F(-1, 2))}
    assert [weyl_dim(c) for c in kids] == [2, 2]
    for sign in (1, -1):
        kids = branch(lab(4, "1/2", F(sign, 2))).children
        assert [c.weight for c in kids] == [(F(1, 2),)]


def test_contains_examples():
    assert contains(lab(7, 2, 1, 0), lab(6, 1, 1, 0)) == 1
    assert contains(lab(5, 0, 0), lab(4, 1, 0)) == 0
    for m in (2, 3):
        for k in range(3):
            for j in range(3):
                for s in range(j + 1):
                    parent = lab(2 * m + 1, F(2 * (k + j) + 1, 2), F(2 * s + 1, 2), *([F(1, 2)] * (m - 2)))
                    fiber = lab(2 * m, F(2 * j + 1, 2), *([F(1, 2)] * (m - 1)))
                    assert contains(parent, fiber) == 1
    with pytest.raises(RankMismatch):
        contains(lab(5, 1, 0), lab(5, 1, 0))


def test_integrality_condition():
    # half-integer fiber never sits inside a tensorial parent
    assert contains(lab(5, 1, 1), lab(4, "1/2", "1/2")) == 0


def test_dimension_conservation_random():
    rng = random.Random(7)
    for t in range(300):
        alg = AlgebraDescriptor(rng.randint(4, 11))
        parent = random_dominant(rng, alg, half=bool(t % 2))
        kids = branch(parent).children
        assert sum(weyl_dim(c) for c in kids) == weyl_dim(parent)
        assert len(set(kids)) == len(kids)
        assert all(contains(parent, c) for c in kids)


@settings(max_examples=150, deadline=None)
@given(st.integers(4, 9), st.integers(0, 2**32 - 1), st.booleans())
def test_contains_agrees_with_branch(n, seed, half):
    rng = random.Random(seed)
    parent = random_dominant(rng, AlgebraDescriptor(n), half, top=F(7, 2))
    child_alg = AlgebraDescriptor(n - 1)
    kids = set(branch(parent).children)
    fiber = random_dominant(rng, child_alg, half, top=F(7, 2))
    assert contains(parent, fiber) == (1 if fiber in kids else 0)


def test_family_examples():
    mem = frobenius_decompose(spinor_bundle(4, 1), 2)
    assert [(m.k, m.s) for m in mem] == [(k, s) for k in range(3) for s in range(2)]
    assert all(m.multiplicity == 2 for m in mem)

    mem = frobenius_decompose(form_bundle(4, 2), 1)
    assert {m.parent_weight for m in mem} == {(F(1), F(1)), (F(2), F(1))}
    total = {}
    for m in mem:
        total[m.parent_weight] = total.get(m.parent_weight, 0) + m.multiplicity
    assert set(total.values()) == {2}

    mem = frobenius_decompose(spinor_bundle(3, 0), 0)
    assert len(mem) == 1
    assert set(mem[0].parent_weights) == {(F(1, 2), F(1, 2)), (F(1, 2), F(-1, 2))}
    assert mem[0].dim == 4


def test_generic_mode_on_s3_spinors():
    out = generic_decompose(spinor_bundle(3, 0), 0)
    assert {lab.weight for lab, _ in out} == {(F(1, 2), F(1, 2)), (F(1, 2), F(-1, 2)), (F(3, 2), F(1, 2)), (F(3, 2), F(-1, 2))}


@pytest.mark.parametrize("n", range(3, 10))
@pytest.mark.parametrize("kind", list(BundleKind))
def test_family_generic_agreement(n, kind):
    j_top = min(3, n // 2) if kind in (BundleKind.FORM, BundleKind.SPINOR_FORM) else 3
    for j in range(j_top + 1):
        for k_max in (0, 4):
            assert family_generic_mismatch(make_bundle(kind, n, j), k_max) == {}


def test_labels():
    bundle = spinor_form_bundle(5, 1)
    labels = [m.label for m in frobenius_decompose(bundle, 0)]
    assert labels == ["V_2(0)'", "V_1(0)'"]
    assert frobenius_decompose(sym_bundle(4, 2), 0)[0].label == "V_2(0,0)"


def test_middle_degree_spinor_forms_only_down():
    mem = frobenius_decompose(spinor_form_bundle(4, 2), 3)
    assert {m.family for m in mem} == {Family.SPINOR_FORM_DOWN}
    assert all(m.multiplicity == 2 for m in mem)


def test_unsupported():
    with pytest.raises(UnsupportedFiber):
        form_bundle(4, 3)
    with pytest.raises(UnsupportedFiber):
        spinor_bundle(2, 0)
    generic = BundleDescriptor.generic(lab(4, 1, 1))
    with pytest.raises(UnsupportedFiber):
        frobenius_decompose(generic, 2)
    # generic mode still works for any irreducible fiber
    assert all(m >= 1 for _, m in generic_decompose(generic, 2))


def test_generic_bound_is_complete():
    """Nothing with a larger first entry can hold a fiber whose parents we count at small k."""
    bundle = BundleDescriptor.generic(lab(6, 2, 1, -1))
    small = generic_decompose(bundle, 1)
    big = generic_decompose(bundle, 3)
    cap = max(l.weight[0] for l, _ in small)
    assert {l for l, _ in big if l.weight[0] <= cap} == {l for l, _ in small}
