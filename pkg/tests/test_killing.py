from fractions import Fraction as F

import pytest

from higherspin.branching import Family, form_members
from higherspin.errors import DegreeOutOfRange
from higherspin.killing import (
    chain_ok,
    chain_weights,
    excluded_absent,
    killing_forms,
    killing_space_dim,
    primitive_dim,
    primitive_killing,
)
from higherspin.spectra import OperatorKind as O, operator_ev

import oracles


def test_primitive_examples():
    pieces = primitive_killing(4, 1)
    assert [(p.weight, p.dim) for p in pieces] == [((F(1), F(1)), 10)]
    pieces = primitive_killing(4, 2)
    assert [(p.weight, p.dim) for p in pieces] == [((F(2), F(2)), 35), ((F(2), F(0)), 14)]
    assert [(p.weight, p.dim) for p in primitive_killing(4, 0)] == [((F(0), F(0)), 1)]


def test_totals():
    assert killing_space_dim(4, 2).total_dim == 50 == oracles.killing_2_tensors(4)
    assert killing_space_dim(4, 1).total_dim == 10
    kd = killing_space_dim(3, 2)
    assert kd.total_dim == 20 == oracles.killing_2_tensors(3)
    assert [len(p.labels) for p in kd.primitive_pieces] == [2, 1]
    assert [p.dim for p in kd.primitive_pieces] == [10, 9]


@pytest.mark.parametrize("n", range(3, 11))
def test_killing_vectors_and_two_tensors(n):
    assert killing_space_dim(n, 1).total_dim == n * (n + 1) // 2
    assert killing_space_dim(n, 2).total_dim == oracles.killing_2_tensors(n)


def test_graded_pieces():
    kd = killing_space_dim(5, 4)
    assert kd.graded_pieces == {0: primitive_dim(5, 4), 1: primitive_dim(5, 2), 2: 1}


def test_killing_forms_examples():
    kf = killing_forms(4, 2)
    assert kf.killing_dim == 10 and kf.killing == kf.co_killing
    kf = killing_forms(4, 0)
    assert kf.killing_dim == 5 and kf.co_killing_dim == 1
    with pytest.raises(DegreeOutOfRange):
        killing_forms(4, 3)
    with pytest.raises(DegreeOutOfRange):
        killing_space_dim(4, -1)


@pytest.mark.parametrize("n", range(3, 11))
def test_killing_forms_dims(n):
    for j in range(n // 2 + 1):
        kf = killing_forms(n, j)
        # Killing j-forms are Lambda^{j+1} of R^{n+1}
        up = j if n == 2 * j else j + 1
        assert kf.killing_dim == oracles.dim_forms(n + 1, up)
        members = [m for m in form_members(n, j, 0) if m.family is Family.FORM_UP]
        for m in members:
            assert operator_ev(O.C, m) == 0
            assert operator_ev(O.D_DSTAR, m) == 0


def test_chain():
    for n in range(3, 8):
        for j in range(6):
            for i in range(j // 2 + 1):
                assert chain_ok(n, j, i)
                assert excluded_absent(n, j, i)
    chain = chain_weights(5, 4, 1)
    assert [sp for sp, _, _ in chain] == [0, 1]


@pytest.mark.parametrize("n", range(3, 11))
def test_plethysm_pieces(n):
    want = oracles.killing_2_tensor_pieces(n)
    kd = killing_space_dim(n, 2)
    assert [p.dim for p in kd.primitive_pieces] == [want["(2,2)"], want["(2,0)"]]
    assert kd.graded_pieces[1] == want["(0,0)"]
    assert kd.total_dim == oracles.gl_schur_22(n + 1) == oracles.killing_2_tensors(n)
