from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from higherspin.closed_forms import spinor_fiber_dim
from higherspin.errors import InternalNonInteger, MixedParity, NotDominant, WrongLength
from higherspin.rep_core import (
    AlgebraDescriptor,
    IrrepLabel,
    as_rational,
    casimir,
    delta_vector,
    dominant_weights,
    format_weight,
    parse_weight,
    tensor_with_standard,
    validate_weight,
    weyl_dim,
)

import oracles


def lab(n, *entries):
    return IrrepLabel.of(n, [F(e) for e in entries])


def test_algebra_descriptor():
    assert AlgebraDescriptor(5).rank == 2 and AlgebraDescriptor(5).series == "B"
    assert AlgebraDescriptor(6).rank == 3 and AlgebraDescriptor(6).series == "D"
    assert AlgebraDescriptor(3).rank == 1
    with pytest.raises(ValueError):
        AlgebraDescriptor(2)


def test_validate_examples():
    assert validate_weight(AlgebraDescriptor(5), ["1/2", "1/2"]).weight == (F(1, 2), F(1, 2))
    with pytest.raises(NotDominant):
        validate_weight(AlgebraDescriptor(5), ["1/2", "3/2"])
    assert validate_weight(AlgebraDescriptor(6), [1, 1, -1]).weight[-1] == -1


def test_validate_errors():
    with pytest.raises(WrongLength):
        validate_weight(AlgebraDescriptor(5), [1])
    with pytest.raises(MixedParity):
        validate_weight(AlgebraDescriptor(5), ["1", "1/2"])
    with pytest.raises(MixedParity):
        validate_weight(AlgebraDescriptor(5), ["1/3", "1/3"])
    with pytest.raises(NotDominant):
        validate_weight(AlgebraDescriptor(5), [1, -1])  # B series needs a non-negative last entry
    with pytest.raises(NotDominant):
        validate_weight(AlgebraDescriptor(6), [1, 0, -1])
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_delta_vector():
    assert delta_vector(AlgebraDescriptor(5)) == (F(3, 2), F(1, 2))
    assert delta_vector(AlgebraDescriptor(4)) == (F(1), F(0))
    assert delta_vector(AlgebraDescriptor(3)) == (F(1, 2),)
    assert delta_vector(AlgebraDescriptor(9)) == (F(7, 2), F(5, 2), F(3, 2), F(1, 2))


def test_weyl_dim_examples():
    assert weyl_dim(lab(5, 1, 1)) == 10
    assert weyl_dim(lab(5, 0, 0)) == 1
    assert weyl_dim(lab(5, "3/2", "1/2")) == 16
    assert weyl_dim(lab(5, 2, 2)) == 35


def test_low_rank_dims():
    # so(3): spin l/2 has dim l + 1
    for l in range(8):
        assert weyl_dim(lab(3, F(l, 2))) == l + 1
    # so(4) = su(2) x su(2): (a, b) has dim (a+b+1)(a-b+1)
    for a2 in range(0, 8):
        for b2 in range(-a2, a2 + 1, 2):
            a, b = F(a2, 2), F(b2, 2)
            assert weyl_dim(lab(4, a, b)) == (a + b + 1) * (a - b + 1)


@pytest.mark.parametrize("n", range(3, 13))
def test_standard_reps(n):
    m = n // 2
    for k in range(m):
        w = [1] * k + [0] * (m - k)
        assert weyl_dim(lab(n, *w)) == oracles.dim_forms(n, k)
    for j in range(6):
        assert weyl_dim(lab(n, j, *([0] * (m - 1)))) == oracles.dim_traceless_sym(n, j)
    half = [F(1, 2)] * m
    total = weyl_dim(lab(n, *half))
    if n % 2 == 0:
        total += weyl_dim(lab(n, *half[:-1], F(-1, 2)))
    assert total == oracles.dim_spinors(n)


@pytest.mark.parametrize("n", range(3, 13))
def test_spinor_fiber_closed_form(n):
    m = n // 2
    for j in range(7):
        w = [F(2 * j + 1, 2)] + [F(1, 2)] * (m - 1)
        d = weyl_dim(lab(n, *w))
        if n % 2 == 0:
            d += weyl_dim(lab(n, *w[:-1], F(-1, 2)))
        assert d == spinor_fiber_dim(n, j)


def test_casimir_examples():
    assert casimir(lab(5, "1/2", "1/2")) == F(5, 2)
    assert casimir(lab(5, 0, 0)) == 0
    assert casimir(lab(5, 1, 0)) == 4


@pytest.mark.parametrize("n", range(3, 11))
def test_casimir_is_laplacian_on_functions(n):
    rank = (n + 1) // 2
    for k in range(8):
        assert casimir(lab(n + 1, k, *([0] * (rank - 1)))) == k * (k + n - 1)


def test_weyl_dim_integral_on_grid():
    for n in range(3, 12):
        alg = AlgebraDescriptor(n)
        for half in (False, True):
            for w in dominant_weights(alg, F(9, 2), half):
                assert weyl_dim(IrrepLabel(alg, w)) >= 1


def test_internal_non_integer_is_raised_for_garbage():
    from higherspin.rep_core import _weyl_dim

    with pytest.raises(InternalNonInteger):
        _weyl_dim(AlgebraDescriptor(5), (F(1, 3), F(1, 3)))


@pytest.mark.parametrize("n", range(3, 12))
def test_tensor_with_standard_dimension(n):
    alg = AlgebraDescriptor(n)
    for half in (False, True):
        for w in dominant_weights(alg, F(5, 2), half):
            label = IrrepLabel(alg, w)
            total = sum(weyl_dim(t) for t in tensor_with_standard(label))
            assert total == n * weyl_dim(label), label


def test_dominant_weights_counts():
    alg = AlgebraDescriptor(4)
    assert len(list(dominant_weights(alg, F(2), False))) == 9
    assert len(list(dominant_weights(alg, F(3, 2), True))) == 6
    assert list(dominant_weights(alg, F(-1), False)) == []


def test_parse_and_format():
    w = parse_weight("5/2, 3/2,1/2")
    assert w == (F(5, 2), F(3, 2), F(1, 2))
    assert format_weight(w) == "(5/2,3/2,1/2)"
    for bad in ("", "1,,2", "a,b", "1/0"):
        with pytest.raises(ValueError):
            parse_weight(bad)


weights = st.integers(min_value=3, max_value=11).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.booleans(),
        st.lists(st.integers(0, 5), min_size=n // 2, max_size=n // 2),
        st.booleans(),
    )
)


def _make(n, half, raw, flip):
    alg = AlgebraDescriptor(n)
    vals = sorted((F(x) + (F(1, 2) if half else 0) for x in raw), reverse=True)
    if flip and alg.series == "D" and vals[-1] != 0:
        vals[-1] = -vals[-1]
    return IrrepLabel(alg, tuple(vals))


@settings(max_examples=200, deadline=None)
@given(weights)
def test_casimir_monotone_in_first_direction(data):
    label = _make(*data)
    up = IrrepLabel(label.algebra, (label.weight[0] + 1,) + label.weight[1:])
    assert casimir(up) > casimir(label)
    assert weyl_dim(up) > weyl_dim(label)


@settings(max_examples=200, deadline=None)
@given(weights)
def test_last_sign_flip_preserves_dim_and_casimir(data):
    label = _make(*data)
    if label.algebra.series == "D":
        flipped = IrrepLabel(label.algebra, label.weight[:-1] + (-label.weight[-1],))
        assert weyl_dim(flipped) == weyl_dim(label)
        assert casimir(flipped) == casimir(label)
