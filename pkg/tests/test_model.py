from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mmagic import (
    BipolarPathLabeling,
    LabelRangeError,
    PathLabeling,
    ScaledValue,
    ScaleMismatchError,
    bipolar_edge_sums,
    edge_sum,
)


def _frac(v: ScaledValue) -> Fraction:
    return Fraction(str(v))


def test_edge_sum_example3(example3):
    assert edge_sum(example3, 1) == ScaledValue(15, 2)


def test_edge_sum_example4_last_edge(example4):
    # 0.08 + 0.21 + 0.09, summed as rationals from the printed table
    expected = Fraction("0.08") + Fraction("0.21") + Fraction("0.09")
    assert _frac(edge_sum(example4, 8)) == expected == Fraction("0.38")


def test_edge_sum_constant_halves():
    L = PathLabeling(2, 2, (50, 50), (50,))
    assert str(edge_sum(L, 1)) == "1.50"


def test_edge_sum_index_range(example3):
    with pytest.raises(IndexError):
        edge_sum(example3, 0)
    with pytest.raises(IndexError):
        edge_sum(example3, 5)


def test_bipolar_edge_sums_example5(example5):
    assert bipolar_edge_sums(example5, 1) == (ScaledValue(54, 2), ScaledValue(-54, 2))
    assert bipolar_edge_sums(example5, 7) == (ScaledValue(78, 2), ScaledValue(-78, 2))


def test_lengths_enforced():
    with pytest.raises(ValueError):
        PathLabeling(3, 2, (1, 2, 3), (5,))
    with pytest.raises(ValueError):
        PathLabeling(3, 2, (1, 2), (5, 6))
    with pytest.raises(ValueError):
        BipolarPathLabeling(2, 2, (1, 2), (-1,), (5,), (-5,))


def test_zero_label_rejected_one_allowed():
    with pytest.raises(LabelRangeError):
        PathLabeling(2, 2, (0, 1), (5,))
    PathLabeling(2, 2, (100, 1), (100,))
    with pytest.raises(LabelRangeError):
        PathLabeling(2, 2, (1, 1), (101,))
    with pytest.raises(LabelRangeError):
        BipolarPathLabeling(2, 2, (1, 1), (-1, 0), (5,), (-5,))


def test_mixed_scale_labels_rejected():
    with pytest.raises(ScaleMismatchError):
        PathLabeling(2, 2, (ScaledValue(1, 2), ScaledValue(1, 3)), (5,))


def test_unchecked_labeling_keeps_out_of_range():
    L = PathLabeling(2, 2, (0, 1), (5,), check_range=False)
    assert L.sigma[0].units == 0


positive_units = st.integers(1, 100)


@given(st.integers(2, 12).flatmap(
    lambda n: st.tuples(st.lists(positive_units, min_size=n, max_size=n), st.lists(positive_units, min_size=n - 1, max_size=n - 1))
))
def test_mirror_sums_negate(data):
    sigma, mu = data
    L = BipolarPathLabeling.mirror(sigma, mu, 2)
    for i in range(1, L.n):
        pos, neg = bipolar_edge_sums(L, i)
        assert neg == -pos
        assert pos == edge_sum(L.positive(), i)


@given(st.integers(2, 12).flatmap(
    lambda n: st.tuples(st.lists(positive_units, min_size=n, max_size=n), st.lists(positive_units, min_size=n - 1, max_size=n - 1))
))
def test_edge_sum_matches_rational_sum(data):
    sigma, mu = data
    L = PathLabeling.from_units(sigma, mu, 2)
    for i in range(1, L.n):
        expected = Fraction(sigma[i - 1] + mu[i - 1] + sigma[i], 100)
        assert _frac(edge_sum(L, i)) == expected
        assert edge_sum(L, i) == edge_sum(L, i)
