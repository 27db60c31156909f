from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mmagic.numerics import (
    InadmissibleError,
    ScaledValue,
    ScaleMismatchError,
    add,
    compare,
    parse_decimal,
    scale_band,
    select_scale,
    to_decimal_string,
    value_of,
)

scales = st.integers(min_value=1, max_value=8)


@st.composite
def same_scale_values(draw, count=2):
    p = draw(scales)
    return [ScaledValue(draw(st.integers(-10**12, 10**12)), p) for _ in range(count)]


def test_add():
    assert add(value_of(1, 2), value_of(26, 2)) == value_of(27, 2)


def test_compare_equal():
    assert compare(value_of(36, 2), value_of(36, 2)) == 0
    assert compare(value_of(35, 2), value_of(36, 2)) == -1
    assert compare(value_of(37, 2), value_of(36, 2)) == 1


@pytest.mark.parametrize(
    "units, p, text",
    [(-49, 2, "-0.49"), (26, 2, "0.26"), (100, 2, "1.00"), (150, 2, "1.50"), (7, 3, "0.007"), (0, 1, "0.0")],
)
def test_to_decimal_string(units, p, text):
    assert to_decimal_string(ScaledValue(units, p)) == text


def test_mixed_scales_rejected():
    with pytest.raises(ScaleMismatchError):
        value_of(1, 2) + value_of(1, 3)
    with pytest.raises(ScaleMismatchError):
        compare(value_of(1, 2), value_of(10, 3))
    with pytest.raises(ScaleMismatchError):
        value_of(1, 2) < value_of(1, 3)


def test_scale_exp_must_be_positive():
    with pytest.raises(ValueError):
        ScaledValue(1, 0)
    with pytest.raises(TypeError):
        ScaledValue(0.5, 2)


def test_parse_rejects_wrong_digit_count():
    with pytest.raises(ScaleMismatchError):
        parse_decimal("0.5", p=2)
    with pytest.raises(ValueError):
        parse_decimal("0,5")


def test_degree_ranges():
    assert value_of(100, 2).is_positive_degree()
    assert not value_of(0, 2).is_positive_degree()
    assert not value_of(101, 2).is_positive_degree()
    assert value_of(-100, 2).is_negative_degree()
    assert not value_of(0, 2).is_negative_degree()


@given(st.integers(-10**15, 10**15), scales)
def test_decimal_round_trip(units, p):
    v = ScaledValue(units, p)
    text = to_decimal_string(v)
    assert parse_decimal(text) == v
    assert len(text.split(".")[1]) == p


@given(same_scale_values(3))
def test_add_associative_commutative(vals):
    a, b, c = vals
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)


@given(same_scale_values(2))
def test_compare_matches_rationals(vals):
    a, b = vals
    qa, qb = (Fraction(v.units, 10**v.scale_exp) for v in vals)
    assert compare(a, b) == (qa > qb) - (qa < qb)
    assert (a < b) == (qa < qb)
    assert (a <= b) == (qa <= qb)


# select_scale


@pytest.mark.parametrize(
    "n, m, kind, p",
    [
        (9, 4, "anti-fuzzy", 2),
        (9, 4, "bipolar", 2),
        (31, 3, "anti-fuzzy", 3),
        (35, 2, "bipolar", 4),
    ],
)
def test_select_scale_examples(n, m, kind, p):
    assert select_scale(n, m, kind) == p


@pytest.mark.parametrize(
    "n, p",
    [(30, 2), (31, 3), (330, 3), (331, 4), (3309, 4), (3310, 5), (33099, 5), (33100, 6)],
)
def test_anti_fuzzy_band_edges(n, p):
    assert scale_band(n, "anti-fuzzy") == p


@pytest.mark.parametrize(
    "n, p",
    [(10, 2), (11, 3), (34, 3), (35, 4), (333, 4), (334, 4), (3339, 4), (3340, 5), (33400, 6)],
)
def test_bipolar_band_edges(n, p):
    assert scale_band(n, "bipolar") == p


def test_select_scale_rejects_inadmissible():
    with pytest.raises(InadmissibleError):
        select_scale(8, 4, "anti-fuzzy")
    with pytest.raises(InadmissibleError):
        select_scale(5, 4, "anti-fuzzy")


def test_select_scale_override():
    assert select_scale(9, 4, "anti-fuzzy", override=5) == 5
    with pytest.raises(ValueError):
        select_scale(9, 4, "anti-fuzzy", override=0)


@given(st.integers(1, 10**7))
def test_bands_are_monotone(n):
    for kind in ("anti-fuzzy", "bipolar"):
        assert scale_band(n, kind) <= scale_band(n + 1, kind)
