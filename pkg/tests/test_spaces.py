from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from nadyn.config import SpaceMismatch
from nadyn.spaces import (
    CirclePoint,
    IntervalPoint,
    ShiftPoint,
    SpaceId,
    distance,
    shift_distance_enclosure,
)

unit = st.fractions(min_value=0, max_value=1, max_denominator=64)
words = st.text(alphabet="01", min_size=1, max_size=6)
circle = st.builds(CirclePoint, st.fractions(min_value=0, max_value=1, max_denominator=32), st.integers(-3, 3))
points = st.one_of(
    st.tuples(st.builds(IntervalPoint, unit), st.builds(IntervalPoint, unit), st.builds(IntervalPoint, unit)),
    st.tuples(st.builds(ShiftPoint, words), st.builds(ShiftPoint, words), st.builds(ShiftPoint, words)),
    st.tuples(circle, circle, circle),
)


def test_examples():
    assert distance(IntervalPoint(Fraction(1, 4)), IntervalPoint(Fraction(3, 4))) == Fraction(1, 2)
    assert distance(ShiftPoint("0"), ShiftPoint("1")) == 3
    assert distance(CirclePoint(0), CirclePoint(Fraction(3, 4))) == Fraction(1, 4)


def test_diameters():
    assert SpaceId.UNIT_INTERVAL.diameter == 1
    assert SpaceId.SHIFT_SPACE.diameter == 3
    assert SpaceId.CIRCLE.diameter == Fraction(1, 2)


def test_shift_point_canonical_period():
    assert ShiftPoint("0101") == ShiftPoint("01")
    assert ShiftPoint("0101").period == 2
    assert ShiftPoint("011")[3] == 0 and ShiftPoint("011")[-1] == 1


def test_distance_space_mismatch():
    with pytest.raises(SpaceMismatch):
        distance(IntervalPoint(0), ShiftPoint("0"))


def test_interval_point_range():
    with pytest.raises(ValueError):
        IntervalPoint(Fraction(3, 2))


@hsettings(max_examples=300)
@given(points)
def test_metric_axioms(triple):
    x, y, z = triple
    assert distance(x, y) == distance(y, x)
    assert distance(x, z) <= distance(x, y) + distance(y, z)
    assert (distance(x, y) == 0) == (x == y)
    assert 0 <= distance(x, y) <= x.space.diameter


@given(words, words)
def test_shift_closed_form_matches_partial_sums(a, b):
    x, y = ShiftPoint(a), ShiftPoint(b)
    d = distance(x, y)
    widths = []
    for T in range(0, 30):
        lo, hi = shift_distance_enclosure(x, y, T)
        assert lo <= d <= hi
        widths.append(hi - lo)
    assert all(u > v for u, v in zip(widths, widths[1:]))


def test_shift_point_weighted_sum_by_hand():
    # x = ...000..., y = the point with a single 1 modulo period 3 at coordinate 0
    d = distance(ShiftPoint("0"), ShiftPoint("100"))
    # coordinates 3k: weights 1 + 2 * (1/8 + 1/64 + ...) = 1 + 2/7
    assert d == Fraction(9, 7)
