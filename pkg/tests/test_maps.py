import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nadyn.config import SpaceMismatch
from nadyn.maps import PL_IDENTITY, Identity, PLMap, RotationOffset, ShiftPower, apply, compose
from nadyn.spaces import CirclePoint, IntervalPoint, ShiftPoint, SpaceId

F = Fraction


@st.composite
def pl_homeos(draw, decreasing=False):
    k = draw(st.integers(0, 4))
    xs = sorted(set(draw(st.lists(st.fractions(min_value=0, max_value=1, max_denominator=16), min_size=k, max_size=k))) - {0, 1})
    ys = sorted(set(draw(st.lists(st.fractions(min_value=0, max_value=1, max_denominator=16), min_size=len(xs), max_size=len(xs)))) - {0, 1})
    n = min(len(xs), len(ys))
    xs, ys = [F(0), *xs[:n], F(1)], [F(0), *ys[:n], F(1)]
    if decreasing:
        ys = ys[::-1]
    return PLMap(tuple(zip(xs, ys)))


def sample_points(n=1000, seed=7):
    rng = random.Random(seed)
    return [F(rng.randint(0, 997), 997) for _ in range(n)]


def test_apply_examples():
    assert apply(Identity(SpaceId.UNIT_INTERVAL), IntervalPoint(F(1, 3))) == IntervalPoint(F(1, 3))
    assert apply(ShiftPower(2), ShiftPoint("01")) == ShiftPoint("01")
    assert apply(RotationOffset(0, 1), CirclePoint(0)) == CirclePoint(0, 1)
    assert apply(ShiftPower(1), ShiftPoint("001")) == ShiftPoint("010")


def test_compose_examples():
    assert compose(ShiftPower(2), ShiftPower(-1)) == ShiftPower(1)
    assert compose(RotationOffset(0, 1), RotationOffset(0, 1)) == RotationOffset(0, 2)
    f = PLMap.from_points((0, 0), (F(1, 4), F(1, 2)), (1, 1))
    assert compose(f, f.inverse()) == Identity(SpaceId.UNIT_INTERVAL)
    assert compose(f.inverse(), f).is_identity


def test_cross_family_composition_rejected():
    with pytest.raises(SpaceMismatch):
        compose(PL_IDENTITY, ShiftPower(1))
    with pytest.raises(SpaceMismatch):
        apply(ShiftPower(1), IntervalPoint(0))


def test_identity_tests_are_exact():
    assert ShiftPower(0).is_identity and not ShiftPower(3).is_identity
    assert RotationOffset(1, 0).is_identity
    assert not RotationOffset(0, 1).is_identity
    assert PLMap.from_points((0, 0), (F(1, 2), F(1, 2)), (1, 1)).is_identity
    assert not PLMap.from_points((0, 0), (F(1, 2), F(1, 3)), (1, 1)).is_identity


def test_breakpoint_simplification_is_canonical():
    a = PLMap.from_points((0, 0), (F(1, 4), F(1, 8)), (F(1, 2), F(1, 4)), (1, 1))
    b = PLMap.from_points((0, 0), (F(1, 2), F(1, 4)), (1, 1))
    assert a == b and a.breakpoints == b.breakpoints


def test_pl_validation():
    with pytest.raises(ValueError):
        PLMap.from_points((0, 0), (F(1, 2), F(3, 2)), (1, 1))
    with pytest.raises(ValueError):
        PLMap.from_points((F(1, 4), 0), (1, 1))


def test_fixed_set():
    f = PLMap.from_points((0, 0), (F(1, 4), F(1, 4)), (F(1, 2), F(3, 4)), (1, 1))
    assert f.fixed_set() == [(0, F(1, 4)), (1, 1)]
    g = PLMap.from_points((0, 1), (1, 0))
    assert g.fixed_set() == [(F(1, 2), F(1, 2))]


@given(pl_homeos(), pl_homeos())
def test_pl_composition_pointwise(f, g):
    h = compose(f, g)
    for x in sample_points(50):
        assert h.value(x) == f.value(g.value(x))


@given(st.one_of(pl_homeos(), pl_homeos(decreasing=True)))
def test_pl_inverse(f):
    inv = f.inverse()
    assert compose(f, inv).is_identity and compose(inv, f) == PL_IDENTITY


@given(pl_homeos())
def test_identity_test_agrees_with_sampling(f):
    # sampling can only confirm the exact verdict, never contradict it
    agrees = all(f.value(x) == x for x in sample_points())
    if f.is_identity:
        assert agrees
    if not agrees:
        assert not f.is_identity


def test_identity_sampling_on_known_maps():
    assert all(PL_IDENTITY.value(x) == x for x in sample_points())
    bump = PLMap.from_points((0, 0), (F(1, 1000), F(1, 999)), (F(2, 1000), F(2, 1000)), (1, 1))
    assert not bump.is_identity


def test_isometry_flags():
    assert RotationOffset(0, 1).is_isometry
    assert not ShiftPower(1).is_isometry
    assert PLMap.from_points((0, 1), (1, 0)).is_isometry
