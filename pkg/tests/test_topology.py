import random
from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from nadyn.maps import Identity, PLMap, RotationOffset, ShiftPower, apply
from nadyn.spaces import CirclePoint, IntervalPoint, ShiftPoint, SpaceId, distance
from nadyn.topology import (
    Arc,
    Ball,
    Cylinder,
    IntervalOpen,
    OpenUnion,
    Whole,
    ball_open,
    below,
    default_basis,
    epsilon_net,
    gap_bound,
    image_open,
    intersection_witness,
    intersects,
    shift_words_on,
    some_point,
    span_bound,
)

F = Fraction
rng = random.Random(3)


def rand_shift(max_len=8):
    return ShiftPoint("".join(rng.choice("01") for _ in range(rng.randint(1, max_len))))


def test_image_examples():
    U = Cylinder(0, "10")
    assert image_open(Identity(SpaceId.SHIFT_SPACE), U) == U
    assert image_open(ShiftPower(1), U) == Cylinder(-1, "10")
    f = PLMap.from_points((0, 0), (F(1, 4), F(1, 2)), (F(1, 2), F(3, 4)), (1, 1))
    assert image_open(f, IntervalOpen(F(1, 4), F(1, 2))) == IntervalOpen(F(1, 2), F(3, 4))
    A = Arc(CirclePoint(0), F(1, 8))
    assert image_open(RotationOffset(0, 1), A) == Arc(CirclePoint(0, 1), F(1, 8))


def test_image_of_cylinder_is_exact_on_points():
    U = Cylinder(-1, "101")
    for k in (-3, -1, 2, 5):
        W = image_open(ShiftPower(k), U)
        for _ in range(50):
            x = rand_shift()
            assert W.contains(apply(ShiftPower(k), x)) == U.contains(x)


def test_non_monotone_pl_image():
    tent = PLMap.from_points((0, 0), (F(1, 2), 1), (1, 0))
    W = image_open(tent, IntervalOpen(F(1, 4), F(3, 4)))
    # image of (1/4, 3/4) under the tent is (1/2, 1], not open in [0, 1]
    assert W.contains(IntervalPoint(1)) and not W.contains(IntervalPoint(F(1, 2)))


def test_intersects_examples():
    assert not intersects(IntervalOpen(0, F(1, 2)), IntervalOpen(F(1, 2), 1))
    assert intersects(Cylinder(0, "01"), Cylinder(1, "1"))
    assert not intersects(Cylinder(0, "01"), Cylinder(0, "11"))
    assert intersects(Arc(CirclePoint(0), F(1, 8)), Arc(CirclePoint(F(7, 8)), F(1, 16)))
    assert not intersects(Arc(CirclePoint(0), F(1, 8)), Arc(CirclePoint(F(1, 4)), F(1, 8)))


boxes = st.tuples(
    st.fractions(min_value=0, max_value=1, max_denominator=12), st.fractions(min_value=0, max_value=1, max_denominator=12)
).filter(lambda t: t[0] < t[1])


@hsettings(max_examples=200)
@given(boxes, boxes)
def test_interval_intersection_witness(a, b):
    U, V = IntervalOpen(*a), IntervalOpen(*b)
    w = intersection_witness(U, V)
    assert (w is not None) == intersects(U, V)
    if w is not None:
        assert U.contains(w) and V.contains(w)


@hsettings(max_examples=200)
@given(
    st.integers(-3, 3), st.text("01", min_size=1, max_size=4), st.integers(-3, 3), st.text("01", min_size=1, max_size=4)
)
def test_cylinder_intersection_witness(i, u, j, v):
    U, V = Cylinder(i, u), Cylinder(j, v)
    w = intersection_witness(U, V)
    assert (w is not None) == intersects(U, V)
    if w is not None:
        assert U.contains(w) and V.contains(w)


@hsettings(max_examples=200)
@given(
    st.fractions(min_value=0, max_value=1, max_denominator=20),
    st.integers(-2, 2),
    st.fractions(min_value=0, max_value=1, max_denominator=20),
    st.integers(-2, 2),
    st.fractions(min_value=F(1, 64), max_value=F(3, 8), max_denominator=64),
    st.fractions(min_value=F(1, 64), max_value=F(3, 8), max_denominator=64),
)
def test_arc_intersection_witness(p, q, p2, q2, r1, r2):
    U, V = Arc(CirclePoint(p, q), r1), Arc(CirclePoint(p2, q2), r2)
    w = intersection_witness(U, V)
    assert (w is not None) == intersects(U, V)
    if w is not None:
        assert U.contains(w) and V.contains(w)


def test_ball_open_exact_on_interval_and_circle():
    B = Ball(IntervalPoint(F(1, 10)), F(1, 4))
    assert ball_open(B) == IntervalOpen(0, F(7, 20))
    A = ball_open(Ball(CirclePoint(F(1, 3)), F(1, 5)))
    assert A == Arc(CirclePoint(F(1, 3)), F(1, 5))
    assert ball_open(Ball(CirclePoint(0), F(3, 5))) == Whole(SpaceId.CIRCLE)
    half = ball_open(Ball(CirclePoint(0), F(1, 2)))
    assert isinstance(half, OpenUnion)
    assert not half.contains(CirclePoint(F(1, 2))) and half.contains(CirclePoint(F(49, 100)))


def test_shift_ball_gives_inner_cylinder():
    for r in (F(1, 2), F(1, 8), F(1, 16), F(3, 1)):
        x = rand_shift()
        U = ball_open(Ball(x, r))
        assert U.contains(x)
        for _ in range(100):
            y = rand_shift(12)
            if U.contains(y):
                assert distance(x, y) < r


def test_epsilon_net_examples():
    assert epsilon_net(SpaceId.UNIT_INTERVAL, F(1, 2)) == [IntervalPoint(0), IntervalPoint(F(1, 2)), IntervalPoint(1)]
    assert len(epsilon_net(SpaceId.SHIFT_SPACE, 3)) == 1
    assert epsilon_net(SpaceId.CIRCLE, F(1, 4)) == [CirclePoint(F(k, 4)) for k in range(4)]


@pytest.mark.parametrize("eps", [F(1, 2), F(1, 4), F(1, 8)])
def test_epsilon_net_covers_shift_space(eps):
    net = epsilon_net(SpaceId.SHIFT_SPACE, eps)
    for _ in range(60):
        y = rand_shift(14)
        assert min(distance(x, y) for x in net) <= eps


@pytest.mark.parametrize("space", [SpaceId.UNIT_INTERVAL, SpaceId.CIRCLE])
def test_epsilon_net_covers_grid_spaces(space):
    eps = F(1, 7)
    net = epsilon_net(space, eps)
    for k in range(200):
        y = IntervalPoint(F(k, 199)) if space == SpaceId.UNIT_INTERVAL else CirclePoint(F(k, 199), k % 3)
        assert min(distance(x, y) for x in net) <= eps


def test_shift_words_realise_every_pattern():
    words = shift_words_on(2)
    assert len(words) == 32
    patterns = {tuple(w[i] for i in range(-2, 3)) for w in words}
    assert len(patterns) == 32


def test_default_basis_shapes():
    assert len(default_basis(SpaceId.CIRCLE, F(1, 8))) == 8
    assert len(default_basis(SpaceId.SHIFT_SPACE)) == 32
    assert all(isinstance(U, IntervalOpen) for U in default_basis(SpaceId.UNIT_INTERVAL, F(1, 4)))


def _pairs_from(U, V, draw_u, draw_v, n=200):
    out = []
    for _ in range(n):
        p, q = draw_u(), draw_v()
        if U.contains(p) and V.contains(q):
            out.append(distance(p, q))
    return out


def test_span_and_gap_bounds_hold_on_samples():
    A, B = Arc(CirclePoint(0), F(1, 16)), Arc(CirclePoint(F(1, 3)), F(1, 16))
    draw = lambda c: (lambda: CirclePoint(c + F(rng.randint(-62, 62), 1000)))
    ds = _pairs_from(A, B, draw(0), draw(F(1, 3)))
    (s, _), (g, _) = span_bound(A, B), gap_bound(A, B)
    assert ds and all(g < d < s for d in ds)
    U, V = Cylinder(0, "00"), Cylinder(0, "11")
    ds = _pairs_from(U, V, lambda: rand_shift(10), lambda: rand_shift(10), 2000)
    (s, _), (g, _) = span_bound(U, V), gap_bound(U, V)
    assert ds and all(g <= d <= s for d in ds)


def test_below_respects_strictness():
    assert below((F(1, 4), True), (F(1, 4), False))
    assert not below((F(1, 4), False), (F(1, 4), False))
    assert below((F(1, 8), False), (F(1, 4), False))


def test_some_point_is_inside():
    opens = [
        IntervalOpen(F(1, 3), F(2, 3)),
        Cylinder(-2, "10110"),
        Arc(CirclePoint(F(1, 5), 1), F(1, 9)),
        Whole(SpaceId.SHIFT_SPACE),
    ]
    assert all(U.contains(some_point(U)) for U in opens)
