from fractions import Fraction

import pytest

from nadyn.config import HorizonError
from nadyn.fixtures import build_fixture, constant_shift, rotation_core
from nadyn.maps import Identity, PLMap, ShiftPower
from nadyn.spaces import CirclePoint, IntervalPoint, ProductPoint, ShiftPoint, SpaceId
from nadyn.system import (
    NASystem,
    check_periodic_point,
    diagonal,
    iterate,
    kth_iterate_system,
    orbit,
    orbit_map,
    period_composition,
    product_system,
    segment,
    shifted_system,
)
from nadyn.topology import epsilon_net

F = Fraction


def test_segment_examples():
    s3 = build_fixture("shift-3periodic")
    assert segment(s3, 5, 0) == Identity(SpaceId.SHIFT_SPACE)
    assert segment(s3, 1, 3) == ShiftPower(1)
    assert segment(build_fixture("shift-even"), 1, 3) == ShiftPower(2)


def test_iterate_examples():
    x = CirclePoint(F(1, 7), 2)
    circ = build_fixture("circle-rotations")
    assert iterate(circ, x, 0) == x
    assert all(iterate(circ, x, 2 * k) == x for k in range(1, 30))
    pl = build_fixture("pl-identity-3")
    for v in (0, F(1, 3), F(5, 7), 1):
        y = IntervalPoint(v)
        assert all(iterate(pl, y, 3 * k) == y for k in range(1, 20))


def test_sequential_and_segment_paths_agree():
    s = build_fixture("pl-interleaved")
    x = IntervalPoint(F(2, 9))
    for n in range(0, 40):
        assert iterate(s, x, n, sequential=True) == iterate(s, x, n)
    assert orbit(s, x, 5)[-1] == iterate(s, x, 5)


def test_horizon_cap():
    with pytest.raises(HorizonError):
        orbit_map(constant_shift(), 10**6)


def test_kth_iterate_examples():
    s = build_fixture("shift-even")
    assert kth_iterate_system(s, 1) is s
    s2 = kth_iterate_system(s, 2)
    assert all(s2.map_at(n).is_identity for n in range(1, 50))
    s3 = kth_iterate_system(build_fixture("shift-3periodic"), 3)
    assert all(s3.map_at(n) == ShiftPower(1) for n in range(1, 30))
    assert s3.period == 1


def test_product_system_examples():
    s = build_fixture("shift-even")
    p = product_system(s, 2)
    x, y = ShiftPoint("01"), ShiftPoint("0011")
    for n in range(0, 11):
        assert iterate(p, ProductPoint((x, y)), n) == ProductPoint((iterate(s, x, n), iterate(s, y, n)))
    s3 = build_fixture("shift-3periodic")
    p3 = product_system(s3, 3)
    z = diagonal([ShiftPoint("001"), ShiftPoint("01"), ShiftPoint("0111")])
    assert iterate(p3, z, 3) == ProductPoint(tuple(ShiftPower(1)(c) for c in z.coords))


def test_period_composition_examples():
    assert period_composition(build_fixture("shift-3periodic")) == ShiftPower(1)
    f = PLMap.from_points((0, 0), (F(1, 3), F(2, 3)), (1, 1))
    assert period_composition(NASystem.constant(f)) == f
    assert period_composition(rotation_core()).is_identity
    with pytest.raises(ValueError):
        period_composition(build_fixture("shift-even"))


def test_periodic_metadata():
    core = rotation_core()
    assert core.period == 2 and core.identity_return == 2 and core.isometric
    s3 = build_fixture("shift-3periodic")
    assert s3.period == 3 and s3.identity_return is None
    for n in range(1, 4):
        assert all(s3.map_at(n + 3 * k) == s3.map_at(n) for k in range(1, 5))
        assert s3.map_at(n) in s3.generators


def test_prefix_tail():
    f = PLMap.from_points((0, 0), (F(1, 2), F(1, 4)), (1, 1))
    s = NASystem.prefix_tail([f, f.inverse()], [Identity(SpaceId.UNIT_INTERVAL)])
    assert s.map_at(1) == f and s.map_at(2) == f.inverse() and s.map_at(7).is_identity
    assert orbit_map(s, 10).is_identity


def test_shifted_system_cocycle():
    s = build_fixture("pl-identity-3")
    for k in range(0, 7):
        t = shifted_system(s, k)
        for m in range(0, 10):
            assert orbit_map(t, m) == segment(s, k + 1, m)


def test_check_periodic_point_examples():
    circ = build_fixture("circle-rotations")
    v = check_periodic_point(circ, CirclePoint(F(1, 5), 1), 2, 3)
    assert v.is_certified and v.witness["certificate"]["type"] == "identity-return"
    pl = build_fixture("pl-identity-3")
    assert check_periodic_point(pl, IntervalPoint(F(3, 11)), 3, 4).is_certified
    v = check_periodic_point(constant_shift(), ShiftPoint("01"), 1, 3)
    assert v.is_refuted and v.witness["k"] == 1


def test_check_periodic_point_certificates():
    s3 = build_fixture("shift-3periodic")
    assert check_periodic_point(s3, ShiftPoint("0"), 1, 2).witness["certificate"]["type"] == "fixed-by-generators"
    v = check_periodic_point(s3, ShiftPoint("01"), 6, 2)
    assert v.is_certified and v.witness["certificate"]["type"] == "periodic-power"
    # f_1^3 = sigma^2 moves a period-3 word
    even = build_fixture("shift-even")
    assert check_periodic_point(even, ShiftPoint("011"), 3, 2).is_refuted
    # f_1^(2k) = id certifies every point at n = 2
    assert check_periodic_point(even, ShiftPoint("011"), 2, 2).is_certified


def test_all_net_points_periodic_for_rotations():
    circ = build_fixture("circle-rotations")
    assert all(check_periodic_point(circ, x, 2, 5).is_certified for x in epsilon_net(SpaceId.CIRCLE, F(1, 16)))
