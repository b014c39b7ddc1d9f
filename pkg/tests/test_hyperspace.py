import random
from fractions import Fraction

import pytest

from nadyn.config import SpaceMismatch
from nadyn.fixtures import build_fixture
from nadyn.hyperspace import (
    FiniteCompact,
    VietorisOpen,
    default_seeds,
    diameter,
    hausdorff,
    hyper_transitivity_times,
    hyper_witness,
    induced_image,
    vietoris_member,
    whole_open,
)
from nadyn.spaces import CirclePoint, IntervalPoint, ShiftPoint, SpaceId, distance
from nadyn.system import iterate
from nadyn.topology import Arc, Cylinder, IntervalOpen, epsilon_net

F = Fraction


def I(*xs):
    return FiniteCompact(IntervalPoint(F(x)) for x in xs)


def test_hausdorff_examples():
    A = I(0, F(1, 3))
    assert hausdorff(A, A) == 0
    assert hausdorff(I(0), I(1)) == 1
    assert hausdorff(I(0, 1), I(F(1, 2))) == F(1, 2)


def brute_hausdorff(A, B):
    # sup over a of inf over b, written out with explicit loops
    best = 0
    for X, Y in ((A, B), (B, A)):
        for a in X:
            near = None
            for b in Y:
                d = distance(a, b)
                near = d if near is None or d < near else near
            best = max(best, near)
    return best


def test_hausdorff_matches_brute_force_and_axioms():
    rng = random.Random(8)

    def rand():
        return I(*(F(rng.randint(0, 24), 24) for _ in range(rng.randint(1, 4))))

    for _ in range(300):
        A, B, C = rand(), rand(), rand()
        assert hausdorff(A, B) == brute_hausdorff(A, B) == hausdorff(B, A)
        assert hausdorff(A, C) <= hausdorff(A, B) + hausdorff(B, C)
        assert (hausdorff(A, B) == 0) == (A == B)


def test_singleton_embedding():
    s = build_fixture("pl-identity-3")
    for x, y in [(F(1, 5), F(4, 7)), (F(0), F(1)), (F(2, 9), F(2, 9))]:
        X, Y = IntervalPoint(x), IntervalPoint(y)
        assert hausdorff(FiniteCompact([X]), FiniteCompact([Y])) == distance(X, Y)
        for n in range(0, 12):
            assert induced_image(s, FiniteCompact([X]), n) == FiniteCompact([iterate(s, X, n)])


def test_compact_validation():
    with pytest.raises(ValueError):
        FiniteCompact([])
    with pytest.raises(SpaceMismatch):
        FiniteCompact([IntervalPoint(0), ShiftPoint("0")])
    with pytest.raises(SpaceMismatch):
        hausdorff(I(0), FiniteCompact([ShiftPoint("0")]))
    assert len(I(0, 0, F(1, 2))) == 2


def test_induced_image_examples():
    A = I(F(1, 4), F(2, 3))
    assert induced_image(build_fixture("pl-identity-3"), A, 0) == A
    C = FiniteCompact([CirclePoint(F(1, 5)), CirclePoint(0, 1)])
    assert induced_image(build_fixture("circle-rotations"), C, 2) == C
    Z = FiniteCompact([ShiftPoint("0"), ShiftPoint("1")])
    assert induced_image(build_fixture("shift-3periodic"), Z, 3) == Z


def test_induced_map_preserves_hausdorff_for_isometries():
    s = build_fixture("circle-rotations")
    assert s.isometric
    A = FiniteCompact([CirclePoint(0), CirclePoint(F(1, 3), 1)])
    B = FiniteCompact([CirclePoint(F(1, 7)), CirclePoint(F(1, 2), -1), CirclePoint(F(5, 6))])
    d = hausdorff(A, B)
    for n in range(1, 51):
        assert hausdorff(induced_image(s, A, n), induced_image(s, B, n)) == d


def test_vietoris_member_examples():
    U = IntervalOpen(0, F(1, 2))
    W = IntervalOpen(F(1, 2), 1)
    assert vietoris_member(I(F(1, 8), F(1, 4)), VietorisOpen([U]))
    O = VietorisOpen([U, W])
    assert vietoris_member(I(F(1, 4), F(3, 4)), O)
    assert not vietoris_member(I(F(1, 4)), O)
    assert not vietoris_member(I(F(1, 4), 1), VietorisOpen([U]))


def test_single_part_membership_is_containment():
    rng = random.Random(2)
    U = IntervalOpen(F(1, 5), F(3, 5))
    for _ in range(100):
        A = I(*(F(rng.randint(0, 10), 10) for _ in range(rng.randint(1, 3))))
        assert vietoris_member(A, VietorisOpen([U])) == all(U.contains(a) for a in A)


def test_hyper_whole_space_hits_every_time():
    s = build_fixture("pl-identity-3")
    O = whole_open(SpaceId.UNIT_INTERVAL)
    seeds = default_seeds(epsilon_net(SpaceId.UNIT_INTERVAL, F(1, 2)), O)
    assert hyper_transitivity_times(s, O, O, 30, seeds).members == tuple(range(1, 31))


def test_hyper_three_periodic_nonempty():
    s = build_fixture("shift-3periodic")
    O1 = VietorisOpen([Cylinder(0, "00"), Cylinder(0, "11")])
    O2 = VietorisOpen([Cylinder(0, "01")])
    seeds = default_seeds(epsilon_net(SpaceId.SHIFT_SPACE, F(1, 2)), O1)
    got = hyper_transitivity_times(s, O1, O2, 60, seeds)
    assert got
    w = hyper_witness(s, O1, O2, got.members[0], seeds)
    assert vietoris_member(induced_image(s, w["seed"], w["n"]), O2)


def test_hyper_rotations_never_shrink_a_spread_seed():
    s = build_fixture("circle-rotations")
    r = F(1, 16)
    O1 = VietorisOpen([Arc(CirclePoint(0), r), Arc(CirclePoint(F(1, 2)), r)])
    O2 = VietorisOpen([Arc(CirclePoint(F(1, 4)), r)])
    seeds = default_seeds(epsilon_net(SpaceId.CIRCLE, F(1, 32)), O1, max_size=2)
    assert seeds
    assert not hyper_transitivity_times(s, O1, O2, 100, seeds)
    # oracle: rotations keep every seed's diameter, and O2 only holds sets of diameter < 2r
    for A in seeds:
        for n in range(1, 101, 9):
            assert diameter(induced_image(s, A, n)) == diameter(A) >= F(1, 2) - 2 * r > 2 * r


def test_hyper_seeds_must_lie_in_first_open():
    s = build_fixture("pl-identity-3")
    O = VietorisOpen([IntervalOpen(0, F(1, 4))])
    with pytest.raises(ValueError):
        hyper_transitivity_times(s, O, O, 5, [I(F(1, 2))])
