"""Finite compact sets as points of the hyperspace, with the induced dynamics."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import SpaceMismatch, check_horizon
from .maps import apply
from .spaces import Point, distance
from .system import NASystem, orbit_map
from .topology import BasicOpen, Whole
from .hitting import HittingSet


def _sort_key(p: Point):
    return repr(p)


@dataclass(frozen=True)
class FiniteCompact:
    points: frozenset

    def __init__(self, points):
        pts = frozenset(points)
        if not pts:
            raise ValueError("a compact set here must be nonempty")
        if len({p.space for p in pts}) != 1:
            raise SpaceMismatch("points of one compact set must share a space")
        object.__setattr__(self, "points", pts)

    @property
    def space(self):
        return next(iter(self.points)).space

    def __iter__(self):
        return iter(sorted(self.points, key=_sort_key))

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"FiniteCompact({list(self)})"


@dataclass(frozen=True)
class VietorisOpen:
    """``<U_1, ..., U_k>``: compacts inside the union of the parts and meeting each part."""

    parts: tuple

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise ValueError("a Vietoris open needs at least one part")
        if len({p.space for p in parts}) != 1:
            raise SpaceMismatch("parts must share a space")
        object.__setattr__(self, "parts", parts)

    @property
    def space(self):
        return self.parts[0].space


def _directed(A, B):
    return max(min(distance(a, b) for b in B) for a in A)


def hausdorff(A: FiniteCompact, B: FiniteCompact):
    if A.space != B.space:
        raise SpaceMismatch(f"{A.space} vs {B.space}")
    return max(_directed(A.points, B.points), _directed(B.points, A.points))


def induced_image(system: NASystem, A: FiniteCompact, n: int) -> FiniteCompact:
    """``f_1^n(A)`` as a set."""
    check_horizon(n)
    f = orbit_map(system, n)
    return FiniteCompact(apply(f, a) for a in A.points)


def vietoris_member(A: FiniteCompact, O: VietorisOpen) -> bool:
    if A.space != O.space:
        raise SpaceMismatch(f"{A.space} vs {O.space}")
    inside = [[U.contains(a) for U in O.parts] for a in A.points]
    covered = all(any(row) for row in inside)
    met = all(any(row[j] for row in inside) for j in range(len(O.parts)))
    return covered and met


def default_seeds(net, O: VietorisOpen, max_size: int = 3) -> list[FiniteCompact]:
    """All subsets of ``net`` of size <= max_size that lie in ``O``."""
    seeds = []
    for k in range(1, max_size + 1):
        for combo in itertools.combinations(net, k):
            A = FiniteCompact(combo)
            if vietoris_member(A, O):
                seeds.append(A)
    return seeds


def hyper_transitivity_times(
    system: NASystem, O1: VietorisOpen, O2: VietorisOpen, H: int, seeds
) -> HittingSet:
    """Times at which some seed of ``O1`` is carried into ``O2``; absence is relative to the seeds."""
    check_horizon(H)
    seeds = list(seeds)
    bad = [A for A in seeds if not vietoris_member(A, O1)]
    if bad:
        raise ValueError(f"seed {bad[0]!r} is not in O1")
    members = []
    for n in range(1, H + 1):
        f = orbit_map(system, n)
        for A in seeds:
            if vietoris_member(FiniteCompact(apply(f, a) for a in A.points), O2):
                members.append(n)
                break
    return HittingSet(H, tuple(members), "hyper-transitivity", {"seed_count": len(seeds), "O1": O1, "O2": O2})


def hyper_witness(system: NASystem, O1: VietorisOpen, O2: VietorisOpen, n: int, seeds) -> dict | None:
    for A in seeds:
        if vietoris_member(A, O1) and vietoris_member(induced_image(system, A, n), O2):
            return {"kind": "hyper-hit", "n": n, "seed": A, "O1": O1, "O2": O2}
    return None


def whole_open(space) -> VietorisOpen:
    return VietorisOpen([Whole(space)])


def diameter(A: FiniteCompact):
    pts = list(A)
    return max((distance(a, b) for a, b in itertools.combinations(pts, 2)), default=0)
