"""Horizon-bounded hitting-time sets and their combinatorial classification.

``N(U, V) = {n : f_1^n(U) & V != {}}`` is computed exactly from open images.

``N(U, delta) = {n : some x, y in U have d(f_1^n x, f_1^n y) > delta}`` is
decided exactly as well: for the canonical opens the supremum of pairwise
distances in ``f_1^n(U)`` is known in closed form, and a pair beating
``delta`` exists precisely when that supremum exceeds ``delta``.  Each member
then has a constructive witness pair (``sensitivity_witness``).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction

from .config import check_horizon
from .maps import ExactMap, PLMap, apply
from .spaces import CirclePoint, IntervalPoint, ShiftPoint, SpaceId, distance
from .system import NASystem, orbit_map
from .topology import (
    HALF,
    Arc,
    BasicOpen,
    Cylinder,
    IntervalOpen,
    Span,
    Whole,
    image_open,
    intersection_witness,
    intersects,
)


@dataclass(frozen=True)
class HittingSet:
    horizon: int
    members: tuple
    kind: str
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        ms = tuple(sorted(set(self.members)))
        if ms and (ms[0] < 1 or ms[-1] > self.horizon):
            raise ValueError("members must lie in [1, horizon]")
        object.__setattr__(self, "members", ms)

    def __contains__(self, n):
        i = bisect.bisect_left(self.members, n)
        return i < len(self.members) and self.members[i] == n

    def __len__(self):
        return len(self.members)

    def __bool__(self):
        return bool(self.members)

    def restrict(self, H: int) -> HittingSet:
        return HittingSet(H, tuple(n for n in self.members if n <= H), self.kind, dict(self.info))


@dataclass(frozen=True)
class ClassVerdict:
    property: str
    satisfied: bool
    params: dict
    witness: dict

    @property
    def label(self) -> str:
        return "SatisfiedAtScale" if self.satisfied else "FailedAtScale"


# -- transitivity ------------------------------------------------------------

def transitivity_times(system: NASystem, U: BasicOpen, V: BasicOpen, H: int) -> HittingSet:
    check_horizon(H)
    members = [n for n in range(1, H + 1) if intersects(image_open(orbit_map(system, n), U), V)]
    return HittingSet(H, tuple(members), "transitivity", {"U": U, "V": V})


def transitivity_witness(system: NASystem, U: BasicOpen, V: BasicOpen, n: int) -> dict | None:
    """Points ``x in U`` with ``f_1^n(x) in V`` (x omitted for non-invertible maps)."""
    f = orbit_map(system, n)
    y = intersection_witness(image_open(f, U), V)
    if y is None:
        return None
    out = {"kind": "transitivity-hit", "n": n, "U": U, "V": V, "image_point": y}
    if f.is_homeomorphism:
        out["x"] = apply(f.inverse(), y)
    return out


# -- sensitivity -------------------------------------------------------------

def _shift_weight(i: int) -> Fraction:
    return Fraction(1, 2 ** abs(i))


def spread_sup(W: BasicOpen):
    """Supremum of ``d(p, q)`` over ``p, q in W``; a pair beats t iff this exceeds t."""
    if isinstance(W, Whole):
        return W.space.diameter
    if isinstance(W, IntervalOpen):
        return W.hi - W.lo
    if isinstance(W, Span):
        return max(Fraction(0), W.hi - W.lo)
    if isinstance(W, Cylinder):
        return 3 - sum(_shift_weight(i) for i in W.fixed)
    if isinstance(W, Arc):
        return min(2 * W.radius, HALF)
    return None


def separates(f: ExactMap, U: BasicOpen, delta) -> bool:
    s = spread_sup(image_open(f, U))
    if s is None:
        raise TypeError(f"no spread rule for {type(U).__name__}")
    return s > delta


def sensitivity_times(system: NASystem, U: BasicOpen, delta, H: int, net_eps=None) -> HittingSet:
    """Exact ``N(U, delta) & [1, H]``.

    ``net_eps`` is recorded for the report; it only matters to callers that
    build neighborhoods from nets.
    """
    check_horizon(H)
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    members = [n for n in range(1, H + 1) if separates(orbit_map(system, n), U, delta)]
    info = {"U": U, "delta": delta, "method": "image-spread"}
    if net_eps is not None:
        info["net_eps"] = Fraction(net_eps)
    return HittingSet(H, tuple(members), "sensitivity", info)


def _interval_pair(f: PLMap | ExactMap, U, delta):
    span = U.as_span() if isinstance(U, IntervalOpen) else U
    lo, hi = span.lo, span.hi
    inner = [x for x in getattr(f, "_xs", ()) if lo < x < hi]
    for m in range(1, 64):
        eps = (hi - lo) / 2 ** (m + 1)
        pts = [lo if span.lo_closed else lo + eps, hi if span.hi_closed else hi - eps, *inner]
        pts = [IntervalPoint(p) for p in pts]
        imgs = [(apply(f, p).value, p) for p in pts]
        (a, x), (b, y) = min(imgs, key=lambda t: t[0]), max(imgs, key=lambda t: t[0])
        if b - a > delta:
            return x, y
    return None


def _cylinder_pair(f, U: Cylinder, delta):
    fixed = U.fixed
    ell = len(U.word)
    for extra in range(1, 200):
        L = ell + extra
        cells0, cells1 = ["0"] * L, ["1"] * L
        for i, v in fixed.items():
            cells0[i % L] = cells1[i % L] = str(v)
        x, y = ShiftPoint("".join(cells0)), ShiftPoint("".join(cells1))
        if distance(apply(f, x), apply(f, y)) > delta:
            return x, y
    return None


def _arc_pair(f, U: Arc, delta):
    c = U.center
    for m in range(1, 64):
        s = min(U.radius - U.radius / 2**m, Fraction(1, 4))
        x = CirclePoint(c.p + s, c.q, c.alpha)
        y = CirclePoint(c.p - s, c.q, c.alpha)
        if distance(apply(f, x), apply(f, y)) > delta:
            return x, y
    return None


_FAR = {
    SpaceId.UNIT_INTERVAL: (IntervalPoint(0), IntervalPoint(1)),
    SpaceId.SHIFT_SPACE: (ShiftPoint("0"), ShiftPoint("1")),
    SpaceId.CIRCLE: (CirclePoint(0), CirclePoint(HALF)),
}


def separating_pair(f: ExactMap, U: BasicOpen, delta):
    """Points ``x, y in U`` with ``d(f x, f y) > delta``, or None."""
    delta = Fraction(delta)
    if isinstance(U, Whole):
        x, y = _FAR[U.space]
        pair = (x, y) if distance(apply(f, x), apply(f, y)) > delta else None
        if pair is None and U.space == SpaceId.UNIT_INTERVAL:
            pair = _interval_pair(f, Span(Fraction(0), Fraction(1), True, True), delta)
        return pair
    if isinstance(U, (IntervalOpen, Span)):
        return _interval_pair(f, U, delta)
    if isinstance(U, Cylinder):
        return _cylinder_pair(f, U, delta)
    if isinstance(U, Arc):
        return _arc_pair(f, U, delta)
    return None


def sensitivity_witness(system: NASystem, U: BasicOpen, delta, n: int) -> dict | None:
    pair = separating_pair(orbit_map(system, n), U, delta)
    if pair is None:
        return None
    x, y = pair
    return {"kind": "sensitivity-pair", "n": n, "U": U, "delta": Fraction(delta), "x": x, "y": y}


# -- classification ----------------------------------------------------------

def prefix_density(hs: HittingSet) -> list[Fraction]:
    """``n -> |S & [1, n]| / n`` for n = 1..H."""
    out, count = [], 0
    members = set(hs.members)
    for n in range(1, hs.horizon + 1):
        count += n in members
        out.append(Fraction(count, n))
    return out


def tail_max_density(profile: list[Fraction]) -> Fraction:
    H = len(profile)
    start = (3 * H) // 4
    return max(profile[start:]) if profile[start:] else Fraction(0)


def longest_run(members) -> tuple[int, int]:
    """(length, start) of the longest run of consecutive members."""
    best, best_start, run, start, prev = 0, 0, 0, 0, None
    for n in members:
        if prev is not None and n == prev + 1:
            run += 1
        else:
            run, start = 1, n
        if run > best:
            best, best_start = run, start
        prev = n
    return best, best_start


def classify(hs: HittingSet, prop: str, **params) -> ClassVerdict:
    """Classify ``hs`` at its horizon.

    * ``cofinite`` (``N``, default ``H // 2 + 1``): ``[N, H]`` is inside the set;
    * ``syndetic`` (``a``): every window ``{i, ..., i + a}`` in ``[1, H]`` meets it;
    * ``thick`` (``p``): it has p consecutive members;
    * ``upper-density`` (``rho``): ``|S| / H >= rho``.
    """
    H = hs.horizon
    members = hs.members
    member_set = set(members)
    scale = {"H": H}
    if prop == "cofinite":
        N = params.get("N", H // 2 + 1)
        if not 1 <= N <= H:
            raise ValueError("cofinite needs 1 <= N <= H")
        missing = [n for n in range(N, H + 1) if n not in member_set]
        ok = not missing
        wit = {"tail": [N, H]} if ok else {"missing": missing[:16], "missing_count": len(missing)}
        return ClassVerdict(prop, ok, {**scale, "N": N}, wit)
    if prop == "syndetic":
        a = params["a"]
        if not 1 <= a < H:
            raise ValueError("syndetic needs 1 <= a < H")
        gaps = _windows_missing(member_set, a, H)
        ok = gaps is None
        wit = {"max_gap": _max_gap(members, H)}
        if not ok:
            wit["empty_window"] = [gaps, gaps + a]
        return ClassVerdict(prop, ok, {**scale, "a": a}, wit)
    if prop == "thick":
        p = params["p"]
        if not 1 <= p <= H:
            raise ValueError("thick needs 1 <= p <= H")
        run, start = longest_run(members)
        ok = run >= p
        wit = {"run_start": start, "run": [start, start + p - 1]} if ok else {"max_run": run, "max_run_start": start}
        return ClassVerdict(prop, ok, {**scale, "p": p}, wit)
    if prop == "upper-density":
        rho = Fraction(params["rho"])
        if not 0 < rho <= 1:
            raise ValueError("upper-density needs 0 < rho <= 1")
        profile = prefix_density(hs)
        value = Fraction(len(members), H)
        wit = {
            "density": value,
            "tail_max": tail_max_density(profile),
            "profile": profile,
        }
        return ClassVerdict(prop, value >= rho, {**scale, "rho": rho}, wit)
    raise ValueError(f"unknown property {prop!r}")


def _windows_missing(member_set, a, H):
    """First i with {i..i+a} disjoint from the set, or None."""
    last = 0
    for n in range(1, H + 1):
        if n in member_set:
            last = n
        elif n - last > a:
            return n - a
    return None


def _max_gap(members, H) -> int:
    """Longest stretch of consecutive non-members inside [1, H]."""
    best, prev = 0, 0
    for n in (*members, H + 1):
        best = max(best, n - prev - 1)
        prev = n
    return best


def gaps(members) -> list[int]:
    return [b - a for a, b in zip(members, members[1:])]
