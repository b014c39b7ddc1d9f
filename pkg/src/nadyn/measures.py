"""Finitely supported probability measures, pushforwards and the Prohorov metric."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .config import NadynError, SpaceMismatch, check_horizon
from .maps import apply
from .spaces import Point, distance
from .system import NASystem, orbit_map
from .topology import BasicOpen, Whole
from .hitting import HittingSet

ATOM_CAP = 12


class AtomCapExceeded(NadynError):
    pass


@dataclass(frozen=True)
class AtomicMeasure:
    """``sum w_i delta_(x_i)`` with exact rational weights summing to 1."""

    atoms: tuple

    def __init__(self, atoms):
        merged: dict = {}
        for x, w in atoms:
            w = Fraction(w)
            if w <= 0:
                raise ValueError("atom weights must be positive")
            merged[x] = merged.get(x, Fraction(0)) + w
        if not merged:
            raise ValueError("a measure needs at least one atom")
        if sum(merged.values()) != 1:
            raise ValueError("weights must sum to 1")
        if len({x.space for x in merged}) != 1:
            raise SpaceMismatch("atoms must share a space")
        object.__setattr__(self, "atoms", tuple(sorted(merged.items(), key=lambda t: repr(t[0]))))

    @property
    def space(self):
        return self.atoms[0][0].space

    @property
    def support(self) -> list[Point]:
        return [x for x, _ in self.atoms]

    def mass(self, U: BasicOpen) -> Fraction:
        return sum((w for x, w in self.atoms if U.contains(x)), Fraction(0))

    def weight(self, x: Point) -> Fraction:
        return dict(self.atoms).get(x, Fraction(0))

    def __repr__(self):
        inner = ", ".join(f"{w}*{x!r}" for x, w in self.atoms)
        return f"AtomicMeasure({inner})"


def dirac(x: Point) -> AtomicMeasure:
    return AtomicMeasure([(x, 1)])


def empirical(points) -> AtomicMeasure:
    points = list(points)
    if not points:
        raise ValueError("empirical measure of an empty list")
    w = Fraction(1, len(points))
    return AtomicMeasure([(x, w) for x in points])


def pushforward(system: NASystem, mu: AtomicMeasure, n: int) -> AtomicMeasure:
    check_horizon(n)
    f = orbit_map(system, n)
    return AtomicMeasure([(apply(f, x), w) for x, w in mu.atoms])


@dataclass(frozen=True)
class MeasureOpen:
    """``{mu : mu(base_i) > t_i for every conjunct}``."""

    conjuncts: tuple

    def __init__(self, base, threshold=None):
        if threshold is not None:
            conj = ((base, Fraction(threshold)),)
        else:
            conj = tuple((b, Fraction(t)) for b, t in base)
        if not conj:
            raise ValueError("a measure open needs a conjunct")
        for _, t in conj:
            if not 0 < t < 1:
                raise ValueError("thresholds must lie in (0, 1)")
        object.__setattr__(self, "conjuncts", conj)

    @property
    def space(self):
        return self.conjuncts[0][0].space


def measure_open_member(mu: AtomicMeasure, O: MeasureOpen) -> bool:
    if mu.space != O.space:
        raise SpaceMismatch(f"{mu.space} vs {O.space}")
    return all(mu.mass(U) > t for U, t in O.conjuncts)


def measure_transitivity_times(
    system: NASystem, O1: MeasureOpen, O2: MeasureOpen, H: int, seeds
) -> HittingSet:
    """Times at which some seed of ``O1`` is pushed into ``O2``; absence is relative to the seeds."""
    check_horizon(H)
    seeds = list(seeds)
    bad = [mu for mu in seeds if not measure_open_member(mu, O1)]
    if bad:
        raise ValueError(f"seed {bad[0]!r} is not in O1")
    members = [n for n in range(1, H + 1) if any(measure_open_member(pushforward(system, mu, n), O2) for mu in seeds)]
    return HittingSet(H, tuple(members), "measure-transitivity", {"seed_count": len(seeds), "O1": O1, "O2": O2})


def measure_witness(system, O1, O2, n, seeds) -> dict | None:
    for mu in seeds:
        if measure_open_member(mu, O1) and measure_open_member(pushforward(system, mu, n), O2):
            return {"kind": "measure-hit", "n": n, "seed": mu, "O1": O1, "O2": O2}
    return None


def measure_seeds(points, O: MeasureOpen, max_atoms: int = 2) -> list[AtomicMeasure]:
    """Empirical measures on at most ``max_atoms`` of ``points`` that lie in ``O``."""
    points = list(dict.fromkeys(points))
    seeds = []
    for k in range(1, max_atoms + 1):
        for combo in itertools.combinations(points, k):
            mu = empirical(combo)
            if measure_open_member(mu, O):
                seeds.append(mu)
    return seeds


def measure_common_time(system: NASystem, pairs, H: int, seeds) -> dict | None:
    """First n at which every pair ``(O1_i, O2_i)`` has a seed of ``O1_i`` pushed into ``O2_i``.

    ``seeds[i]`` lists the candidate measures for pair i.
    """
    check_horizon(H)
    for n in range(1, H + 1):
        hits = [measure_witness(system, O1, O2, n, sd) for (O1, O2), sd in zip(pairs, seeds)]
        if all(hits):
            return {"kind": "measure-common-time", "n": n, "hits": hits}
    return None


def whole_measure_open(space, threshold=Fraction(1, 2)) -> MeasureOpen:
    return MeasureOpen(Whole(space), threshold)


# -- Prohorov ----------------------------------------------------------------

def _one_sided(mu: AtomicMeasure, nu: AtomicMeasure, eps, dist) -> bool:
    """``mu(A) <= nu(N(A, eps)) + eps`` for every A inside supp(mu)."""
    atoms = mu.atoms
    for k in range(1, len(atoms) + 1):
        for combo in itertools.combinations(range(len(atoms)), k):
            mass = sum(atoms[i][1] for i in combo)
            near = sum(w for j, (_, w) in enumerate(nu.atoms) if any(dist[i][j] < eps for i in combo))
            if mass > near + eps:
                return False
    return True


def _distance_table(mu, nu):
    return [[distance(x, y) for y, _ in nu.atoms] for x, _ in mu.atoms]


def prohorov_check(mu: AtomicMeasure, nu: AtomicMeasure, eps) -> bool:
    """Both Prohorov inequalities at ``eps`` by subset enumeration (open enlargement)."""
    if mu.space != nu.space:
        raise SpaceMismatch(f"{mu.space} vs {nu.space}")
    if max(len(mu.atoms), len(nu.atoms)) > ATOM_CAP:
        raise AtomCapExceeded(f"subset enumeration is capped at {ATOM_CAP} atoms")
    eps = Fraction(eps)
    table = _distance_table(mu, nu)
    back = [list(col) for col in zip(*table)]
    return _one_sided(mu, nu, eps, table) and _one_sided(nu, mu, eps, back)


def prohorov(mu: AtomicMeasure, nu: AtomicMeasure, tol=Fraction(1, 10**6)) -> tuple[Fraction, Fraction]:
    """Enclosure ``[lo, hi]`` of the Prohorov distance with ``hi - lo <= tol``.

    ``check`` fails at every eps below the infimum and holds at every eps
    above it, and ``check(1)`` always holds, so bisection on [0, 1] keeps
    ``check(lo)`` false (or lo = 0) and ``check(hi)`` true.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if mu == nu:
        return Fraction(0), min(tol, Fraction(1))
    lo, hi = Fraction(0), Fraction(1)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if prohorov_check(mu, nu, mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def prohorov_exact(mu: AtomicMeasure, nu: AtomicMeasure):
    """Closed-form infimum for atomic measures, used as an independent oracle.

    With ``c_0 = 0 < c_1 < ...`` the distinct atom distances, ``d < eps`` means
    ``d <= c_k`` for every eps in ``(c_k, c_(k+1)]``.  On that interval the
    check passes exactly when ``eps >= D_k``, the largest mass defect with
    "near" read as ``<= c_k``.
    """
    table = _distance_table(mu, nu)
    back = [list(c) for c in zip(*table)]
    cuts = sorted({Fraction(0)} | {d for row in table for d in row})
    best = Fraction(1)
    for k, c in enumerate(cuts):
        if c >= best:
            break
        nxt = cuts[k + 1] if k + 1 < len(cuts) else None
        D = max(_defect(mu, nu, table, c), _defect(nu, mu, back, c))
        cand = max(D, c)
        if nxt is None or cand <= nxt:
            best = min(best, cand)
    return best


def _defect(mu, nu, table, c):
    """max over A in supp(mu) of ``mu(A) - nu({y : d(A, y) <= c})``."""
    atoms = mu.atoms
    worst = Fraction(0)
    for k in range(1, len(atoms) + 1):
        for combo in itertools.combinations(range(len(atoms)), k):
            mass = sum(atoms[i][1] for i in combo)
            near = sum(w for j, (_, w) in enumerate(nu.atoms) if any(table[i][j] <= c for i in combo))
            worst = max(worst, mass - near)
    return worst
