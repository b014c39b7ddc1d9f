"""The acceptance suite: nine end-to-end checks shared by the CLI and the tests.

Each check returns a ``CriterionResult``; nothing here is relaxed to make a
check pass.  Every certified or refuted verdict is also replayed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .alpha import GOLDEN, QAlpha
from .checkers import (
    banks_configuration,
    check_collective_sensitive,
    check_dense_periodic,
    check_multi_sensitive,
    check_sensitive,
    check_sensitivity_variant,
    check_totally_transitive,
    check_transitive,
    check_banks,
    neighborhoods,
    replay_verdict,
    replay_witness,
    sensitivity_times_many,
)
from .config import settings
from .fixtures import FIXTURE_NAMES, INTERLEAVED_PAIR, build_fixture
from .hitting import classify, prefix_density, tail_max_density, transitivity_times
from .hyperspace import FiniteCompact, hausdorff
from .invariants import all_violations
from .maps import ShiftPower
from .measures import (
    AtomicMeasure,
    MeasureOpen,
    dirac,
    measure_common_time,
    measure_seeds,
    measure_transitivity_times,
    prohorov,
    prohorov_exact,
)
from .spaces import CirclePoint, IntervalPoint, ShiftPoint, SpaceId, arc_length, distance
from .system import kth_iterate_system, orbit_map, segment
from .topology import Arc, Cylinder, default_basis, epsilon_net

TOL = Fraction(1, 10**6)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number}: {self.title} ({self.seconds:.2f}s) - {self.detail}"


class _Checks:
    """Collects named sub-checks; the criterion passes iff all do."""

    def __init__(self):
        self.failed: list[str] = []
        self.count = 0

    def __call__(self, ok, what: str):
        self.count += 1
        if not ok:
            self.failed.append(what)
        return ok

    def detail(self, extra: str = "") -> str:
        if self.failed:
            return "failed: " + "; ".join(self.failed[:5])
        return f"{self.count} checks passed" + (f"; {extra}" if extra else "")


# 1 -------------------------------------------------------------------------

def exponent_laws() -> tuple[bool, str]:
    s = build_fixture("shift-even")
    c = _Checks()
    for l in range(1, 21):
        c(segment(s, 1, 2 * l - 1) == ShiftPower(l), f"f_1^{2*l-1} = sigma^{l}")
        c(segment(s, 1, 2 * l).is_identity, f"f_1^{2*l} = id")
    return not c.failed, c.detail("l <= 20")


# 2 -------------------------------------------------------------------------

def non_thick_hitting_set() -> tuple[bool, str]:
    s = build_fixture("shift-interleaved")
    U, V = INTERLEAVED_PAIR
    hs = transitivity_times(s, U, V, 100)
    c = _Checks()
    odds = tuple(range(3, 100, 2))
    c(hs.members == odds, f"members {hs.members[:6]}... differ from 3, 5, ..., 99")
    gaps = {b - a for a, b in zip(hs.members, hs.members[1:])}
    c(gaps == {2}, "members form an arithmetic progression of odd numbers")
    cv = classify(hs, "thick", p=2)
    c(cv.label == "FailedAtScale" and cv.witness.get("max_run") == 1, f"thick p=2 gave {cv.label} {cv.witness}")
    return not c.failed, c.detail("members = {3, 5, ..., 99}, max run 1")


# 3 -------------------------------------------------------------------------

def total_transitivity_failure() -> tuple[bool, str]:
    s = build_fixture("shift-even")
    s2 = kth_iterate_system(s, 2)
    c = _Checks()
    c(s2.all_identity, "second iterate system flagged all-identity")
    c(all(s2.map_at(n).is_identity for n in range(1, 101)), "every step of the second iterate is the identity")
    basis = default_basis(SpaceId.SHIFT_SPACE)
    v = check_totally_transitive(s, 2, basis, 100)
    c(v.is_refuted, f"total transitivity gave {v}")
    inner = (v.witness or {}).get("inner", {})
    c((v.witness or {}).get("k") == 2 and inner.get("kind") == "all-identity", "structural all-identity witness at k=2")
    c(replay_verdict(s, v), "witness replays")
    return not c.failed, c.detail("k=2 iterate is the identity; disjoint cylinders never meet")


# 4 -------------------------------------------------------------------------

def rotation_trifecta() -> tuple[bool, str]:
    old = settings.precision_bits
    settings.precision_bits = 64
    try:
        s = build_fixture("circle-rotations")
        c = _Checks()
        dp = check_dense_periodic(s, Fraction(1, 8), 4)
        c(dp.is_certified, f"dense periodic gave {dp}")
        if dp.is_certified:
            c(dp.witness["periods_used"] == [2], f"periods used {dp.witness['periods_used']}")
        c(replay_verdict(s, dp), "dense periodic replay")
        tv = check_transitive(s, default_basis(SpaceId.CIRCLE, Fraction(1, 8)), 300)
        c(tv.is_certified, f"transitivity gave {tv}")
        c(replay_verdict(s, tv), "transitivity replay")
        (U, V, W), _ = banks_configuration(CirclePoint(0), CirclePoint(Fraction(1, 3)), CirclePoint(Fraction(2, 3)))
        bv = check_banks(s, U, V, W, 300)
        c(bv.is_refuted and bv.witness["kind"] == "isometric-geometry", f"Banks gave {bv}")
        c(replay_verdict(s, bv), "Banks replay")
    finally:
        settings.precision_bits = old
    return not c.failed, c.detail("period 2 everywhere; arcs of mesh 1/8 all hit by n <= 300; Banks refuted by isometry")


# 5 -------------------------------------------------------------------------

def sensitivity_separations() -> tuple[bool, str]:
    c = _Checks()
    mesh = Fraction(1, 32)
    s3 = build_fixture("pl-identity-3")
    delta3 = Fraction(1, 16)
    sv = check_sensitive(s3, delta3, mesh, 300)
    c(sv.is_certified, f"pl-identity-3 sensitive gave {sv}")
    c(replay_verdict(s3, sv), "sensitive replay")
    for variant in ("thick", "cofinite"):
        v = check_sensitivity_variant(s3, variant, delta3, mesh, 300, p=2)
        w = v.witness or {}
        c(v.is_refuted and v.at_scale, f"{variant} gave {v}")
        c(w.get("identity_return") == 3 and 0 not in w.get("member_residues", [0]), f"{variant}: no member is 0 mod 3")
        c(replay_verdict(s3, v), f"{variant} replay")

    s10 = build_fixture("pl-identity-powers10")
    H = 400
    v = check_sensitivity_variant(s10, "syndetic", Fraction(1, 16), mesh, H, a=20)
    c(v.is_refuted and v.at_scale, f"syndetic a=20 gave {v}")
    c(replay_verdict(s10, v), "syndetic replay")
    hoods = [U for _, U in neighborhoods(s10.space, mesh)]
    times = sensitivity_times_many(s10, hoods, Fraction(1, 16), H)
    richest = max(times, key=len)
    prof = prefix_density(richest)
    peaks = [prof[n - 1] for n in richest.members]
    c(len(richest) >= 2, "some neighborhood has at least two members")
    c(all(a > b for a, b in zip(peaks, peaks[1:])), f"peak densities {peaks} not decreasing")
    worst_tail = max(tail_max_density(prefix_density(hs)) for hs in times)
    c(worst_tail < Fraction(1, 10), f"tail density {worst_tail} not below 1/10")
    c(all(prefix_density(hs)[-1] < Fraction(1, 10) for hs in times), "final density below 1/10 everywhere")
    extra = f"richest members {list(richest.members)}, worst tail density {float(worst_tail):.4f}"
    return not c.failed, c.detail(extra)


# 6 -------------------------------------------------------------------------

def periodic_equivalences() -> tuple[bool, str]:
    s = build_fixture("shift-3periodic")
    H, delta, mesh = 200, Fraction(1), Fraction(1, 16)
    c = _Checks()
    verdicts = {
        "sensitive": check_sensitive(s, delta, mesh, H),
        "syndetic": check_sensitivity_variant(s, "syndetic", delta, mesh, H, a=32),
        "thick": check_sensitivity_variant(s, "thick", delta, mesh, H, p=10),
        "multi": check_multi_sensitive(s, [Cylinder(0, "00"), Cylinder(0, "11")], delta, H),
        "collective": check_collective_sensitive(s, [ShiftPoint("0"), ShiftPoint("01")], Fraction(1, 2), delta, H),
    }
    for name, v in verdicts.items():
        c(v.is_certified, f"{name} gave {v}")
        c(replay_verdict(s, v), f"{name} replay")
    return not c.failed, c.detail("sensitive, syndetic (a=32), thick (p=10), multi and collective")


# 7 -------------------------------------------------------------------------

def _isolating_radius(H: int) -> Fraction:
    """A radius r with arcs of radius r around 0 and 1/2 kept apart by every rotation f_1^n, n <= H."""
    worst = None
    for e in range(0, H // 2 + 2):
        d = arc_length(QAlpha(Fraction(1, 2), -e, GOLDEN))
        lo, _ = d.enclose(64)
        worst = lo if worst is None else min(worst, lo)
    r = Fraction(1, 4)
    while 4 * r > worst:
        r /= 2
    return r


def induced_systems() -> tuple[bool, str]:
    c = _Checks()
    s = build_fixture("shift-3periodic")
    t = Fraction(2, 5)
    net = epsilon_net(SpaceId.SHIFT_SPACE, Fraction(1, 2))
    cyl = [Cylinder(0, w) for w in ("00", "11", "01", "10")]
    O = [MeasureOpen(U, t) for U in cyl]
    seeds = [measure_seeds(net, O[0]), measure_seeds(net, O[2])]
    c(all(seeds), "every measure open has empirical seeds")
    ts = measure_transitivity_times(s, O[0], O[1], 60, seeds[0])
    c(len(ts) > 0, "measure transitivity times nonempty")
    w = measure_common_time(s, [(O[0], O[1]), (O[2], O[3])], 60, seeds)
    c(w is not None, "a common time for two measure pairs")
    if w is not None:
        c(replay_witness(s, w), "common-time witness replays")

    rot = build_fixture("circle-rotations")
    H = 100
    r = _isolating_radius(H)
    A1, A2 = Arc(CirclePoint(0), r), Arc(CirclePoint(Fraction(1, 2)), r)
    O1, O2 = MeasureOpen(A1, Fraction(4, 5)), MeasureOpen(A2, Fraction(4, 5))
    dseeds = [dirac(x) for x in (CirclePoint(0), CirclePoint(r / 2), CirclePoint(-r / 2))]
    ms = measure_transitivity_times(rot, O1, O2, H, dseeds)
    c(len(ms) == 0, f"measure transitivity times {ms.members[:5]} should be empty")
    # independent of the seeds: the underlying arcs never meet, so no measure can move
    # more than 4/5 of its mass from A1 into A2
    c(len(transitivity_times(rot, A1, A2, H)) == 0, "the arcs never meet under f_1^n, n <= 100")
    return not c.failed, c.detail(f"common time n={w and w['n']}; isolating radius {r}")


# 8 -------------------------------------------------------------------------

def _random_point(rng: random.Random, space):
    if space == SpaceId.UNIT_INTERVAL:
        return IntervalPoint(Fraction(rng.randint(0, 24), 24))
    if space == SpaceId.SHIFT_SPACE:
        return ShiftPoint("".join(rng.choice("01") for _ in range(rng.randint(1, 4))))
    return CirclePoint(Fraction(rng.randint(0, 23), 24), rng.choice((0, 0, 1)))


def _random_compact(rng, space):
    return FiniteCompact(_random_point(rng, space) for _ in range(rng.randint(1, 4)))


def _random_measure(rng, space):
    k = rng.randint(1, 3)
    pts = [_random_point(rng, space) for _ in range(k)]
    raw = [rng.randint(1, 4) for _ in range(k)]
    return AtomicMeasure([(x, Fraction(w, sum(raw))) for x, w in zip(pts, raw)])


def metric_suites(seed: int = 20261014) -> tuple[bool, str]:
    rng = random.Random(seed)
    c = _Checks()
    spaces = [SpaceId.UNIT_INTERVAL, SpaceId.SHIFT_SPACE, SpaceId.CIRCLE]
    for i in range(210):
        sp = spaces[i % 3]
        A, B, C = (_random_compact(rng, sp) for _ in range(3))
        c(hausdorff(A, B) == hausdorff(B, A), f"Hausdorff symmetry {A} {B}")
        c(hausdorff(A, C) <= hausdorff(A, B) + hausdorff(B, C), "Hausdorff triangle")
        c((hausdorff(A, B) == 0) == (A == B), "Hausdorff indiscernibles")
        c(hausdorff(A, A) == 0, "Hausdorff zero on the diagonal")
    for i in range(200):
        sp = spaces[i % 2]  # interval and shift: rational distances
        mu, nu, rho = (_random_measure(rng, sp) for _ in range(3))
        mn, nm = prohorov(mu, nu, TOL), prohorov(nu, mu, TOL)
        c(mn[1] - mn[0] <= TOL, "enclosure width")
        c(mn[0] <= nm[1] and nm[0] <= mn[1], "Prohorov symmetry")
        mr, nr = prohorov(mu, rho, TOL), prohorov(nu, rho, TOL)
        c(mr[0] <= mn[1] + nr[1] + 2 * TOL, "Prohorov triangle within 2 tol")
        exact = prohorov_exact(mu, nu)
        c(mn[0] <= exact <= mn[1], f"oracle {exact} outside {mn}")
        c((exact == 0) == (mu == nu), "Prohorov indiscernibles")
        c(prohorov(mu, mu, TOL)[1] <= TOL, "Prohorov zero on the diagonal")
    for i in range(100):
        sp = spaces[i % 3]
        x, y = _random_point(rng, sp), _random_point(rng, sp)
        lo, hi = prohorov(dirac(x), dirac(y), TOL)
        target = min(distance(x, y), 1)
        c(lo <= target <= hi, f"Dirac pair {x}, {y}: {target} outside [{lo}, {hi}]")
        c(prohorov_exact(dirac(x), dirac(y)) == target, "Dirac oracle equals min(d, 1)")
    return not c.failed, c.detail("210 Hausdorff triples, 200 Prohorov triples, 100 Dirac pairs")


# 9 -------------------------------------------------------------------------

def coherence_invariants(N: int = 200) -> tuple[bool, str]:
    c = _Checks()
    for name in FIXTURE_NAMES:
        for kind, bad in all_violations(build_fixture(name), N).items():
            c(not bad, f"{name} {kind}: {bad[:1]}")
    return not c.failed, c.detail(f"{len(FIXTURE_NAMES)} fixtures, n <= {N}")


CRITERIA = [
    (1, "exponent laws on shift-even", exponent_laws),
    (2, "non-thick transitivity hitting set", non_thick_hitting_set),
    (3, "total transitivity fails at k=2", total_transitivity_failure),
    (4, "rotation fixture: dense periodic, transitive, no Banks", rotation_trifecta),
    (5, "sensitivity hierarchy separations", sensitivity_separations),
    (6, "periodic system sensitivity equivalences", periodic_equivalences),
    (7, "induced measure systems", induced_systems),
    (8, "metric kernel property suites", metric_suites),
    (9, "cocycle, product and iterate coherence", coherence_invariants),
]


def run_criterion(number: int) -> CriterionResult:
    for n, title, fn in CRITERIA:
        if n == number:
            t0 = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as exc:  # a crash is a failure, reported with its cause
                ok, detail = False, f"raised {type(exc).__name__}: {exc}"
            return CriterionResult(n, title, ok, detail, time.perf_counter() - t0)
    raise KeyError(f"no criterion {number}")


def run_acceptance() -> list[CriterionResult]:
    return [run_criterion(n) for n, _, _ in CRITERIA]
