"""Exact coherence checks between the different ways of forming orbit maps.

Each function returns a list of human-readable violations; empty means
every instance checked passed.
"""

from __future__ import annotations

from .maps import compose, identity_of
from .spaces import ProductPoint
from .system import NASystem, iterate, kth_iterate_system, orbit_map, product_system, segment
from .topology import epsilon_net


def segment_table(system: NASystem, N: int) -> dict[int, list]:
    """``table[s][l] = f_s^l`` for ``s + l - 1 <= N``, built by left accumulation."""
    table = {}
    for s in range(1, N + 1):
        g = identity_of(system.space)
        row = [g]
        for l in range(1, N - s + 2):
            g = compose(system.map_at(s + l - 1), g)
            row.append(g)
        table[s] = row
    return table


def cocycle_violations(system: NASystem, N: int = 200, full_until: int = 40) -> tuple[list[str], int]:
    """``f_s^(l1+l2) = f_(s+l1)^l2 o f_s^l1``.

    Checked for every split of every ``f_1^n`` with n <= N, and for every
    triple (s, l1, l2) with ``s + l1 + l2 - 1 <= full_until``.  The cached
    prefix maps behind ``orbit_map`` are compared against the table too.
    Returns (violations, number of identities checked).
    """
    table = segment_table(system, N)
    bad, count = [], 0

    def check(s, l1, l2):
        nonlocal count
        count += 1
        if compose(table[s + l1][l2], table[s][l1]) != table[s][l1 + l2]:
            bad.append(f"cocycle fails at s={s}, l1={l1}, l2={l2}")

    for n in range(2, N + 1):
        for l1 in range(1, n):
            check(1, l1, n - l1)
        count += 1
        if orbit_map(system, n) != table[1][n]:
            bad.append(f"cached f_1^{n} disagrees with the segment table")
    for s in range(2, full_until + 1):
        for l1 in range(1, full_until - s + 1):
            for l2 in range(1, full_until - s - l1 + 2):
                check(s, l1, l2)
    return bad, count


def sample_points(space, eps=None):
    from fractions import Fraction

    return epsilon_net(space, eps or Fraction(1, 4))


def sequential_violations(system: NASystem, N: int = 200) -> list[str]:
    """Step-by-step application agrees with the composed segment."""
    bad = []
    for x in sample_points(system.space):
        y = x
        for n in range(1, N + 1):
            y = system.map_at(n)(y)
            if y != iterate(system, x, n):
                bad.append(f"sequential orbit of {x!r} differs at n={n}")
                break
    return bad


def kth_iterate_violations(system: NASystem, N: int = 200, ks=(2, 3, 4, 5)) -> list[str]:
    """``(f^[k])_1^n = f_1^(kn)`` as maps, for kn <= N."""
    bad = []
    for k in ks:
        sk = kth_iterate_system(system, k)
        for n in range(1, N // k + 1):
            if orbit_map(sk, n) != orbit_map(system, k * n):
                bad.append(f"k={k}: iterate system disagrees at n={n}")
                break
    return bad


def product_violations(system: NASystem, N: int = 200, m: int = 2) -> list[str]:
    """The product system acts coordinatewise."""
    bad = []
    pts = sample_points(system.space)
    ps = product_system(system, m)
    for a, b in zip(pts, pts[1:] + pts[:1]):
        z = ProductPoint((a,) * (m - 1) + (b,))
        for n in range(1, N + 1, 7):
            want = ProductPoint((iterate(system, a, n),) * (m - 1) + (iterate(system, b, n),))
            if iterate(ps, z, n) != want:
                bad.append(f"product orbit of {z!r} differs at n={n}")
                break
    return bad


def segment_start_violations(system: NASystem, N: int = 200) -> list[str]:
    """``segment`` from any start agrees with the left-accumulated table (start <= N, length 1)."""
    bad = []
    for s in range(1, N + 1):
        if segment(system, s, 1) != system.map_at(s):
            bad.append(f"segment({s}, 1) differs from f_{s}")
    return bad


def all_violations(system: NASystem, N: int = 200, full_until: int = 40) -> dict[str, list[str]]:
    cocycle, _ = cocycle_violations(system, N, full_until)
    return {
        "cocycle": cocycle,
        "sequential": sequential_violations(system, N),
        "kth_iterate": kth_iterate_violations(system, N),
        "product": product_violations(system, N),
        "segment_start": segment_start_violations(system, N),
    }
