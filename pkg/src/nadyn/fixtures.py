"""Named systems used as worked examples, with build-time identity self-checks.

Catalog (``build_fixture(name, **params)``):

================================  ============================================
``pl-interleaved``                f_1, f_1^-1, f_2, f_2^-1, ... over ``enumerate_F``
``pl-identity-3``                 f_j, f_j^-1, id blocks
``pl-identity-powers10``          f_j, f_j^-1 followed by 10^j identities
``shift-even``                    sigma, sigma^-1, sigma^2, sigma^-2, ...
``shift-odd-padded`` (k odd)      sigma^j, sigma^-j and k - 2 identities per block
``shift-interleaved``             the ``shift-even`` rule, with a documented open pair
``shift-3periodic``               period (sigma, sigma^-2, sigma^2)
``circle-rotations``              R^j, R^-j with R the rotation by alpha
================================  ============================================

``enumerate_F`` lists the admissible quadruples ``(a, b, c, d)`` of rationals
in (0, 1) with ``a < b``, ``a != c``, ``b != d`` and ``c != d``, ordered by the
sum of the four reduced denominators and then lexicographically.  Each
quadruple gives the PL homeomorphism through ``(0,0), (a,c), (b,d), (1,1)``
when ``c < d`` and through ``(0,1), (a,c), (b,d), (1,0)`` when ``c > d``.
Every PL fixture indexes its maps by this order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .config import FixtureError
from .maps import Identity, PLMap, RotationOffset, ShiftPower
from .spaces import GOLDEN, SpaceId
from .system import NASystem, kth_iterate_system, segment
from .topology import Cylinder

# ---------------------------------------------------------------------------
# enumeration of F


def _fractions_with_denominator(q: int):
    return [Fraction(p, q) for p in range(1, q) if math.gcd(p, q) == 1]


def _quadruples_with_sum(total: int):
    found = []
    for qs in itertools.product(range(2, total - 5), repeat=3):
        q4 = total - sum(qs)
        if q4 < 2:
            continue
        pools = [_fractions_with_denominator(q) for q in (*qs, q4)]
        for a, b, c, d in itertools.product(*pools):
            if a < b and a != c and b != d and c != d:
                found.append((a, b, c, d))
    found.sort()
    return found


def _quadruple_stream():
    total = 8
    while True:
        yield from _quadruples_with_sum(total)
        total += 1


@lru_cache(maxsize=None)
def _quadruple_prefix(count: int) -> tuple:
    return tuple(itertools.islice(_quadruple_stream(), count))


def quadruples(count: int) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    if count < 1:
        raise ValueError("count must be positive")
    # grow in powers of two so repeated calls share the cache
    size = 1 << (count - 1).bit_length()
    return list(_quadruple_prefix(size)[:count])


def map_from_quadruple(a, b, c, d) -> PLMap:
    if c < d:
        return PLMap(((0, 0), (a, c), (b, d), (1, 1)))
    return PLMap(((0, 1), (a, c), (b, d), (1, 0)))


def enumerate_F(count: int) -> list[PLMap]:
    """The first ``count`` PL homeomorphisms in the documented order."""
    return [map_from_quadruple(*q) for q in quadruples(count)]


class _FEnumeration:
    """Lazy 1-indexed access to ``enumerate_F``."""

    def __init__(self):
        self._maps: list[PLMap] = []

    def __call__(self, j: int) -> PLMap:
        if j > len(self._maps):
            want = max(j, 2 * len(self._maps), 64)
            self._maps = enumerate_F(want)
        return self._maps[j - 1]


F_MAPS = _FEnumeration()

# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class FixtureInfo:
    name: str
    summary: str
    params: dict = field(default_factory=dict)
    source: str = ""


CATALOG = {
    "pl-interleaved": FixtureInfo(
        "pl-interleaved",
        "interval; f_1, f_1^-1, f_2, f_2^-1, ... with f_j the j-th map of enumerate_F; "
        "f_1^(2j-1) = f_j and f_1^(2j) = id",
        {},
        "interleaved PL homeomorphisms and their inverses (hyperspace example)",
    ),
    "pl-identity-3": FixtureInfo(
        "pl-identity-3",
        "interval; blocks f_j, f_j^-1, id; f_1^(3j-2) = f_j and f_1^(3k) = id",
        {},
        "identity-padded interleaving with period-3 returns (sensitive, neither cofinitely nor thickly)",
    ),
    "pl-identity-powers10": FixtureInfo(
        "pl-identity-powers10",
        "interval; blocks f_j, f_j^-1 followed by 10^j identities; f_1^k(n) = f_n for "
        "k(n) = 10 + ... + 10^(n-1) + 2n - 1",
        {"blocks": 4},
        "identity blocks of lengths 10, 100, 1000, ... (large unbounded gaps, not syndetically sensitive)",
    ),
    "shift-even": FixtureInfo(
        "shift-even",
        "shift space; sigma, sigma^-1, sigma^2, sigma^-2, ...; f_1^(2l-1) = sigma^l and f_1^(2l) = id",
        {},
        "weakly mixing but not totally transitive (even k)",
    ),
    "shift-odd-padded": FixtureInfo(
        "shift-odd-padded",
        "shift space; blocks sigma^r, sigma^-r then k-2 identities; g_1^((r-1)k+1) = sigma^r and g_1^(kr) = id",
        {"k": 3},
        "weakly mixing but not totally transitive (odd k)",
    ),
    "shift-interleaved": FixtureInfo(
        "shift-interleaved",
        "shift space; same rule as shift-even; documented pair U = Cylinder(0, '00'), "
        "V = Cylinder(0, '11') with hitting times {3, 5, 7, ...}",
        {},
        "weakly mixing with a non-thick hitting set",
    ),
    "shift-3periodic": FixtureInfo(
        "shift-3periodic",
        "shift space; 3-periodic sigma, sigma^-2, sigma^2 with period composition sigma",
        {},
        "periodic commutative system: thickly sensitive and totally transitive",
    ),
    "circle-rotations": FixtureInfo(
        "circle-rotations",
        "circle; R^j, R^-j with R(theta) = theta + alpha, alpha = (sqrt(5)-1)/2; isometries with f_1^(2k) = id",
        {},
        "transitive isometric system with every point of prime period 2 (no Banks condition)",
    ),
}

INTERLEAVED_PAIR = (Cylinder(0, "00"), Cylinder(0, "11"))


def list_fixtures() -> str:
    lines = []
    for info in CATALOG.values():
        params = ", ".join(f"{k}={v}" for k, v in info.params.items()) or "none"
        lines.append(f"{info.name}\n    {info.summary}\n    params: {params}\n    example: {info.source}")
    return "\n".join(lines)


def _require(ok: bool, what: str):
    if not ok:
        raise FixtureError(f"self-check failed: {what}")


def _shift_blocks(name: str, pad: int, notes=()) -> NASystem:
    # sigma is not an isometry of the weighted metric, so no isometry flag here
    return NASystem.cancelling_blocks(SpaceId.SHIFT_SPACE, ShiftPower, pad, name=name, notes=notes)


def _build_pl_interleaved():
    s = NASystem.cancelling_blocks(SpaceId.UNIT_INTERVAL, F_MAPS, 0, name="pl-interleaved")
    for j in range(1, 11):
        _require(segment(s, 1, 2 * j - 1) == F_MAPS(j), f"f_1^{2*j-1} = f_{j}")
        _require(segment(s, 1, 2 * j).is_identity, f"f_1^{2*j} = id")
    return s


def _build_pl_identity_3():
    s = NASystem.cancelling_blocks(SpaceId.UNIT_INTERVAL, F_MAPS, 1, name="pl-identity-3")
    for k in range(1, 11):
        _require(segment(s, 1, 3 * k).is_identity, f"f_1^{3*k} = id")
        _require(segment(s, 1, 3 * k - 2) == F_MAPS(k), f"f_1^{3*k-2} = f_{k}")
    return s


def powers10_time(n: int) -> int:
    """``k(n) = 10 + 10^2 + ... + 10^(n-1) + 2n - 1``."""
    return sum(10**i for i in range(1, n)) + 2 * n - 1


def _build_pl_identity_powers10(blocks: int = 4):
    if blocks < 1:
        raise ValueError("blocks must be positive")
    s = NASystem.cancelling_blocks(
        SpaceId.UNIT_INTERVAL,
        F_MAPS,
        lambda j: 10**j,
        name="pl-identity-powers10",
        notes=(f"self-checked through block {blocks}",),
    )
    for n in range(1, blocks + 1):
        k = powers10_time(n)
        _require(s.map_at(k) == F_MAPS(n), f"block {n} starts at step {k}")
        _require(segment(s, 1, k) == F_MAPS(n), f"f_1^{k} = f_{n}")
    return s


def _build_shift_even():
    s = _shift_blocks("shift-even", 0)
    for l in range(1, 21):
        _require(segment(s, 1, 2 * l - 1) == ShiftPower(l), f"f_1^{2*l-1} = sigma^{l}")
        _require(segment(s, 1, 2 * l).is_identity, f"f_1^{2*l} = id")
    return s


def _build_shift_odd_padded(k: int = 3):
    if k < 3 or k % 2 == 0:
        raise ValueError("shift-odd-padded needs an odd k >= 3")
    s = _shift_blocks(f"shift-odd-padded(k={k})", k - 2)
    for r in range(1, 11):
        _require(segment(s, 1, (r - 1) * k + 1) == ShiftPower(r), f"g_1^{(r-1)*k+1} = sigma^{r}")
        _require(segment(s, 1, k * r).is_identity, f"g_1^{k*r} = id")
    return s


def _build_shift_interleaved():
    return _shift_blocks(
        "shift-interleaved", 0, notes=("documented pair U = Cylinder(0, '00'), V = Cylinder(0, '11')",)
    )


def _build_shift_3periodic():
    s = NASystem.periodic([ShiftPower(1), ShiftPower(-2), ShiftPower(2)], name="shift-3periodic")
    _require(segment(s, 1, 3) == ShiftPower(1), "f_3 o f_2 o f_1 = sigma")
    _require(kth_iterate_system(s, 3).map_at(1) == ShiftPower(1), "third iterate steps by sigma")
    return s


def rotation(j: int, alpha=GOLDEN) -> RotationOffset:
    return RotationOffset(0, j, alpha)


def _build_circle_rotations(alpha=GOLDEN):
    s = NASystem.cancelling_blocks(
        SpaceId.CIRCLE,
        lambda j: rotation(j, alpha),
        0,
        name="circle-rotations",
        isometric=True,
    )
    for k in range(1, 11):
        _require(segment(s, 1, 2 * k).is_identity, f"f_1^{2*k} = id")
        _require(segment(s, 1, 2 * k - 1) == rotation(k, alpha), f"f_1^{2*k-1} = R^{k}")
    _require(all(s.map_at(n).is_isometry for n in range(1, 41)), "rotations are isometries")
    return s


_BUILDERS = {
    "pl-interleaved": _build_pl_interleaved,
    "pl-identity-3": _build_pl_identity_3,
    "pl-identity-powers10": _build_pl_identity_powers10,
    "shift-even": _build_shift_even,
    "shift-odd-padded": _build_shift_odd_padded,
    "shift-interleaved": _build_shift_interleaved,
    "shift-3periodic": _build_shift_3periodic,
    "circle-rotations": _build_circle_rotations,
}

FIXTURE_NAMES = tuple(_BUILDERS)


def build_fixture(name: str, **params) -> NASystem:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}") from None
    return builder(**params)


# helper systems used by tests and examples


def constant_shift() -> NASystem:
    return NASystem.constant(ShiftPower(1), name="constant-sigma")


def identity_only(space=SpaceId.UNIT_INTERVAL) -> NASystem:
    return NASystem.constant(Identity(space), name=f"identity-only({space.value})")


def rotation_core(alpha=GOLDEN) -> NASystem:
    """The 2-periodic system R, R^-1."""
    return NASystem.periodic([rotation(1, alpha), rotation(-1, alpha)], name="rotation-core")
