"""Non-autonomous systems ``x_(n+1) = f_n(x_n)`` and their derived systems.

A system is a rule ``n -> f_n`` (n >= 1) plus structural metadata that the
certifiers rely on for claims about every time step:

* ``period``: ``f_(n+m) = f_n`` for all n.
* ``isometric``: every ``f_n`` is an isometry.
* ``identity_return``: an ``r`` with ``f_1^(r*k) = id`` for every k >= 1.
* ``all_identity``: every ``f_n`` is the identity.

Metadata is either computed exactly (periodic systems: one period decides
everything) or holds by construction (cancelling-block schedules, whose
block ``j`` is ``g_j, g_j^-1`` followed by identities).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .config import check_horizon
from .maps import ExactMap, Identity, ProductMap, apply, compose
from .spaces import Point, ProductPoint, ProductSpace
from .verdict import Verdict

# periodic systems search for g^c = id up to this many cycles
CYCLE_SEARCH = 64


class BlockSchedule:
    """Rule whose j-th block is ``g_j, g_j^-1`` then ``padding(j)`` identities."""

    def __init__(self, generator: Callable[[int], ExactMap], padding: Callable[[int], int] | int):
        self.generator = lru_cache(maxsize=None)(generator)
        self.padding = padding
        self._starts = [None, 1]  # _starts[j] = index of the first map of block j
        self._lock = threading.Lock()

    @property
    def block_length(self) -> int | None:
        return 2 + self.padding if isinstance(self.padding, int) else None

    def pad(self, j: int) -> int:
        return self.padding if isinstance(self.padding, int) else self.padding(j)

    @lru_cache(maxsize=None)
    def inverse(self, j: int) -> ExactMap:
        return self.generator(j).inverse()

    def start(self, j: int) -> int:
        with self._lock:
            while len(self._starts) <= j:
                i = len(self._starts) - 1
                self._starts.append(self._starts[i] + 2 + self.pad(i))
            return self._starts[j]

    def locate(self, n: int) -> tuple[int, int]:
        """Block index j and offset t of time step n."""
        b = self.block_length
        if b is not None:
            return (n - 1) // b + 1, (n - 1) % b
        j = 1
        while self.start(j + 1) <= n:
            j += 1
        return j, n - self.start(j)

    def __call__(self, n: int) -> ExactMap:
        j, t = self.locate(n)
        if t == 0:
            return self.generator(j)
        if t == 1:
            return self.inverse(j)
        return Identity(self.generator(j).space)


@dataclass(frozen=True, eq=False)
class NASystem:
    space: object
    rule: Callable[[int], ExactMap]
    name: str = ""
    period: int | None = None
    generators: frozenset | None = None
    isometric: bool = False
    identity_return: int | None = None
    all_identity: bool = False
    blocks: BlockSchedule | None = None
    notes: tuple = ()
    _prefix: list = field(default_factory=list, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def map_at(self, n: int) -> ExactMap:
        if n < 1:
            raise ValueError("time steps start at 1")
        return self.rule(n)

    def maps(self, start: int, stop: int) -> list[ExactMap]:
        return [self.map_at(n) for n in range(start, stop + 1)]

    # -- constructors -------------------------------------------------
    @classmethod
    def periodic(cls, maps: Sequence[ExactMap], name: str = "", notes=()) -> NASystem:
        maps = tuple(maps)
        m = len(maps)
        space = maps[0].space
        g = maps[0]
        for f in maps[1:]:
            g = compose(f, g)
        r = None
        power = g
        for c in range(1, CYCLE_SEARCH + 1):
            if power.is_identity:
                r = c * m
                break
            power = compose(g, power)
        return cls(
            space=space,
            rule=lambda n: maps[(n - 1) % m],
            name=name,
            period=m,
            generators=frozenset(maps),
            isometric=all(f.is_isometry for f in maps),
            identity_return=r,
            all_identity=all(f.is_identity for f in maps),
            notes=tuple(notes),
        )

    @classmethod
    def constant(cls, f: ExactMap, name: str = "") -> NASystem:
        return cls.periodic([f], name=name or f"constant {f!r}")

    @classmethod
    def prefix_tail(cls, prefix: Sequence[ExactMap], tail: Sequence[ExactMap], name: str = "") -> NASystem:
        """Finite prefix followed by a periodic tail."""
        prefix, tail = tuple(prefix), tuple(tail)
        if not prefix:
            return cls.periodic(tail, name=name)
        p, m = len(prefix), len(tail)

        def rule(n):
            return prefix[n - 1] if n <= p else tail[(n - p - 1) % m]

        all_maps = prefix + tail
        return cls(
            space=tail[0].space,
            rule=rule,
            name=name,
            generators=frozenset(all_maps),
            isometric=all(f.is_isometry for f in all_maps),
            all_identity=all(f.is_identity for f in all_maps),
        )

    @classmethod
    def cancelling_blocks(
        cls,
        space,
        generator: Callable[[int], ExactMap],
        padding: Callable[[int], int] | int = 0,
        name: str = "",
        isometric: bool = False,
        notes=(),
    ) -> NASystem:
        """Blocks ``g_j, g_j^-1, id, ..., id``; every block composes to the identity.

        ``isometric`` declares that every ``g_j`` is an isometry; fixtures
        verify it on a prefix.
        """
        sched = BlockSchedule(generator, padding)
        return cls(
            space=space,
            rule=sched,
            name=name,
            isometric=isometric,
            identity_return=sched.block_length,
            blocks=sched,
            notes=tuple(notes),
        )

    @classmethod
    def schedule(cls, space, rule: Callable[[int], ExactMap], name: str = "", **meta) -> NASystem:
        return cls(space=space, rule=rule, name=name, **meta)

    def __repr__(self):
        return f"NASystem({self.name or 'unnamed'})"


def segment(system: NASystem, start: int, length: int) -> ExactMap:
    """``f_start^length = f_(start+length-1) o ... o f_start``; length 0 gives the identity."""
    if start < 1 or length < 0:
        raise ValueError("need start >= 1 and length >= 0")
    if length == 0:
        return Identity(system.space)
    if start == 1:
        return _prefix(system, length)
    g = system.map_at(start)
    for n in range(start + 1, start + length):
        g = compose(system.map_at(n), g)
    return g


def _prefix(system: NASystem, n: int) -> ExactMap:
    cache = system._prefix
    with system._lock:
        if not cache:
            cache.append(Identity(system.space))
        while len(cache) <= n:
            i = len(cache)
            cache.append(compose(system.map_at(i), cache[-1]))
        return cache[n]


def orbit_map(system: NASystem, n: int) -> ExactMap:
    """``f_1^n``."""
    check_horizon(n)
    return segment(system, 1, n)


def iterate(system: NASystem, x: Point, n: int, sequential: bool = False) -> Point:
    """``f_1^n(x)``, either through the composed segment or step by step."""
    check_horizon(n)
    if sequential:
        for i in range(1, n + 1):
            x = apply(system.map_at(i), x)
        return x
    return apply(segment(system, 1, n), x)


def orbit(system: NASystem, x: Point, n: int) -> list[Point]:
    """``[x, f_1(x), ..., f_1^n(x)]`` by sequential application."""
    check_horizon(n)
    out = [x]
    for i in range(1, n + 1):
        out.append(apply(system.map_at(i), out[-1]))
    return out


def kth_iterate_system(system: NASystem, k: int) -> NASystem:
    """``f_1^[k]``, whose n-th map is ``f_(k(n-1)+1)^k``."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return system

    def rule(n):
        return segment(system, k * (n - 1) + 1, k)

    period = system.period // math.gcd(system.period, k) if system.period else None
    r = system.identity_return
    all_id = system.all_identity
    notes = list(system.notes)
    b = system.blocks.block_length if system.blocks else None
    if b is not None and k % b == 0:
        # each step spans whole cancelling blocks
        all_id = True
        notes.append(f"every step of the {k}-th iterate spans whole cancelling blocks of length {b}")
    generators = None
    if period:
        steps = [rule(n) for n in range(1, period + 1)]
        generators = frozenset(steps)
        all_id = all_id or all(f.is_identity for f in steps)
    return NASystem(
        space=system.space,
        rule=rule,
        name=f"{system.name}^[{k}]",
        period=period,
        generators=generators,
        isometric=system.isometric,
        identity_return=r // math.gcd(r, k) if r else None,
        all_identity=all_id,
        notes=tuple(notes),
    )


def product_system(system: NASystem, m: int) -> NASystem:
    """The system ``(X^m, f_n x ... x f_n)``."""
    if m < 1:
        raise ValueError("m must be positive")

    def rule(n):
        return ProductMap((system.map_at(n),) * m)

    return NASystem(
        space=ProductSpace(system.space, m),
        rule=rule,
        name=f"{system.name}^x{m}",
        period=system.period,
        isometric=system.isometric,
        identity_return=system.identity_return,
        all_identity=system.all_identity,
        notes=system.notes,
    )


def diagonal(points: Sequence[Point]) -> ProductPoint:
    return ProductPoint(tuple(points))


def period_composition(system: NASystem) -> ExactMap:
    """``g = f_m o ... o f_1`` of an m-periodic system."""
    if not system.period:
        raise ValueError(f"{system!r} is not periodic")
    return segment(system, 1, system.period)


def check_periodic_point(system: NASystem, x: Point, n: int, K: int) -> Verdict:
    """Decide ``f_1^(n k)(x) = x`` for all k, as far as structure allows.

    Exact checks run for k <= K.  A Certified verdict also needs one of:

    * ``fixed-by-generators``: every map of the system fixes x;
    * ``identity-return``: n is a multiple of an r with ``f_1^(rk) = id``;
    * ``periodic-power``: the system is m-periodic with m | n, so
      ``f_1^(nk) = (f_1^n)^k``;
    * ``cycle-return``: the system is periodic with ``f_1^R = id``, so
      ``f_1^(nk)`` depends only on ``nk mod R`` and k <= R/gcd(n, R) covers
      every residue.
    """
    if n < 1 or K < 1:
        raise ValueError("need n >= 1 and K >= 1")
    check_horizon(n * K)
    for k in range(1, K + 1):
        if iterate(system, x, n * k) != x:
            return Verdict.refuted({"kind": "periodic-failure", "x": x, "n": n, "k": k})
    cert = None
    r = system.identity_return
    if system.generators and all(apply(g, x) == x for g in system.generators):
        cert = {"type": "fixed-by-generators"}
    elif r and n % r == 0:
        cert = {"type": "identity-return", "r": r}
    elif system.period and n % system.period == 0:
        cert = {"type": "periodic-power", "m": system.period}
    elif system.period and r and K >= r // math.gcd(n, r):
        cert = {"type": "cycle-return", "R": r}
    if cert is None:
        return Verdict.inconclusive({"holds_up_to": K, "n": n})
    return Verdict.certified({"kind": "periodic", "x": x, "n": n, "K": K, "certificate": cert})


def shifted_system(system: NASystem, s: int) -> NASystem:
    """The tail system ``(f_(s+1), f_(s+2), ...)``; its ``f_1^m`` is ``f_(s+1)^m`` of the original."""
    if s < 0:
        raise ValueError("shift must be nonnegative")
    if s == 0:
        return system
    period = system.period
    return NASystem(
        space=system.space,
        rule=lambda n: system.map_at(n + s),
        name=f"{system.name}[+{s}]",
        period=period,
        generators=system.generators,
        isometric=system.isometric,
        all_identity=system.all_identity,
        notes=system.notes,
    )
