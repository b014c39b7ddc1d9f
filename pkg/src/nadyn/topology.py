"""Canonical open sets of the model spaces, with exact set operations.

Basic opens per space:

* ``IntervalOpen(lo, hi)``: relatively open in [0, 1], so ``lo == 0``
  includes 0 and ``hi == 1`` includes 1.
* ``Cylinder(anchor, word)``: sequences with ``x_(anchor+j) = word[j]``.
* ``Arc(center, radius)``: the open arc ``d(x, center) < radius``.

``Whole(space)`` is the full space, ``OpenUnion`` a finite union and
``Box`` a coordinatewise product.  Images of intervals under
non-monotone PL maps need not be open; they come back as ``Span``
(an interval with explicit endpoint closedness).

Shift-space balls convert to the single cylinder pinning ``|i| <= T``
around the center, with T minimal such that ``4 * 2^-T < radius``; every
point of that cylinder is within ``2^(1-T) < radius`` of the center, so the
cylinder is an inner approximation of the ball (balls of this metric are
not finite unions of cylinders in general).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .alpha import QAlpha
from .config import SpaceMismatch
from .maps import ExactMap, Identity, PLMap, ProductMap, RotationOffset, ShiftPower
from .spaces import (
    GOLDEN,
    CirclePoint,
    IntervalPoint,
    Point,
    ProductPoint,
    ProductSpace,
    ShiftPoint,
    SpaceId,
    distance,
)

HALF = Fraction(1, 2)


class BasicOpen:
    space: object

    def contains(self, x: Point) -> bool:
        raise NotImplementedError

    def __contains__(self, x):
        return self.contains(x)


@dataclass(frozen=True)
class Whole(BasicOpen):
    space: object

    def contains(self, x):
        return x.space == self.space


@dataclass(frozen=True)
class Span(BasicOpen):
    """Subinterval of [0, 1] with explicit endpoint closedness."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = False
    hi_closed: bool = False

    space = SpaceId.UNIT_INTERVAL

    @property
    def empty(self) -> bool:
        return self.lo > self.hi or (self.lo == self.hi and not (self.lo_closed and self.hi_closed))

    def contains(self, x):
        v = x.value
        return (v > self.lo or (self.lo_closed and v == self.lo)) and (
            v < self.hi or (self.hi_closed and v == self.hi)
        )

    def meet(self, other: Span) -> Span:
        if self.lo > other.lo:
            lo, lc = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lc = other.lo, other.lo_closed
        else:
            lo, lc = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hc = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hc = other.hi, other.hi_closed
        else:
            hi, hc = self.hi, self.hi_closed and other.hi_closed
        return Span(lo, hi, lc, hc)

    def witness(self) -> IntervalPoint:
        if self.lo == self.hi:
            return IntervalPoint(self.lo)
        return IntervalPoint((self.lo + self.hi) / 2)


@dataclass(frozen=True)
class IntervalOpen(BasicOpen):
    lo: Fraction
    hi: Fraction

    space = SpaceId.UNIT_INTERVAL

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if not 0 <= lo < hi <= 1:
            raise ValueError(f"need 0 <= lo < hi <= 1, got ({lo}, {hi})")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def as_span(self) -> Span:
        return Span(self.lo, self.hi, self.lo == 0, self.hi == 1)

    def contains(self, x):
        return self.as_span().contains(x)

    def __repr__(self):
        return f"IntervalOpen({self.lo}, {self.hi})"


@dataclass(frozen=True)
class Cylinder(BasicOpen):
    anchor: int
    word: str

    space = SpaceId.SHIFT_SPACE

    def __post_init__(self):
        if set(self.word) - {"0", "1"}:
            raise ValueError(f"bad cylinder word {self.word!r}")

    @property
    def fixed(self) -> dict[int, int]:
        return {self.anchor + j: int(c) for j, c in enumerate(self.word)}

    def contains(self, x):
        return all(x[i] == v for i, v in self.fixed.items())

    def witness(self) -> ShiftPoint:
        # a periodic point agreeing with the word; zeros elsewhere
        L = len(self.word) + 1
        cells = ["0"] * L
        for i, v in self.fixed.items():
            cells[i % L] = str(v)
        return ShiftPoint("".join(cells))

    def __repr__(self):
        return f"Cylinder({self.anchor}, {self.word!r})"


@dataclass(frozen=True)
class Arc(BasicOpen):
    center: CirclePoint
    radius: Fraction

    space = SpaceId.CIRCLE

    def __post_init__(self):
        if not isinstance(self.center, CirclePoint):
            raise TypeError("arc center must be a CirclePoint")
        r = Fraction(self.radius)
        if not 0 < r < HALF:
            raise ValueError("arc radius must lie in (0, 1/2)")
        object.__setattr__(self, "radius", r)

    def contains(self, x):
        return distance(x, self.center) < self.radius

    def __repr__(self):
        return f"Arc({self.center!r}, {self.radius})"


@dataclass(frozen=True)
class OpenUnion(BasicOpen):
    parts: tuple

    @property
    def space(self):
        return self.parts[0].space

    def contains(self, x):
        return any(p.contains(x) for p in self.parts)


@dataclass(frozen=True)
class Box(BasicOpen):
    parts: tuple

    @property
    def space(self):
        return ProductSpace(self.parts[0].space, len(self.parts))

    def contains(self, x):
        return all(p.contains(c) for p, c in zip(self.parts, x.coords))


@dataclass(frozen=True)
class Ball:
    center: Point
    radius: Fraction

    def __post_init__(self):
        r = Fraction(self.radius)
        if r <= 0:
            raise ValueError("ball radius must be positive")
        object.__setattr__(self, "radius", r)

    def contains(self, x: Point) -> bool:
        return distance(self.center, x) < self.radius


def shift_pin_radius(radius: Fraction) -> int:
    """Minimal T with ``4 * 2^-T < radius``."""
    T = 0
    while 4 * Fraction(1, 2**T) >= radius:
        T += 1
    return T


def ball_open(ball: Ball) -> BasicOpen:
    """Basic open for a ball: exact on the interval and circle, inner cylinder on the shift."""
    c, r = ball.center, ball.radius
    if isinstance(c, IntervalPoint):
        return IntervalOpen(max(Fraction(0), c.value - r), min(Fraction(1), c.value + r))
    if isinstance(c, CirclePoint):
        return Whole(SpaceId.CIRCLE) if r > HALF else Arc(c, r) if r < HALF else _near_whole_arc(c)
    if isinstance(c, ShiftPoint):
        if r > 3:
            return Whole(SpaceId.SHIFT_SPACE)
        T = shift_pin_radius(r)
        return Cylinder(-T, "".join(str(c[i]) for i in range(-T, T + 1)))
    raise TypeError(f"no ball conversion for {c!r}")


def _near_whole_arc(c: CirclePoint) -> BasicOpen:
    # radius exactly 1/2 misses only the antipode
    q = Fraction(1, 4)
    return OpenUnion((
        Arc(c, q),
        Arc(CirclePoint(c.p + q, c.q, c.alpha), q),
        Arc(CirclePoint(c.p - q, c.q, c.alpha), q),
    ))


# -- images --------------------------------------------------------------

def _image_span_pl(f: PLMap, s: Span):
    pieces = []
    for (x0, y0), (x1, y1) in zip(f.breakpoints, f.breakpoints[1:]):
        part = s.meet(Span(x0, x1, True, True))
        if part.empty:
            continue
        a, b = f.value(part.lo), f.value(part.hi)
        if a <= b:
            pieces.append((a, b, part.lo_closed, part.hi_closed) if a < b else (a, b, True, True))
        else:
            pieces.append((b, a, part.hi_closed, part.lo_closed))
    lo = min(p[0] for p in pieces)
    hi = max(p[1] for p in pieces)
    lc = any(p[0] == lo and p[2] for p in pieces)
    hc = any(p[1] == hi and p[3] for p in pieces)
    if lo < hi and lc == (lo == 0) and hc == (hi == 1):
        return IntervalOpen(lo, hi)
    return Span(lo, hi, lc, hc)


def image_open(f: ExactMap, U: BasicOpen) -> BasicOpen:
    """Exact image ``f(U)``."""
    if f.space != U.space:
        raise SpaceMismatch(f"{f!r} vs open on {U.space}")
    if f.is_identity:
        return U
    if isinstance(U, OpenUnion):
        return OpenUnion(tuple(image_open(f, p) for p in U.parts))
    if isinstance(f, PLMap):
        if isinstance(U, Whole):
            U = Span(Fraction(0), Fraction(1), True, True)
        if isinstance(U, IntervalOpen):
            U = U.as_span()
        return _image_span_pl(f, U)
    if isinstance(U, Whole):
        return U  # shift powers and rotations are onto
    if isinstance(f, ShiftPower) and isinstance(U, Cylinder):
        return Cylinder(U.anchor - f.k, U.word)
    if isinstance(f, RotationOffset) and isinstance(U, Arc):
        return Arc(f.apply(U.center), U.radius)
    if isinstance(f, ProductMap) and isinstance(U, Box):
        return Box(tuple(image_open(g, p) for g, p in zip(f.factors, U.parts)))
    raise TypeError(f"no image rule for {type(f).__name__} on {type(U).__name__}")


# -- intersection --------------------------------------------------------

def _as_span(U):
    if isinstance(U, IntervalOpen):
        return U.as_span()
    if isinstance(U, Whole):
        return Span(Fraction(0), Fraction(1), True, True)
    return U


def intersects(U: BasicOpen, V: BasicOpen) -> bool:
    """Exact test for ``U & V != {}``."""
    if U.space != V.space:
        raise SpaceMismatch(f"{U.space} vs {V.space}")
    if isinstance(U, OpenUnion):
        return any(intersects(p, V) for p in U.parts)
    if isinstance(V, OpenUnion):
        return any(intersects(U, p) for p in V.parts)
    if isinstance(U, Whole) or isinstance(V, Whole):
        other = V if isinstance(U, Whole) else U
        return not (isinstance(other, Span) and other.empty)
    if U.space == SpaceId.UNIT_INTERVAL:
        return not _as_span(U).meet(_as_span(V)).empty
    if isinstance(U, Cylinder):
        fu, fv = U.fixed, V.fixed
        return all(fv[i] == v for i, v in fu.items() if i in fv)
    if isinstance(U, Arc):
        return distance(U.center, V.center) < U.radius + V.radius
    if isinstance(U, Box):
        return all(intersects(a, b) for a, b in zip(U.parts, V.parts))
    raise TypeError(f"no intersection rule for {type(U).__name__}")


def intersection_witness(U: BasicOpen, V: BasicOpen) -> Point | None:
    """A point of ``U & V``, or None when they are disjoint."""
    if not intersects(U, V):
        return None
    if isinstance(U, OpenUnion):
        return next(w for p in U.parts if (w := intersection_witness(p, V)) is not None)
    if isinstance(V, OpenUnion):
        return next(w for p in V.parts if (w := intersection_witness(U, p)) is not None)
    if isinstance(U, Whole):
        U, V = V, U
    if isinstance(V, Whole):
        return some_point(U)
    if U.space == SpaceId.UNIT_INTERVAL:
        return _as_span(U).meet(_as_span(V)).witness()
    if isinstance(U, Cylinder):
        fixed = {**U.fixed, **V.fixed}
        lo, hi = min(fixed), max(fixed)
        L = hi - lo + 2
        cells = ["0"] * L
        for i, v in fixed.items():
            cells[i % L] = str(v)
        return ShiftPoint("".join(cells))
    if isinstance(U, Arc):
        return _arc_meet_point(U, V)
    if isinstance(U, Box):
        return ProductPoint(tuple(intersection_witness(a, b) for a, b in zip(U.parts, V.parts)))
    raise TypeError(f"no witness rule for {type(U).__name__}")


def _arc_meet_point(U: Arc, V: Arc) -> CirclePoint:
    """A point of two overlapping arcs, rational-offset from U's center."""
    if V.contains(U.center):
        return U.center
    if U.contains(V.center):
        return V.center
    t = QAlpha(V.center.p - U.center.p, V.center.q - U.center.q, U.center.alpha).frac()
    if t > HALF:
        t = t - 1
    # lifted overlap is (t - rV, rU) when t > 0, else (-rU, t + rV)
    sign = 1 if t > 0 else -1
    k = 1
    while True:
        s = sign * (U.radius - Fraction(1, 2**k))
        if abs(s - t) < V.radius:
            return CirclePoint(U.center.p + s, U.center.q, U.center.alpha)
        k += 1


def some_point(U: BasicOpen) -> Point:
    if isinstance(U, IntervalOpen):
        return IntervalPoint((U.lo + U.hi) / 2)
    if isinstance(U, Span):
        return U.witness()
    if isinstance(U, Cylinder):
        return U.witness()
    if isinstance(U, Arc):
        return U.center
    if isinstance(U, OpenUnion):
        return some_point(U.parts[0])
    if isinstance(U, Box):
        return ProductPoint(tuple(some_point(p) for p in U.parts))
    if isinstance(U, Whole):
        return {
            SpaceId.UNIT_INTERVAL: IntervalPoint(0),
            SpaceId.SHIFT_SPACE: ShiftPoint("0"),
            SpaceId.CIRCLE: CirclePoint(0),
        }[U.space]
    raise TypeError(type(U).__name__)


# -- nets and bases ------------------------------------------------------

def shift_net_radius(eps: Fraction) -> int:
    """Minimal T >= 0 with tail bound ``2^(1-T) <= eps``."""
    T = 0
    while Fraction(2, 2**T) > eps:
        T += 1
    return T


def epsilon_net(space: SpaceId, eps, alpha=GOLDEN) -> list[Point]:
    """Canonical finite set with every point of ``space`` within ``eps`` of it."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if space == SpaceId.UNIT_INTERVAL:
        N = math.ceil(1 / eps)
        return [IntervalPoint(Fraction(k, N)) for k in range(N + 1)]
    if space == SpaceId.CIRCLE:
        N = max(1, math.ceil(Fraction(1, 2) / eps))
        N = max(N, math.ceil(1 / eps))
        return [CirclePoint(Fraction(k, N), 0, alpha) for k in range(N)]
    if space == SpaceId.SHIFT_SPACE:
        if eps >= 3:
            return [ShiftPoint("0")]
        T = shift_net_radius(eps)
        return shift_words_on(T)
    raise TypeError(f"no net for {space}")


def shift_words_on(T: int, pinned: Cylinder | None = None) -> list[ShiftPoint]:
    """Period-(2T+1) points realising every pattern on coordinates ``[-T, T]``."""
    L = 2 * T + 1
    out = {}
    for bits in itertools.product("01", repeat=L):
        # bits[j] is coordinate j - T, stored at cyclic position (j - T) mod L
        cells = ["0"] * L
        for j, b in enumerate(bits):
            cells[(j - T) % L] = b
        x = ShiftPoint("".join(cells))
        if pinned is None or pinned.contains(x):
            out[x] = None
    return list(out)


def default_basis(space: SpaceId, mesh=Fraction(1, 16), shift_T: int = 2, alpha=GOLDEN) -> list[BasicOpen]:
    """Balls of radius ``mesh`` on a grid of step ``mesh`` (interval, circle); cylinders on ``[-T, T]`` (shift)."""
    h = Fraction(mesh)
    if space == SpaceId.UNIT_INTERVAL:
        N = math.ceil(1 / h)
        return [IntervalOpen(max(Fraction(0), (k - 1) * h), min(Fraction(1), (k + 1) * h)) for k in range(N + 1)]
    if space == SpaceId.CIRCLE:
        N = math.ceil(1 / h)
        return [Arc(CirclePoint(Fraction(k, N), 0, alpha), h) for k in range(N)]
    if space == SpaceId.SHIFT_SPACE:
        return [Cylinder(-shift_T, "".join(w)) for w in itertools.product("01", repeat=2 * shift_T + 1)]
    raise TypeError(f"no basis for {space}")


# -- geometry bounds used by isometry certificates ------------------------

def _shift_weight(i: int) -> Fraction:
    return Fraction(1, 2 ** abs(i))


def span_bound(A: BasicOpen, B: BasicOpen):
    """``(s, strict)``: every ``d(p, q)``, p in A, q in B, is < s (strict) or <= s."""
    space = A.space
    if isinstance(A, Whole) or isinstance(B, Whole):
        return space.diameter, False
    if isinstance(A, Arc) and isinstance(B, Arc):
        s = distance(A.center, B.center) + A.radius + B.radius
        return (s, True) if s <= HALF else (HALF, False)
    if space == SpaceId.UNIT_INTERVAL:
        a, b = _as_span(A), _as_span(B)
        return max(a.hi, b.hi) - min(a.lo, b.lo), False
    if isinstance(A, Cylinder) and isinstance(B, Cylinder):
        fa, fb = A.fixed, B.fixed
        same = sum(_shift_weight(i) for i, v in fa.items() if fb.get(i) == v)
        return 3 - same, False
    return space.diameter, False


def gap_bound(A: BasicOpen, B: BasicOpen):
    """``(g, strict)``: every ``d(p, q)``, p in A, q in B, is > g (strict) or >= g."""
    if isinstance(A, Whole) or isinstance(B, Whole):
        return Fraction(0), False
    if isinstance(A, Arc) and isinstance(B, Arc):
        g = distance(A.center, B.center) - A.radius - B.radius
        return (g, True) if g > 0 else (Fraction(0), False)
    if A.space == SpaceId.UNIT_INTERVAL:
        a, b = _as_span(A), _as_span(B)
        return max(Fraction(0), b.lo - a.hi, a.lo - b.hi), False
    if isinstance(A, Cylinder) and isinstance(B, Cylinder):
        fa, fb = A.fixed, B.fixed
        return sum(_shift_weight(i) for i, v in fa.items() if i in fb and fb[i] != v), False
    return Fraction(0), False


def below(upper, lower) -> bool:
    """True when a quantity bounded by ``upper`` can never reach one bounded by ``lower``."""
    (s, s_strict), (g, g_strict) = upper, lower
    return s < g or (s == g and (s_strict or g_strict))


def diameter(U: BasicOpen):
    return span_bound(U, U)
