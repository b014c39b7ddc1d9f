"""The three model spaces, their exact points, and their metrics.

* ``UnitInterval``: rational points of [0, 1] with ``|x - y|``.
* ``ShiftSpace``: periodic bi-infinite binary sequences with the weighted
  metric ``sum_i |x_i - y_i| 2^-|i|`` (diameter 3).
* ``Circle``: angles ``p + q*alpha (mod 1)`` with the arc-length metric
  on a circle of circumference 1 (diameter 1/2).

Products ``X^m`` carry the max metric.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .alpha import GOLDEN, QAlpha, QuadraticIrrational
from .config import SpaceMismatch


class SpaceId(enum.Enum):
    UNIT_INTERVAL = "UnitInterval"
    SHIFT_SPACE = "ShiftSpace"
    CIRCLE = "Circle"

    @property
    def diameter(self) -> Fraction:
        return _DIAMETERS[self]


_DIAMETERS = {
    SpaceId.UNIT_INTERVAL: Fraction(1),
    SpaceId.SHIFT_SPACE: Fraction(3),
    SpaceId.CIRCLE: Fraction(1, 2),
}


@dataclass(frozen=True)
class ProductSpace:
    base: SpaceId
    m: int

    @property
    def diameter(self) -> Fraction:
        return self.base.diameter


class Point:
    space: SpaceId


@dataclass(frozen=True)
class IntervalPoint(Point):
    value: Fraction

    def __post_init__(self):
        v = Fraction(self.value)
        if not 0 <= v <= 1:
            raise ValueError(f"{v} is not in [0, 1]")
        object.__setattr__(self, "value", v)

    space = SpaceId.UNIT_INTERVAL

    def __repr__(self):
        return f"IntervalPoint({self.value})"


def minimal_period_word(word: str) -> str:
    """Shortest word generating the same bi-infinite periodic sequence."""
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word == word[p:] + word[:p]:
            return word[:p]
    return word


@dataclass(frozen=True)
class ShiftPoint(Point):
    """The sequence with ``x_i = word[i mod len(word)]`` for every integer i."""

    word: str

    def __post_init__(self):
        if not self.word or set(self.word) - {"0", "1"}:
            raise ValueError(f"bad period word {self.word!r}")
        object.__setattr__(self, "word", minimal_period_word(self.word))

    space = SpaceId.SHIFT_SPACE

    def __getitem__(self, i: int) -> int:
        return int(self.word[i % len(self.word)])

    @property
    def period(self) -> int:
        return len(self.word)

    def __repr__(self):
        return f"ShiftPoint({self.word!r})"


@dataclass(frozen=True)
class CirclePoint(Point):
    """Angle fraction ``(p + q*alpha) mod 1``; ``p`` is kept reduced into [0, 1)."""

    p: Fraction
    q: int = 0
    alpha: QuadraticIrrational = GOLDEN

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p) % 1)

    space = SpaceId.CIRCLE

    @property
    def angle(self) -> QAlpha:
        return QAlpha(self.p, self.q, self.alpha).frac()

    def __repr__(self):
        return f"CirclePoint({self.p}, {self.q})"


@dataclass(frozen=True)
class ProductPoint(Point):
    coords: tuple

    @property
    def space(self):
        return ProductSpace(self.coords[0].space, len(self.coords))


def space_of(x: Point):
    return x.space


def _shift_distance(x: ShiftPoint, y: ShiftPoint) -> Fraction:
    # residue r mod L collects weight (2^(L-r) + 2^r) / (2^L - 1)
    L = math.lcm(x.period, y.period)
    num = 0
    for r in range(L):
        if x[r] != y[r]:
            num += (1 << (L - r)) + (1 << r)
    return Fraction(num, (1 << L) - 1)


def arc_length(t: QAlpha) -> QAlpha:
    """Arc distance from 0 of the angle fraction ``t``."""
    f = t.frac()
    return f if f <= Fraction(1, 2) else 1 - f


def distance(x: Point, y: Point):
    """Exact distance: a ``Fraction``, or a ``QAlpha`` on the circle."""
    if x.space != y.space:
        raise SpaceMismatch(f"{x.space} vs {y.space}")
    if isinstance(x, IntervalPoint):
        return abs(x.value - y.value)
    if isinstance(x, ShiftPoint):
        return _shift_distance(x, y)
    if isinstance(x, CirclePoint):
        if x.alpha != y.alpha:
            raise SpaceMismatch("circle points over different alpha")
        return arc_length(QAlpha(x.p - y.p, x.q - y.q, x.alpha))
    if isinstance(x, ProductPoint):
        return max(distance(a, b) for a, b in zip(x.coords, y.coords))
    raise TypeError(f"unknown point type {type(x).__name__}")


def shift_distance_enclosure(x: ShiftPoint, y: ShiftPoint, T: int) -> tuple[Fraction, Fraction]:
    """Partial sum over ``|i| <= T`` and that sum plus the tail bound ``2^(1-T)``."""
    s = sum(Fraction(abs(x[i] - y[i]), 2 ** abs(i)) for i in range(-T, T + 1))
    return s, s + Fraction(2, 2**T)
