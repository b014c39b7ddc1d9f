"""Self-maps of the model spaces in closed algebraic form.

Every variant composes exactly with maps of its own space, and equality is
semantic: ``ShiftPower(0)``, the identity ``PLMap`` and
``RotationOffset(0, 0)`` all compare equal to ``Identity`` of their space.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .alpha import GOLDEN, QuadraticIrrational
from .config import SpaceMismatch
from .spaces import (
    CirclePoint,
    IntervalPoint,
    Point,
    ProductPoint,
    ProductSpace,
    ShiftPoint,
    SpaceId,
)


class ExactMap:
    space: SpaceId | ProductSpace

    def apply(self, x: Point) -> Point:
        raise NotImplementedError

    @property
    def is_identity(self) -> bool:
        raise NotImplementedError

    @property
    def is_isometry(self) -> bool:
        raise NotImplementedError

    @property
    def is_homeomorphism(self) -> bool:
        return True

    def inverse(self) -> ExactMap:
        raise NotImplementedError

    def _key(self):
        raise NotImplementedError

    def key(self):
        return ("id", self.space) if self.is_identity else self._key()

    def __eq__(self, other):
        if not isinstance(other, ExactMap):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __call__(self, x: Point) -> Point:
        return apply(self, x)


@dataclass(frozen=True, eq=False)
class Identity(ExactMap):
    space: SpaceId | ProductSpace

    def apply(self, x):
        return x

    is_identity = True
    is_isometry = True

    def inverse(self):
        return self

    def _key(self):
        return ("id", self.space)

    def __repr__(self):
        return f"Identity({getattr(self.space, 'value', self.space)})"


def _simplify(pts: Sequence[tuple[Fraction, Fraction]]) -> tuple:
    out = [pts[0]]
    for p in pts[1:]:
        if p[0] == out[-1][0]:
            continue
        if len(out) >= 2:
            (x0, y0), (x1, y1) = out[-2], out[-1]
            if (y1 - y0) * (p[0] - x1) == (p[1] - y1) * (x1 - x0):
                out[-1] = p
                continue
        out.append(p)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class PLMap(ExactMap):
    """Continuous piecewise-linear self-map of [0, 1] through ``breakpoints``.

    The breakpoints are ``(x, f(x))`` pairs with x running from 0 to 1;
    collinear interior breakpoints are dropped so the form is canonical.
    """

    breakpoints: tuple

    space = SpaceId.UNIT_INTERVAL

    def __post_init__(self):
        pts = [(Fraction(x), Fraction(y)) for x, y in self.breakpoints]
        if len(pts) < 2 or pts[0][0] != 0 or pts[-1][0] != 1:
            raise ValueError("breakpoints must start at x=0 and end at x=1")
        if any(b[0] <= a[0] for a, b in zip(pts, pts[1:])):
            raise ValueError("breakpoint x-coordinates must increase")
        if any(not 0 <= y <= 1 for _, y in pts):
            raise ValueError("values must lie in [0, 1]")
        object.__setattr__(self, "breakpoints", _simplify(pts))
        object.__setattr__(self, "_xs", tuple(p[0] for p in self.breakpoints))

    @classmethod
    def from_points(cls, *pts) -> PLMap:
        return cls(tuple(pts))

    @property
    def orientation(self) -> str:
        ys = [y for _, y in self.breakpoints]
        if all(b > a for a, b in zip(ys, ys[1:])):
            return "increasing"
        if all(b < a for a, b in zip(ys, ys[1:])):
            return "decreasing"
        return "none"

    @property
    def is_homeomorphism(self) -> bool:
        return self.orientation != "none"

    def value(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        xs = self._xs
        i = bisect.bisect_right(xs, x) - 1
        if i >= len(xs) - 1:
            return self.breakpoints[-1][1]
        (x0, y0), (x1, y1) = self.breakpoints[i], self.breakpoints[i + 1]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def apply(self, x):
        if not isinstance(x, IntervalPoint):
            raise SpaceMismatch(f"PLMap cannot act on {x!r}")
        return IntervalPoint(self.value(x.value))

    @property
    def is_identity(self) -> bool:
        return self.breakpoints == ((0, 0), (1, 1))

    @property
    def is_isometry(self) -> bool:
        return self.breakpoints in (((0, 0), (1, 1)), ((0, 1), (1, 0)))

    def slopes(self) -> list[Fraction]:
        return [(y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1) in zip(self.breakpoints, self.breakpoints[1:])]

    def inverse(self) -> PLMap:
        o = self.orientation
        if o == "none":
            raise ValueError("non-monotone PLMap has no inverse")
        swapped = [(y, x) for x, y in self.breakpoints]
        if o == "decreasing":
            swapped.reverse()
        return PLMap(tuple(swapped))

    def fixed_set(self) -> list[tuple[Fraction, Fraction]]:
        """Fixed points as closed intervals ``(a, b)``; isolated points have a == b."""
        out = []
        for (x0, y0), (x1, y1) in zip(self.breakpoints, self.breakpoints[1:]):
            h0, h1 = y0 - x0, y1 - x1
            if h0 == 0 and h1 == 0:
                piece = (x0, x1)
            elif h0 == 0:
                piece = (x0, x0)
            elif h1 == 0:
                piece = (x1, x1)
            elif (h0 > 0) != (h1 > 0):
                r = x0 + h0 * (x1 - x0) / (h0 - h1)
                piece = (r, r)
            else:
                continue
            if out and out[-1][1] >= piece[0]:
                out[-1] = (out[-1][0], max(out[-1][1], piece[1]))
            else:
                out.append(piece)
        return out

    def _key(self):
        return ("pl", self.breakpoints)

    def __repr__(self):
        inner = ", ".join(f"({x},{y})" for x, y in self.breakpoints)
        return f"PLMap[{inner}]"


@dataclass(frozen=True, eq=False)
class ShiftPower(ExactMap):
    """``sigma^k`` where ``(sigma x)_i = x_(i+1)``."""

    k: int

    space = SpaceId.SHIFT_SPACE

    def apply(self, x):
        if not isinstance(x, ShiftPoint):
            raise SpaceMismatch(f"ShiftPower cannot act on {x!r}")
        L = x.period
        s = self.k % L
        return ShiftPoint(x.word[s:] + x.word[:s])

    @property
    def is_identity(self):
        return self.k == 0

    @property
    def is_isometry(self):
        # sigma moves mass between coordinate weights, so only k = 0 preserves d
        return self.k == 0

    def inverse(self):
        return ShiftPower(-self.k)

    def _key(self):
        return ("shift", self.k)

    def __repr__(self):
        return f"ShiftPower({self.k})"


@dataclass(frozen=True, eq=False)
class RotationOffset(ExactMap):
    """``theta -> theta + p + q*alpha (mod 1)``."""

    p: Fraction
    q: int = 0
    alpha: QuadraticIrrational = GOLDEN

    space = SpaceId.CIRCLE

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p) % 1)

    def apply(self, x):
        if not isinstance(x, CirclePoint) or x.alpha != self.alpha:
            raise SpaceMismatch(f"RotationOffset cannot act on {x!r}")
        return CirclePoint(x.p + self.p, x.q + self.q, self.alpha)

    @property
    def is_identity(self):
        return self.p == 0 and self.q == 0

    is_isometry = True

    def inverse(self):
        return RotationOffset(-self.p, -self.q, self.alpha)

    def _key(self):
        return ("rot", self.p, self.q, self.alpha)

    def __repr__(self):
        return f"RotationOffset({self.p}, {self.q})"


@dataclass(frozen=True, eq=False)
class ProductMap(ExactMap):
    """Coordinatewise map ``f_1 x ... x f_m`` on a product space."""

    factors: tuple

    def __post_init__(self):
        spaces = {f.space for f in self.factors}
        if len(spaces) != 1:
            raise SpaceMismatch("product factors must share one space")

    @property
    def space(self):
        return ProductSpace(self.factors[0].space, len(self.factors))

    def apply(self, x):
        if not isinstance(x, ProductPoint) or len(x.coords) != len(self.factors):
            raise SpaceMismatch(f"ProductMap cannot act on {x!r}")
        return ProductPoint(tuple(apply(f, c) for f, c in zip(self.factors, x.coords)))

    @property
    def is_identity(self):
        return all(f.is_identity for f in self.factors)

    @property
    def is_isometry(self):
        return all(f.is_isometry for f in self.factors)

    @property
    def is_homeomorphism(self):
        return all(f.is_homeomorphism for f in self.factors)

    def inverse(self):
        return ProductMap(tuple(f.inverse() for f in self.factors))

    def _key(self):
        return ("prod", tuple(f.key() for f in self.factors))


def apply(f: ExactMap, x: Point) -> Point:
    if f.space != x.space:
        raise SpaceMismatch(f"{f!r} acts on {f.space}, point lives in {x.space}")
    return f.apply(x)


def _compose_pl(outer: PLMap, inner: PLMap) -> PLMap:
    xs = set(inner._xs)
    ux = outer._xs
    for (x0, y0), (x1, y1) in zip(inner.breakpoints, inner.breakpoints[1:]):
        if y0 == y1:
            continue
        lo, hi = min(y0, y1), max(y0, y1)
        i = bisect.bisect_right(ux, lo)
        while i < len(ux) and ux[i] < hi:
            u = ux[i]
            xs.add(x0 + (u - y0) * (x1 - x0) / (y1 - y0))
            i += 1
    return PLMap(tuple((x, outer.value(inner.value(x))) for x in sorted(xs)))


def compose(outer: ExactMap, inner: ExactMap) -> ExactMap:
    """``outer o inner``: apply ``inner`` first."""
    if outer.space != inner.space:
        raise SpaceMismatch(f"cannot compose maps on {outer.space} and {inner.space}")
    if isinstance(inner, Identity) or inner.is_identity:
        return outer
    if isinstance(outer, Identity) or outer.is_identity:
        return inner
    if isinstance(outer, PLMap) and isinstance(inner, PLMap):
        return _compose_pl(outer, inner)
    if isinstance(outer, ShiftPower) and isinstance(inner, ShiftPower):
        return ShiftPower(outer.k + inner.k)
    if isinstance(outer, RotationOffset) and isinstance(inner, RotationOffset):
        if outer.alpha != inner.alpha:
            raise SpaceMismatch("rotations over different alpha")
        return RotationOffset(outer.p + inner.p, outer.q + inner.q, outer.alpha)
    if isinstance(outer, ProductMap) and isinstance(inner, ProductMap):
        return ProductMap(tuple(compose(a, b) for a, b in zip(outer.factors, inner.factors)))
    raise SpaceMismatch(f"cannot compose {type(outer).__name__} with {type(inner).__name__}")


def identity_of(space) -> Identity:
    return Identity(space)


PL_IDENTITY = PLMap(((0, 0), (1, 1)))
