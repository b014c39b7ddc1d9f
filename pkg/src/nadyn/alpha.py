"""Exact arithmetic in Q(alpha) for a fixed quadratic irrational alpha.

Circle angles are numbers ``a + b*alpha`` with rational ``a`` and ``b``.
Sums, differences and rational multiples stay exact.  Order comparisons
are decided from a rational enclosure of alpha that is refined until the
answer is determined; since alpha is irrational, ``a + b*alpha`` with
``b != 0`` is never rational, so refinement always terminates in
principle and the cap exists only to bound cost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .config import PrecisionError, settings


@dataclass(frozen=True)
class QuadraticIrrational:
    """The real number ``(a + b*sqrt(n)) / c``."""

    a: int
    b: int
    n: int
    c: int
    label: str = ""

    def __post_init__(self):
        r = math.isqrt(self.n)
        if self.n <= 0 or r * r == self.n:
            raise ValueError("n must be a positive non-square")
        if self.b == 0 or self.c <= 0:
            raise ValueError("need b != 0 and c > 0")

    def enclose(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational bounds ``lo < value < hi`` with ``hi - lo <= 2**-bits``."""
        # widen sqrt's enclosure so the final width fits
        extra = abs(self.b).bit_length() + 1
        scale = 1 << (bits + extra)
        s = math.isqrt(self.n * scale * scale)
        lo_r, hi_r = Fraction(s, scale), Fraction(s + 1, scale)
        ends = sorted(Fraction(self.a + self.b * e, self.c) for e in (lo_r, hi_r))
        return ends[0], ends[1]

    def __float__(self):
        return (self.a + self.b * math.sqrt(self.n)) / self.c

    def __str__(self):
        return self.label or f"({self.a}+{self.b}*sqrt({self.n}))/{self.c}"


GOLDEN = QuadraticIrrational(-1, 1, 5, 2, label="(sqrt(5)-1)/2")


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True, eq=False)
class QAlpha:
    """The exact number ``a + b*alpha``."""

    a: Fraction
    b: Fraction = Fraction(0)
    alpha: QuadraticIrrational = GOLDEN

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def enclose(self, bits: int | None = None) -> tuple[Fraction, Fraction]:
        if self.b == 0:
            return self.a, self.a
        lo, hi = self.alpha.enclose(settings.precision_bits if bits is None else bits)
        ends = sorted((self.a + self.b * lo, self.a + self.b * hi))
        return ends[0], ends[1]

    def _decide(self, test):
        """Refine until ``test(lo, hi)`` returns a boolean."""
        bits = settings.precision_bits
        while bits <= settings.precision_cap_bits:
            lo, hi = self.enclose(bits)
            answer = test(lo, hi)
            if answer is not None:
                return answer
            bits *= 2
        raise PrecisionError(f"sign of {self} undecided at {settings.precision_cap_bits} bits")

    def sign(self) -> int:
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)

        def test(lo, hi):
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            return None

        return self._decide(test)

    def floor(self) -> int:
        if self.b == 0:
            return math.floor(self.a)

        def test(lo, hi):
            f = math.floor(lo)
            return f if math.floor(hi) == f else None

        return self._decide(test)

    def frac(self) -> QAlpha:
        return self - self.floor()

    def _coerce(self, other) -> QAlpha | None:
        if isinstance(other, QAlpha):
            if other.alpha != self.alpha:
                raise ValueError("mixing numbers over different alpha values")
            return other
        if isinstance(other, (int, Fraction)):
            return QAlpha(Fraction(other), Fraction(0), self.alpha)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QAlpha(self.a + o.a, self.b + o.b, self.alpha)

    __radd__ = __add__

    def __neg__(self):
        return QAlpha(-self.a, -self.b, self.alpha)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QAlpha(self.a - o.a, self.b - o.b, self.alpha)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QAlpha(self.a * other, self.b * other, self.alpha)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QAlpha(self.a / other, self.b / other, self.alpha)
        return NotImplemented

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        return (self - o).sign()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.alpha))

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * float(self.alpha)

    def __repr__(self):
        if self.b == 0:
            return f"QAlpha({self.a})"
        return f"QAlpha({self.a} + {self.b}*alpha)"
