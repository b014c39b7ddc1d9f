"""Lossless JSON encoding of exact values, opens, measures and verdicts.

Rationals become ``{"$type": "Q", "num": "...", "den": "..."}`` so nothing
passes through decimal floats.  Every other tagged object carries ``$type``.
"""

from __future__ import annotations

from fractions import Fraction

from .alpha import GOLDEN, QAlpha
from .hitting import HittingSet
from .hyperspace import FiniteCompact, VietorisOpen
from .measures import AtomicMeasure, MeasureOpen
from .spaces import CirclePoint, IntervalPoint, ProductPoint, ShiftPoint, SpaceId
from .topology import Arc, Box, Cylinder, IntervalOpen, OpenUnion, Span, Whole
from .verdict import Outcome, Verdict

TAG = "$type"
ALPHAS = {GOLDEN.label: GOLDEN}


class CodecError(ValueError):
    pass


def _alpha_name(a) -> str:
    if a.label not in ALPHAS:
        raise CodecError(f"cannot encode circle parameter {a}")
    return a.label


def encode(obj):
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return {TAG: "Q", "num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, float):
        return obj
    if isinstance(obj, QAlpha):
        return {TAG: "QAlpha", "a": encode(obj.a), "b": encode(obj.b), "alpha": _alpha_name(obj.alpha)}
    if isinstance(obj, SpaceId):
        return {TAG: "Space", "name": obj.name}
    if isinstance(obj, IntervalPoint):
        return {TAG: "IntervalPoint", "x": encode(obj.value)}
    if isinstance(obj, ShiftPoint):
        return {TAG: "ShiftPoint", "word": obj.word}
    if isinstance(obj, CirclePoint):
        return {TAG: "CirclePoint", "p": encode(obj.p), "q": obj.q, "alpha": _alpha_name(obj.alpha)}
    if isinstance(obj, ProductPoint):
        return {TAG: "ProductPoint", "coords": [encode(c) for c in obj.coords]}
    if isinstance(obj, Whole):
        return {TAG: "Whole", "space": encode(obj.space)}
    if isinstance(obj, Span):
        return {TAG: "Span", "lo": encode(obj.lo), "hi": encode(obj.hi), "lo_closed": obj.lo_closed, "hi_closed": obj.hi_closed}
    if isinstance(obj, IntervalOpen):
        return {TAG: "IntervalOpen", "lo": encode(obj.lo), "hi": encode(obj.hi)}
    if isinstance(obj, Cylinder):
        return {TAG: "Cylinder", "anchor": obj.anchor, "word": obj.word}
    if isinstance(obj, Arc):
        return {TAG: "Arc", "center": encode(obj.center), "radius": encode(obj.radius)}
    if isinstance(obj, OpenUnion):
        return {TAG: "OpenUnion", "parts": [encode(p) for p in obj.parts]}
    if isinstance(obj, Box):
        return {TAG: "Box", "parts": [encode(p) for p in obj.parts]}
    if isinstance(obj, FiniteCompact):
        return {TAG: "FiniteCompact", "points": [encode(p) for p in obj]}
    if isinstance(obj, VietorisOpen):
        return {TAG: "VietorisOpen", "parts": [encode(p) for p in obj.parts]}
    if isinstance(obj, AtomicMeasure):
        return {TAG: "AtomicMeasure", "atoms": [[encode(x), encode(w)] for x, w in obj.atoms]}
    if isinstance(obj, MeasureOpen):
        return {TAG: "MeasureOpen", "conjuncts": [[encode(b), encode(t)] for b, t in obj.conjuncts]}
    if isinstance(obj, HittingSet):
        return {TAG: "HittingSet", "horizon": obj.horizon, "members": list(obj.members), "kind": obj.kind}
    if isinstance(obj, Verdict):
        return {
            TAG: "Verdict",
            "outcome": obj.outcome.value,
            "witness": encode(obj.witness),
            "scale": encode(obj.scale),
            "components": {k: encode(v) for k, v in obj.components.items()},
        }
    if isinstance(obj, dict):
        if TAG in obj:
            raise CodecError(f"plain dict may not use the key {TAG!r}")
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((encode(v) for v in obj), key=repr)
    raise CodecError(f"cannot encode {type(obj).__name__}")


def _q(d) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


def _alpha(name):
    try:
        return ALPHAS[name]
    except KeyError:
        raise CodecError(f"unknown circle parameter {name!r}") from None


_DECODERS = {
    "Q": _q,
    "QAlpha": lambda d: QAlpha(decode(d["a"]), decode(d["b"]), _alpha(d["alpha"])),
    "Space": lambda d: SpaceId[d["name"]],
    "IntervalPoint": lambda d: IntervalPoint(decode(d["x"])),
    "ShiftPoint": lambda d: ShiftPoint(d["word"]),
    "CirclePoint": lambda d: CirclePoint(decode(d["p"]), d["q"], _alpha(d["alpha"])),
    "ProductPoint": lambda d: ProductPoint(tuple(decode(c) for c in d["coords"])),
    "Whole": lambda d: Whole(decode(d["space"])),
    "Span": lambda d: Span(decode(d["lo"]), decode(d["hi"]), d["lo_closed"], d["hi_closed"]),
    "IntervalOpen": lambda d: IntervalOpen(decode(d["lo"]), decode(d["hi"])),
    "Cylinder": lambda d: Cylinder(d["anchor"], d["word"]),
    "Arc": lambda d: Arc(decode(d["center"]), decode(d["radius"])),
    "OpenUnion": lambda d: OpenUnion(tuple(decode(p) for p in d["parts"])),
    "Box": lambda d: Box(tuple(decode(p) for p in d["parts"])),
    "FiniteCompact": lambda d: FiniteCompact(decode(p) for p in d["points"]),
    "VietorisOpen": lambda d: VietorisOpen([decode(p) for p in d["parts"]]),
    "AtomicMeasure": lambda d: AtomicMeasure([(decode(x), decode(w)) for x, w in d["atoms"]]),
    "MeasureOpen": lambda d: MeasureOpen([(decode(b), decode(t)) for b, t in d["conjuncts"]]),
    "HittingSet": lambda d: HittingSet(d["horizon"], tuple(d["members"]), d["kind"]),
    "Verdict": lambda d: Verdict(
        Outcome(d["outcome"]),
        decode(d["witness"]),
        decode(d["scale"]),
        {k: decode(v) for k, v in d["components"].items()},
    ),
}


def decode(obj):
    if isinstance(obj, list):
        return [decode(v) for v in obj]
    if isinstance(obj, dict):
        tag = obj.get(TAG)
        if tag is None:
            return {k: decode(v) for k, v in obj.items()}
        try:
            fn = _DECODERS[tag]
        except KeyError:
            raise CodecError(f"unknown tag {tag!r}") from None
        try:
            return fn(obj)
        except (KeyError, TypeError) as exc:
            raise CodecError(f"malformed {tag}: {exc}") from exc
    return obj
