"""Exact finite-horizon analysis of non-autonomous discrete dynamical systems."""

__version__ = "0.1.0"

from .config import FixtureError, HorizonError, NadynError, PrecisionError, SpaceMismatch, settings
from .fixtures import FIXTURE_NAMES, build_fixture, list_fixtures
from .spaces import CirclePoint, IntervalPoint, ShiftPoint, SpaceId, distance
from .system import NASystem, iterate, kth_iterate_system, orbit_map, segment
from .verdict import Outcome, Verdict

__all__ = [
    "FIXTURE_NAMES",
    "CirclePoint",
    "FixtureError",
    "HorizonError",
    "IntervalPoint",
    "NASystem",
    "NadynError",
    "Outcome",
    "PrecisionError",
    "ShiftPoint",
    "SpaceId",
    "SpaceMismatch",
    "Verdict",
    "build_fixture",
    "distance",
    "iterate",
    "kth_iterate_system",
    "list_fixtures",
    "orbit_map",
    "segment",
    "settings",
]
