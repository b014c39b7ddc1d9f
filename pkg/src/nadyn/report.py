"""Analysis configs, JSON reports and witness re-validation."""

from __future__ import annotations

import contextlib
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

import jsonschema

from . import __version__
from .checkers import (
    banks_configuration,
    check_banks,
    check_collective_sensitive,
    check_dense_periodic,
    check_dense_small_periodic,
    check_devaney,
    check_multi_sensitive,
    check_sensitive,
    check_sensitivity_variant,
    check_totally_transitive,
    check_transitive,
    check_weak_mixing,
    replay_verdict,
    replay_witness,
)
from .codec import CodecError, decode, encode
from .config import NadynError, settings
from .fixtures import FIXTURE_NAMES, INTERLEAVED_PAIR, build_fixture
from .hitting import classify, prefix_density, sensitivity_times, transitivity_times
from .hyperspace import VietorisOpen, default_seeds, hyper_transitivity_times, hyper_witness
from .measures import MeasureOpen, measure_seeds, measure_transitivity_times, measure_witness
from .spaces import CirclePoint, IntervalPoint, ShiftPoint, SpaceId
from .topology import Cylinder, IntervalOpen, default_basis, epsilon_net
from .verdict import Verdict

METRICS = {
    SpaceId.UNIT_INTERVAL.name: "|x - y| on [0, 1]",
    SpaceId.SHIFT_SPACE.name: "sum over i in Z of 2^-|i| |x_i - y_i| (diameter 3)",
    SpaceId.CIRCLE.name: "arc length on the circle of circumference 1 (diameter 1/2)",
}

CLASSES = ("cofinite", "syndetic", "thick", "upper-density")


class ReportError(NadynError):
    """A report could not be produced or read."""


@dataclass
class AnalysisConfig:
    fixture: str
    property: str
    params: dict = field(default_factory=dict)
    fixture_params: dict = field(default_factory=dict)
    out: str | None = None

    def __post_init__(self):
        if self.fixture not in FIXTURE_NAMES:
            raise ReportError(f"unknown fixture {self.fixture!r}")
        if self.property not in PROPERTIES:
            raise ReportError(f"unknown property {self.property!r}; known: {', '.join(PROPERTIES)}")
        for k, v in self.params.items():
            if isinstance(v, (int, Fraction)) and not isinstance(v, bool) and v <= 0:
                raise ReportError(f"parameter {k} must be positive")
        H = self.params.get("H", settings.horizon)
        if H > settings.max_horizon:
            raise ReportError(f"horizon {H} exceeds the cap {settings.max_horizon}")

    def echo(self) -> dict:
        return {
            "fixture": self.fixture,
            "fixture_params": encode(self.fixture_params),
            "property": self.property,
            "params": encode(self.params),
        }

    @classmethod
    def from_echo(cls, d: dict) -> AnalysisConfig:
        return cls(
            fixture=d["fixture"],
            property=d["property"],
            params=decode(d["params"]),
            fixture_params=decode(d["fixture_params"]),
        )


# -- standard inputs --------------------------------------------------------

def standard_opens(fixture: str, space):
    """Three nonempty opens used when a property needs explicit opens."""
    if fixture == "shift-interleaved":
        return [*INTERLEAVED_PAIR, Cylinder(0, "01")]
    if space == SpaceId.SHIFT_SPACE:
        return [Cylinder(0, "00"), Cylinder(0, "11"), Cylinder(0, "01")]
    if space == SpaceId.UNIT_INTERVAL:
        return [IntervalOpen(0, Fraction(1, 4)), IntervalOpen(Fraction(3, 8), Fraction(5, 8)), IntervalOpen(Fraction(3, 4), 1)]
    opens, _ = banks_configuration(CirclePoint(0), CirclePoint(Fraction(1, 3)), CirclePoint(Fraction(2, 3)))
    return list(opens)


def standard_points(space):
    if space == SpaceId.SHIFT_SPACE:
        return [ShiftPoint("0"), ShiftPoint("01")]
    if space == SpaceId.UNIT_INTERVAL:
        return [IntervalPoint(Fraction(1, 4)), IntervalPoint(Fraction(3, 4))]
    return [CirclePoint(0), CirclePoint(Fraction(1, 2))]


def _p(params, key, default):
    v = params.get(key, default)
    return Fraction(v) if isinstance(v, (int, Fraction)) and not isinstance(v, bool) and key not in _INT_KEYS else v


_INT_KEYS = {"H", "p", "a", "N", "k_max", "n_max", "K", "depth", "m", "max_atoms", "shift_T"}


class _Ctx:
    def __init__(self, cfg: AnalysisConfig, system):
        self.cfg, self.system, self.space = cfg, system, system.space
        p = cfg.params
        self.H = int(p.get("H", settings.horizon))
        self.mesh = _p(p, "mesh", Fraction(1, 8))
        self.net_eps = _p(p, "net_eps", self.mesh)
        self.delta = _p(p, "delta", Fraction(1, 8))
        self.opens = standard_opens(cfg.fixture, self.space)

    @property
    def basis(self):
        return default_basis(self.space, self.mesh, int(self.cfg.params.get("shift_T", 2)))

    def class_params(self):
        p = self.cfg.params
        prop = p.get("classify", "thick")
        if prop not in CLASSES:
            raise ReportError(f"unknown classification {prop!r}")
        keys = {"cofinite": ("N",), "syndetic": ("a",), "thick": ("p",), "upper-density": ("rho",)}[prop]
        defaults = {"a": 10, "p": 2, "rho": Fraction(1, 10)}
        return prop, {k: p.get(k, defaults.get(k)) for k in keys if k in p or k in defaults}


def _variant(ctx):
    p = ctx.cfg.params
    extra = {k: p[k] for k in ("a", "p", "rho", "N") if k in p}
    return check_sensitivity_variant(ctx.system, p.get("variant", "thick"), ctx.delta, ctx.net_eps, ctx.H, **extra)


def _classified(kind):
    def run(ctx):
        U, V = ctx.opens[0], ctx.opens[1]
        if kind == "transitivity":
            hs = transitivity_times(ctx.system, U, V, ctx.H)
        else:
            hs = sensitivity_times(ctx.system, U, ctx.delta, ctx.H, ctx.net_eps)
        prop, params = ctx.class_params()
        return None, {"hitting_set": hs, "class": classify(hs, prop, **params)}

    return run


def _induced(kind):
    def run(ctx):
        U, V = ctx.opens[0], ctx.opens[1]
        net = epsilon_net(ctx.space, ctx.net_eps)
        p = ctx.cfg.params
        if kind == "measure":
            t = _p(p, "threshold", Fraction(2, 5))
            O1, O2 = MeasureOpen(U, t), MeasureOpen(V, t)
            seeds = measure_seeds(net, O1, int(p.get("max_atoms", 2)))
            hs = measure_transitivity_times(ctx.system, O1, O2, ctx.H, seeds)
            wit = measure_witness(ctx.system, O1, O2, hs.members[0], seeds) if hs else None
        else:
            O1, O2 = VietorisOpen([U]), VietorisOpen([V])
            seeds = default_seeds(net, O1, int(p.get("max_atoms", 2)))
            hs = hyper_transitivity_times(ctx.system, O1, O2, ctx.H, seeds)
            wit = hyper_witness(ctx.system, O1, O2, hs.members[0], seeds) if hs else None
        scale = {"H": ctx.H, "seeds": len(seeds)}
        v = Verdict.certified(wit) if wit else Verdict.inconclusive(scale)
        return v, {"hitting_set": hs}

    return run


PROPERTIES = {
    "transitive": lambda c: (check_transitive(c.system, c.basis, c.H), {}),
    "weak-mixing": lambda c: (check_weak_mixing(c.system, [(c.opens[0], c.opens[1]), (c.opens[0], c.opens[2])], c.H), {}),
    "banks": lambda c: (check_banks(c.system, *c.opens[:3], c.H), {}),
    "sensitive": lambda c: (check_sensitive(c.system, c.delta, c.net_eps, c.H), {}),
    "sensitivity-variant": lambda c: (_variant(c), {}),
    "multi-sensitive": lambda c: (check_multi_sensitive(c.system, c.opens[:2], c.delta, c.H), {}),
    "collective-sensitive": lambda c: (
        check_collective_sensitive(c.system, standard_points(c.space), _p(c.cfg.params, "eps", Fraction(1, 2)), c.delta, c.H),
        {},
    ),
    "dense-periodic": lambda c: (
        check_dense_periodic(c.system, c.net_eps, int(c.cfg.params.get("n_max", 32)), int(c.cfg.params.get("K", 4))),
        {},
    ),
    "dense-small-periodic": lambda c: (
        check_dense_small_periodic(c.system, c.basis, int(c.cfg.params.get("K", 4)), int(c.cfg.params.get("depth", 8))),
        {},
    ),
    "devaney": lambda c: (
        check_devaney(c.system, c.basis, c.delta, c.net_eps, c.H, int(c.cfg.params.get("n_max", 32)), int(c.cfg.params.get("K", 4))),
        {},
    ),
    "totally-transitive": lambda c: (
        check_totally_transitive(c.system, int(c.cfg.params.get("k_max", 2)), c.basis, c.H),
        {},
    ),
    "transitivity-classify": _classified("transitivity"),
    "sensitivity-classify": _classified("sensitivity"),
    "measure-transitivity": _induced("measure"),
    "hyper-transitivity": _induced("hyper"),
}


@contextlib.contextmanager
def _precision(bits):
    old = settings.precision_bits
    if bits is not None:
        settings.precision_bits = int(bits)
    try:
        yield
    finally:
        settings.precision_bits = old


def _class_entry(cv):
    return {"property": cv.property, "label": cv.label, "params": cv.params, "witness": cv.witness}


def run_analysis(cfg: AnalysisConfig, precision_bits: int | None = None) -> dict:
    """Run the configured checker and return the report as a JSON-ready dict."""
    with _precision(precision_bits):
        t0 = time.perf_counter()
        try:
            system = build_fixture(cfg.fixture, **cfg.fixture_params)
            verdict, extra = PROPERTIES[cfg.property](_Ctx(cfg, system))
        except NadynError as exc:
            raise ReportError(f"{cfg.fixture}/{cfg.property}: {exc}") from exc
        elapsed = time.perf_counter() - t0
        bits = settings.precision_bits
    hs = extra.get("hitting_set")
    cv = extra.get("class")
    report = {
        "artifact": {"name": "nadyn", "version": __version__},
        "config": cfg.echo(),
        "metric": METRICS[system.space.name] if isinstance(system.space, SpaceId) else "product of the factor metrics",
        "precision_bits": bits,
        "verdict": encode(verdict),
        "classification": encode(_class_entry(cv)) if cv else None,
        "hitting_sets": [encode(hs)] if hs is not None else [],
        "profiles": [encode(prefix_density(hs))] if hs is not None else [],
        "timing": {"seconds": elapsed},
    }
    validate_report(report)
    if cfg.out:
        write_report(report, cfg.out)
    return report


def write_report(report: dict, path) -> None:
    Path(path).write_text(json.dumps(report, indent=1, sort_keys=True) + "\n")


def deterministic_part(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing"}


def report_schema() -> dict:
    return json.loads(resources.files("nadyn").joinpath("report_schema.json").read_text())


def validate_report(report: dict) -> None:
    try:
        jsonschema.validate(report, report_schema())
    except jsonschema.ValidationError as exc:
        raise ReportError(f"report does not match the schema: {exc.message}") from exc


def load_report(path) -> dict:
    try:
        report = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ReportError(f"cannot read report {path}: {exc}") from exc
    validate_report(report)
    return report


def _recheck_hitting_set(cfg, system, hs, cls) -> bool:
    ctx = _Ctx(cfg, system)
    if cfg.property in ("transitivity-classify", "sensitivity-classify"):
        _, extra = PROPERTIES[cfg.property](ctx)
        fresh = extra["hitting_set"]
        if fresh.members != hs.members or fresh.horizon != hs.horizon:
            return False
        return cls is None or _class_entry(extra["class"])["label"] == cls["label"]
    return True


def verify(report) -> bool:
    """Replay every witness of a report (a dict or a path); True iff all re-validate."""
    if not isinstance(report, dict):
        report = load_report(report)
    else:
        validate_report(report)
    try:
        cfg = AnalysisConfig.from_echo(report["config"])
        verdict = decode(report["verdict"]) if report["verdict"] is not None else None
        hitting = [decode(h) for h in report["hitting_sets"]]
        cls = decode(report["classification"]) if report["classification"] else None
    except (CodecError, KeyError, TypeError, ValueError) as exc:
        raise ReportError(f"malformed report: {exc}") from exc
    with _precision(report.get("precision_bits")):
        system = build_fixture(cfg.fixture, **cfg.fixture_params)
        try:
            ok = verdict is None or replay_verdict(system, verdict)
            for hs in hitting:
                ok = ok and _recheck_hitting_set(cfg, system, hs, cls)
        except (NadynError, KeyError, TypeError, ValueError, AttributeError):
            return False
    return bool(ok)


__all__ = [
    "AnalysisConfig",
    "PROPERTIES",
    "ReportError",
    "deterministic_part",
    "load_report",
    "replay_witness",
    "run_analysis",
    "validate_report",
    "verify",
    "write_report",
]
