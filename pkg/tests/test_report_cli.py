import copy
import json
from fractions import Fraction

import pytest

from nadyn import __version__
from nadyn.cli import main
from nadyn.codec import CodecError, decode, encode
from nadyn.hitting import HittingSet
from nadyn.hyperspace import FiniteCompact, VietorisOpen
from nadyn.measures import AtomicMeasure, MeasureOpen
from nadyn.alpha import GOLDEN, QAlpha
from nadyn.report import (
    PROPERTIES,
    AnalysisConfig,
    ReportError,
    deterministic_part,
    load_report,
    run_analysis,
    validate_report,
    verify,
)
from nadyn.spaces import CirclePoint, IntervalPoint, ProductPoint, ShiftPoint, SpaceId
from nadyn.topology import Arc, Box, Cylinder, IntervalOpen, OpenUnion, Span, Whole
from nadyn.verdict import Verdict

F = Fraction


# -- codec -------------------------------------------------------------------

VALUES = [
    F(-7, 3),
    F(10**30 + 1, 7),
    QAlpha(F(1, 2), F(-3), GOLDEN),
    SpaceId.CIRCLE,
    IntervalPoint(F(1, 3)),
    ShiftPoint("0110"),
    CirclePoint(F(2, 5), -3),
    ProductPoint((ShiftPoint("1"), ShiftPoint("01"))),
    Whole(SpaceId.SHIFT_SPACE),
    Span(F(0), F(1, 2), True, False),
    IntervalOpen(F(1, 4), F(1, 2)),
    Cylinder(-2, "101"),
    Arc(CirclePoint(F(1, 8)), F(1, 16)),
    OpenUnion((IntervalOpen(0, F(1, 8)), IntervalOpen(F(1, 2), 1))),
    Box((Cylinder(0, "1"), Cylinder(1, "0"))),
    FiniteCompact([IntervalPoint(0), IntervalPoint(1)]),
    VietorisOpen([Cylinder(0, "0"), Cylinder(0, "1")]),
    AtomicMeasure([(IntervalPoint(0), F(1, 3)), (IntervalPoint(1), F(2, 3))]),
    MeasureOpen([(Cylinder(0, "0"), F(2, 5)), (Cylinder(0, "1"), F(1, 5))]),
    HittingSet(10, (1, 3, 5), "transitivity"),
    Verdict.certified({"kind": "x", "n": 3, "pts": [ShiftPoint("1")]}, scale={"H": 9}),
    {"nested": [F(1, 2), {"deep": (1, 2)}], "flag": True, "none": None},
]


@pytest.mark.parametrize("value", VALUES, ids=lambda v: type(v).__name__)
def test_codec_round_trip(value):
    text = json.dumps(encode(value))
    back = decode(json.loads(text))
    if isinstance(value, dict):
        assert back == {"nested": [F(1, 2), {"deep": [1, 2]}], "flag": True, "none": None}
    else:
        assert back == value


def test_rationals_never_become_floats():
    enc = encode(F(1, 3))
    assert enc == {"$type": "Q", "num": "1", "den": "3"}


def test_codec_errors():
    with pytest.raises(CodecError):
        encode(object())
    with pytest.raises(CodecError):
        encode({"$type": "sneaky"})
    with pytest.raises(CodecError):
        decode({"$type": "Unknown"})
    with pytest.raises(CodecError):
        decode({"$type": "Q", "num": "1"})


# -- analysis ----------------------------------------------------------------

def test_interleaved_thick_classification():
    cfg = AnalysisConfig("shift-interleaved", "transitivity-classify", {"classify": "thick", "p": 2, "H": 100})
    r = run_analysis(cfg)
    assert r["classification"]["label"] == "FailedAtScale"
    assert r["classification"]["witness"]["max_run"] == 1
    assert r["hitting_sets"][0]["members"] == list(range(3, 101, 2))
    assert len(r["profiles"][0]) == 100
    assert verify(r)


def test_pl_identity_3_thick_variant_report():
    r = run_analysis(AnalysisConfig("pl-identity-3", "sensitivity-variant", {"variant": "thick", "H": 120}))
    assert r["verdict"]["outcome"] == "Refuted" and r["verdict"]["scale"] is not None
    assert verify(r)


def test_rotation_devaney_components():
    r = run_analysis(AnalysisConfig("circle-rotations", "devaney", {"H": 300, "n_max": 4}))
    comps = r["verdict"]["components"]
    assert comps["transitive"]["outcome"] == "Certified"
    assert comps["dense_periodic"]["outcome"] == "Certified"
    assert comps["sensitive"]["outcome"] == "Refuted"
    assert verify(r)


ROUND_TRIP = [
    ("shift-3periodic", "transitive", {"H": 60}),
    ("shift-3periodic", "weak-mixing", {"H": 60}),
    ("shift-3periodic", "banks", {"H": 60}),
    ("shift-3periodic", "sensitive", {"H": 60, "delta": 1, "mesh": F(1, 2)}),
    ("shift-3periodic", "multi-sensitive", {"H": 60, "delta": 1}),
    ("shift-3periodic", "collective-sensitive", {"H": 60, "delta": 1}),
    ("shift-3periodic", "totally-transitive", {"H": 60, "k_max": 3, "shift_T": 1}),
    ("shift-3periodic", "measure-transitivity", {"H": 30, "mesh": F(1, 2)}),
    ("shift-3periodic", "hyper-transitivity", {"H": 30, "mesh": F(1, 2)}),
    ("shift-even", "totally-transitive", {"H": 40, "k_max": 2, "shift_T": 1}),
    ("circle-rotations", "banks", {"H": 50}),
    ("circle-rotations", "dense-periodic", {"n_max": 4}),
    ("pl-interleaved", "dense-small-periodic", {"K": 2}),
    ("pl-identity-powers10", "sensitivity-classify", {"H": 200, "classify": "upper-density"}),
]


@pytest.mark.parametrize("fixture,prop,params", ROUND_TRIP, ids=lambda v: v if isinstance(v, str) else "")
def test_reports_validate_and_verify(fixture, prop, params):
    r = run_analysis(AnalysisConfig(fixture, prop, params))
    validate_report(json.loads(json.dumps(r)))
    assert verify(r)


def test_every_property_is_covered():
    covered = {p for _, p, _ in ROUND_TRIP} | {"transitivity-classify", "sensitivity-variant", "devaney"}
    assert covered == set(PROPERTIES)


def test_reports_are_deterministic():
    cfg = AnalysisConfig("shift-3periodic", "weak-mixing", {"H": 60})
    a, b = run_analysis(cfg), run_analysis(cfg)
    assert json.dumps(deterministic_part(a), sort_keys=True) == json.dumps(deterministic_part(b), sort_keys=True)
    assert a["artifact"] == {"name": "nadyn", "version": __version__}


def test_tampered_time_fails_verification():
    r = run_analysis(AnalysisConfig("shift-3periodic", "banks", {"H": 60}))
    bad = copy.deepcopy(r)
    bad["verdict"]["witness"]["n"] += 1
    assert verify(r) and not verify(bad)


def test_tampered_hitting_set_fails_verification():
    r = run_analysis(AnalysisConfig("shift-interleaved", "transitivity-classify", {"H": 50}))
    bad = copy.deepcopy(r)
    bad["hitting_sets"][0]["members"].append(50)
    assert not verify(bad)


def test_older_version_report_still_verifies():
    r = run_analysis(AnalysisConfig("circle-rotations", "dense-periodic", {"n_max": 4}))
    r["artifact"]["version"] = "0.0.1"
    assert verify(r)


def test_malformed_report():
    with pytest.raises(ReportError):
        verify({"artifact": {}})


def test_config_validation():
    with pytest.raises(ReportError):
        AnalysisConfig("nope", "transitive")
    with pytest.raises(ReportError):
        AnalysisConfig("shift-even", "nope")
    with pytest.raises(ReportError):
        AnalysisConfig("shift-even", "transitive", {"delta": F(-1, 2)})
    with pytest.raises(ReportError):
        AnalysisConfig("shift-even", "transitive", {"H": 10**9})
    cfg = AnalysisConfig("shift-even", "sensitive", {"delta": F(1, 3), "H": 5})
    assert AnalysisConfig.from_echo(json.loads(json.dumps(cfg.echo()))) == cfg


# -- command line ------------------------------------------------------------

def test_cli_analyze_and_verify(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["analyze", "--fixture", "shift-3periodic", "--property", "banks", "--horizon", "60", "--out", str(out)])
    assert code == 0 and out.exists()
    assert load_report(out)["verdict"]["outcome"] == "Certified"
    assert main(["verify", str(out)]) == 0
    assert capsys.readouterr().out.strip().endswith("valid")
    report = json.loads(out.read_text())
    report["verdict"]["witness"]["n"] += 1
    out.write_text(json.dumps(report))
    assert main(["verify", str(out)]) == 1
    assert "INVALID" in capsys.readouterr().out


def test_cli_analyze_to_stdout_with_params(capsys):
    code = main([
        "analyze", "--fixture", "pl-identity-3", "--property", "sensitivity-variant",
        "--horizon", "120", "--delta", "1/16", "--mesh", "1/32", "--param", "variant=thick", "--param", "p=2",
    ])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"]["outcome"] == "Refuted"
    assert report["config"]["params"]["delta"] == {"$type": "Q", "num": "1", "den": "16"}


def test_cli_fixtures(capsys):
    assert main(["fixtures"]) == 0
    assert "shift-3periodic" in capsys.readouterr().out


def test_cli_errors(tmp_path, capsys):
    assert main(["analyze", "--fixture", "nope", "--property", "transitive"]) == 2
    assert main(["verify", str(tmp_path / "missing.json")]) == 2
    with pytest.raises(SystemExit):
        main(["analyze", "--fixture", "shift-even", "--property", "transitive", "--delta", "abc"])
    with pytest.raises(SystemExit):
        main(["analyze", "--fixture", "shift-even", "--property", "transitive", "--delta", "-1/2"])
