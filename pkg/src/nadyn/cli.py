"""Command-line entry point: ``nadyn analyze | verify | fixtures | accept``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .acceptance import run_acceptance
from .config import NadynError, settings
from .fixtures import list_fixtures
from .report import PROPERTIES, AnalysisConfig, ReportError, run_analysis, verify

EXIT_OK, EXIT_REFUTED, EXIT_ERROR = 0, 1, 2


def rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected NUM/DEN, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _param_value(text: str):
    for conv in (int, Fraction):
        try:
            return conv(text)
        except (ValueError, ZeroDivisionError):
            pass
    return text


def key_value(text: str):
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {text!r}")
    return key, _param_value(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nadyn", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="run one checker on one fixture and write a report")
    an.add_argument("--fixture", required=True)
    an.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    an.add_argument("--horizon", type=int, help="horizon H")
    an.add_argument("--delta", type=rational, help="separation NUM/DEN")
    an.add_argument("--mesh", type=rational, help="basis mesh and net radius NUM/DEN")
    an.add_argument("--param", type=key_value, action="append", default=[], metavar="KEY=VALUE",
                    help="extra checker parameter (repeatable), e.g. variant=thick or p=2")
    an.add_argument("--fixture-param", type=key_value, action="append", default=[], metavar="KEY=VALUE")
    an.add_argument("--out", help="report path (default: print to stdout)")
    an.add_argument("--precision-bits", type=int, help="starting precision for circle comparisons")

    ve = sub.add_parser("verify", help="replay every witness in a report")
    ve.add_argument("report")

    sub.add_parser("fixtures", help="list the fixture catalog")

    ac = sub.add_parser("accept", help="run the acceptance suite")
    ac.add_argument("--precision-bits", type=int)
    return parser


def _analyze(args) -> int:
    params = dict(args.param)
    if args.horizon is not None:
        params["H"] = args.horizon
    if args.delta is not None:
        params["delta"] = args.delta
    if args.mesh is not None:
        params["mesh"] = args.mesh
    cfg = AnalysisConfig(args.fixture, args.property, params, dict(args.fixture_param), args.out)
    report = run_analysis(cfg, args.precision_bits)
    if not args.out:
        json.dump(report, sys.stdout, indent=1, sort_keys=True)
        sys.stdout.write("\n")
    verdict = report["verdict"]
    summary = verdict["outcome"] if verdict else report["classification"]["label"] if report["classification"] else "-"
    print(f"{cfg.fixture} {cfg.property}: {summary}", file=sys.stderr)
    return EXIT_OK


def _accept(args) -> int:
    if args.precision_bits:
        settings.precision_bits = args.precision_bits
    results = run_acceptance()
    for r in results:
        print(r.line())
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_REFUTED


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return _analyze(args)
        if args.command == "verify":
            ok = verify(args.report)
            print("valid" if ok else "INVALID")
            return EXIT_OK if ok else EXIT_REFUTED
        if args.command == "fixtures":
            print(list_fixtures())
            return EXIT_OK
        return _accept(args)
    except (NadynError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
