"""Command-line surface and JSON reporting.

One subcommand per capability: classify, condition-set, census, simulate,
verify, pell, sequence.  Values that can exceed 64 bits (leading slices,
solution coordinates, rationals) are serialized as decimal strings; small
structural counters stay plain integers.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import is_dataclass
from fractions import Fraction
from typing import Any

from . import classifier, pell, simulator
from .classifier import Reason, SlopeVerdict, ordered_conditions
from .figures import FigureSpec, render_svg
from .kinematics import LatticeDegeneracyError, default_initial_ordinate, make_slope, slicing_sequence
from .simulator import OrbitEvent, PeriodicityReport, detect_relative_periodicity


def _rat(value: Fraction) -> str:
    v = Fraction(value)
    return f"{v.numerator}/{v.denominator}"


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def report_condition_set(chi: int, conditions) -> dict[str, Any]:
    return {"chi": str(chi), "set": [c.value for c in ordered_conditions(conditions)]}


def report_verdict(verdict: SlopeVerdict) -> dict[str, Any]:
    return {
        "slope": str(verdict.slope),
        "elementary": verdict.elementary,
        "reason": verdict.reason.value,
        "periods": [
            {
                "period": p.describe(),
                "chi": str(p.chi),
                "window": [_rat(p.window[0]), _rat(p.window[1])],
            }
            for p in verdict.periods
        ],
    }


def report_census(lo: int, hi: int, table) -> dict[str, Any]:
    return {
        "lo": str(lo),
        "hi": str(hi),
        "entries": [report_condition_set(chi, table[chi]) for chi in sorted(table)],
    }


def report_pell(solutions) -> dict[str, Any]:
    entries = []
    for sol in solutions:
        entry = {"x": str(sol.x), "y": str(sol.y)}
        if sol.alpha0 is not None:
            entry["alpha0"] = str(sol.alpha0)
            entry["alpha2"] = str(sol.alpha2)
            entry["chi"] = str(pell.chi_from_solution(sol))
        entries.append(entry)
    return {"count": len(entries), "solutions": entries}


def report_periodicity(rep: PeriodicityReport | None) -> dict[str, Any] | None:
    if rep is None:
        return None
    return {
        "preperiod": rep.preperiod,
        "period": rep.period,
        "translation": [rep.translation[0], rep.translation[1]],
        "verified_window": rep.verified_window,
        "half_strips": rep.half_strips,
        "translations": [[t[0], t[1]] for t in rep.translations],
        "detector": "cycle-displacement",
    }


def event_json_line(event: OrbitEvent) -> str:
    return json.dumps(
        {
            "index": event.index,
            "brick": [event.brick.x, event.brick.y],
            "edge": event.edge,
            "hit": [_rat(event.hit_point[0]), _rat(event.hit_point[1])],
        }
    )


def export_json(report: Any) -> str:
    """Serialize a report with stable field order."""
    if is_dataclass(report) and isinstance(report, SlopeVerdict):
        report = report_verdict(report)
    elif is_dataclass(report) and isinstance(report, PeriodicityReport):
        report = report_periodicity(report)
    return json.dumps(report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="breakout-slopes",
        description="Classify, search and simulate elementary breakout slopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide whether a slope is elementary")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = sub.add_parser("condition-set", help="conditions holding at a leading slice")
    p.add_argument("chi", type=int)

    p = sub.add_parser("census", help="leading slices with non-empty condition sets")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("simulate", help="run the exact orbit and report/export it")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--y0", type=str, default=None, help="launch ordinate a/b")
    p.add_argument("--events", type=int, default=200)
    p.add_argument("--json", type=str, default=None, help="write events as JSON lines")
    p.add_argument("--svg", type=str, default=None, help="write an SVG figure")

    p = sub.add_parser("verify", help="cross-check classification against the orbit")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--periods", type=int, default=5)

    p = sub.add_parser("pell", help="qualifying solutions of x^2 - 3y^2 = 1")
    p.add_argument("--count", type=int, default=1)

    p = sub.add_parser("sequence", help="slice values of a slope")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--y0", type=str, default=None, help="launch ordinate a/b")
    p.add_argument("--len", type=int, default=20, dest="length")

    return parser


def _cmd_classify(args) -> dict[str, Any]:
    slope = make_slope(args.p, args.q)
    return report_verdict(classifier.classify_slope(slope))


def _cmd_condition_set(args) -> dict[str, Any]:
    return report_condition_set(args.chi, classifier.condition_set(args.chi))


def _cmd_census(args) -> dict[str, Any]:
    table = classifier.census_parallel(args.lo, args.hi, args.jobs)
    return report_census(args.lo, args.hi, table)


def _cmd_simulate(args) -> dict[str, Any]:
    slope = make_slope(args.p, args.q)
    y0 = _parse_rational(args.y0) if args.y0 else default_initial_ordinate(slope)
    events = simulator.simulate(slope, y0, args.events)
    report = None
    if len(events) >= 9:
        report = detect_relative_periodicity(events, min_confirm=3)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            for event in events:
                fh.write(event_json_line(event) + "\n")
    if args.svg:
        if report is not None:
            spec = FigureSpec(
                events=tuple(events), period=report.period, preperiod=report.preperiod
            )
        else:
            spec = FigureSpec(events=tuple(events), period=len(events))
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(spec))
    return {
        "slope": str(slope),
        "y0": _rat(y0),
        "events": len(events),
        "periodicity": report_periodicity(report),
    }


def _cmd_verify(args) -> dict[str, Any]:
    slope = make_slope(args.p, args.q)
    verdict = classifier.classify_slope(slope)
    checks = []
    for period in verdict.periods:
        y0 = default_initial_ordinate(slope, period.window)
        passes = simulator.verify_elementary_sequence(
            slope, y0, period.blocks(), args.periods
        )
        checks.append(
            {
                "period": period.describe(),
                "window": [_rat(period.window[0]), _rat(period.window[1])],
                "y0": _rat(y0),
                "periods": args.periods,
                "passes": passes,
            }
        )
    out = report_verdict(verdict)
    out["checks"] = checks
    return out


def _cmd_pell(args) -> dict[str, Any]:
    return report_pell(pell.qualifying_solutions(args.count))


def _cmd_sequence(args) -> dict[str, Any]:
    slope = make_slope(args.p, args.q)
    y0 = _parse_rational(args.y0) if args.y0 else default_initial_ordinate(slope)
    terms = slicing_sequence(slope, y0, args.length)
    return {"slope": str(slope), "y0": _rat(y0), "terms": terms}


_HANDLERS = {
    "classify": _cmd_classify,
    "condition-set": _cmd_condition_set,
    "census": _cmd_census,
    "simulate": _cmd_simulate,
    "verify": _cmd_verify,
    "pell": _cmd_pell,
    "sequence": _cmd_sequence,
}


def run_cli(argv: list[str] | None = None) -> int:
    """Dispatch a command line; 0 on success, 1 on domain errors, 2 on usage."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        return int(exc.code or 0)
    try:
        report = _HANDLERS[args.command](args)
    except (ValueError, LatticeDegeneracyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(export_json(report))
    return 0


def main() -> None:
    sys.exit(run_cli())
