import json
from fractions import Fraction

import pytest

from breakout_slopes.cli import (
    event_json_line,
    export_json,
    report_census,
    report_condition_set,
    report_periodicity,
    report_verdict,
    run_cli,
)
from breakout_slopes.classifier import census, classify_slope, condition_set
from breakout_slopes.kinematics import make_slope
from breakout_slopes.simulator import detect_relative_periodicity, simulate


def run(capsys, *argv):
    code = run_cli(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_command(capsys):
    code, out = run(capsys, "classify", "6", "827")
    assert code == 0
    data = json.loads(out)
    assert data["slope"] == "6/827"
    assert data["elementary"] is True
    assert data["reason"] == "Elementary"
    assert data["periods"] == [
        {"period": "(L L0-)^inf", "chi": "138", "window": ["2/827", "3/827"]}
    ]


def test_classify_negative(capsys):
    code, out = run(capsys, "classify", "2", "5")
    assert code == 0
    data = json.loads(out)
    assert data == {
        "slope": "2/5",
        "elementary": False,
        "reason": "FailsNecessary",
        "periods": [],
    }


def test_condition_set_command(capsys):
    code, out = run(capsys, "condition-set", "138")
    assert code == 0
    assert json.loads(out) == {"chi": "138", "set": ["0-", "E0-", "E", "E0+", "0+"]}
    code, out = run(capsys, "condition-set", "3")
    assert json.loads(out) == {"chi": "3", "set": []}


def test_census_command(capsys):
    code, out = run(capsys, "census", "2", "20")
    assert code == 0
    assert json.loads(out) == {
        "lo": "2",
        "hi": "20",
        "entries": [{"chi": "11", "set": ["2+"]}],
    }


def test_pell_command(capsys):
    code, out = run(capsys, "pell", "--count", "8")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 8
    last = data["solutions"][-1]
    assert last["alpha0"] == "880961759"
    assert last["alpha2"] == "1525870528"
    assert last["chi"] == "388046811731629680"


def test_sequence_command(capsys):
    code, out = run(capsys, "sequence", "3", "34", "--y0", "5/68", "--len", "6")
    assert code == 0
    assert json.loads(out) == {
        "slope": "3/34",
        "y0": "5/68",
        "terms": [11, 11, 12, 11, 11, 12],
    }


def test_simulate_command_writes_files(tmp_path, capsys):
    events_path = tmp_path / "events.jsonl"
    svg_path = tmp_path / "orbit.svg"
    code, out = run(
        capsys,
        "simulate",
        "1",
        "138",
        "--events",
        "330",
        "--json",
        str(events_path),
        "--svg",
        str(svg_path),
    )
    assert code == 0
    data = json.loads(out)
    assert data["slope"] == "1/138"
    assert data["events"] == 330
    assert data["periodicity"]["preperiod"] == 0
    assert data["periodicity"]["period"] == 62
    assert data["periodicity"]["half_strips"] == 1

    lines = events_path.read_text().splitlines()
    assert len(lines) == 330
    first = json.loads(lines[0])
    assert first == {"index": 0, "brick": [0, 0], "edge": "v", "hit": ["0/1", "1/276"]}

    svg = svg_path.read_text()
    assert svg.startswith("<?xml")
    assert "<svg" in svg and svg.rstrip().endswith("</svg>")


def test_verify_command(capsys):
    code, out = run(capsys, "verify", "3", "34", "--periods", "3")
    assert code == 0
    data = json.loads(out)
    assert data["elementary"] is True
    (check,) = data["checks"]
    assert check["period"] == "(L2+)^inf"
    assert check["passes"] is True
    assert check["periods"] == 3


def test_usage_and_domain_errors(capsys):
    assert run_cli(["no-such-command"]) == 2
    assert run_cli(["classify", "6"]) == 2
    assert run_cli(["classify", "--bogus", "1", "2"]) == 2
    capsys.readouterr()
    assert run_cli(["classify", "5", "5"]) == 1
    assert run_cli(["condition-set", "1"]) == 1
    assert run_cli(["simulate", "1", "2", "--y0", "1/2"]) == 1
    err = capsys.readouterr().err
    assert "error:" in err


def test_help_exits_zero(capsys):
    assert run_cli(["--help"]) == 0
    capsys.readouterr()


def test_json_round_trip():
    reports = [
        report_condition_set(138, condition_set(138)),
        report_verdict(classify_slope(make_slope(6, 827))),
        report_verdict(classify_slope(make_slope(2, 5))),
        report_census(2, 200, census(2, 200)),
    ]
    events = simulate(make_slope(1, 3), Fraction(1, 7), 120)
    reports.append(report_periodicity(detect_relative_periodicity(events, 3)))
    for report in reports:
        assert json.loads(export_json(report)) == report
    line = event_json_line(events[0])
    assert json.loads(line)["brick"] == [0, 0]


def test_export_json_accepts_dataclasses():
    verdict = classify_slope(make_slope(2, 5))
    assert json.loads(export_json(verdict))["reason"] == "FailsNecessary"
