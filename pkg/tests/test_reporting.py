import csv
import io
import json

import pytest

from pebbling.errors import UsageError
from pebbling.reporting import (
    first_failure,
    record_dict_is_expected,
    render_report,
    render_solve,
    render_value,
    report_to_dict,
)
from pebbling.verification import verify_theorem


@pytest.fixture(scope="module")
def report_dict():
    return report_to_dict(verify_theorem(3, jobs=1))


def test_solve_rendering():
    body = {"solvable": True, "witness": [[1, 0]], "states_explored": 1}
    human = render_solve(body, "human")
    assert human == "solvable\nwitness: 1->0\nstates explored: 1\n"
    assert json.loads(render_solve(body, "json")) == body
    rows = list(csv.reader(io.StringIO(render_solve(body, "csv"))))
    assert rows == [["solvable", "witness", "states_explored"], ["true", "1->0", "1"]]

    body = {"solvable": False, "witness": None, "states_explored": 4}
    assert render_solve(body, "human") == "unsolvable\nstates explored: 4\n"
    with pytest.raises(UsageError):
        render_solve(body, "yaml")


def test_value_rendering():
    body = {
        "graph6": "A_",
        "value": 2,
        "witness_config": "0,1",
        "witness_target": 0,
    }
    human = render_value(body, "human")
    assert human == "2\nblocking configuration at 1 pebbles: 0,1 (target 0)\n"
    rows = list(csv.reader(io.StringIO(render_value(body, "csv"))))
    assert rows[1] == ["A_", "2", "0,1", "0"]

    infinite = {
        "graph6": "@",
        "value": "infinite",
        "witness_config": None,
        "witness_target": None,
    }
    assert render_value(infinite, "human") == "infinite\n"


def test_report_json_pins_wall_clock(report_dict):
    body = json.loads(render_report(report_dict, "json"))
    assert body["elapsed_ms"] == 0
    assert all(r["elapsed_ms"] == 0 for r in body["records"])
    assert [list(r) for r in body["records"]] == [
        [
            "graph6",
            "n",
            "pi",
            "pi_s",
            "equal",
            "witness_config",
            "witness_target",
            "elapsed_ms",
        ]
    ] * len(body["records"])
    assert body["records"][0]["pi"] == "infinite"


def test_report_csv_quotes_commas(report_dict):
    text = render_report(report_dict, "csv")
    assert text.count("\r\n") == len(report_dict["records"]) + 1
    rows = list(csv.reader(io.StringIO(text)))
    header, *records = rows
    assert header[:4] == ["graph6", "n", "pi", "pi_s"]
    k2 = next(r for r in records if r[0] == "A_")
    assert k2[5] == "0,1"  # comma inside one CSV field survives quoting


def test_report_human_mentions_result(report_dict):
    text = render_report(report_dict, "human")
    assert text.endswith(")\n") and "result: PASS" in text


def test_first_failure_reporting(report_dict):
    assert first_failure(report_dict) is None
    broken = json.loads(render_report(report_dict, "json"))
    broken["records"][1]["pi_s"] = 2
    assert "unexpected record" in first_failure(broken)
    broken["checks"] = [{"name": "x", "passed": False, "detail": "boom"}]
    assert first_failure(broken) == "x: boom"


def test_record_dict_expectations(report_dict):
    records = report_to_dict(verify_theorem(3, jobs=1))["records"]
    assert all(record_dict_is_expected(r) for r in records)
