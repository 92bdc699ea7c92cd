"""Rendering of solve results, parameter values, and verification reports.

All renderers take plain dicts (what the service returns over the wire) so
the CLI and tests share one code path. JSON and CSV outputs are pinned to be
byte-identical for identical inputs across runs and parallelism degrees:
wall-clock fields are written as 0 there, and key order is fixed. Human
output keeps the measured timings.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Mapping

from .errors import UsageError
from .solver import is_infinite
from .verification import K2_GRAPH6, TWO_ISOLATED_GRAPH6

FORMATS = ("human", "json", "csv")

RECORD_FIELDS = (
    "graph6",
    "n",
    "pi",
    "pi_s",
    "equal",
    "witness_config",
    "witness_target",
    "elapsed_ms",
)


def extended_to_json(value: Any) -> Any:
    if is_infinite(value):
        return "infinite"
    return value


def record_to_dict(record) -> dict[str, Any]:
    return {
        "graph6": record.graph6,
        "n": record.n,
        "pi": extended_to_json(record.pi),
        "pi_s": extended_to_json(record.pi_s),
        "equal": record.equal,
        "witness_config": record.witness_config,
        "witness_target": record.witness_target,
        "elapsed_ms": record.elapsed_ms,
    }


def check_to_dict(check) -> dict[str, Any]:
    return {"name": check.name, "passed": check.passed, "detail": check.detail}


def report_to_dict(report) -> dict[str, Any]:
    return {
        "scope": report.scope,
        "n_max": report.n_max,
        "records": [record_to_dict(r) for r in report.records],
        "checks": [check_to_dict(c) for c in report.checks],
        "passed": report.passed,
        "elapsed_ms": report.elapsed_ms,
    }


def _json_dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def format_moves(witness) -> str:
    return " ".join(f"{u}->{v}" for u, v in witness)


# ---------------------------------------------------------------------------
# solve


def render_solve(result: Mapping[str, Any], fmt: str) -> str:
    if fmt == "json":
        return _json_dumps(dict(result))
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["solvable", "witness", "states_explored"])
        witness = result["witness"]
        writer.writerow(
            [
                str(result["solvable"]).lower(),
                ";".join(f"{u}->{v}" for u, v in witness) if witness else "",
                result["states_explored"],
            ]
        )
        return out.getvalue()
    if fmt == "human":
        lines = ["solvable" if result["solvable"] else "unsolvable"]
        if result["witness"]:
            lines.append(f"witness: {format_moves(result['witness'])}")
        lines.append(f"states explored: {result['states_explored']}")
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# parameter values


def render_value(result: Mapping[str, Any], fmt: str) -> str:
    if fmt == "json":
        return _json_dumps(dict(result))
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["graph6", "value", "witness_config", "witness_target"])
        writer.writerow(
            [
                result["graph6"],
                result["value"],
                result["witness_config"] or "",
                result["witness_target"] if result["witness_target"] is not None else "",
            ]
        )
        return out.getvalue()
    if fmt == "human":
        lines = [str(result["value"])]
        if result["witness_config"] is not None:
            lines.append(
                f"blocking configuration at {result['value'] - 1} pebbles: "
                f"{result['witness_config']} (target {result['witness_target']})"
            )
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# verification reports


def _pinned(report: Mapping[str, Any]) -> dict[str, Any]:
    # Wall-clock varies run to run; machine-readable reports must not.
    out = dict(report)
    out["records"] = [{**r, "elapsed_ms": 0} for r in report["records"]]
    out["elapsed_ms"] = 0
    return out


def render_report(report: Mapping[str, Any], fmt: str) -> str:
    if fmt == "json":
        return _json_dumps(_pinned(report))
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(RECORD_FIELDS)
        for record in _pinned(report)["records"]:
            writer.writerow(
                [
                    record["graph6"],
                    record["n"],
                    record["pi"] if record["pi"] is not None else "",
                    record["pi_s"] if record["pi_s"] is not None else "",
                    str(record["equal"]).lower(),
                    record["witness_config"] or "",
                    record["witness_target"]
                    if record["witness_target"] is not None
                    else "",
                    record["elapsed_ms"],
                ]
            )
        return out.getvalue()
    if fmt == "human":
        lines = [f"scope: {report['scope']}"]
        lines.append("records:")
        for r in report["records"]:
            witness = (
                f" blocking {r['witness_config']} (target {r['witness_target']})"
                if r["witness_config"] is not None
                else ""
            )
            lines.append(
                f"  {r['graph6']:<10} n={r['n']}  pi={r['pi']}  pi_s={r['pi_s']}  "
                f"equal={str(r['equal']).lower()}{witness}  [{r['elapsed_ms']} ms]"
            )
        if report["checks"]:
            lines.append("checks:")
            for c in report["checks"]:
                status = "PASS" if c["passed"] else "FAIL"
                lines.append(f"  [{status}] {c['name']}: {c['detail']}")
        status = "PASS" if report["passed"] else "FAIL"
        lines.append(f"result: {status} ({report['elapsed_ms']} ms)")
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def record_dict_is_expected(record: Mapping[str, Any]) -> bool:
    """verification.record_is_expected, restated for wire-format records."""
    if record["pi"] is None or record["pi_s"] is None:
        return False
    if record["graph6"] == TWO_ISOLATED_GRAPH6:
        return record["pi"] == "infinite" and record["pi_s"] == "infinite"
    if record["graph6"] == K2_GRAPH6:
        return record["pi"] == 2 and record["pi_s"] == 3
    return bool(record["equal"])


def first_failure(report: Mapping[str, Any]) -> str | None:
    """The first counterexample in a failed report, for error output."""
    for check in report["checks"]:
        if not check["passed"]:
            return f"{check['name']}: {check['detail']}"
    for record in report["records"]:
        if not record_dict_is_expected(record):
            return (
                f"unexpected record for {record['graph6']}: "
                f"pi={record['pi']} pi_s={record['pi_s']}"
            )
    return None
