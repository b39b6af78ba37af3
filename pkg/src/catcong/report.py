"""Serialization of sweep reports: JSON, CSV, and a plain text table."""

from __future__ import annotations

import csv
import io
import json

from . import __version__
from .congruences import CheckResult, Report


def _params_str(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(params.items()))


def _status(r: CheckResult) -> str:
    if r.skipped:
        return "skip"
    return "pass" if r.passed else "fail"


def to_json(report: Report) -> str:
    obj = {
        "meta": {**report.meta, "version": __version__},
        "results": [
            {
                "theorem": r.theorem,
                "p": r.p,
                "params": r.params,
                "lhs": r.lhs,
                "rhs": r.rhs,
                "pass": r.passed,
                "skipped": r.skipped,
                "reason": r.reason,
            }
            for r in report.results
        ],
        "summary": report.summary,
    }
    return json.dumps(obj, indent=2)


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["theorem_id", "p", "params", "lhs", "rhs", "pass"])
    for r in report.results:
        w.writerow([r.theorem, r.p, _params_str(r.params),
                    "" if r.lhs is None else r.lhs,
                    "" if r.rhs is None else r.rhs,
                    _status(r)])
    return buf.getvalue()


def to_table(report: Report) -> str:
    lines = []
    for r in report.results:
        detail = f"  # {r.reason}" if r.skipped else ""
        lines.append(f"{_status(r):4}  {r.theorem:28}  p={r.p:<6} "
                     f"{_params_str(r.params)}  lhs={r.lhs} rhs={r.rhs}{detail}")
    s = report.summary
    lines.append(f"total={s['total']} passed={s['passed']} "
                 f"skipped={s['skipped']} failed={s['failed']}")
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "table":
        return to_table(report)
    raise ValueError(f"unknown format {fmt!r}")
