"""Structured pass/fail reports for the verification suites.

Every suite produces the same report shape: a suite name, the toolchain
parameters the run used, a list of items with status and (where
meaningful) a numeric residual, and an overall verdict.  Reports
round-trip through JSON and validate against the bundled schema.
"""

from __future__ import annotations

import json
from importlib import resources

import jsonschema

PACKAGE_VERSION = "0.1.0"


def _load_schema():
    ref = resources.files("qdeform").joinpath("report_schema.json")
    return json.loads(ref.read_text())


REPORT_SCHEMA = _load_schema()


def item(item_id, status, residual=None, notes=""):
    rec = {"id": item_id, "status": status}
    if residual is not None:
        rec["residual"] = float(residual)
    if notes:
        rec["notes"] = notes
    return rec


def passed_item(item_id, residual=None, notes=""):
    return item(item_id, "pass", residual, notes)


def failed_item(item_id, residual=None, notes=""):
    return item(item_id, "fail", residual, notes)


def gated_item(item_id, ok, residual=None, notes=""):
    return item(item_id, "pass" if ok else "fail", residual, notes)


def build_report(suite, items, q0=None, dim=None, degree=None):
    report = {
        "suite": suite,
        "toolchain": {
            "package": "qdeform",
            "version": PACKAGE_VERSION,
            "q0": q0,
            "dim": dim,
            "degree": degree,
        },
        "items": list(items),
        "passed": all(it["status"] == "pass" for it in items),
    }
    validate_report(report)
    return report


def validate_report(report):
    jsonschema.validate(report, REPORT_SCHEMA)


def merge_reports(reports):
    items = []
    for rep in reports:
        for it in rep["items"]:
            merged = dict(it)
            merged["id"] = "%s/%s" % (rep["suite"], it["id"])
            items.append(merged)
    first = reports[0]["toolchain"] if reports else {}
    return build_report(
        "all",
        items,
        q0=first.get("q0"),
        dim=first.get("dim"),
        degree=first.get("degree"),
    )


def render_text(report):
    lines = []
    for it in report["items"]:
        res = ""
        if "residual" in it:
            res = "  residual=%.3e" % it["residual"]
        mark = "PASS" if it["status"] == "pass" else "FAIL"
        line = "[%s] %s%s" % (mark, it["id"], res)
        if it.get("notes"):
            line += "  (%s)" % it["notes"]
        lines.append(line)
    verdict = "all checks passed" if report["passed"] else "FAILURES present"
    lines.append("suite %s: %s" % (report["suite"], verdict))
    return "\n".join(lines)
