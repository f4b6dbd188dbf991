import json

import jsonschema
import pytest

from qdeform.reports import (build_report, failed_item, gated_item,
                             merge_reports, passed_item, render_text,
                             validate_report)


def test_build_and_validate():
    rep = build_report(
        "demo",
        [passed_item("x", residual=0.0), failed_item("y", residual=2.0)],
        q0=0.7, dim=16, degree=2,
    )
    assert rep["passed"] is False
    validate_report(rep)
    json.dumps(rep)


def test_all_pass_sets_verdict():
    rep = build_report("demo", [passed_item("x"), passed_item("y")])
    assert rep["passed"] is True


def test_schema_rejects_bad_status():
    rep = build_report("demo", [passed_item("x")])
    rep["items"][0]["status"] = "maybe"
    with pytest.raises(jsonschema.ValidationError):
        validate_report(rep)


def test_schema_rejects_extra_keys():
    rep = build_report("demo", [passed_item("x")])
    rep["extra"] = 1
    with pytest.raises(jsonschema.ValidationError):
        validate_report(rep)


def test_merge_prefixes_ids():
    r1 = build_report("alpha", [passed_item("one")], q0=0.5, dim=8)
    r2 = build_report("beta", [failed_item("two")], q0=0.5, dim=8)
    merged = merge_reports([r1, r2])
    ids = [it["id"] for it in merged["items"]]
    assert ids == ["alpha/one", "beta/two"]
    assert merged["passed"] is False
    validate_report(merged)


def test_render_text():
    rep = build_report(
        "demo",
        [passed_item("good", residual=1e-15, notes="fine"),
         failed_item("bad")],
    )
    text = render_text(rep)
    assert "[PASS] good" in text
    assert "[FAIL] bad" in text
    assert "FAILURES present" in text


def test_gated_item():
    assert gated_item("x", True)["status"] == "pass"
    assert gated_item("x", False)["status"] == "fail"
