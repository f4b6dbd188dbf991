import json

import pytest

from qdeform.catalog import presentation_from_json
from qdeform.cli import main
from qdeform.reports import validate_report


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normalize_basic(capsys):
    code, out, _ = run_cli(capsys, "normalize", "--algebra", "glq2", "b*a")
    assert code == 0
    assert out.strip() == "(q^-1)*a*b"


def test_normalize_determinant_relation(capsys):
    code, out, _ = run_cli(capsys, "normalize", "--algebra", "glq2", "d*a")
    assert code == 0
    assert out.strip() == "a*d - (q - q^-1)*b*c"


def test_normalize_unicode_display(capsys):
    code, out, _ = run_cli(capsys, "normalize", "--algebra", "slq2",
                           "--unicode", "xp*k")
    assert code == 0
    assert out.strip() == "(q^-1)*q^J*X+"


def test_normalize_parse_error_exits_2(capsys):
    code, _, err = run_cli(capsys, "normalize", "--algebra", "glq2", "a*")
    assert code == 2
    assert "parse error" in err


def test_check_json_report_validates(capsys):
    code, out, _ = run_cli(capsys, "check", "--suite", "yangbaxter",
                           "--json")
    assert code == 0
    rep = json.loads(out)
    validate_report(rep)
    assert rep["passed"] is True
    assert rep["suite"] == "yangbaxter"


def test_check_text_mode(capsys):
    code, out, _ = run_cli(capsys, "check", "--suite", "gauss")
    assert code == 0
    assert "[PASS]" in out
    assert "all checks passed" in out


def test_catalog_listing(capsys):
    code, out, _ = run_cli(capsys, "catalog")
    assert code == 0
    assert "glq2" in out
    assert "osc_pair_qqinv" in out


def test_catalog_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "catalog", "slq2", "--json")
    assert code == 0
    pres = presentation_from_json(json.loads(out))
    assert pres.generators == ("k", "ki", "xp", "xm")


def test_rep_json_export(capsys):
    code, out, _ = run_cli(capsys, "rep", "--algebra", "osc_q",
                           "--dim", "4", "--q0", "0.5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 4
    assert data["basis"][0] == "|0>"
    a = data["generators"]["a"]
    assert a[0][1] == [pytest.approx(1.0), pytest.approx(0.0)]


def test_rep_env_defaults(capsys, monkeypatch):
    monkeypatch.setenv("QD_DIM", "5")
    monkeypatch.setenv("QD_Q0", "0.6")
    code, out, _ = run_cli(capsys, "rep", "--algebra", "osc_q", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 5
    assert data["q0"] == pytest.approx(0.6)


def test_pair_verb(capsys):
    code, out, _ = run_cli(capsys, "pair", "--sign", "+", "--row", "1",
                           "--col", "1", "a")
    assert code == 0
    assert out.strip() == "s"
    code, out, _ = run_cli(capsys, "pair", "--sign", "+", "--row", "1",
                           "--col", "2", "a*b")
    assert code == 0
    assert out.strip() == "0"


def test_check_failure_exit_code(capsys, monkeypatch):
    import qdeform.suites as suites
    from qdeform.reports import build_report, failed_item

    monkeypatch.setitem(
        suites.SUITES, "yangbaxter",
        lambda q0=None, dim=None, degree=None: build_report(
            "yangbaxter", [failed_item("forced")], q0=q0, dim=dim,
            degree=degree,
        ),
    )
    code, out, _ = run_cli(capsys, "check", "--suite", "yangbaxter")
    assert code == 1
    assert "[FAIL] forced" in out
