import numpy as np
import pytest

from qdeform.catalog import center_osc_alpha, center_osc_q
from qdeform.fock import (central_values, classical_bridge_residual,
                          contraction_probe, fock_rep, rep_residual,
                          schwinger_decompose, singular_rep)

Q0 = 0.7
DIM = 16
TOL = 1e-10


def test_float_representations():
    for algebra in ("osc_q", "osc_q_qinv", "osc_alpha", "osc_A"):
        rep = fock_rep(algebra, DIM, Q0)
        assert rep_residual(rep) < TOL, algebra


def test_exact_representations_identically_zero():
    for algebra in ("osc_q", "osc_alpha"):
        rep = fock_rep(algebra, DIM, Q0, exact=True)
        assert rep_residual(rep) == 0.0, algebra


def test_exact_unsupported_for_osc_A():
    with pytest.raises(ValueError):
        fock_rep("osc_A", DIM, Q0, exact=True)


def test_ladder_structure():
    rep = fock_rep("osc_q", 5, Q0)
    a = rep["matrices"]["a"]
    lam0 = Q0 - 1.0 / Q0
    n2 = (Q0 ** 2 - Q0 ** -2) / lam0
    assert abs(a[0, 1] - 1.0) < 1e-14
    assert abs(a[1, 2] - np.sqrt(n2)) < 1e-14
    k = rep["matrices"]["k"]
    assert abs(k[3, 3] - Q0 ** 3) < 1e-14


def test_central_values_osc_q():
    rep = fock_rep("osc_q", DIM, Q0)
    out = central_values(rep, center_osc_q())
    assert abs(out["value"]) < 1e-10
    assert out["rel_dev"] < 1e-12
    exact = fock_rep("osc_q", DIM, Q0, exact=True)
    out_exact = central_values(exact, center_osc_q())
    assert out_exact["abs_dev"] == 0.0


def test_central_values_osc_alpha():
    rep = fock_rep("osc_alpha", DIM, Q0)
    out = central_values(rep, center_osc_alpha())
    assert out["rel_dev"] < 1e-12


def test_singular_rep():
    rep = singular_rep(DIM, Q0)
    assert rep.get("singular")
    assert rep_residual(rep) < 1e-12


def test_schwinger_blocks():
    blocks = schwinger_decompose(8, Q0)
    assert [b["dim"] for b in blocks] == list(range(1, 9))
    for b in blocks:
        assert b["residual"] < TOL
        assert b["invariance"] < TOL
        assert abs(b["casimir"] - b["expected"]) < TOL


def test_contraction_probe_trend():
    rows = contraction_probe(j_list=(2, 4), q0=0.5, dim=12)
    assert rows[0]["residual"] > rows[1]["residual"]
    ratio = rows[1]["residual"] / rows[0]["residual"]
    eps_ratio = (rows[1]["eps"] / rows[0]["eps"]) ** 2
    assert ratio == pytest.approx(eps_ratio, rel=1e-6)
    assert abs(rows[1]["c2_gap"]) < abs(rows[0]["c2_gap"])


def test_classical_bridge():
    out = classical_bridge_residual(DIM, Q0)
    assert out["construction_gap"] < TOL
    assert out["relation_residual"] < TOL


def test_unknown_algebra():
    with pytest.raises(KeyError):
        fock_rep("glq2", DIM, Q0)
