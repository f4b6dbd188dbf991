from qdeform.catalog import build_presentation, quantum_determinant, rea2_c1
from qdeform.freealg import Element
from qdeform.rmat import eps_q, matrix_is_zero
from qdeform.structmaps import (bosonization_catalog,
                                bosonization_report, constant_re_residual,
                                export_bosonization_catalog, gauss_maps,
                                partial_gauss_rtt, quotient_c1_check,
                                rea_transport, rea_transport_report,
                                rtt_matrix_residuals, verify_gauss)


def test_gauss_forward_and_backward_relations():
    fwd, bwd = gauss_maps()
    assert fwd.verify() == []
    assert bwd.verify() == []


def test_gauss_clause_groups():
    out = verify_gauss()
    assert out["forward_relations"] == []
    assert out["backward_relations"] == []
    assert out["round_trip"] == []
    assert out["det_product"].is_zero()


def test_gauss_determinant_factorizes():
    fwd, _ = gauss_maps()
    gauss = build_presentation("gauss_glq2")
    img = fwd.apply(quantum_determinant())
    assert gauss.normalize(img - Element.word(("A", "B"))).is_zero()


def test_partial_products_satisfy_rtt():
    out = partial_gauss_rtt()
    assert matrix_is_zero(out["lower"])
    assert matrix_is_zero(out["upper"])


def test_full_quantum_matrix_satisfies_rtt_via_helper():
    glq2 = build_presentation("glq2")
    from qdeform.rmat import QMatrix

    T = QMatrix([[Element.gen("a"), Element.gen("b")],
                 [Element.gen("c"), Element.gen("d")]])
    assert matrix_is_zero(rtt_matrix_residuals(T, glq2))


def test_bosonization_catalog_shape():
    entries = bosonization_catalog()
    assert len(entries) == 10
    ids = [e["id"] for e in entries]
    assert len(set(ids)) == len(ids)
    for e in entries:
        assert e["mode"] in ("symbolic", "numeric", "numeric_partial")
        assert e["notes"]


def test_bosonization_all_entries_validate():
    for rec in bosonization_report(dim=12, q0=0.7):
        assert rec["status"] == "pass", rec


def test_bosonization_robust_to_parameters():
    for rec in bosonization_report(dim=10, q0=0.55):
        assert rec["status"] == "pass", rec


def test_bosonization_export_is_json_ready():
    import json

    out = export_bosonization_catalog()
    assert len(out) == 10
    json.dumps(out)
    sym = [rec for rec in out if rec["mode"] == "symbolic"]
    assert all("images" in rec for rec in sym)


def test_constant_re_solutions():
    assert matrix_is_zero(constant_re_residual(eps_q()))


def test_rea_transport_morphism():
    tr = rea_transport()
    assert tr.verify() == []
    glq2 = build_presentation("glq2")
    assert glq2.normalize(tr.apply(rea2_c1())).is_zero()


def test_rea_transport_report():
    out = rea_transport_report()
    assert all(matrix_is_zero(m) for m in out["constant_residuals"].values())
    assert out["transport_defects"] == []
    assert matrix_is_zero(out["matrix_residual"])
    assert out["c1_image"].is_zero()
    assert not out["c2_image"].is_zero()


def test_quotient_identification():
    out = quotient_c1_check()
    assert out["projection_defects"] == []
    assert out["identification_defects"] == []
    assert out["c1_image"].is_zero()
