import numpy as np
import pytest

from qdeform.catalog import build_presentation, quantum_determinant
from qdeform.freealg import Element
from qdeform.rmat import (QMatrix, braid_residual, eps_covariance_residual,
                          eps_q, hecke_residual, k_upper, matrix_is_zero,
                          normalize_matrix, oscillator_vector_relations,
                          permutation_matrix, plane_relations, r_hat,
                          r_matrix, r_minus, r_plus, re_relations,
                          rtt_relations, same_span, span_rank,
                          yang_baxter_residual)
from qdeform.scalars import QScalar, qeval

Q = QScalar.qpow


def test_r_matrix_entries():
    R = r_matrix()
    assert R[0, 0] == Q(1)
    assert R[3, 3] == Q(1)
    assert R[1, 1] == QScalar.one()
    assert R[2, 1] == QScalar.lam()
    assert R[1, 2].is_zero()


def test_yang_baxter_and_hecke_exact():
    assert matrix_is_zero(yang_baxter_residual())
    assert matrix_is_zero(hecke_residual())
    assert matrix_is_zero(braid_residual())


def test_r_hat_is_permuted_r():
    P = permutation_matrix()
    assert matrix_is_zero(r_hat() - P * r_matrix())


def test_inverse_exact():
    R = r_matrix()
    I4 = QMatrix.identity(4)
    assert matrix_is_zero(R * R.inverse() - I4)
    assert matrix_is_zero(R.inverse() * R - I4)
    with pytest.raises(ZeroDivisionError):
        QMatrix.zeros(2).inverse()


def test_r_plus_minus_scalings():
    P = permutation_matrix()
    lhs = r_plus()
    rhs = (P * r_matrix() * P).scale(QScalar.spow(-1))
    assert matrix_is_zero(lhs - rhs)
    lhs2 = r_minus()
    rhs2 = r_matrix().inverse().scale(QScalar.spow(1))
    assert matrix_is_zero(lhs2 - rhs2)


def test_evaluate_matches_qeval():
    R = r_matrix()
    num = R.evaluate(0.7)
    assert num.shape == (4, 4)
    assert num[0, 0] == pytest.approx(0.7)
    assert num[2, 1] == pytest.approx(0.7 - 1 / 0.7)


def test_kron_and_transpose():
    A = QMatrix([[Q(1), QScalar.zero()], [QScalar.one(), Q(-1)]])
    B = QMatrix.identity(2)
    K = A.kron(B)
    assert K[0, 0] == Q(1)
    assert K[2, 0] == QScalar.one()
    assert matrix_is_zero(A.transpose().transpose() - A)


def test_rtt_span_equals_glq2_ideal():
    rtt = rtt_relations()
    glq2 = build_presentation("glq2")
    assert span_rank(rtt) == 6
    assert same_span(rtt, glq2.relation_elements())
    for rel in rtt:
        assert glq2.normalize(rel).is_zero()


def test_re_span_equals_rea2_ideal():
    re = re_relations()
    rea2 = build_presentation("rea2")
    assert span_rank(re) == 6
    assert same_span(re, rea2.relation_elements())
    for rel in re:
        assert rea2.normalize(rel).is_zero()


def test_eps_covariance():
    glq2 = build_presentation("glq2")
    r1, r2 = eps_covariance_residual()
    assert matrix_is_zero(normalize_matrix(r1, glq2))
    assert matrix_is_zero(normalize_matrix(r2, glq2))


def test_eps_q_solves_reflection_equation():
    from qdeform.structmaps import constant_re_residual

    assert matrix_is_zero(constant_re_residual(eps_q()))
    assert matrix_is_zero(
        constant_re_residual(k_upper(QScalar.one(), QScalar.lam(), Q(1)))
    )


def test_plane_relation_ranks():
    assert span_rank(plane_relations(-Q(1))) == 1
    assert span_rank(plane_relations(Q(-1))) == 3
    qplane = build_presentation("qplane")
    assert same_span(plane_relations(-Q(1)), qplane.relation_elements())
    grass = build_presentation("grassmann_plane")
    assert same_span(
        plane_relations(Q(-1), names=("xi1", "xi2")),
        grass.relation_elements(),
    )


def test_oscillator_vector_relations():
    osc = build_presentation("osc_A")
    assert same_span(oscillator_vector_relations(), osc.relation_elements())


def test_element_matrix_products():
    glq2 = build_presentation("glq2")
    T = QMatrix([[Element.gen("a"), Element.gen("b")],
                 [Element.gen("c"), Element.gen("d")]])
    TT = normalize_matrix(T * T, glq2)
    assert TT[0, 0] == glq2.normalize(
        Element.word(("a", "a")) + Element.word(("b", "c"))
    )
    assert TT[0, 1] == glq2.normalize(
        Element.word(("a", "b")) + Element.word(("b", "d"))
    )
