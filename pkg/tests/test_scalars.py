import fractions

import pytest

from qdeform.scalars import (ExponentOverflow, QScalar, lam, qeval, qnum,
                             qreduce)


def test_constructors_and_identities():
    assert QScalar.zero().is_zero()
    assert QScalar.one().is_one()
    assert QScalar.q() == QScalar.qpow(1)
    assert QScalar.s() * QScalar.s() == QScalar.q()
    assert QScalar.spow(2) == QScalar.qpow(1)
    assert QScalar.rational(fractions.Fraction(6, 4)) == \
        QScalar.rational(fractions.Fraction(3, 2))


def test_field_arithmetic():
    q = QScalar.q()
    one = QScalar.one()
    x = (q + one) * (q - one)
    assert x == q * q - one
    assert (x / x).is_one()
    assert (q ** -3) * (q ** 3) == one
    assert q.reciprocal() == QScalar.qpow(-1)
    third = QScalar.rational(fractions.Fraction(1, 3))
    assert third + third + third == one
    assert -(q - one) == one - q


def test_coercion_from_int_and_fraction():
    q = QScalar.q()
    assert q + 1 == q + QScalar.one()
    assert 2 * q == q + q
    assert q - fractions.Fraction(1, 2) == \
        q - QScalar.rational(fractions.Fraction(1, 2))
    assert (q / 2) * 2 == q


def test_lambda_and_beta():
    q = QScalar.q()
    assert QScalar.lam() == q - q.reciprocal()
    assert lam() == QScalar.lam()
    s = QScalar.s()
    assert QScalar.beta() * (s + s.reciprocal()) == QScalar.one()


def test_qnum_symmetric():
    q = QScalar.q()
    assert qnum(0).is_zero()
    assert qnum(1).is_one()
    assert qnum(2) == q + q.reciprocal()
    assert qnum(3) == q * q + 1 + (q * q).reciprocal()
    assert qnum(-2) == -qnum(2)
    lamv = QScalar.lam()
    for n in range(1, 6):
        assert qnum(n) * lamv == QScalar.qpow(n) - QScalar.qpow(-n)


def test_qnum_basic():
    q = QScalar.q()
    assert qnum(2, kind="basic") == 1 + q
    assert qnum(3, kind="basic") == 1 + q + q * q
    assert qnum(2, kind="basic", base_exp=2) == 1 + q * q


def test_qeval():
    assert qeval(QScalar.qpow(2), 0.5) == pytest.approx(0.25)
    assert qeval(qnum(3), 0.7) == pytest.approx(0.7 ** 2 + 1 + 0.7 ** -2)
    v = qeval(QScalar.spow(1), 0.49)
    assert v == pytest.approx(0.7)
    assert qeval(QScalar.rational(fractions.Fraction(3, 4)), 0.3) == \
        pytest.approx(0.75)


def test_conjugation_fixes_real_form():
    x = QScalar.lam() / (QScalar.q() + 3)
    assert x.conj() == x


def test_printing():
    assert str(QScalar.lam()) == "q - q^-1"
    assert str(QScalar.lam().reciprocal()) == "q/(q^2 - 1)"
    assert str(QScalar.one()) == "1"
    assert str(QScalar.qpow(-2)) == "q^-2"


def test_exponent_overflow():
    with pytest.raises(ExponentOverflow):
        QScalar.qpow(5000)
    with pytest.raises(ExponentOverflow):
        QScalar.qpow(4000) * QScalar.qpow(4000)


def test_qreduce():
    assert qreduce(QScalar.qpow(2) - 1, QScalar.q() - 1) == QScalar.q() + 1


def test_hash_consistency():
    a = QScalar.q() + 1
    b = (QScalar.qpow(2) - 1) / (QScalar.q() - 1)
    assert a == b
    assert hash(a) == hash(b)
