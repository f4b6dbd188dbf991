import pytest

from qdeform.catalog import build_presentation
from qdeform.freealg import Element, format_element
from qdeform.parser import ParseError, parse_expression
from qdeform.scalars import QScalar, qnum

GENS = ("a", "b", "c", "d")


def test_words_and_scalars():
    e = parse_expression("a*b", GENS)
    assert e == Element.word(("a", "b"))
    assert parse_expression("1", GENS) == Element.one()
    assert parse_expression("0", GENS).is_zero()
    assert parse_expression("q", GENS) == Element.scalar(QScalar.q())
    assert parse_expression("s^2", GENS) == Element.scalar(QScalar.q())


def test_sums_signs_and_precedence():
    e = parse_expression("a*d - q*b*c + 2", GENS)
    expected = (Element.word(("a", "d"))
                - Element.word(("b", "c")).scale(QScalar.q())
                + Element.scalar(QScalar.rational(2)))
    assert e == expected
    assert parse_expression("-a", GENS) == -Element.gen("a")
    assert parse_expression("a - -b", GENS) == (Element.gen("a")
                                                + Element.gen("b"))


def test_powers():
    assert parse_expression("a^3", GENS) == Element.word(("a",) * 3)
    assert parse_expression("q^-2*a", GENS) == Element(
        {("a",): QScalar.qpow(-2)}
    )
    assert parse_expression("(a + b)^2", GENS) == (
        (Element.gen("a") + Element.gen("b")) ** 2
    )


def test_qnumber_brackets():
    assert parse_expression("[3]", GENS) == Element.scalar(qnum(3))
    e = parse_expression("[2]*a*b", GENS)
    assert e == Element({("a", "b"): qnum(2)})


def test_scalar_division():
    e = parse_expression("a/(q - q^-1)", GENS)
    assert e == Element({("a",): QScalar.lam().reciprocal()})
    with pytest.raises(ParseError):
        parse_expression("a/b", GENS)


def test_errors():
    with pytest.raises(ParseError):
        parse_expression("a*", GENS)
    with pytest.raises(ParseError):
        parse_expression("zz", GENS)
    with pytest.raises(ParseError):
        parse_expression("(a", GENS)
    with pytest.raises(ParseError):
        parse_expression("a^b", GENS)
    with pytest.raises(ParseError):
        parse_expression("a^-1", GENS)
    with pytest.raises(ParseError):
        parse_expression("", GENS)


def test_round_trip_with_formatter():
    pres = build_presentation("glq2")
    for text in ("a*d - (q - q^-1)*b*c", "(q^-1)*a*b", "-3*c + a^2*d",
                 "(q/(q^2 - 1))*d + b*c"):
        e = parse_expression(text, pres.generators)
        assert format_element(e, pres) == text
        again = parse_expression(format_element(e, pres), pres.generators)
        assert again == e
