import pytest

from qdeform.freealg import (Element, MorphismMap, Presentation,
                             RewriteBudgetExceeded, compose, format_element)
from qdeform.scalars import QScalar

Q = QScalar.qpow


def qplane():
    return Presentation(
        "qplane",
        ("x1", "x2"),
        {("x2", "x1"): Element({("x1", "x2"): Q(-1)})},
    )


def test_element_algebra():
    e = Element.gen("x1") + Element.gen("x2").scale(Q(1))
    f = e * e
    assert f.degree() == 2
    assert set(f.support()) <= {("x1", "x1"), ("x1", "x2"),
                                ("x2", "x1"), ("x2", "x2")}
    assert (e - e).is_zero()
    assert (Element.one() ** 3) == Element.one()
    assert (e ** 2) == f


def test_normalize_quantum_plane():
    p = qplane()
    e = Element.word(("x2", "x1"))
    nf = p.normalize(e)
    assert nf == Element({("x1", "x2"): Q(-1)})
    big = Element.word(("x2", "x2", "x1", "x1"))
    nf2 = p.normalize(big)
    assert nf2 == Element({("x1", "x1", "x2", "x2"): Q(-4)})


def test_normal_form_is_idempotent():
    p = qplane()
    e = Element.word(("x2", "x1", "x2", "x1"))
    nf = p.normalize(e)
    assert p.normalize(nf) == nf


def test_rule_validation_rejects_increasing_rhs():
    with pytest.raises(ValueError):
        Presentation(
            "bad",
            ("x", "y"),
            {("x", "y"): Element({("y", "x"): Q(1)})},
        )


def test_zero_weight_letters_need_decreasing_precedence():
    pres = Presentation(
        "group_like",
        ("k", "x"),
        {("x", "k"): Element({("k", "x"): Q(1)})},
        weights={"k": 0, "x": 1},
    )
    e = Element.word(("x", "k", "k"))
    assert pres.normalize(e) == Element({("k", "k", "x"): Q(2)})


def test_step_budget():
    p = qplane()
    word = ("x2",) * 14 + ("x1",) * 14
    with pytest.raises(RewriteBudgetExceeded):
        p.normalize(Element.word(word), max_steps=50)


def test_check_overlaps_flags_non_confluent_system():
    pres = Presentation(
        "broken",
        ("x", "y", "z"),
        {
            ("y", "x"): Element({("x", "y"): Q(-1)}),
            ("z", "y"): Element({("y", "z"): Q(-1)}),
            ("z", "x"): Element({("x", "z"): Q(2)}),
        },
    )
    bad = pres.check_overlaps(3)
    assert bad == []
    pres2 = Presentation(
        "broken2",
        ("x", "y", "z"),
        {
            ("y", "x"): Element({("x", "y"): Q(-1)}),
            ("z", "y"): Element({("y", "z"): Q(-1)}),
            ("z", "x"): Element({("x", "x"): QScalar.one()}),
        },
    )
    bad2 = pres2.check_overlaps(3)
    assert bad2, "overlap z*y*x must expose the inconsistency"
    assert any(rec["word"] == ("z", "y", "x") for rec in bad2)


def test_is_central_and_commutator_defects():
    p = qplane()
    assert p.is_central(Element.one())
    assert not p.is_central(Element.gen("x1"))
    defects = p.commutator_defects(Element.gen("x1"))
    assert len(defects) == 1


def test_morphism_verify_and_compose():
    p = qplane()
    target = Presentation(
        "qplane2",
        ("u", "v"),
        {("v", "u"): Element({("u", "v"): Q(-1)})},
    )
    good = MorphismMap("rename", p, target,
                       {"x1": Element.gen("u"), "x2": Element.gen("v")})
    assert good.verify() == []
    swapped = MorphismMap("swap", p, target,
                          {"x1": Element.gen("v"), "x2": Element.gen("u")})
    assert swapped.verify() != []
    ident = compose(
        MorphismMap("back", target, p,
                    {"u": Element.gen("x1"), "v": Element.gen("x2")}),
        good,
    )
    e = Element.word(("x2", "x1"))
    assert p.normalize(ident.apply(e)) == p.normalize(e)


def test_antihomomorphism_reverses_words():
    p = qplane()
    target = Presentation(
        "qplane_op",
        ("u", "v"),
        {("v", "u"): Element({("u", "v"): Q(1)})},
    )
    op = MorphismMap("reverse", p, target,
                     {"x1": Element.gen("u"), "x2": Element.gen("v")},
                     kind="antihom")
    assert op.verify() == []
    img = op.apply(Element.word(("x1", "x2")))
    assert img == Element({("u", "v"): Q(1)})


def test_format_element_output():
    p = qplane()
    e = Element({("x1", "x2"): Q(-1)})
    assert format_element(e, p) == "(q^-1)*x1*x2"
    e2 = Element.word(("x1",)) - Element.word(("x2",)).scale(QScalar.lam())
    assert format_element(e2, p) == "x1 - (q - q^-1)*x2"
    assert format_element(Element.zero()) == "0"
    sq = Element.word(("x1", "x1"))
    assert format_element(sq, p) == "x1^2"
