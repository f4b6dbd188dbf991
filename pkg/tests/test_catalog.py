import pytest

from qdeform.catalog import (build_presentation, casimir_slq2,
                             casimir_slq2_alt, casimir_suq11, catalog_names,
                             center_osc_alpha, center_osc_q,
                             central_elements, presentation_from_json,
                             presentation_to_json, quantum_determinant,
                             rea2_c1, rea2_c2, star_structure,
                             star_structure_suq11_fun)
from qdeform.freealg import Element
from qdeform.scalars import QScalar


def test_catalog_builds_everything():
    names = catalog_names()
    assert len(names) == 24
    for name in names:
        pres = build_presentation(name)
        assert pres.name == name
        assert pres.generators
        for lhs, rhs in pres.rules.items():
            assert isinstance(lhs, tuple)
            assert pres.normalize(rhs) == rhs


def test_unknown_name_raises():
    with pytest.raises(KeyError):
        build_presentation("nonsense")


def test_glq2_relations():
    p = build_presentation("glq2")
    E = Element.word
    q = QScalar.q()
    lam = QScalar.lam()
    assert p.normalize(E(("b", "a"))) == Element({("a", "b"): q.reciprocal()})
    assert p.normalize(E(("c", "b"))) == E(("b", "c"))
    assert p.normalize(E(("d", "a"))) == (E(("a", "d"))
                                          - Element({("b", "c"): lam}))


def test_determinant_central_and_adjoined():
    glq2 = build_presentation("glq2")
    det = quantum_determinant()
    assert glq2.is_central(det)
    det_pres = build_presentation("glq2_det")
    assert det_pres.normalize(det - Element.word(("D",))).is_zero()
    inv = build_presentation("glq2_inv")
    assert inv.normalize(Element.word(("D", "Di")))== Element.one()
    assert inv.normalize(Element.word(("d", "di"))) == Element.one()
    assert inv.normalize(Element.word(("di", "d"))) == Element.one()


def test_central_elements_all_central():
    table = {
        "glq2": [quantum_determinant()],
        "slq2": [casimir_slq2(), casimir_slq2_alt()],
        "osc_q": [center_osc_q()],
        "osc_alpha": [center_osc_alpha()],
        "rea2": [rea2_c1(), rea2_c2()],
        "suq11": [casimir_suq11()],
    }
    for name, elements in table.items():
        pres = build_presentation(name)
        for e in elements:
            assert pres.is_central(e), (name, e)


def test_central_elements_index():
    assert "c_2" in central_elements("slq2")
    assert "D_q" in central_elements("glq2")
    assert set(central_elements("rea2")) == {"c_1", "c_2"}
    assert central_elements("qplane") == {}


def test_casimir_forms_agree():
    slq2 = build_presentation("slq2")
    diff = slq2.normalize(casimir_slq2() - casimir_slq2_alt())
    assert diff.is_zero()


def test_slq2_group_like_moves():
    slq2 = build_presentation("slq2")
    E = Element.word
    qi = QScalar.qpow(-1)
    assert slq2.normalize(E(("xp", "k"))) == Element({("k", "xp"): qi})
    assert slq2.normalize(E(("k", "ki"))) == Element.one()
    assert slq2.normalize(E(("xm", "xp", "k", "ki"))) == slq2.normalize(
        E(("xm", "xp"))
    )


def test_osc_q_exchange():
    p = build_presentation("osc_q")
    E = Element.word
    qi = QScalar.qpow(-1)
    got = p.normalize(E(("adag", "a")))
    expected = Element({("a", "adag"): qi, ("ki",): -qi})
    assert got == expected
    roundtrip = p.normalize(
        Element({("a", "adag"): QScalar.q(), ("ki",): QScalar.one()})
        - E(("a", "adag")).scale(QScalar.q())
        - Element.gen("ki")
    )
    assert roundtrip.is_zero()


def test_grassmann_squares_vanish():
    g = build_presentation("grassmann_plane")
    assert g.normalize(Element.word(("xi1", "xi1"))).is_zero()
    assert g.normalize(Element.word(("xi2", "xi2"))).is_zero()


def test_star_structures_are_involutive_antihomomorphisms():
    for variant in ("uq2", "uq11"):
        star = star_structure(variant)
        assert star.verify() == []
        pres = star.source
        for g in ("a", "b", "c", "d", "D", "Di"):
            twice = star.apply(star.apply(Element.gen(g)))
            assert pres.normalize(twice - Element.gen(g)).is_zero(), (
                variant, g)


def test_star_structure_suq11_fun():
    star = star_structure_suq11_fun()
    assert star.verify() == []
    pres = star.source
    for g in pres.generators:
        twice = star.apply(star.apply(Element.gen(g)))
        assert pres.normalize(twice - Element.gen(g)).is_zero()


def test_presentation_json_round_trip():
    for name in ("glq2", "slq2", "osc_alpha_rl", "gauss_glq2_inv"):
        pres = build_presentation(name)
        data = presentation_to_json(pres)
        back = presentation_from_json(data)
        assert back.generators == pres.generators
        assert set(back.rules) == set(pres.rules)
        for lhs in pres.rules:
            assert back.rules[lhs] == pres.rules[lhs]
        assert back.weights == pres.weights
        assert back.inverses == pres.inverses
