"""Named verification suites behind `qdeform check`.

Each suite function returns a report dict (see reports.build_report).
Exact checks report residual 0.0 only when the computed object is
identically zero as a function of q; numeric checks report the worst
guarded Fock residual and gate it at 1e-10 unless stated otherwise.
"""

from __future__ import annotations

from .catalog import (build_presentation, casimir_slq2, casimir_slq2_alt,
                      casimir_suq11, catalog_names, center_osc_alpha,
                      center_osc_q, central_elements, quantum_determinant,
                      rea2_c1, rea2_c2)
from .fock import (central_values, classical_bridge_residual,
                   contraction_probe, fock_rep, rep_residual,
                   schwinger_decompose, singular_rep)
from .freealg import Element, format_element
from .hopf import (comodule, hopf_structure, pairing_element,
                   rea_center_coaction_residuals, rll_residual)
from .reports import build_report, gated_item, merge_reports
from .rmat import (QMatrix, braid_residual, eps_covariance_residual,
                   eps_q, hecke_residual, matrix_is_zero, normalize_matrix,
                   oscillator_vector_relations, plane_relations, r_hat,
                   r_matrix, r_minus, r_plus, re_relations, rtt_relations,
                   same_span, span_rank, yang_baxter_residual)
from .scalars import QScalar
from .structmaps import (bosonization_catalog, bosonization_report,
                         partial_gauss_rtt, quotient_c1_check,
                         rea_transport_report, verify_gauss)

NUMERIC_TOL = 1e-10


def _exact(item_id, ok, notes=""):
    return gated_item(item_id, ok, residual=0.0 if ok else None, notes=notes)


def suite_yangbaxter(q0=None, dim=None, degree=None):
    items = [
        _exact("quantum_yang_baxter", matrix_is_zero(yang_baxter_residual())),
        _exact("braid_relation", matrix_is_zero(braid_residual())),
    ]
    R = r_matrix()
    items.append(
        _exact(
            "r_inverse",
            matrix_is_zero(R * R.inverse() - QMatrix.identity(4)),
        )
    )
    return build_report("yangbaxter", items, q0=q0, dim=dim, degree=degree)


def suite_hecke(q0=None, dim=None, degree=None):
    items = [_exact("hecke_quadratic", matrix_is_zero(hecke_residual()))]
    Rh = r_hat()
    lam = QScalar.lam()
    qq = QScalar.qpow(1) + QScalar.qpow(-1)
    I4 = QMatrix.identity(4)
    p_anti = (I4.scale(QScalar.qpow(1)) - Rh).scale(qq.reciprocal())
    items.append(
        _exact("antisymmetrizer_idempotent",
               matrix_is_zero(p_anti * p_anti - p_anti))
    )
    sym = plane_relations(-QScalar.qpow(1))
    gra = plane_relations(QScalar.qpow(-1))
    items.append(
        _exact("symmetric_plane_rank", span_rank(sym) == 1,
               notes="(R-hat - q) on x (x) x spans one relation")
    )
    items.append(
        _exact("grassmann_plane_rank", span_rank(gra) == 3,
               notes="(R-hat + q^-1) on xi (x) xi spans three relations")
    )
    osc_A = build_presentation("osc_A")
    items.append(
        _exact(
            "oscillator_vector_relation",
            same_span(oscillator_vector_relations(),
                      osc_A.relation_elements()),
            notes="inhomogeneous R-hat relation on (A, A†)",
        )
    )
    return build_report("hecke", items, q0=q0, dim=dim, degree=degree)


def suite_rtt(q0=None, dim=None, degree=None):
    rtt = rtt_relations()
    glq2 = build_presentation("glq2")
    items = [
        _exact("relation_rank", span_rank(rtt) == 6,
               notes="16 RTT entries span exactly 6 relations"),
        _exact("ideal_match", same_span(rtt, glq2.relation_elements())),
    ]
    r1, r2 = eps_covariance_residual()
    items.append(
        _exact("eps_covariance",
               matrix_is_zero(normalize_matrix(r1, glq2))
               and matrix_is_zero(normalize_matrix(r2, glq2)),
               notes="T eps T^t = T^t eps T = eps D_q")
    )
    det = quantum_determinant()
    items.append(
        _exact("determinant_central", glq2.is_central(det),
               notes="a d - q b c commutes with all generators")
    )
    det_pres = build_presentation("glq2_det")
    img = det_pres.normalize(det - Element.word(("D",)))
    items.append(_exact("determinant_adjoined", img.is_zero(),
                        notes="a d - q b c rewrites to D"))
    return build_report("rtt", items, q0=q0, dim=dim, degree=degree)


def suite_re(q0=None, dim=None, degree=None):
    re = re_relations()
    rea2 = build_presentation("rea2")
    items = [
        _exact("relation_rank", span_rank(re) == 6,
               notes="16 reflection-equation entries span 6 relations"),
        _exact("ideal_match", same_span(re, rea2.relation_elements())),
        _exact("c1_central", rea2.is_central(rea2_c1()),
               notes="beta - q gamma"),
        _exact("c2_central", rea2.is_central(rea2_c2()),
               notes="alpha delta - q^2 beta gamma"),
    ]
    return build_report("re", items, q0=q0, dim=dim, degree=degree)


_HOPF_NAMES = ("glq2", "glq2_det", "slq2", "suq11_fun")


def suite_hopf(q0=None, dim=None, degree=2):
    items = []
    for name in _HOPF_NAMES:
        h = hopf_structure(name)
        fails = h.check(degree=degree)
        bad = {k: v for k, v in fails.items() if v}
        notes = ("bialgebra only" if h.antipode_images is None
                 else "full Hopf")
        if bad:
            notes += "; failing: " + ", ".join(sorted(bad))
        items.append(_exact("axioms_%s" % name, not bad, notes=notes))
    glq2 = build_presentation("glq2")
    ok = True
    for words in _short_words(glq2, 3):
        e = Element.word(words)
        diff = glq2.normalize(e) - e
        if diff.is_zero():
            continue
        for sign in ("+", "-"):
            for i in range(2):
                for j in range(2):
                    v = pairing_element(sign, i, j, diff)
                    ok = ok and v.is_zero()
    items.append(
        _exact("pairing_annihilates_ideal", ok,
               notes="L^± functionals vanish on RTT relations, words "
                     "to length 3")
    )
    spot = pairing_element("+", 0, 0, Element.word(("a",)))
    items.append(
        _exact("pairing_spot_values", spot == QScalar.spow(1),
               notes="<L^+_11, a> = q^(1/2)")
    )
    slq2 = build_presentation("slq2")
    for pair in (("+", "+"), ("-", "-"), ("+", "-")):
        res = normalize_matrix(rll_residual(*pair), slq2)
        items.append(_exact("rll_%s%s" % pair, matrix_is_zero(res)))
    return build_report("hopf", items, q0=q0, dim=dim, degree=degree)


def _short_words(pres, max_len):
    gens = pres.generators
    out = []
    level = [()]
    for _ in range(max_len):
        level = [w + (g,) for w in level for g in gens]
        out.extend(level)
    return out


_COMODULE_NAMES = ("plane", "grassmann", "two_planes", "rea_glq2",
                   "oscA_suq11", "contraction_slq2")


def suite_comodule(q0=None, dim=None, degree=2):
    items = []
    for name in _COMODULE_NAMES:
        cm = comodule(name)
        fails = cm.check(degree=degree)
        bad = {k: v for k, v in fails.items() if v}
        notes = "%s coaction" % cm.side
        if bad:
            notes += "; failing: " + ", ".join(sorted(bad))
        items.append(_exact("covariance_%s" % name, not bad, notes=notes))
    r1, r2 = rea_center_coaction_residuals()
    items.append(
        _exact("rea_center_coaction", r1.is_zero() and r2.is_zero(),
               notes="c1, c2 coact by D_q and D_q^2")
    )
    return build_report("comodule", items, q0=q0, dim=dim, degree=degree)


def suite_gauss(q0=None, dim=None, degree=None):
    g = verify_gauss()
    items = [
        _exact("forward_relations", g["forward_relations"] == []),
        _exact("backward_relations", g["backward_relations"] == []),
        _exact("round_trip", g["round_trip"] == [],
               notes="backward(forward(g)) = g for all four entries"),
        _exact("det_product", g["det_product"].is_zero(),
               notes="forward(a d - q b c) = A B"),
    ]
    pg = partial_gauss_rtt()
    items.append(_exact("partial_lower_rtt", matrix_is_zero(pg["lower"])))
    items.append(_exact("partial_upper_rtt", matrix_is_zero(pg["upper"])))
    return build_report("gauss", items, q0=q0, dim=dim, degree=degree)


def suite_bosonize(q0=0.7, dim=16, degree=None):
    modes = {e["id"]: e["mode"] for e in bosonization_catalog()}
    items = []
    for rec in bosonization_report(dim=dim, q0=q0):
        items.append(
            gated_item(rec["id"], rec["status"] == "pass",
                       residual=rec["residual"], notes=modes[rec["id"]])
        )
    return build_report("bosonize", items, q0=q0, dim=dim, degree=degree)


def suite_fock(q0=0.7, dim=16, degree=None):
    items = []
    for algebra, exact_too in (("osc_q", True), ("osc_q_qinv", False),
                               ("osc_alpha", True), ("osc_A", False)):
        rep = fock_rep(algebra, dim, q0)
        res = rep_residual(rep)
        items.append(
            gated_item("%s_float" % algebra, res < NUMERIC_TOL, residual=res)
        )
        if exact_too:
            erep = fock_rep(algebra, dim, q0, exact=True)
            eres = rep_residual(erep)
            items.append(
                gated_item("%s_exact" % algebra, eres == 0.0, residual=eres,
                           notes="rescaled basis, identically zero")
            )
    srep = singular_rep(dim, q0)
    sres = rep_residual(srep)
    items.append(
        gated_item("singular_rep", sres < NUMERIC_TOL, residual=sres,
                   notes="q^(-N/2)-scaled ladder at the representation "
                         "boundary")
    )
    cq = central_values(fock_rep("osc_q", dim, q0), center_osc_q())
    items.append(
        gated_item("center_osc_q", cq["rel_dev"] < 1e-12,
                   residual=cq["rel_dev"],
                   notes="relative deviation; term norms reach %.1e"
                         % cq["scale"])
    )
    za = central_values(fock_rep("osc_alpha", dim, q0), center_osc_alpha())
    items.append(
        gated_item("center_osc_alpha", za["rel_dev"] < 1e-12,
                   residual=za["rel_dev"], notes="relative deviation")
    )
    blocks = schwinger_decompose(min(dim, 8), q0)
    worst = max(max(b["residual"], b["invariance"]) for b in blocks)
    items.append(
        gated_item("schwinger_blocks", worst < NUMERIC_TOL, residual=worst,
                   notes="%d irreducible blocks, dims %s"
                         % (len(blocks),
                            ",".join(str(b["dim"]) for b in blocks)))
    )
    bridge = classical_bridge_residual(dim, q0)
    worst = max(bridge["construction_gap"], bridge["relation_residual"])
    items.append(
        gated_item("classical_bridge", worst < NUMERIC_TOL, residual=worst,
                   notes="undeformed oscillator from the q-ladder")
    )
    return build_report("fock", items, q0=q0, dim=dim, degree=degree)


def suite_contraction(q0=0.5, dim=16, degree=None):
    rows = contraction_probe(q0=q0, dim=dim)
    items = []
    for row in rows:
        items.append(
            gated_item("j_%d" % row["j"], True, residual=row["residual"],
                       notes="eps=%.2e, scaled c2 gap %.3e"
                             % (row["eps"], row["c2_gap"]))
        )
    residuals = [row["residual"] for row in rows]
    items.append(
        _exact("monotone_decrease",
               all(x > y for x, y in zip(residuals, residuals[1:])))
    )
    ok_rate = True
    for first, second in zip(rows, rows[1:]):
        expected = (second["eps"] / first["eps"]) ** 2
        measured = second["residual"] / first["residual"]
        ok_rate = ok_rate and abs(measured / expected - 1.0) < 1e-6
    items.append(
        _exact("quadratic_rate", ok_rate,
               notes="residual ratios match eps^2 ratios to 1e-6")
    )
    gaps = [row["c2_gap"] for row in rows]
    items.append(
        gated_item("central_trend",
                   all(x > y for x, y in zip(gaps, gaps[1:]))
                   and gaps[-1] < 1e-8,
                   residual=gaps[-1],
                   notes="scaled Casimir approaches q0^2/(q0^2 - 1)")
    )
    return build_report("contraction", items, q0=q0, dim=dim, degree=degree)


def suite_quotient(q0=None, dim=None, degree=None):
    rt = rea_transport_report()
    items = [
        _exact("constant_eps_q",
               matrix_is_zero(rt["constant_residuals"]["eps_q"]),
               notes="quantum metric solves the reflection equation"),
        _exact(
            "constant_upper_family",
            all(matrix_is_zero(m)
                for k, m in rt["constant_residuals"].items()
                if k != "eps_q"),
            notes="upper-triangular three-parameter family",
        ),
        _exact("transport_relations", rt["transport_defects"] == [],
               notes="K = T T^t defines rea2 -> glq2"),
        _exact("transport_matrix_re", matrix_is_zero(rt["matrix_residual"]),
               notes="reflection equation holds for the image matrix"),
        _exact("c1_image_zero", rt["c1_image"].is_zero(),
               notes="the transported K is c1-symmetric"),
    ]
    qc = quotient_c1_check()
    items.append(_exact("projection", qc["projection_defects"] == []))
    items.append(
        _exact("identification", qc["identification_defects"] == [],
               notes="c1 = 0 quotient carries a GL_{q^2}(2) structure")
    )
    items.append(_exact("quotient_c1_zero", qc["c1_image"].is_zero()))
    return build_report("quotient", items, q0=q0, dim=dim, degree=degree)


def suite_confluence(q0=None, dim=None, degree=4):
    items = []
    for name in catalog_names():
        pres = build_presentation(name)
        bad = pres.check_overlaps(degree)
        notes = "" if not bad else "; ".join(
            "%s: %s" % ("*".join(rec["word"]),
                        format_element(rec["defect"], pres))
            for rec in bad[:3]
        )
        items.append(_exact(name, not bad, notes=notes))
    return build_report("confluence", items, q0=q0, dim=dim, degree=degree)


SUITES = {
    "yangbaxter": suite_yangbaxter,
    "hecke": suite_hecke,
    "rtt": suite_rtt,
    "re": suite_re,
    "hopf": suite_hopf,
    "comodule": suite_comodule,
    "gauss": suite_gauss,
    "bosonize": suite_bosonize,
    "fock": suite_fock,
    "contraction": suite_contraction,
    "quotient": suite_quotient,
    "confluence": suite_confluence,
}

_ALL_ORDER = ("yangbaxter", "hecke", "rtt", "re", "hopf", "comodule",
              "gauss", "bosonize", "fock", "contraction", "quotient",
              "confluence")


def run_suite(name, q0=0.7, dim=16, degree=2):
    if name == "all":
        reports = []
        for sub in _ALL_ORDER:
            reports.append(run_suite(sub, q0=q0, dim=dim, degree=degree))
        return merge_reports(reports)
    if name not in SUITES:
        raise KeyError("unknown suite %r" % name)
    fn = SUITES[name]
    if name == "contraction":
        return fn(dim=dim)
    if name == "confluence":
        return fn(degree=max(degree, 4))
    if name in ("bosonize", "fock"):
        return fn(q0=q0, dim=dim)
    if name in ("hopf", "comodule"):
        return fn(q0=q0, dim=dim, degree=degree)
    return fn(q0=q0, dim=dim, degree=degree)


def suite_names():
    return list(_ALL_ORDER) + ["all"]
