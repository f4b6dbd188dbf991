"""Structural morphisms: Gauss decomposition, bosonization, REA transport.

The bosonization catalog records, for each realization, how it was
validated (symbolic rewrite to zero, or numeric Fock residual) and any
variant resolution that was needed: where a map as commonly stated fails
some defining relation, the catalog ships the corrected variant and the
notes describe the sweep that singled it out.  Notes are part of the
deliverable; entries never silently patch a map.
"""

from __future__ import annotations

import cmath

import numpy as np

from .catalog import (build_presentation, quantum_determinant, rea2_c1,
                      rea2_c2)
from .fock import (fock_rep, numeric_morphism_residual, two_mode_matrices,
                   _element_matrix, _masked_max, _sym_qnum)
from .freealg import Element, MorphismMap, compose, format_element
from .rmat import QMatrix, eps_q, k_upper, normalize_matrix, matrix_is_zero, r_matrix
from .scalars import QScalar, qeval

_Q = QScalar.qpow
_E = Element.word


def _one():
    return QScalar.one()


# ---------------------------------------------------------------------------
# Gauss decomposition of the quantum matrix
# ---------------------------------------------------------------------------


def gauss_forward():
    """T = T_L T_D T_R with T_L = [[1,u],[0,1]], T_D = diag(A,B),
    T_R = [[1,0],[z,1]]: a = A + uBz, b = uB, c = Bz, d = B."""
    src = build_presentation("glq2")
    tgt = build_presentation("gauss_glq2")
    images = {
        "a": Element({("A",): _one(), ("u", "B", "z"): _one()}),
        "b": _E(("u", "B")),
        "c": _E(("B", "z")),
        "d": _E(("B",)),
    }
    return MorphismMap("gauss_forward", src, tgt, images)


def gauss_backward():
    """Inverse substitution into the determinant extension:
    B = d, z = d^-1 c, u = b d^-1, A = a - b d^-1 c."""
    src = build_presentation("gauss_glq2")
    tgt = build_presentation("glq2_inv")
    images = {
        "A": Element({("a",): _one(), ("b", "di", "c"): -_one()}),
        "B": _E(("d",)),
        "u": _E(("b", "di")),
        "z": _E(("di", "c")),
    }
    return MorphismMap("gauss_backward", src, tgt, images)


def gauss_maps():
    return gauss_forward(), gauss_backward()


def verify_gauss():
    """Three clause groups, all required to vanish identically:
    (i) forward images of the glq2 relations, (ii) backward images of the
    gauss_glq2 relations, (iii) the round trip backward(forward(g)) - g
    for each quantum-matrix entry; plus forward(D_q) = AB."""
    fwd, bwd = gauss_maps()
    glq2_inv = build_presentation("glq2_inv")
    out = {
        "forward_relations": fwd.verify(),
        "backward_relations": bwd.verify(),
        "round_trip": [],
        "det_product": None,
    }
    rt = compose(bwd, fwd)
    for g in ("a", "b", "c", "d"):
        diff = glq2_inv.normalize(rt.apply(_E((g,))) - _E((g,)))
        if not diff.is_zero():
            out["round_trip"].append((g, diff))
    det_img = fwd.apply(quantum_determinant())
    gauss = build_presentation("gauss_glq2")
    out["det_product"] = gauss.normalize(det_img - _E(("A", "B")))
    return out


def rtt_matrix_residuals(M, pres):
    """R M1 M2 - M2 M1 R for a 2x2 matrix of Elements, normalized."""
    R = r_matrix().lift()
    I2 = QMatrix.identity(2).lift()
    M1 = M.kron(I2)
    M2 = I2.kron(M)
    return normalize_matrix((R * M1 * M2) - (M2 * M1 * R), pres)


def partial_gauss_rtt():
    """The partial products T_D T_R = [[A,0],[Bz,B]] and T_L T_D =
    [[A,uB],[0,B]] each satisfy the RTT exchange relations."""
    gauss = build_presentation("gauss_glq2")
    z = Element.zero()
    t_lower = QMatrix([[_E(("A",)), z], [_E(("B", "z")), _E(("B",))]])
    t_upper = QMatrix([[_E(("A",)), _E(("u", "B"))], [z, _E(("B",))]])
    return {
        "lower": rtt_matrix_residuals(t_lower, gauss),
        "upper": rtt_matrix_residuals(t_upper, gauss),
    }


# ---------------------------------------------------------------------------
# bosonization catalog
# ---------------------------------------------------------------------------


def _entry_pair_qqinv_gauss():
    lam = QScalar.lam()
    src = build_presentation("gauss_glq2")
    tgt = build_presentation("osc_pair_qqinv")
    images = {
        "u": Element({("b1d", "b2"): lam * _Q(-1)}),
        "z": Element({("a1", "a2d"): -lam}),
        "A": _E(("kb1", "ka1i")),
        "B": _E(("kb2", "ka2i")),
    }
    return {
        "id": "pair_qqinv_gauss",
        "mode": "symbolic",
        "map": MorphismMap("pair_qqinv_gauss", src, tgt, images),
        "notes": (
            "Gauss cell in two q/q^-1 oscillator pairs.  The z entry uses "
            "the lowering/raising pairing a1 a2d; the other pairing "
            "a1d a2 fails z B = q B z for every scalar prefactor "
            "(swept c in {±q^k: k=-2..2} and ±lambda q^k), so the "
            "dagger-flipped form is the one shipped."
        ),
    }


def _entry_pair_qqinv_free():
    src = build_presentation("gauss_glq2")
    tgt = build_presentation("osc_pair_qqinv")
    images = {
        "u": _E(("a1d",)),
        "z": _E(("a2",)),
        "A": _E(("ka1", "ka2i")),
        "B": _E(("ka2", "ka1i")),
    }
    return {
        "id": "pair_qqinv_free",
        "mode": "symbolic",
        "map": MorphismMap("pair_qqinv_free", src, tgt, images),
        "notes": (
            "Ladder operators of two modes realize the off-diagonal cell "
            "directly; all four overall prefactors are free because every "
            "gauss_glq2 relation is homogeneous in each generator "
            "(validated here with all prefactors set to 1)."
        ),
    }


def _entry_pair_qq_restricted():
    src = build_presentation("gauss_glq2")
    tgt = build_presentation("osc_pair_qq")
    images = {
        "u": _E(("a1d",)),
        "z": _E(("a2",)),
        "A": Element({("h1", "h1", "h2i", "h2i"): -_Q(-1)}),
        "B": Element({("h1i", "h1i", "h2", "h2"): -_Q(-1)}),
    }
    return {
        "id": "pair_qq_restricted",
        "mode": "symbolic",
        "map": MorphismMap("pair_qq_restricted", src, tgt, images),
        "notes": (
            "Restricted two-mode realization with diagonal entries built "
            "from number-operator group-likes: A = -q^-1 q^(M1) q^(-M2), "
            "B its mirror.  The -q^-1 q^(±M) normalization (rather than "
            "bare q^(±M)) is what makes u A = q^-1 A u and z A = q^-1 A z "
            "hold with the shared sign; bare diagonals fail no relation "
            "here, but the shipped form matches the single-mode entry's "
            "A B = D identification."
        ),
    }


def _generic_ladder(dim, q0, theta=0.3):
    """One-sided truncation of the generic-weight ladder: weights
    nu_n = n + theta, a|n> = [nu_n]|n-1>, a†|n> = |n+1>, M = diag(nu).
    With theta generic no weight is annihilated, so realizations that
    involve [M+1]^-1 or that fail on a vacuum vector are honest here;
    truncation corrupts both edges, so callers guard both."""
    lam0 = q0 - 1.0 / q0
    nu = np.array([n + theta for n in range(dim)])
    qn_sym = (q0 ** nu - q0 ** (-nu)) / lam0
    a = np.zeros((dim, dim), dtype=complex)
    ad = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        a[n - 1, n] = qn_sym[n]
        ad[n, n - 1] = 1.0
    return {"a": a, "adag": ad, "nu": nu, "w_num": qn_sym}


def _entry_single_mode(dim, q0):
    lam0 = q0 - 1.0 / q0
    src = build_presentation("gauss_glq2")
    lad = _generic_ladder(dim, q0)
    a, nu = lad["a"], lad["nu"]
    winv = np.diag([1.0 / complex(_sym_qnum(x + 1, q0)) for x in nu])
    qm = np.diag([complex(q0 ** x) for x in nu])
    qmi = np.diag([complex(q0 ** -x) for x in nu])
    images = {
        "u": qm @ winv @ a,
        "z": winv @ (q0 * qm) @ a,
        "A": lam0 * (q0 * qm) @ winv @ qmi @ a,
        "B": lad["adag"],
    }
    guard = 2
    keep = list(range(guard, dim - guard))
    return src, images, keep


def _entry_schwinger():
    src = build_presentation("slq2")
    tgt = build_presentation("osc_pair_qq")
    images = {
        "k": _E(("h1", "h2i")),
        "ki": _E(("h1i", "h2")),
        "xp": _E(("a1d", "a2")),
        "xm": _E(("a2d", "a1")),
    }
    return {
        "id": "schwinger_slq2",
        "mode": "symbolic",
        "map": MorphismMap("schwinger_slq2", src, tgt, images),
        "notes": (
            "Two-mode Schwinger realization: X+ = a1† a2, X- = a2† a1, "
            "q^J = q^((M1-M2)/2) via the half-power group-likes."
        ),
    }


def _entry_suq11_one_boson(dim, q0):
    """K+ = beta (a†)^2, K- = beta a^2, K0 = (N + 1/2)/2 over a single
    oscillator whose own deformation base is p = q^(1/2); beta = 1/[2]_p."""
    p = q0 ** 0.5
    src = build_presentation("suq11")
    base = fock_rep("osc_q", dim, p)["matrices"]
    a = base["a"]
    ad = base["adag"]
    beta = 1.0 / (p + 1.0 / p)
    w = np.diag([complex(p ** (n + 0.5)) for n in range(dim)])
    wi = np.diag(1.0 / np.diag(w))
    images = {
        "kp": beta * (ad @ ad),
        "km": beta * (a @ a),
        "w": w,
        "wi": wi,
    }
    guard = 4
    return src, images, list(range(dim - guard))


def _entry_suq11_two_boson(dim, q0):
    src = build_presentation("suq11")
    md = min(dim, 10)
    pair = two_mode_matrices(md, q0)
    s0 = q0 ** 0.5
    w = np.diag(
        [
            complex(s0 ** (n1 + n2 + 1))
            for n1 in range(md)
            for n2 in range(md)
        ]
    )
    wi = np.diag(1.0 / np.diag(w))
    images = {
        "kp": pair["adag1"] @ pair["adag2"],
        "km": pair["a2"] @ pair["a1"],
        "w": w,
        "wi": wi,
    }
    guard = 2
    keep = [
        n1 * md + n2
        for n1 in range(md - guard)
        for n2 in range(md - guard)
    ]
    return src, images, keep


def _entry_sigma(dim, q0):
    src = build_presentation("slq2")
    base = fock_rep("osc_q", dim, q0)["matrices"]
    s0 = q0 ** 0.5
    sigma2 = 1j / (s0 - 1.0 / s0)
    sigma = cmath.sqrt(sigma2)
    phase = cmath.exp(1j * cmath.pi / 4)
    k = np.diag(
        [phase * complex(s0 ** n) * q0 ** 0.25 for n in range(dim)]
    )
    ki = np.diag(1.0 / np.diag(k))
    images = {
        "xp": sigma * base["a"],
        "xm": sigma * base["adag"],
        "k": k,
        "ki": ki,
    }
    guard = 2
    return src, images, list(range(dim - guard))


def _entry_osc_q_in_alpha_half():
    src = build_presentation("osc_q")
    tgt = build_presentation("osc_alpha_half")
    images = {
        "a": _E(("h", "al")),
        "adag": _E(("ald", "h")),
        "k": _E(("h", "h")),
        "ki": _E(("hi", "hi")),
    }
    return {
        "id": "osc_q_in_alpha_half",
        "mode": "symbolic",
        "map": MorphismMap("osc_q_in_alpha_half", src, tgt, images),
        "notes": (
            "The square-root dressing a = q^(M/2) alpha, a† = alpha† "
            "q^(M/2) embeds the q-oscillator into the alpha family."
        ),
    }


def _entry_osc_A2_in_q_half():
    src = build_presentation("osc_A2")
    tgt = build_presentation("osc_q_half")
    images = {
        "A": _E(("h", "a")),
        "Adag": _E(("adag", "h")),
    }
    return {
        "id": "osc_A2_in_q_half",
        "mode": "symbolic",
        "map": MorphismMap("osc_A2_in_q_half", src, tgt, images),
        "notes": (
            "Dressing by q^(M/2) turns the unit-inhomogeneity relation at "
            "deformation q^2 into the q-oscillator exchange relation."
        ),
    }


_SIGMA_CHECKED = (("xm", "xp"), ("k", "ki"), ("ki", "k"))


def bosonization_catalog():
    """All oscillator realizations, each tagged symbolic or numeric."""
    entries = [
        _entry_pair_qqinv_gauss(),
        _entry_pair_qqinv_free(),
        _entry_pair_qq_restricted(),
        {
            "id": "single_mode_gauss",
            "mode": "numeric",
            "build": _entry_single_mode,
            "notes": (
                "Single-mode Gauss cell: u = mu q^M W^-1 a, "
                "z = nu W^-1 q^(M+1) a, A = lambda q^(M+1) W^-1 Q^M a, "
                "B = a†, W = [M+1], with free mu = nu = 1.  The inner "
                "scale Q is not free: A B = B A forces Q = q^-1 (the "
                "candidates Q in {q, 1} fail AB = BA by O(1)).  On the "
                "vacuum Fock module the three relations pairing a "
                "lowering image with B = a† fail exactly by rank-one "
                "vacuum projectors (u B - q B u = |0><0|, z B - q B z = "
                "q |0><0|, A B - B A = lambda q |0><0|), because u, z, A "
                "all annihilate |0> while B does not; the realization is "
                "a morphism on the generic-weight ladder (weights n + "
                "theta, theta generic), which is where it is validated, "
                "with both truncation edges guarded."
            ),
        },
        _entry_schwinger(),
        {
            "id": "suq11_one_boson",
            "mode": "numeric",
            "build": _entry_suq11_one_boson,
            "notes": (
                "One-boson realization K± = beta a^(±2)-ladder, "
                "K0 = (N + 1/2)/2.  The commutator [K-, K+] equals the "
                "half-shifted number [N + 1/2] only when the boson's own "
                "deformation base is p = q^(1/2); at base q the residual "
                "is O(1).  beta = 1/(p + p^-1) makes the match exact."
            ),
        },
        {
            "id": "suq11_two_boson",
            "mode": "numeric",
            "build": _entry_suq11_two_boson,
            "notes": (
                "Two-boson realization K+ = a1† a2†, K- = a2 a1, "
                "K0 = (N1 + N2 + 1)/2 at base q; rests on the exact "
                "identity [n+1][m+1] - [n][m] = [n+m+1]."
            ),
        },
        {
            "id": "sigma_slq2_partial",
            "mode": "numeric_partial",
            "build": _entry_sigma,
            "rules": _SIGMA_CHECKED,
            "notes": (
                "Single-boson sl_q(2) ladder X+ = sigma a, X- = sigma a†, "
                "sigma^2 = i/(q^(1/2) - q^(-1/2)), q^(2J) = i q^(N+1/2). "
                "The exchange relation [X+, X-] = [2J] and the k k^-1 = 1 "
                "pair hold to rounding; the Cartan conjugations do not "
                "and cannot: with both X± proportional to ladder "
                "operators of the same mode, q^J X± q^(-J) = q^(-1/2) X± "
                "for both signs, regardless of how J is shifted, so the "
                "moves q^J X± = q^(±1) X± q^J fail by q^(±3/2).  No "
                "variant of the J offset (swept c in {0, ±1/4, ±1/2, "
                "±3/4, ±1} added to J) repairs them; the realization is "
                "shipped with its validated scope limited to the checked "
                "rules."
            ),
        },
        _entry_osc_q_in_alpha_half(),
        _entry_osc_A2_in_q_half(),
    ]
    return entries


def validate_bosonization_entry(entry, dim=16, q0=0.7, guard=2):
    """Run an entry's own validation: symbolic maps must rewrite every
    source relation to zero; numeric entries must have Fock residual
    below 1e-10 on the guarded band (restricted to entry["rules"] for
    partial entries).  Returns {"id", "status", "residual", "defects"}."""
    out = {"id": entry["id"], "status": "fail", "residual": None,
           "defects": []}
    if entry["mode"] == "symbolic":
        defects = entry["map"].verify()
        out["defects"] = [
            (d["rule"], format_element(d["defect"], entry["map"].target))
            for d in defects
        ]
        out["residual"] = 0.0 if not defects else 1.0
        out["status"] = "pass" if not defects else "fail"
        return out
    src, images, keep = entry["build"](dim, q0)
    dims = next(iter(images.values())).shape[0]
    rules = entry.get("rules")
    worst = 0.0
    for lhs, rhs in src.rules.items():
        if rules is not None and lhs not in rules:
            continue
        rel = Element.word(lhs) - rhs
        m = _element_matrix(rel, images, dims, q0, exact=False)
        worst = max(worst, float(np.max(np.abs(m[:, keep]))))
    out["residual"] = worst
    out["status"] = "pass" if worst < 1e-10 else "fail"
    return out


def bosonization_report(dim=16, q0=0.7):
    return [
        validate_bosonization_entry(e, dim=dim, q0=q0)
        for e in bosonization_catalog()
    ]


def export_bosonization_catalog():
    """JSON-able snapshot of the catalog (maps rendered as strings)."""
    out = []
    for e in bosonization_catalog():
        rec = {"id": e["id"], "mode": e["mode"], "notes": e["notes"]}
        if e["mode"] == "symbolic":
            m = e["map"]
            rec["source"] = m.source.name
            rec["target"] = m.target.name
            rec["images"] = {
                g: format_element(img, m.target)
                for g, img in m.images.items()
            }
        else:
            src = e["build"](8, 0.5)[0]
            rec["source"] = src.name
            rec["target"] = "fock"
            if "rules" in e:
                rec["checked_rules"] = ["*".join(r) for r in e["rules"]]
        out.append(rec)
    return out


# ---------------------------------------------------------------------------
# reflection-equation transport
# ---------------------------------------------------------------------------


def constant_re_residual(K):
    """R K1 R^t1 K2 - K2 R^t1 K1 R for a numeric/scalar 2x2 K (QScalar
    entries); returns the exact 4x4 residual."""
    R = r_matrix()
    Rt1 = R.t1()
    I2 = QMatrix.identity(2)
    K1 = K.kron(I2)
    K2 = I2.kron(K)
    return (R * K1 * Rt1 * K2) - (K2 * Rt1 * K1 * R)


def re_matrix_residuals(K, pres):
    """Reflection-equation residual for a 2x2 matrix of Elements."""
    R = r_matrix().lift()
    Rt1 = r_matrix().t1().lift()
    I2 = QMatrix.identity(2).lift()
    K1 = K.kron(I2)
    K2 = I2.kron(K)
    res = (R * K1 * Rt1 * K2) - (K2 * Rt1 * K1 * R)
    return normalize_matrix(res, pres)


def rea_transport():
    """K = T T^t transports the quantum matrix to a reflection-equation
    solution: the algebra map rea2 -> glq2 sending K entries to the
    corresponding products of quantum-matrix entries."""
    src = build_presentation("rea2")
    tgt = build_presentation("glq2")
    one = _one()
    images = {
        "alpha": Element({("a", "a"): one, ("b", "b"): one}),
        "beta": Element({("a", "c"): one, ("b", "d"): one}),
        "gamma": Element({("c", "a"): one, ("d", "b"): one}),
        "delta": Element({("c", "c"): one, ("d", "d"): one}),
    }
    return MorphismMap("rea_transport", src, tgt, images)


def rea_transport_report():
    """Constant solutions, the T T^t transport, and the image of c1."""
    glq2 = build_presentation("glq2")
    tr = rea_transport()
    K_sym = QMatrix(
        [[tr.images["alpha"], tr.images["beta"]],
         [tr.images["gamma"], tr.images["delta"]]]
    )
    consts = {"eps_q": constant_re_residual(eps_q())}
    for label, (r, m, n) in {
        "upper(1,0,1)": (_one(), QScalar.zero(), _one()),
        "upper(1,lam,q)": (_one(), QScalar.lam(), _Q(1)),
        "upper(q,1,qi)": (_Q(1), _one(), _Q(-1)),
    }.items():
        consts[label] = constant_re_residual(k_upper(r, m, n))
    return {
        "constant_residuals": consts,
        "transport_defects": tr.verify(),
        "matrix_residual": re_matrix_residuals(K_sym, glq2),
        "c1_image": glq2.normalize(tr.apply(rea2_c1())),
        "c2_image": glq2.normalize(tr.apply(rea2_c2())),
    }


# ---------------------------------------------------------------------------
# the c1 = 0 quotient and its GL_{q^2}(2) identification
# ---------------------------------------------------------------------------


def quotient_projection():
    """rea2 -> rea2_sym, beta |-> q gamma (the c1 = 0 quotient)."""
    src = build_presentation("rea2")
    tgt = build_presentation("rea2_sym")
    images = {
        "alpha": _E(("alpha",)),
        "beta": Element({("gamma",): _Q(1)}),
        "gamma": _E(("gamma",)),
        "delta": _E(("delta",)),
    }
    return MorphismMap("quotient_projection", src, tgt, images)


def quotient_identification():
    """GL_{q^2}(2) -> rea2_sym: a, b, c, d |-> alpha, q gamma, gamma,
    delta; exhibits the quotient as a quantum matrix at deformation q^2."""
    src = build_presentation("glq2_q2")
    tgt = build_presentation("rea2_sym")
    images = {
        "a": _E(("alpha",)),
        "b": Element({("gamma",): _Q(1)}),
        "c": _E(("gamma",)),
        "d": _E(("delta",)),
    }
    return MorphismMap("quotient_identification", src, tgt, images)


def quotient_c1_check():
    pi = quotient_projection()
    theta = quotient_identification()
    tgt = build_presentation("rea2_sym")
    return {
        "projection_defects": pi.verify(),
        "identification_defects": theta.verify(),
        "c1_image": tgt.normalize(pi.apply(rea2_c1())),
    }
