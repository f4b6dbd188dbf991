"""Catalog of rank-2 quantum-algebra presentations.

Each entry is a terminating, locally confluent rewrite system.  Generator
orders and rule orientations were chosen so that the degree-4 overlap audit
(freealg.Presentation.check_overlaps) comes back empty for every entry; a
few presentations therefore differ from the most naive orientation, most
notably glq2_det / glq2_inv, where the quantum determinant D is adjoined as
a weight-zero generator and the products bc, cb rewrite to q^-1(ad - D).

Naming is ASCII: adag for the raised ladder operator, k/ki for the
group-like pair q^N and q^-N (or q^J), h/hi for half-power group-likes
q^(N/2), al/ald for the alpha-oscillator ladder pair, rl for the central
square-root-of-lambda marker used by the contraction coaction.
"""

from __future__ import annotations

from .freealg import Element, MorphismMap, Presentation
from .scalars import QScalar, qnum

_Q = QScalar.qpow
_S = QScalar.spow


def _lam():
    return QScalar.lam()


def _lami():
    return QScalar.lam().reciprocal()


def _E(terms):
    return Element(terms)


# ---------------------------------------------------------------------------
# quantum group GL_q(2) and its determinant/inverse extensions
# ---------------------------------------------------------------------------


def _glq2_rules(q_exp=1):
    """The six GL_q(2) rules; q_exp=2 gives the GL_{q^2}(2) variant."""
    q = _Q(q_exp)
    qi = _Q(-q_exp)
    lam = q - qi
    return {
        ("b", "a"): {("a", "b"): qi},
        ("c", "a"): {("a", "c"): qi},
        ("c", "b"): {("b", "c"): QScalar.one()},
        ("d", "a"): {("a", "d"): QScalar.one(), ("b", "c"): -lam},
        ("d", "b"): {("b", "d"): qi},
        ("d", "c"): {("c", "d"): qi},
    }


def _build_glq2():
    return Presentation("glq2", ("a", "b", "c", "d"), _glq2_rules())


def _build_glq2_q2():
    return Presentation("glq2_q2", ("a", "b", "c", "d"), _glq2_rules(q_exp=2))


def _det_adjoined_rules(extra_gens=()):
    """GL_q(2) rules rewritten around an adjoined central determinant D.

    bc and cb rewrite to q^-1(ad - D), which keeps the system confluent
    once D, D^-1 (and optionally d^-1) join the alphabet; the naive rule
    ad -> qbc + D is not confluent.
    """
    qi = _Q(-1)
    rules = {
        ("b", "a"): {("a", "b"): qi},
        ("c", "a"): {("a", "c"): qi},
        ("b", "c"): {("a", "d"): qi, ("D",): -qi},
        ("c", "b"): {("a", "d"): qi, ("D",): -qi},
        ("d", "a"): {("a", "d"): _Q(-2), ("D",): _lam() * qi},
        ("d", "b"): {("b", "d"): qi},
        ("d", "c"): {("c", "d"): qi},
    }
    for central in ("D", "Di"):
        for g in ("a", "b", "c", "d") + tuple(extra_gens):
            rules[(central, g)] = {(g, central): QScalar.one()}
    rules[("D", "Di")] = {(): QScalar.one()}
    rules[("Di", "D")] = {(): QScalar.one()}
    return rules


def _build_glq2_det():
    return Presentation(
        "glq2_det",
        ("a", "b", "c", "d", "D", "Di"),
        _det_adjoined_rules(),
        weights={"D": 0, "Di": 0},
        inverses={"D": "Di", "Di": "D"},
    )


def _build_glq2_inv():
    rules = _det_adjoined_rules(extra_gens=("di",))
    q2 = _Q(2)
    rules.update(
        {
            ("d", "di"): {(): QScalar.one()},
            ("di", "d"): {(): QScalar.one()},
            ("di", "a"): {
                ("a", "di"): q2,
                ("di", "di", "D"): -_Q(1) * _lam(),
            },
            ("di", "b"): {("b", "di"): _Q(1)},
            ("di", "c"): {("c", "di"): _Q(1)},
        }
    )
    return Presentation(
        "glq2_inv",
        ("a", "b", "c", "d", "di", "D", "Di"),
        rules,
        weights={"di": 0, "D": 0, "Di": 0},
        inverses={"d": "di", "di": "d", "D": "Di", "Di": "D"},
    )


# ---------------------------------------------------------------------------
# quantum algebra sl_q(2) and the su_q(1,1) real form
# ---------------------------------------------------------------------------


def _build_slq2():
    li = _lami()
    rules = {
        ("xm", "xp"): {
            ("xp", "xm"): QScalar.one(),
            ("k", "k"): -li,
            ("ki", "ki"): li,
        },
        ("xp", "k"): {("k", "xp"): _Q(-1)},
        ("xp", "ki"): {("ki", "xp"): _Q(1)},
        ("xm", "k"): {("k", "xm"): _Q(1)},
        ("xm", "ki"): {("ki", "xm"): _Q(-1)},
        ("k", "ki"): {(): QScalar.one()},
        ("ki", "k"): {(): QScalar.one()},
    }
    return Presentation(
        "slq2",
        ("k", "ki", "xp", "xm"),
        rules,
        weights={"k": 0, "ki": 0},
        inverses={"k": "ki", "ki": "k"},
        display={"xp": "X+", "xm": "X-", "k": "q^J", "ki": "q^-J"},
    )


def _build_suq11():
    li = _lami()
    rules = {
        ("km", "kp"): {
            ("kp", "km"): QScalar.one(),
            ("w", "w"): li,
            ("wi", "wi"): -li,
        },
        ("kp", "w"): {("w", "kp"): _Q(-1)},
        ("kp", "wi"): {("wi", "kp"): _Q(1)},
        ("km", "w"): {("w", "km"): _Q(1)},
        ("km", "wi"): {("wi", "km"): _Q(-1)},
        ("w", "wi"): {(): QScalar.one()},
        ("wi", "w"): {(): QScalar.one()},
    }
    return Presentation(
        "suq11",
        ("w", "wi", "kp", "km"),
        rules,
        weights={"w": 0, "wi": 0},
        inverses={"w": "wi", "wi": "w"},
        display={"kp": "K+", "km": "K-", "w": "q^K0", "wi": "q^-K0"},
    )


def _build_suq11_fun():
    """SU_q(1,1) function algebra: GL_q(2) entries a,b,bs,as with D_q = 1.

    bs and as play the roles of c and d; the U_q(1,1) involution sends
    b -> q*bs and a -> as, so the same letters serve as the starred pair.
    """
    qi = _Q(-1)
    dq_rhs = {("a", "as"): qi, (): -qi}
    rules = {
        ("b", "a"): {("a", "b"): qi},
        ("bs", "a"): {("a", "bs"): qi},
        ("as", "a"): {("a", "as"): _Q(-2), (): _lam() * qi},
        ("b", "bs"): dict(dq_rhs),
        ("bs", "b"): dict(dq_rhs),
        ("as", "b"): {("b", "as"): qi},
        ("as", "bs"): {("bs", "as"): qi},
    }
    return Presentation("suq11_fun", ("a", "b", "bs", "as"), rules)


# ---------------------------------------------------------------------------
# the q-oscillator family
# ---------------------------------------------------------------------------


def _group_like_moves(ladder_down, ladder_up, k, ki, down_coef):
    """Conjugation moves for a group-like k past a ladder pair.

    down_coef is the scalar c in the oriented rule (k, down) -> c (down, k);
    the remaining three moves follow by inversion.
    """
    c = down_coef
    ci = c.reciprocal()
    return {
        (k, ladder_down): {(ladder_down, k): c},
        (k, ladder_up): {(ladder_up, k): ci},
        (ki, ladder_down): {(ladder_down, ki): ci},
        (ki, ladder_up): {(ladder_up, ki): c},
        (k, ki): {(): QScalar.one()},
        (ki, k): {(): QScalar.one()},
    }


def _build_osc_q():
    rules = {
        ("adag", "a"): {("a", "adag"): _Q(-1), ("ki",): -_Q(-1)},
    }
    rules.update(_group_like_moves("a", "adag", "k", "ki", _Q(-1)))
    return Presentation(
        "osc_q",
        ("a", "adag", "k", "ki"),
        rules,
        weights={"k": 0, "ki": 0},
        inverses={"k": "ki", "ki": "k"},
        display={"adag": "a†", "k": "q^N", "ki": "q^-N"},
    )


def _build_osc_q_qinv():
    li = _lami()
    rules = {
        ("adag", "a"): {("k",): li, ("ki",): -li},
        ("a", "adag"): {("k",): li * _Q(1), ("ki",): -li * _Q(-1)},
    }
    rules.update(_group_like_moves("a", "adag", "k", "ki", _Q(-1)))
    return Presentation(
        "osc_q_qinv",
        ("a", "adag", "k", "ki"),
        rules,
        weights={"k": 0, "ki": 0},
        inverses={"k": "ki", "ki": "k"},
        display={"adag": "a†", "k": "q^N", "ki": "q^-N"},
    )


def _build_osc_alpha():
    rules = {
        ("ald", "al"): {("al", "ald"): QScalar.one(), ("ki", "ki"): -QScalar.one()},
        ("al", "k"): {("k", "al"): _Q(1)},
        ("al", "ki"): {("ki", "al"): _Q(-1)},
        ("ald", "k"): {("k", "ald"): _Q(-1)},
        ("ald", "ki"): {("ki", "ald"): _Q(1)},
        ("k", "ki"): {(): QScalar.one()},
        ("ki", "k"): {(): QScalar.one()},
    }
    return Presentation(
        "osc_alpha",
        ("k", "ki", "al", "ald"),
        rules,
        weights={"k": 0, "ki": 0},
        inverses={"k": "ki", "ki": "k"},
        display={"al": "α", "ald": "α†", "k": "q^N", "ki": "q^-N"},
    )


def _build_osc_alpha_half():
    one = QScalar.one()
    rules = {
        ("ald", "al"): {("al", "ald"): one, ("hi", "hi", "hi", "hi"): -one},
        ("al", "h"): {("h", "al"): _S(1)},
        ("al", "hi"): {("hi", "al"): _S(-1)},
        ("ald", "h"): {("h", "ald"): _S(-1)},
        ("ald", "hi"): {("hi", "ald"): _S(1)},
        ("h", "hi"): {(): one},
        ("hi", "h"): {(): one},
    }
    return Presentation(
        "osc_alpha_half",
        ("h", "hi", "al", "ald"),
        rules,
        weights={"h": 0, "hi": 0},
        inverses={"h": "hi", "hi": "h"},
        display={"al": "α", "ald": "α†", "h": "q^(N/2)", "hi": "q^(-N/2)"},
    )


def _build_osc_alpha_rl():
    """osc_alpha with a central marker rl whose square rewrites to lambda."""
    base = _build_osc_alpha()
    rules = {lhs: rhs for lhs, rhs in base.rules.items()}
    for g in ("k", "ki", "al", "ald"):
        rules[("rl", g)] = {(g, "rl"): QScalar.one()}
    rules[("rl", "rl")] = {(): _lam()}
    return Presentation(
        "osc_alpha_rl",
        ("k", "ki", "al", "ald", "rl"),
        rules,
        weights={"k": 0, "ki": 0, "rl": 0},
        inverses={"k": "ki", "ki": "k"},
        display={"al": "α", "ald": "α†", "rl": "λ^(1/2)"},
    )


def _build_osc_A():
    rules = {("Adag", "A"): {("A", "Adag"): _Q(-1), (): -_Q(-1)}}
    return Presentation(
        "osc_A", ("A", "Adag"), rules, display={"Adag": "A†"}
    )


def _build_osc_A2():
    rules = {("Adag", "A"): {("A", "Adag"): _Q(-2), (): -_Q(-2)}}
    return Presentation(
        "osc_A2", ("A", "Adag"), rules, display={"Adag": "A†"}
    )


def _build_osc_q_half():
    rules = {
        ("adag", "a"): {("a", "adag"): _Q(-1), ("hi", "hi"): -_Q(-1)},
        ("h", "a"): {("a", "h"): _S(-1)},
        ("h", "adag"): {("adag", "h"): _S(1)},
        ("hi", "a"): {("a", "hi"): _S(1)},
        ("hi", "adag"): {("adag", "hi"): _S(-1)},
        ("h", "hi"): {(): QScalar.one()},
        ("hi", "h"): {(): QScalar.one()},
    }
    return Presentation(
        "osc_q_half",
        ("a", "adag", "h", "hi"),
        rules,
        weights={"h": 0, "hi": 0},
        inverses={"h": "hi", "hi": "h"},
        display={"adag": "a†", "h": "q^(N/2)", "hi": "q^(-N/2)"},
    )


def _mode_rules_q(x, xd, k, ki):
    """Deformation-q oscillator mode: x xd - q xd x = ki (= q^-number)."""
    rules = {(xd, x): {(x, xd): _Q(-1), (ki,): -_Q(-1)}}
    rules.update(_group_like_moves(x, xd, k, ki, _Q(-1)))
    return rules


def _mode_rules_qinv(x, xd, k, ki):
    """Deformation-q^-1 oscillator mode: x xd - q^-1 xd x = k (= q^N)."""
    rules = {(xd, x): {(x, xd): _Q(1), (k,): -_Q(1)}}
    rules.update(_group_like_moves(x, xd, k, ki, _Q(-1)))
    return rules


def _mode_rules_restricted_half(x, xd, h, hi):
    """Restricted mode with half-power group-likes: both ladder products
    rewrite to symmetric q-numbers in h = q^(N/2)."""
    li = _lami()
    one = QScalar.one()
    rules = {
        (xd, x): {(h, h): li, (hi, hi): -li},
        (x, xd): {(h, h): li * _Q(1), (hi, hi): -li * _Q(-1)},
        (h, x): {(x, h): _S(-1)},
        (h, xd): {(xd, h): _S(1)},
        (hi, x): {(x, hi): _S(1)},
        (hi, xd): {(xd, hi): _S(-1)},
        (h, hi): {(): one},
        (hi, h): {(): one},
    }
    return rules


def _assemble_modes(name, mode_specs, weights_zero, display=None):
    """Join per-mode rule sets, adding cross-commutation between modes."""
    gens = []
    rules = {}
    blocks = []
    for mode_gens, mode_rules in mode_specs:
        gens.extend(mode_gens)
        rules.update(mode_rules)
        blocks.append(mode_gens)
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            for g1 in blocks[i]:
                for g2 in blocks[j]:
                    rules[(g2, g1)] = {(g1, g2): QScalar.one()}
    weights = {g: 0 for g in weights_zero}
    return Presentation(name, gens, rules, weights=weights, display=display)


def _build_osc_pair_qqinv():
    """Two mutually commuting families: q-oscillators a1,a2 with numbers
    M_i and q^-1-oscillators b1,b2 with numbers N_i."""
    specs = []
    zero = []
    for pfx in ("a1", "a2"):
        g = (pfx, pfx + "d", "k" + pfx, "k" + pfx + "i")
        specs.append((g, _mode_rules_q(*g)))
        zero += [g[2], g[3]]
    for pfx in ("b1", "b2"):
        g = (pfx, pfx + "d", "k" + pfx, "k" + pfx + "i")
        specs.append((g, _mode_rules_qinv(*g)))
        zero += [g[2], g[3]]
    return _assemble_modes("osc_pair_qqinv", specs, zero)


def _build_osc_pair_qq():
    """Restricted q-oscillator pair with half-power group-likes h_i."""
    specs = []
    zero = []
    for pfx, h in (("a1", "h1"), ("a2", "h2")):
        g = (pfx, pfx + "d", h, h + "i")
        specs.append((g, _mode_rules_restricted_half(*g)))
        zero += [h, h + "i"]
    return _assemble_modes("osc_pair_qq", specs, zero)


# ---------------------------------------------------------------------------
# reflection equation algebra and its c1 = 0 quotient
# ---------------------------------------------------------------------------


def _build_rea2():
    lam = _lam()
    one = QScalar.one()
    rules = {
        ("beta", "alpha"): {("alpha", "beta"): one, ("alpha", "gamma"): -lam},
        ("gamma", "alpha"): {("alpha", "gamma"): _Q(-2)},
        ("gamma", "beta"): {("beta", "gamma"): one},
        ("delta", "alpha"): {
            ("alpha", "delta"): one,
            ("beta", "gamma"): -lam * _Q(1),
            ("gamma", "gamma"): -lam,
        },
        ("delta", "beta"): {("beta", "delta"): one, ("gamma", "delta"): -lam},
        ("delta", "gamma"): {("gamma", "delta"): _Q(-2)},
    }
    return Presentation(
        "rea2",
        ("alpha", "beta", "gamma", "delta"),
        rules,
        display={"alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ"},
    )


def _build_rea2_sym():
    """rea2 modulo the central relation beta = q*gamma (c1 = 0)."""
    lam2 = _Q(2) - _Q(-2)
    rules = {
        ("gamma", "alpha"): {("alpha", "gamma"): _Q(-2)},
        ("delta", "alpha"): {
            ("alpha", "delta"): QScalar.one(),
            ("gamma", "gamma"): -_Q(1) * lam2,
        },
        ("delta", "gamma"): {("gamma", "delta"): _Q(-2)},
    }
    return Presentation("rea2_sym", ("alpha", "gamma", "delta"), rules)


# ---------------------------------------------------------------------------
# quantum planes
# ---------------------------------------------------------------------------


def _build_qplane():
    rules = {("x2", "x1"): {("x1", "x2"): _Q(-1)}}
    return Presentation("qplane", ("x1", "x2"), rules)


def _build_grassmann_plane():
    rules = {
        ("xi1", "xi1"): {},
        ("xi2", "xi2"): {},
        ("xi2", "xi1"): {("xi1", "xi2"): -_Q(1)},
    }
    return Presentation(
        "grassmann_plane",
        ("xi1", "xi2"),
        rules,
        display={"xi1": "ξ1", "xi2": "ξ2"},
    )


def _build_two_planes():
    """Two quantum-plane columns x,y and u,v of one quantum matrix; the
    cross relations are the GL_q(2) ones under a=x, b=u, c=y, d=v."""
    ren = {"a": "x", "b": "u", "c": "y", "d": "v"}
    rules = {}
    for lhs, rhs in _glq2_rules().items():
        new_rhs = {tuple(ren[g] for g in w): c for w, c in rhs.items()}
        rules[tuple(ren[g] for g in lhs)] = new_rhs
    return Presentation("two_planes", ("x", "u", "y", "v"), rules)


# ---------------------------------------------------------------------------
# Gauss decomposition target
# ---------------------------------------------------------------------------


def _gauss_rules():
    one = QScalar.one()
    return {
        ("B", "A"): {("A", "B"): one},
        ("u", "A"): {("A", "u"): _Q(-1)},
        ("u", "B"): {("B", "u"): _Q(1)},
        ("z", "A"): {("A", "z"): _Q(-1)},
        ("z", "B"): {("B", "z"): _Q(1)},
        ("z", "u"): {("u", "z"): one},
    }


def _build_gauss_glq2():
    return Presentation("gauss_glq2", ("A", "B", "u", "z"), _gauss_rules())


def _build_gauss_glq2_inv():
    """gauss_glq2 with A^-1, B^-1 adjoined.

    The inverse letters sit immediately after their partners in the
    precedence order; placing them at the end would leave words such as
    A*B*Ai in normal form even though they equal B.
    """
    one = QScalar.one()
    rules = {
        ("A", "Ai"): {(): one},
        ("Ai", "A"): {(): one},
        ("B", "Bi"): {(): one},
        ("Bi", "B"): {(): one},
        ("B", "A"): {("A", "B"): one},
        ("B", "Ai"): {("Ai", "B"): one},
        ("Bi", "A"): {("A", "Bi"): one},
        ("Bi", "Ai"): {("Ai", "Bi"): one},
        ("u", "A"): {("A", "u"): _Q(-1)},
        ("u", "Ai"): {("Ai", "u"): _Q(1)},
        ("u", "B"): {("B", "u"): _Q(1)},
        ("u", "Bi"): {("Bi", "u"): _Q(-1)},
        ("z", "A"): {("A", "z"): _Q(-1)},
        ("z", "Ai"): {("Ai", "z"): _Q(1)},
        ("z", "B"): {("B", "z"): _Q(1)},
        ("z", "Bi"): {("Bi", "z"): _Q(-1)},
        ("z", "u"): {("u", "z"): one},
    }
    return Presentation(
        "gauss_glq2_inv",
        ("A", "Ai", "B", "Bi", "u", "z"),
        rules,
        weights={"Ai": 0, "Bi": 0},
        inverses={"A": "Ai", "Ai": "A", "B": "Bi", "Bi": "B"},
    )


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_BUILDERS = {
    "glq2": _build_glq2,
    "glq2_det": _build_glq2_det,
    "glq2_inv": _build_glq2_inv,
    "glq2_q2": _build_glq2_q2,
    "slq2": _build_slq2,
    "suq11": _build_suq11,
    "suq11_fun": _build_suq11_fun,
    "osc_q": _build_osc_q,
    "osc_q_qinv": _build_osc_q_qinv,
    "osc_q_half": _build_osc_q_half,
    "osc_alpha": _build_osc_alpha,
    "osc_alpha_half": _build_osc_alpha_half,
    "osc_alpha_rl": _build_osc_alpha_rl,
    "osc_A": _build_osc_A,
    "osc_A2": _build_osc_A2,
    "osc_pair_qqinv": _build_osc_pair_qqinv,
    "osc_pair_qq": _build_osc_pair_qq,
    "rea2": _build_rea2,
    "rea2_sym": _build_rea2_sym,
    "qplane": _build_qplane,
    "grassmann_plane": _build_grassmann_plane,
    "two_planes": _build_two_planes,
    "gauss_glq2": _build_gauss_glq2,
    "gauss_glq2_inv": _build_gauss_glq2_inv,
}

_CACHE = {}


def catalog_names():
    return sorted(_BUILDERS)


def build_presentation(name):
    """Return the named catalog presentation (cached; treat as immutable)."""
    if name not in _BUILDERS:
        raise KeyError(f"unknown catalog presentation: {name!r}")
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


# ---------------------------------------------------------------------------
# distinguished central elements
# ---------------------------------------------------------------------------


def quantum_determinant():
    """D_q = ad - qbc as an element of glq2."""
    return _E({("a", "d"): QScalar.one(), ("b", "c"): -_Q(1)})


def casimir_slq2():
    """c_2(q) = X- X+ + [J][J+1] over slq2.

    [J][J+1] expands exactly to (q k^2 + q^-1 ki^2 - q - q^-1)/lambda^2.
    """
    li2 = _lami() * _lami()
    return _E(
        {
            ("xm", "xp"): QScalar.one(),
            ("k", "k"): li2 * _Q(1),
            ("ki", "ki"): li2 * _Q(-1),
            (): -li2 * (_Q(1) + _Q(-1)),
        }
    )


def casimir_slq2_alt():
    """The equal form X+ X- + [J][J-1] of the sl_q(2) Casimir."""
    li2 = _lami() * _lami()
    return _E(
        {
            ("xp", "xm"): QScalar.one(),
            ("k", "k"): li2 * _Q(-1),
            ("ki", "ki"): li2 * _Q(1),
            (): -li2 * (_Q(1) + _Q(-1)),
        }
    )


def center_osc_q():
    """c_q = q^-N (adag a - [N]) with [N] = (k - ki)/lambda, over osc_q."""
    li = _lami()
    return _E(
        {
            ("ki", "adag", "a"): QScalar.one(),
            ("ki", "k"): -li,
            ("ki", "ki"): li,
        }
    )


def center_osc_alpha():
    """zeta_q = ald al - [N; q^-2], with the basic q-number expanded via
    q^-2N = ki^2: [N; q^-2] = (ki^2 - 1)/(q^-2 - 1)."""
    c = (_Q(-2) - QScalar.one()).reciprocal()
    return _E(
        {
            ("ald", "al"): QScalar.one(),
            ("ki", "ki"): -c,
            (): c,
        }
    )


def rea2_c1():
    return _E({("beta",): QScalar.one(), ("gamma",): -_Q(1)})


def rea2_c2():
    return _E({("alpha", "delta"): QScalar.one(), ("beta", "gamma"): -_Q(2)})


def casimir_suq11():
    """c = [K0][K0-1] - K+ K- over suq11, with w = q^K0."""
    li2 = _lami() * _lami()
    return _E(
        {
            ("w", "w"): li2 * _Q(-1),
            ("wi", "wi"): li2 * _Q(1),
            (): -li2 * (_Q(1) + _Q(-1)),
            ("kp", "km"): -QScalar.one(),
        }
    )


def central_elements(name):
    """Named central elements of a catalog presentation."""
    table = {
        "glq2": {"D_q": quantum_determinant()},
        "slq2": {"c_2": casimir_slq2()},
        "osc_q": {"c_q": center_osc_q()},
        "osc_alpha": {"zeta_q": center_osc_alpha()},
        "rea2": {"c_1": rea2_c1(), "c_2": rea2_c2()},
        "suq11": {"c": casimir_suq11()},
    }
    return table.get(name, {})


# ---------------------------------------------------------------------------
# star structures (involutions) on the determinant extension
# ---------------------------------------------------------------------------


def star_structure(form):
    """Antilinear antihomomorphism defining a real form of GL_q(2).

    form: "uq2" or "uq11".  Both act on glq2_det (they need D^-1) and are
    involutive; they read the dagger matrix entrywise, which is the reading
    that squares to the identity.
    """
    p = build_presentation("glq2_det")
    sgn = -1 if form == "uq2" else 1
    if form not in ("uq2", "uq11"):
        raise KeyError(f"unknown star structure: {form!r}")
    images = {
        "a": _E({("d", "Di"): QScalar.one()}),
        "b": _E({("c", "Di"): _Q(1) * sgn}),
        "c": _E({("b", "Di"): _Q(-1) * sgn}),
        "d": _E({("a", "Di"): QScalar.one()}),
        "D": _E({("Di",): QScalar.one()}),
        "Di": _E({("D",): QScalar.one()}),
    }
    return MorphismMap(f"star_{form}", p, p, images, kind="antihom",
                       conjugate=True)


def star_structure_suq11_fun():
    """The U_q(1,1) involution on the SU_q(1,1) function algebra."""
    p = build_presentation("suq11_fun")
    images = {
        "a": _E({("as",): QScalar.one()}),
        "as": _E({("a",): QScalar.one()}),
        "b": _E({("bs",): _Q(1)}),
        "bs": _E({("b",): _Q(-1)}),
    }
    return MorphismMap("star_suq11_fun", p, p, images, kind="antihom",
                       conjugate=True)


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------


def presentation_to_json(pres):
    """Serialize a presentation to the interchange dict format."""
    from .freealg import format_element

    gens = []
    for g in pres.generators:
        entry = {"name": g}
        if pres.weights.get(g, 1) != 1:
            entry["weight"] = pres.weights[g]
        if g in pres.inverses:
            entry["inverse_of"] = pres.inverses[g]
        gens.append(entry)
    rels = []
    for lhs, rhs in sorted(pres.rules.items()):
        rels.append(
            {
                "lhs": format_element(Element.word(lhs)),
                "rhs": format_element(rhs, pres),
            }
        )
    return {
        "name": pres.name,
        "generators": gens,
        "order": list(pres.generators),
        "relations": rels,
    }


def presentation_from_json(data):
    """Rebuild a presentation from the interchange dict format."""
    from .parser import parse_expression

    order = data.get("order") or [g["name"] for g in data["generators"]]
    weights = {}
    inverses = {}
    for g in data["generators"]:
        if "weight" in g:
            weights[g["name"]] = g["weight"]
        if "inverse_of" in g:
            inverses[g["name"]] = g["inverse_of"]
    names = list(order)
    rules = {}
    for rel in data["relations"]:
        lhs = parse_expression(rel["lhs"], names)
        rhs = parse_expression(rel["rhs"], names)
        if len(lhs.terms) != 1:
            raise ValueError(f"rule lhs must be a single word: {rel['lhs']}")
        ((word, coef),) = lhs.terms.items()
        rules[word] = rhs.scale(coef.reciprocal())
    return Presentation(
        data["name"], names, rules, weights=weights, inverses=inverses
    )
