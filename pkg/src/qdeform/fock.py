"""Fock-space representations and numeric residual checks.

Numeric representations are dense complex matrices on the truncated
number basis |0>, ..., |D-1>.  Truncation corrupts the last columns of
relation residuals, so every residual is measured on a guard-banded
column range 0..D-g-1 (default g=2).

The exact variants use the rescaled basis in which the lowering operator
has matrix entries [n] and the raising operator entries 1; there the
defining relations hold as identities in q, and the residual matrices
vanish exactly, not merely to rounding.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .catalog import build_presentation, casimir_slq2
from .freealg import Element
from .rmat import QMatrix
from .scalars import QScalar, qeval, qnum

_Q = QScalar.qpow


def _sym_qnum(n, q0):
    """Symmetric q-number [n] at q0, allowing half-integer n via sqrt."""
    s0 = cmath.sqrt(q0)
    return (s0 ** (2 * n) - s0 ** (-2 * n)) / (q0 - 1.0 / q0)


def _basic_qnum(n, q0):
    return (q0 ** n - 1.0) / (q0 - 1.0)


# ---------------------------------------------------------------------------
# representation builders
# ---------------------------------------------------------------------------


def fock_rep(algebra, dim, q0, exact=False):
    """Fock representation of an oscillator presentation.

    algebra: "osc_q", "osc_q_qinv", "osc_alpha" or "osc_A".
    Returns {"algebra", "dim", "q0", "exact", "matrices": {gen: matrix}}
    with numpy arrays (orthonormal basis, sqrt ladder entries) or, when
    exact=True, QMatrix instances over the rescaled basis a|n> = [n]|n-1>,
    a†|n> = |n+1>.
    """
    if algebra in ("osc_q", "osc_q_qinv"):
        mats = _exact_osc_q(dim) if exact else _float_osc_q(dim, q0)
    elif algebra == "osc_alpha":
        mats = _exact_osc_alpha(dim) if exact else _float_osc_alpha(dim, q0)
    elif algebra == "osc_A":
        if exact:
            raise ValueError("osc_A uses basic q-numbers of the numeric "
                             "deformation; no exact variant is provided")
        mats = _float_osc_A(dim, q0)
    else:
        raise KeyError(f"no Fock representation for {algebra!r}")
    return {
        "algebra": algebra,
        "dim": dim,
        "q0": q0,
        "exact": exact,
        "matrices": mats,
    }


def _float_osc_q(dim, q0):
    a = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        a[n - 1, n] = math.sqrt(abs(_sym_qnum(n, q0)))
    adag = a.conj().T
    k = np.diag([complex(q0 ** n) for n in range(dim)])
    ki = np.diag([complex(q0 ** -n) for n in range(dim)])
    return {"a": a, "adag": adag, "k": k, "ki": ki}


def _exact_osc_q(dim):
    a = QMatrix.zeros(dim)
    adag = QMatrix.zeros(dim)
    k = QMatrix.zeros(dim)
    ki = QMatrix.zeros(dim)
    for n in range(dim):
        k.rows[n][n] = _Q(n)
        ki.rows[n][n] = _Q(-n)
        if n >= 1:
            a.rows[n - 1][n] = qnum(n)
            adag.rows[n][n - 1] = QScalar.one()
    return {"a": a, "adag": adag, "k": k, "ki": ki}


def _float_osc_alpha(dim, q0):
    base = _float_osc_q(dim, q0)
    scale = np.diag([complex(q0 ** (-n / 2.0)) for n in range(dim)])
    al = scale @ base["a"]
    ald = base["adag"] @ scale
    return {"al": al, "ald": ald, "k": base["k"], "ki": base["ki"]}


def _exact_osc_alpha(dim):
    base = _exact_osc_q(dim)
    al = QMatrix.zeros(dim)
    ald = QMatrix.zeros(dim)
    for n in range(1, dim):
        # alpha = q^(-N/2) a and alpha† = a† q^(-N/2) in the rescaled basis
        al.rows[n - 1][n] = QScalar.spow(-(n - 1)) * qnum(n)
        ald.rows[n][n - 1] = QScalar.spow(-(n - 1))
    return {"al": al, "ald": ald, "k": base["k"], "ki": base["ki"]}


def _float_osc_A(dim, q0):
    A = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        A[n - 1, n] = math.sqrt(abs(_basic_qnum(n, q0)))
    return {"A": A, "Adag": A.conj().T}


def singular_rep(dim, q0):
    """Vacuum-free representation of A A† - q A† A = 1 with a constant
    ladder: A psi_n = beta^(-1/2) q^(-1/4) psi_{n-1}, beta = q^-1/2 - q^1/2.

    The defining relation holds on interior columns; the missing n = -1
    level corrupts column 0, so residuals here mask both edges.
    """
    beta = q0 ** -0.5 - q0 ** 0.5
    c = complex(beta) ** -0.5 * q0 ** -0.25
    A = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        A[n - 1, n] = c
    return {
        "algebra": "osc_A",
        "dim": dim,
        "q0": q0,
        "exact": False,
        "singular": True,
        "matrices": {"A": A, "Adag": A.conj().T},
    }


# ---------------------------------------------------------------------------
# residuals
# ---------------------------------------------------------------------------


def _element_matrix(e, matrices, dim, q0, exact):
    if exact:
        acc = QMatrix.zeros(dim)
        for w, coef in e.terms.items():
            m = QMatrix.identity(dim)
            for g in w:
                m = m * matrices[g]
            acc = acc + m.scale(coef)
        return acc
    acc = np.zeros((dim, dim), dtype=complex)
    eye = np.eye(dim, dtype=complex)
    for w, coef in e.terms.items():
        m = eye
        for g in w:
            m = m @ matrices[g]
        acc = acc + complex(qeval(coef, q0)) * m
    return acc


def _masked_max(mat, dim, guard, lo=0):
    hi = dim - guard
    if isinstance(mat, QMatrix):
        for i in range(dim):
            for j in range(lo, hi):
                if not mat[i, j].is_zero():
                    return 1.0
        return 0.0
    return float(np.max(np.abs(mat[:, lo:hi]))) if hi > lo else 0.0


def rep_residual(rep, relations=None, guard=2):
    """Worst relation residual of a representation on guarded columns.

    relations: list of (lhs_element, rhs_element) or Elements meaning
    lhs - rhs = 0; defaults to the presentation rules of rep["algebra"].
    For exact representations the return value is 0.0 only when every
    guarded entry is identically zero as a function of q.
    """
    pres = build_presentation(rep["algebra"])
    dim, q0 = rep["dim"], rep["q0"]
    lo = 1 if rep.get("singular") else 0
    if relations is None:
        relations = [
            Element.word(lhs) - rhs for lhs, rhs in pres.rules.items()
        ]
    worst = 0.0
    for rel in relations:
        if isinstance(rel, tuple):
            rel = rel[0] - rel[1]
        m = _element_matrix(rel, rep["matrices"], dim, q0, rep["exact"])
        worst = max(worst, _masked_max(m, dim, guard, lo=lo))
    return worst


def central_values(rep, element, guard=2):
    """Value and scalar-deviation of a central element in a representation.

    Returns {"matrix", "value", "abs_dev", "scale", "rel_dev"}.  abs_dev
    is the guarded max deviation from value*I; scale is the largest
    guarded norm among the individual terms of the element, so rel_dev =
    abs_dev/scale discounts float cancellation between terms whose norms
    grow with the cutoff (for exact representations abs_dev is 0.0 or 1.0
    by the identically-zero test and scale is 1).
    """
    dim, q0 = rep["dim"], rep["q0"]
    m = _element_matrix(element, rep["matrices"], dim, q0, rep["exact"])
    if rep["exact"]:
        dev = _masked_max(m, dim, guard)
        return {"matrix": m, "value": None, "abs_dev": dev,
                "scale": 1.0, "rel_dev": dev}
    hi = dim - guard
    sub = m[:hi, :hi]
    diag = np.diag(sub)
    value = complex(diag[0])
    abs_dev = float(np.max(np.abs(sub - value * np.eye(hi))))
    scale = 1.0
    for w, coef in element.terms.items():
        term = _element_matrix(Element({w: coef}), rep["matrices"],
                               dim, q0, exact=False)
        scale = max(scale, float(np.max(np.abs(term[:hi, :hi]))))
    return {"matrix": m, "value": value, "abs_dev": abs_dev,
            "scale": scale, "rel_dev": abs_dev / scale}


def numeric_morphism_residual(source, images, dim, q0, guard=2,
                              extra_relations=None):
    """Residual of an algebra map given by matrices for each generator.

    source: Presentation; images: {generator: numpy matrix}.  Checks all
    defining rules of source (plus extra_relations, as Elements) after
    substitution, masking the guard band.  Returns {"max": float,
    "rules": {rule: residual}}.
    """
    rules = {}
    worst = 0.0
    items = [
        (lhs, Element.word(lhs) - rhs) for lhs, rhs in source.rules.items()
    ]
    for extra in extra_relations or []:
        items.append(("extra", extra))
    for label, rel in items:
        m = _element_matrix(rel, images, dim, q0, exact=False)
        r = _masked_max(m, dim, guard)
        rules[label] = r
        worst = max(worst, r)
    return {"max": worst, "rules": rules}


# ---------------------------------------------------------------------------
# Schwinger construction
# ---------------------------------------------------------------------------


def two_mode_matrices(dim, q0):
    """Kronecker pair of q-oscillator Fock matrices (mode1 (x) mode2)."""
    one = _float_osc_q(dim, q0)
    eye = np.eye(dim, dtype=complex)
    out = {}
    for g, m in one.items():
        out[g + "1"] = np.kron(m, eye)
        out[g + "2"] = np.kron(eye, m)
    return out


def schwinger_matrices(dim, q0):
    """slq2 generators on the two-mode Fock space: X+ = a1† a2,
    X- = a2† a1, q^J = q^((N1-N2)/2)."""
    pair = two_mode_matrices(dim, q0)
    halfk = np.diag(
        [
            complex(q0 ** ((n1 - n2) / 2.0))
            for n1 in range(dim)
            for n2 in range(dim)
        ]
    )
    halfki = np.diag(1.0 / np.diag(halfk))
    return {
        "xp": pair["adag1"] @ pair["a2"],
        "xm": pair["adag2"] @ pair["a1"],
        "k": halfk,
        "ki": halfki,
    }


def schwinger_decompose(dim, q0):
    """Decompose the two-mode Fock space under the Schwinger action.

    Returns blocks for total number t = 0..dim-1 (complete multiplets):
    {"t", "dim", "casimir", "expected", "residual", "invariance"}; the
    multiplet of total number t has dimension t+1 and Casimir [t/2][t/2+1].
    """
    mats = schwinger_matrices(dim, q0)
    slq2 = build_presentation("slq2")
    c2 = casimir_slq2()
    c2m = _element_matrix(c2, mats, dim * dim, q0, exact=False)
    index = {
        (n1, n2): n1 * dim + n2 for n1 in range(dim) for n2 in range(dim)
    }
    blocks = []
    for t in range(dim):
        idx = [index[(n1, t - n1)] for n1 in range(t + 1)]
        sub = c2m[np.ix_(idx, idx)]
        val = complex(sub[0, 0])
        residual = float(np.max(np.abs(sub - val * np.eye(len(idx)))))
        expected = _sym_qnum(t / 2.0, q0) * _sym_qnum(t / 2.0 + 1.0, q0)
        inv = 0.0
        others = [
            i for i in range(dim * dim) if i not in set(idx)
        ]
        for g in ("xp", "xm", "k"):
            col = mats[g][:, idx]
            if others:
                inv = max(inv, float(np.max(np.abs(col[others, :]))))
        blocks.append(
            {
                "t": t,
                "dim": len(idx),
                "casimir": val,
                "expected": complex(expected),
                "residual": max(residual, abs(val - expected)),
                "invariance": inv,
            }
        )
    return blocks


# ---------------------------------------------------------------------------
# contraction probe
# ---------------------------------------------------------------------------


def contraction_probe(j_list=(2, 4, 6, 8), q0=0.5, dim=16, guard=2):
    """Oscillator realization of sl_q(2) at shrinking scale eps(j) = q0^(2j).

    The map X+ = (eps^2 lambda)^-1 alpha, X- = alpha†, q^J = eps^-1 q^-N
    keeps every matrix entry inside the exact coefficient field, so the
    residuals are assembled symbolically (all large terms cancel exactly)
    and only then evaluated at q0.  Only the ladder exchange rule picks up
    a defect, equal to eps^2 q^(2N)/lambda, so the residual decays
    strictly monotonically along j_list.  Also reports the central trend
    eps^2 lambda c2 -> q0^2/(q0^2 - 1), whose gap decays at the same rate.
    """
    slq2 = build_presentation("slq2")
    alpha = _exact_osc_alpha(dim)
    lam = QScalar.lam()
    lami = lam.reciprocal()
    rows = []
    for j in j_list:
        eps = _Q(2 * j)
        epsi = _Q(-2 * j)
        kdiag = QMatrix.zeros(dim)
        kidiag = QMatrix.zeros(dim)
        for n in range(dim):
            kdiag.rows[n][n] = epsi * _Q(-n)
            kidiag.rows[n][n] = eps * _Q(n)
        mats = {
            "xp": alpha["al"].scale(epsi * epsi * lami),
            "xm": alpha["ald"],
            "k": kdiag,
            "ki": kidiag,
        }
        worst = 0.0
        for lhs, rhs in slq2.rules.items():
            rel = Element.word(lhs) - rhs
            m = _element_matrix(rel, mats, dim, q0, exact=True)
            worst = max(worst, _eval_masked_max(m, dim, q0, guard))
        c2m = _element_matrix(casimir_slq2(), mats, dim, q0, exact=True)
        scaled = qeval(eps * eps * lam * c2m[0, 0], q0)
        limit = q0 ** 2 / (q0 ** 2 - 1.0)
        rows.append(
            {
                "j": j,
                "eps": q0 ** (2 * j),
                "residual": worst,
                "c2_scaled": complex(scaled).real,
                "c2_limit": limit,
                "c2_gap": abs(scaled - limit),
            }
        )
    return rows


def _eval_masked_max(m, dim, q0, guard):
    hi = dim - guard
    worst = 0.0
    for i in range(dim):
        for jcol in range(hi):
            x = m[i, jcol]
            if not x.is_zero():
                worst = max(worst, abs(qeval(x, q0)))
    return worst


# ---------------------------------------------------------------------------
# classical bridge
# ---------------------------------------------------------------------------


def classical_bridge_residual(dim, q0, guard=2):
    """Build the q-ladder from the classical boson: a_q = f(N) b with
    f(n) = sqrt([n+1]/(n+1)); the result satisfies the osc_q relations
    with the same residual as the direct construction."""
    b = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        b[n - 1, n] = math.sqrt(n)
    f = np.diag(
        [
            cmath.sqrt(_sym_qnum(n + 1, q0) / (n + 1))
            for n in range(dim)
        ]
    )
    a = f @ b
    direct = _float_osc_q(dim, q0)
    build_gap = float(np.max(np.abs(a - direct["a"])))
    mats = {"a": a, "adag": a.conj().T, "k": direct["k"], "ki": direct["ki"]}
    res = numeric_morphism_residual(
        build_presentation("osc_q"), mats, dim, q0, guard=guard
    )
    return {"construction_gap": build_gap, "relation_residual": res["max"]}
