"""Coalgebra layer: tensor elements, Hopf structures, comodules, pairings.

TensorElement is a sum of pure tensors of words with a QScalar
coefficient.  Slots never braid past each other; multiplication is
slotwise concatenation, and each slot normalizes in its own presentation.
"""

from __future__ import annotations

from .catalog import build_presentation, quantum_determinant
from .freealg import Element, MorphismMap
from .rmat import QMatrix, r_minus, r_plus
from .scalars import QScalar

_Q = QScalar.qpow


class TensorElement:
    """Element of a tensor power of free algebras."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        self.arity = arity
        clean = {}
        for key, coef in (terms or {}).items():
            if len(key) != arity:
                raise ValueError("tensor term of wrong arity")
            if not coef.is_zero():
                clean[tuple(tuple(w) for w in key)] = coef
        self.terms = clean

    @staticmethod
    def unit(arity):
        return TensorElement(arity, {((),) * arity: QScalar.one()})

    @staticmethod
    def outer(*elements):
        """Tensor product of plain Elements, one per slot."""
        out = TensorElement(len(elements))
        items = [list(e.terms.items()) for e in elements]
        terms = {}

        def rec(slot, words, coef):
            if slot == len(items):
                key = tuple(words)
                acc = terms.get(key)
                coef2 = coef if acc is None else acc + coef
                terms[key] = coef2
                return
            for w, c in items[slot]:
                rec(slot + 1, words + [w], coef * c)

        rec(0, [], QScalar.one())
        return TensorElement(len(elements), terms)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return TensorElement(self.arity, out)

    def __neg__(self):
        return TensorElement(
            self.arity, {k: -c for k, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(w1 + w2 for w1, w2 in zip(k1, k2))
                c = c1 * c2
                acc = out.get(key)
                s = c if acc is None else acc + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return TensorElement(self.arity, out)

    def scale(self, c):
        return TensorElement(
            self.arity, {k: v * c for k, v in self.terms.items()}
        )

    def normalize(self, presentations):
        """Normalize every slot; presentations is one per slot (or one
        presentation used for all slots)."""
        if not isinstance(presentations, (list, tuple)):
            presentations = [presentations] * self.arity
        if len(presentations) != self.arity:
            raise ValueError("need one presentation per slot")
        current = self
        for slot, pres in enumerate(presentations):
            out = {}
            for key, coef in current.terms.items():
                nf = pres.normalize(Element({key[slot]: coef}))
                for w, c in nf.terms.items():
                    nk = key[:slot] + (w,) + key[slot + 1:]
                    acc = out.get(nk)
                    s = c if acc is None else acc + c
                    if s.is_zero():
                        out.pop(nk, None)
                    else:
                        out[nk] = s
            current = TensorElement(self.arity, out)
        return current

    def apply_slot(self, slot, word_fn, new_arity_delta):
        """Replace slot contents via word_fn(word) -> TensorElement whose
        arity is 1 + new_arity_delta; used to extend maps into tensors."""
        arity = self.arity + new_arity_delta
        out = TensorElement(arity)
        for key, coef in self.terms.items():
            expanded = word_fn(key[slot])
            for ekey, ecoef in expanded.terms.items():
                nk = key[:slot] + ekey + key[slot + 1:]
                out = out + TensorElement(arity, {nk: coef * ecoef})
        return out

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"TensorElement({self.arity}, {len(self.terms)} terms)"


def format_tensor(te, presentations=None):
    from .freealg import format_element

    if te.is_zero():
        return "0"
    if presentations is not None and not isinstance(
        presentations, (list, tuple)
    ):
        presentations = [presentations] * te.arity
    parts = []
    for key, coef in sorted(te.terms.items()):
        slots = []
        for i, w in enumerate(key):
            pres = presentations[i] if presentations else None
            slots.append(
                format_element(Element.word(w), pres) if w else "1"
            )
        cs = str(coef)
        pre = "" if coef.is_one() else f"({cs})*"
        parts.append(pre + " (x) ".join(slots))
    return "  +  ".join(parts)


# ---------------------------------------------------------------------------
# Hopf structures
# ---------------------------------------------------------------------------


class HopfStructure:
    """Coproduct, counit and (optional) antipode on a presentation.

    coproduct: generator -> arity-2 TensorElement
    counit:    generator -> QScalar
    antipode:  generator -> Element, or None for a plain bialgebra
    """

    def __init__(self, pres, coproduct, counit, antipode=None):
        self.pres = pres
        self.coproduct = coproduct
        self.counit = counit
        self.antipode_images = antipode
        self._antipode_map = None
        if antipode is not None:
            self._antipode_map = MorphismMap(
                f"S_{pres.name}", pres, pres, antipode, kind="antihom"
            )
        missing = [g for g in pres.generators if g not in coproduct]
        if missing or any(g not in counit for g in pres.generators):
            raise ValueError("coproduct/counit must cover all generators")

    def delta_word(self, word):
        acc = TensorElement.unit(2)
        for g in word:
            acc = (acc * self.coproduct[g]).normalize(self.pres)
        return acc

    def delta(self, e):
        out = TensorElement(2)
        for w, c in e.terms.items():
            out = out + self.delta_word(w).scale(c)
        return out.normalize(self.pres)

    def eps(self, e):
        total = QScalar.zero()
        for w, c in e.terms.items():
            f = c
            for g in w:
                f = f * self.counit[g]
            total = total + f
        return total

    def antipode(self, e):
        if self._antipode_map is None:
            raise ValueError("no antipode defined")
        return self._antipode_map.apply(e)

    # -- axiom checks ------------------------------------------------------

    def _test_words(self, degree):
        gens = self.pres.generators
        words = [(g,) for g in gens]
        if degree >= 2:
            words += [(g1, g2) for g1 in gens for g2 in gens]
        return words

    def check(self, degree=2):
        """Verify the coalgebra/Hopf axioms on all words up to degree.

        Returns a dict of failure lists; all empty means the axioms hold.
        """
        pres = self.pres
        fails = {
            "relations_delta": [],
            "relations_eps": [],
            "relations_antipode": [],
            "coassoc": [],
            "counit": [],
            "antipode": [],
        }
        for lhs, rhs in pres.rules.items():
            le = Element.word(lhs)
            diff_d = self.delta(le) - self.delta(rhs)
            if not diff_d.normalize(pres).is_zero():
                fails["relations_delta"].append(lhs)
            if not (self.eps(le) - self.eps(rhs)).is_zero():
                fails["relations_eps"].append(lhs)
        if self._antipode_map is not None:
            fails["relations_antipode"] = [
                r["rule"] for r in self._antipode_map.verify()
            ]
        for w in self._test_words(degree):
            e = pres.normalize(Element.word(w))
            d = self.delta(e)
            left = d.apply_slot(0, self.delta_word, 1).normalize(pres)
            right = d.apply_slot(1, self.delta_word, 1).normalize(pres)
            if left != right:
                fails["coassoc"].append(w)
            ce = Element.zero()
            for key, c in d.terms.items():
                f = c
                for g in key[0]:
                    f = f * self.counit[g]
                ce = ce + Element({key[1]: f})
            ce2 = Element.zero()
            for key, c in d.terms.items():
                f = c
                for g in key[1]:
                    f = f * self.counit[g]
                ce2 = ce2 + Element({key[0]: f})
            if not pres.normalize(ce - e).is_zero():
                fails["counit"].append(w)
            if not pres.normalize(ce2 - e).is_zero():
                fails["counit"].append(w + ("right",))
            if self._antipode_map is not None:
                acc1 = Element.zero()
                acc2 = Element.zero()
                for key, c in d.terms.items():
                    sw = self.antipode(Element.word(key[0]))
                    acc1 = acc1 + (sw * Element.word(key[1])).scale(c)
                    sw2 = self.antipode(Element.word(key[1]))
                    acc2 = acc2 + (Element.word(key[0]) * sw2).scale(c)
                target = Element.scalar(self.eps(e))
                if not pres.normalize(acc1 - target).is_zero():
                    fails["antipode"].append(w)
                if not pres.normalize(acc2 - target).is_zero():
                    fails["antipode"].append(w + ("right",))
        return fails


def _group_like(g):
    return TensorElement.outer(Element.word((g,)), Element.word((g,)))


def hopf_structure(name):
    """Hopf/bialgebra structures on catalog presentations.

    "glq2_det": full Hopf structure (antipode needs D^-1).
    "glq2": the same coproduct/counit as a plain bialgebra.
    "slq2", "suq11_fun": full Hopf structures.
    """
    if name == "glq2" or name == "glq2_det":
        pres = build_presentation(name)
        E = Element.word
        cop = {
            "a": TensorElement.outer(E(("a",)), E(("a",)))
            + TensorElement.outer(E(("b",)), E(("c",))),
            "b": TensorElement.outer(E(("a",)), E(("b",)))
            + TensorElement.outer(E(("b",)), E(("d",))),
            "c": TensorElement.outer(E(("c",)), E(("a",)))
            + TensorElement.outer(E(("d",)), E(("c",))),
            "d": TensorElement.outer(E(("c",)), E(("b",)))
            + TensorElement.outer(E(("d",)), E(("d",))),
        }
        one = QScalar.one()
        eps = {"a": one, "b": QScalar.zero(), "c": QScalar.zero(), "d": one}
        if name == "glq2":
            return HopfStructure(pres, cop, eps, antipode=None)
        cop["D"] = _group_like("D")
        cop["Di"] = _group_like("Di")
        eps["D"] = one
        eps["Di"] = one
        S = {
            "a": Element({("d", "Di"): one}),
            "b": Element({("b", "Di"): -_Q(-1)}),
            "c": Element({("c", "Di"): -_Q(1)}),
            "d": Element({("a", "Di"): one}),
            "D": E(("Di",)),
            "Di": E(("D",)),
        }
        return HopfStructure(pres, cop, eps, antipode=S)
    if name == "slq2":
        pres = build_presentation("slq2")
        E = Element.word
        cop = {
            "k": _group_like("k"),
            "ki": _group_like("ki"),
            "xp": TensorElement.outer(E(("xp",)), E(("ki",)))
            + TensorElement.outer(E(("k",)), E(("xp",))),
            "xm": TensorElement.outer(E(("xm",)), E(("ki",)))
            + TensorElement.outer(E(("k",)), E(("xm",))),
        }
        one = QScalar.one()
        z = QScalar.zero()
        eps = {"k": one, "ki": one, "xp": z, "xm": z}
        S = {
            "k": E(("ki",)),
            "ki": E(("k",)),
            "xp": Element({("xp",): -_Q(-1)}),
            "xm": Element({("xm",): -_Q(1)}),
        }
        return HopfStructure(pres, cop, eps, antipode=S)
    if name == "suq11_fun":
        pres = build_presentation("suq11_fun")
        E = Element.word
        cop = {
            "a": TensorElement.outer(E(("a",)), E(("a",)))
            + TensorElement.outer(E(("b",)), E(("bs",))),
            "b": TensorElement.outer(E(("a",)), E(("b",)))
            + TensorElement.outer(E(("b",)), E(("as",))),
            "bs": TensorElement.outer(E(("bs",)), E(("a",)))
            + TensorElement.outer(E(("as",)), E(("bs",))),
            "as": TensorElement.outer(E(("bs",)), E(("b",)))
            + TensorElement.outer(E(("as",)), E(("as",))),
        }
        one = QScalar.one()
        z = QScalar.zero()
        eps = {"a": one, "b": z, "bs": z, "as": one}
        S = {
            "a": E(("as",)),
            "as": E(("a",)),
            "b": Element({("b",): -_Q(-1)}),
            "bs": Element({("bs",): -_Q(1)}),
        }
        return HopfStructure(pres, cop, eps, antipode=S)
    raise KeyError(f"no Hopf structure for {name!r}")


# ---------------------------------------------------------------------------
# comodules
# ---------------------------------------------------------------------------


class Comodule:
    """Left (A (x) M) or right (M (x) A) comodule over a bialgebra.

    images: module generator -> arity-2 TensorElement with the coalgebra
    slot first for side="left", last for side="right".
    """

    def __init__(self, name, hopf, module, images, side="left"):
        self.name = name
        self.hopf = hopf
        self.module = module
        self.images = images
        self.side = side
        missing = [g for g in module.generators if g not in images]
        if missing:
            raise ValueError(f"coaction misses generators {missing}")

    @property
    def slots(self):
        if self.side == "left":
            return [self.hopf.pres, self.module]
        return [self.module, self.hopf.pres]

    def coact_word(self, word):
        acc = TensorElement.unit(2)
        for g in word:
            acc = (acc * self.images[g]).normalize(self.slots)
        return acc

    def coact(self, e):
        out = TensorElement(2)
        for w, c in e.terms.items():
            out = out + self.coact_word(w).scale(c)
        return out.normalize(self.slots)

    def check(self, degree=2):
        """Covariance of the module relations, coassociativity and the
        counit law up to the given word degree.  Returns failure lists."""
        fails = {"covariance": [], "coassoc": [], "counit": []}
        for lhs, rhs in self.module.rules.items():
            diff = self.coact(Element.word(lhs)) - self.coact(rhs)
            if not diff.normalize(self.slots).is_zero():
                fails["covariance"].append(lhs)
        aslot = 0 if self.side == "left" else 1
        gens = self.module.generators
        words = [(g,) for g in gens]
        if degree >= 2:
            words += [(g1, g2) for g1 in gens for g2 in gens]
        for w in words:
            e = self.module.normalize(Element.word(w))
            phi = self.coact(e)
            if self.side == "left":
                lhs3 = phi.apply_slot(0, self.hopf.delta_word, 1)
                rhs3 = phi.apply_slot(1, self.coact_word, 1)
                slots3 = [self.hopf.pres, self.hopf.pres, self.module]
            else:
                lhs3 = phi.apply_slot(1, self.hopf.delta_word, 1)
                rhs3 = phi.apply_slot(0, self.coact_word, 1)
                slots3 = [self.module, self.hopf.pres, self.hopf.pres]
            if lhs3.normalize(slots3) != rhs3.normalize(slots3):
                fails["coassoc"].append(w)
            collapsed = Element.zero()
            for key, c in phi.terms.items():
                f = c
                for g in key[aslot]:
                    f = f * self.hopf.counit[g]
                collapsed = collapsed + Element({key[1 - aslot]: f})
            if not self.module.normalize(collapsed - e).is_zero():
                fails["counit"].append(w)
        return fails


def _matrix_coaction(hopf, module, columns):
    """Left coaction sending each column (m1, m2) through the quantum
    matrix: m_i -> sum_j t_{ij} (x) m_j."""
    E = Element.word
    t = (("a", "b"), ("c", "d"))
    images = {}
    for col in columns:
        for i in range(2):
            te = TensorElement(2)
            for j in range(2):
                te = te + TensorElement.outer(E((t[i][j],)), E((col[j],)))
            images[col[i]] = te
    return images


def comodule(name):
    """Named coactions from the catalog."""
    if name == "plane":
        h = hopf_structure("glq2")
        m = build_presentation("qplane")
        return Comodule(name, h, m, _matrix_coaction(h, m, [("x1", "x2")]))
    if name == "grassmann":
        h = hopf_structure("glq2")
        m = build_presentation("grassmann_plane")
        return Comodule(name, h, m, _matrix_coaction(h, m, [("xi1", "xi2")]))
    if name == "two_planes":
        h = hopf_structure("glq2")
        m = build_presentation("two_planes")
        return Comodule(
            name, h, m, _matrix_coaction(h, m, [("x", "y"), ("u", "v")])
        )
    if name == "rea_glq2":
        h = hopf_structure("glq2")
        m = build_presentation("rea2")
        E = Element.word
        t = (("a", "b"), ("c", "d"))
        K = (("alpha", "beta"), ("gamma", "delta"))
        images = {}
        for i in range(2):
            for j in range(2):
                te = TensorElement(2)
                for k in range(2):
                    for l in range(2):
                        te = te + TensorElement.outer(
                            Element({(t[i][k], t[j][l]): QScalar.one()}),
                            E((K[k][l],)),
                        )
                images[K[i][j]] = te
        return Comodule(name, h, m, images)
    if name == "oscA_suq11":
        h = hopf_structure("suq11_fun")
        m = build_presentation("osc_A")
        E = Element.word
        images = {
            "A": TensorElement.outer(E(("a",)), E(("A",)))
            + TensorElement.outer(E(("b",)), E(("Adag",))),
            "Adag": TensorElement.outer(E(("bs",)), E(("A",)))
            + TensorElement.outer(E(("as",)), E(("Adag",))),
        }
        return Comodule(name, h, m, images)
    if name == "contraction_slq2":
        h = hopf_structure("slq2")
        m = build_presentation("osc_alpha_rl")
        E = Element.word
        one = QScalar.one()
        images = {
            "al": TensorElement.outer(E(("al",)), E(("ki",)))
            + TensorElement.outer(Element({("ki", "rl"): one}), E(("xp",))),
            "ald": TensorElement.outer(E(("ald",)), E(("ki",)))
            + TensorElement.outer(Element({("ki", "rl"): one}), E(("xm",))),
            "k": TensorElement.outer(E(("k",)), E(("ki",))),
            "ki": TensorElement.outer(E(("ki",)), E(("k",))),
            "rl": TensorElement.outer(E(("rl",)), Element.one()),
        }
        return Comodule(name, h, m, images, side="right")
    raise KeyError(f"unknown comodule {name!r}")


def rea_center_coaction_residuals():
    """phi(c1) - D_q (x) c1 and phi(c2) - D_q^2 (x) c2 for the reflection
    equation coaction; both vanish identically."""
    from .catalog import rea2_c1, rea2_c2

    cm = comodule("rea_glq2")
    Dq = quantum_determinant()
    out = []
    for c, power in ((rea2_c1(), 1), (rea2_c2(), 2)):
        target = TensorElement.outer(
            Dq if power == 1 else Dq * Dq, c
        ).normalize(cm.slots)
        out.append((cm.coact(c) - target).normalize(cm.slots))
    return out


# ---------------------------------------------------------------------------
# dual pairing and the RLL relations
# ---------------------------------------------------------------------------

_LETTER_INDEX = {"a": (0, 0), "b": (0, 1), "c": (1, 0), "d": (1, 1)}


def dual_pairing(sign, i, j, tword):
    """<L^sign_{ij}, t_{w1} t_{w2} ...> via iterated R^± slices.

    tword is a string or sequence of glq2 letters; the empty word pairs
    to delta_{ij}.
    """
    R = r_plus() if sign == "+" else r_minus()
    mat = QMatrix.identity(2)
    for letter in tword:
        k, l = _LETTER_INDEX[letter]
        step = QMatrix(
            [[R[2 * r + k, 2 * c + l] for c in range(2)] for r in range(2)]
        )
        mat = mat * step
    return mat[i, j]


def pairing_element(sign, i, j, element):
    """Extend the pairing linearly to glq2 Elements."""
    total = QScalar.zero()
    for w, c in element.terms.items():
        total = total + c * dual_pairing(sign, i, j, w)
    return total


def l_matrices():
    """Upper/lower triangular L-functionals as slq2-valued 2x2 matrices."""
    E = Element.word
    lam = QScalar.lam()
    z = Element.zero()
    Lp = QMatrix(
        [
            [E(("k",)), Element({("xm",): lam})],
            [z, E(("ki",))],
        ]
    )
    Lm = QMatrix(
        [
            [E(("ki",)), z],
            [Element({("xp",): -lam}), E(("k",))],
        ]
    )
    return Lp, Lm


def rll_residual(sign1, sign2):
    """R L1 L2 - L2 L1 R with L^±, using R^+ lifted to scalar Elements
    when sign1 == sign2 == "+" or the mixed case, R^- for ("-", "-").

    Scalar prefactors of R cancel, so any member of the R^± ray works;
    the returned 4x4 matrix has slq2-Element entries to normalize.
    """
    Lp, Lm = l_matrices()
    L = {"+": Lp, "-": Lm}
    R = (r_minus() if (sign1, sign2) == ("-", "-") else r_plus()).lift()
    I2 = QMatrix.identity(2).lift()
    L1 = L[sign1].kron(I2)
    L2 = I2.kron(L[sign2])
    return (R * L1 * L2) - (L2 * L1 * R)
