"""Noncommutative polynomial engine.

Words are tuples of generator names, elements are finite QScalar-weighted
sums of words, and a presentation is an ordered alphabet together with
oriented rewrite rules (leading word -> lower element).  Rules are oriented
by a weighted degree-lexicographic order, which guarantees termination, and
local confluence is audited by reducing every overlap ambiguity both ways
(the diamond lemma).

The module also carries MorphismMap: a generator-wise substitution used for
Gauss decompositions, bosonizations, star structures and inter-oscillator
maps, with homomorphism/antihomomorphism flavors.
"""

from __future__ import annotations

from .scalars import QScalar

DEFAULT_STEP_BUDGET = 1_000_000


class RewriteBudgetExceeded(RuntimeError):
    """Normalization did not reach a fixed point within the step budget."""


def _coef(x):
    if isinstance(x, QScalar):
        return x
    return QScalar(x)


class Element:
    """Finite sum of words with QScalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = _coef(c)
                if not c.is_zero():
                    clean[tuple(w)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("Element is immutable")

    @staticmethod
    def zero():
        return Element()

    @staticmethod
    def one():
        return Element({(): QScalar.one()})

    @staticmethod
    def scalar(c):
        return Element({(): _coef(c)})

    @staticmethod
    def word(w, c=1):
        return Element({tuple(w): _coef(c)})

    @staticmethod
    def gen(name, c=1):
        return Element({(name,): _coef(c)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, QScalar)):
            other = Element.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        e = Element.__new__(Element)
        object.__setattr__(e, "terms", out)
        return e

    __radd__ = __add__

    def __neg__(self):
        e = Element.__new__(Element)
        object.__setattr__(e, "terms", {w: -c for w, c in self.terms.items()})
        return e

    def __sub__(self, other):
        if isinstance(other, (int, QScalar)):
            other = Element.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        e = Element.__new__(Element)
        object.__setattr__(e, "terms", out)
        return e

    def __rmul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = _coef(c)
        if c.is_zero():
            return Element.zero()
        e = Element.__new__(Element)
        object.__setattr__(e, "terms", {w: cc * c for w, cc in self.terms.items()})
        return e

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative word powers are not defined")
        out = Element.one()
        for _ in range(n):
            out = out * self
        return out

    def degree(self):
        return max((len(w) for w in self.terms), default=0)

    def support(self):
        return set(self.terms)

    def qeval_coeffs(self, q0):
        return {w: c.qeval(q0) for w, c in self.terms.items()}

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({format_element(self)})"


class Presentation:
    """Ordered generator alphabet with oriented rewrite rules.

    Rules map a leading word to an Element that is strictly smaller in the
    weighted deglex order: words compare first by total generator weight,
    then by length, then lexicographically by generator precedence.  Zero
    weights are allowed (group-like and marker generators), and the order
    stays a multiplication-compatible well-order, so rewriting terminates.
    """

    __slots__ = (
        "name",
        "generators",
        "rules",
        "weights",
        "inverses",
        "display",
        "_index",
        "_by_first",
    )

    def __init__(self, name, generators, rules, weights=None, inverses=None,
                 display=None):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "generators", tuple(generators))
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        wts = {g: 1 for g in self.generators}
        if weights:
            wts.update({g: int(v) for g, v in weights.items()})
        object.__setattr__(self, "weights", wts)
        object.__setattr__(self, "inverses", dict(inverses or {}))
        object.__setattr__(self, "display", dict(display or {}))
        object.__setattr__(
            self, "_index", {g: i for i, g in enumerate(self.generators)}
        )
        clean = {}
        for lhs, rhs in rules.items():
            lhs = tuple(lhs)
            if not lhs:
                raise ValueError("empty rule left side")
            rhs = rhs if isinstance(rhs, Element) else Element(rhs)
            for g in lhs:
                if g not in self._index:
                    raise ValueError(f"unknown generator {g!r} in rule")
            for w in rhs.terms:
                for g in w:
                    if g not in self._index:
                        raise ValueError(f"unknown generator {g!r} in rule")
                if not self.word_less(w, lhs):
                    raise ValueError(
                        f"{self.name}: rule {lhs} -> ... not decreasing at {w}"
                    )
            clean[lhs] = rhs
        object.__setattr__(self, "rules", clean)
        by_first = {}
        for lhs in clean:
            by_first.setdefault(lhs[0], []).append(lhs)
        for lst in by_first.values():
            lst.sort(key=lambda w: (len(w), w))
        object.__setattr__(self, "_by_first", by_first)

    def __setattr__(self, *_):
        raise AttributeError("Presentation is immutable")

    def __repr__(self):
        return f"Presentation({self.name!r}, {len(self.rules)} rules)"

    # -- order ---------------------------------------------------------------

    def word_key(self, w):
        idx = self._index
        wts = self.weights
        return (
            sum(wts[g] for g in w),
            len(w),
            tuple(idx[g] for g in w),
        )

    def word_less(self, w1, w2):
        return self.word_key(w1) < self.word_key(w2)

    # -- rewriting -------------------------------------------------------------

    def find_redex(self, word):
        by_first = self._by_first
        n = len(word)
        for i in range(n):
            cands = by_first.get(word[i])
            if not cands:
                continue
            for lhs in cands:
                ln = len(lhs)
                if i + ln <= n and word[i:i + ln] == lhs:
                    return i, lhs
        return None

    def normalize(self, e, max_steps=DEFAULT_STEP_BUDGET):
        if not isinstance(e, Element):
            e = Element(e)
        out = {}
        pending = dict(e.terms)
        steps = 0
        while pending:
            word, coef = pending.popitem()
            red = self.find_redex(word)
            if red is None:
                s = out.get(word)
                s = coef if s is None else s + coef
                if s.is_zero():
                    out.pop(word, None)
                else:
                    out[word] = s
                continue
            steps += 1
            if steps > max_steps:
                raise RewriteBudgetExceeded(
                    f"{self.name}: more than {max_steps} rewrite steps"
                )
            i, lhs = red
            head, tail = word[:i], word[i + len(lhs):]
            for w2, c2 in self.rules[lhs].terms.items():
                nw = head + w2 + tail
                nc = coef * c2
                s = pending.get(nw)
                s = nc if s is None else s + nc
                if s.is_zero():
                    pending.pop(nw, None)
                else:
                    pending[nw] = s
        res = Element.__new__(Element)
        object.__setattr__(res, "terms", out)
        return res

    def product(self, e1, e2):
        return self.normalize(e1 * e2)

    def one(self):
        return Element.one()

    def gen(self, name):
        if name not in self._index:
            raise ValueError(f"{self.name}: unknown generator {name!r}")
        return Element.gen(name)

    def relation_elements(self):
        """Each rule as the element lhs - rhs (normalizes to zero)."""
        return [Element.word(lhs) - rhs for lhs, rhs in self.rules.items()]

    # -- structure checks --------------------------------------------------------

    def commutator_defects(self, e):
        e = self.normalize(e)
        out = {}
        for g in self.generators:
            ge = Element.gen(g)
            d = self.normalize(e * ge - ge * e)
            if not d.is_zero():
                out[g] = d
        return out

    def is_central(self, e):
        return not self.commutator_defects(e)

    def check_overlaps(self, degree_bound):
        """Diamond-lemma audit up to the given overlap-word length.

        Enumerates every overlap and containment ambiguity among rule
        leading words whose composite word has length <= degree_bound,
        reduces the composite word both ways, and reports disagreements.
        An empty report certifies local confluence at this degree.
        """
        failures = []
        rules = list(self.rules.items())
        for lhs1, rhs1 in rules:
            n1 = len(lhs1)
            for lhs2, rhs2 in rules:
                n2 = len(lhs2)
                for k in range(1, min(n1, n2)):
                    if lhs1[n1 - k:] != lhs2[:k]:
                        continue
                    word = lhs1 + lhs2[k:]
                    if len(word) > degree_bound:
                        continue
                    left = rhs1 * Element.word(lhs2[k:])
                    right = Element.word(lhs1[:n1 - k]) * rhs2
                    diff = self.normalize(left - right)
                    if not diff.is_zero():
                        failures.append(
                            {"word": word, "rules": (lhs1, lhs2), "defect": diff}
                        )
                if n2 < n1 and len(lhs1) <= degree_bound:
                    for i in range(n1 - n2 + 1):
                        if lhs1[i:i + n2] != lhs2:
                            continue
                        left = rhs1
                        right = (
                            Element.word(lhs1[:i])
                            * rhs2
                            * Element.word(lhs1[i + n2:])
                        )
                        diff = self.normalize(left - right)
                        if not diff.is_zero():
                            failures.append(
                                {"word": lhs1, "rules": (lhs1, lhs2), "defect": diff}
                            )
        return failures


class MorphismMap:
    """Generator-wise substitution between presentations.

    kind: "hom" extends multiplicatively, "antihom" reverses each word.
    conjugate=True additionally conjugates coefficients (trivial for the
    real-q scalar field, kept for interface completeness of star maps).
    """

    __slots__ = ("name", "source", "target", "images", "kind", "conjugate")

    def __init__(self, name, source, target, images, kind="hom",
                 conjugate=False):
        if kind not in ("hom", "antihom"):
            raise ValueError("kind must be 'hom' or 'antihom'")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        imgs = {}
        for g in source.generators:
            if g not in images:
                raise ValueError(f"{name}: generator {g!r} unassigned")
            im = images[g]
            imgs[g] = im if isinstance(im, Element) else Element(im)
        object.__setattr__(self, "images", imgs)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "conjugate", bool(conjugate))

    def __setattr__(self, *_):
        raise AttributeError("MorphismMap is immutable")

    def __repr__(self):
        return (f"MorphismMap({self.name!r}: {self.source.name} -> "
                f"{self.target.name}, {self.kind})")

    def apply(self, e):
        if not isinstance(e, Element):
            e = Element(e)
        out = Element.zero()
        for word, coef in e.terms.items():
            if self.conjugate:
                coef = coef.conj()
            letters = reversed(word) if self.kind == "antihom" else word
            img = Element.scalar(coef)
            for g in letters:
                img = self.target.normalize(img * self.images[g])
            out = out + img
        return self.target.normalize(out)

    def verify(self):
        """Check every source rule maps to zero in the target.

        Returns a list of failures {rule, defect}; empty means the map is a
        well-defined (anti)homomorphism on the presented algebra.
        """
        failures = []
        for lhs, rhs in self.source.rules.items():
            defect = self.apply(Element.word(lhs) - rhs)
            if not defect.is_zero():
                failures.append({"rule": lhs, "defect": defect})
        return failures


def compose(outer, inner, name=None):
    """Composition outer . inner as a MorphismMap (both homomorphisms)."""
    if inner.target is not outer.source:
        raise ValueError("morphisms do not chain")
    images = {g: outer.apply(im) for g, im in inner.images.items()}
    kind = "hom" if inner.kind == outer.kind else "antihom"
    return MorphismMap(
        name or f"{outer.name}.{inner.name}",
        inner.source,
        outer.target,
        images,
        kind=kind,
    )


# -- printing ------------------------------------------------------------------


def _fmt_word(word, display=None):
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        g = word[i]
        j = i
        while j < len(word) and word[j] == g:
            j += 1
        label = display.get(g, g) if display else g
        if j - i == 1:
            parts.append(label)
        else:
            if any(ch in label for ch in "^+-*/"):
                label = f"({label})"
            parts.append(f"{label}^{j - i}")
        i = j
    return "*".join(parts)


def _fmt_coef(c):
    txt = str(c)
    if txt.lstrip("-").isdigit() and "/" not in txt:
        return txt
    return f"({txt})"


def format_element(e, pres=None, unicode_names=False):
    """Render an element, terms in ascending deglex order.

    Coefficients print in parentheses unless they are plain integers;
    repeated letters compress to powers, so output re-parses to the same
    element.
    """
    if not e.terms:
        return "0"
    if pres is not None:
        words = sorted(e.terms, key=pres.word_key)
    else:
        words = sorted(e.terms, key=lambda w: (len(w), w))
    display = pres.display if (pres is not None and unicode_names) else None
    parts = []
    for w in words:
        c = e.terms[w]
        neg = c.leading_negative()
        mag = -c if neg else c
        if not w:
            body = _fmt_coef(mag) if not mag.is_rational() else str(mag)
        elif mag.is_one():
            body = _fmt_word(w, display)
        else:
            body = f"{_fmt_coef(mag)}*{_fmt_word(w, display)}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)
