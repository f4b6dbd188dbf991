"""Exact arithmetic in the field Q(s) of rational functions in s = q^(1/2).

Every scalar that appears in a rank-2 quantum-algebra computation lives in
this field: q itself, lambda = q - q^-1, the symmetric q-numbers [n], the
basic q-numbers [n; q^k], and beta = (q^(1/2) + q^(-1/2))^-1.  Working with
the square root s instead of q keeps the half-integer powers that show up
in R^+/- and in the su_q(1,1) one-boson coefficient exact.

A QScalar is stored in a canonical fraction form:

* the numerator is a Laurent polynomial in s (exponent -> Fraction),
* the denominator is an ordinary polynomial in s, monic, with nonzero
  constant term,
* numerator and denominator share no polynomial factor.

The canonical form is unique, so equality is plain dict comparison.
Exponents are restricted to |e| <= EXPONENT_WINDOW; blowing the window
raises ExponentOverflow instead of silently eating memory.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

EXPONENT_WINDOW = 4096


class ExponentOverflow(ArithmeticError):
    """An s-exponent left the allowed window; the computation is runaway."""


def _trim(p):
    return {e: c for e, c in p.items() if c}


def _ladd(p1, p2):
    out = dict(p1)
    for e, c in p2.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _lmul(p1, p2):
    out = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _lscale(p, c):
    if not c:
        return {}
    return {e: cc * c for e, cc in p.items()}


def _pdivmod(num, den):
    """Polynomial division for dicts with exponents >= 0, den != 0."""
    dd = max(den)
    dc = den[dd]
    rem = dict(num)
    quo = {}
    while rem:
        rd = max(rem)
        if rd < dd:
            break
        f = rem[rd] / dc
        quo[rd - dd] = f
        for e, c in den.items():
            s = rem.get(e + rd - dd, 0) - f * c
            if s:
                rem[e + rd - dd] = s
            else:
                rem.pop(e + rd - dd, None)
    return quo, rem


def _pgcd(p1, p2):
    """Monic polynomial gcd over the rationals (Euclid)."""
    a, b = dict(p1), dict(p2)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    lead = a[max(a)]
    if lead != 1:
        a = {e: c / lead for e, c in a.items()}
    return a


class QScalar:
    """Immutable element of Q(s), s = q^(1/2), in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None):
        if isinstance(num, QScalar):
            nn, dd = dict(num.num), dict(num.den)
        else:
            if num is None:
                nn = {}
            elif isinstance(num, (int, Fraction)):
                nn = {0: Fraction(num)} if num else {}
            else:
                nn = {int(e): Fraction(c) for e, c in num.items() if c}
        if den is None:
            dd = {0: Fraction(1)}
        elif isinstance(den, (int, Fraction)):
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            dd = {0: Fraction(den)}
        else:
            dd = {int(e): Fraction(c) for e, c in den.items() if c}
        if not dd:
            raise ZeroDivisionError("zero denominator")
        if not nn:
            object.__setattr__(self, "num", {})
            object.__setattr__(self, "den", {0: Fraction(1)})
            return
        if len(dd) == 1:
            ((ed, cd),) = dd.items()
            nn = {e - ed: c / cd for e, c in nn.items()}
            dd = {0: Fraction(1)}
        else:
            kn, kd = min(nn), min(dd)
            p = {e - kn: c for e, c in nn.items()}
            r = {e - kd: c for e, c in dd.items()}
            g = _pgcd(p, r)
            if g != {0: Fraction(1)}:
                p, _ = _pdivmod(p, g)
                r, _ = _pdivmod(r, g)
            lead = r[max(r)]
            if lead != 1:
                p = {e: c / lead for e, c in p.items()}
                r = {e: c / lead for e, c in r.items()}
            shift = kn - kd
            nn = {e + shift: c for e, c in p.items()}
            dd = r
        for e in nn:
            if abs(e) > EXPONENT_WINDOW:
                raise ExponentOverflow(f"s-exponent {e} outside window")
        if max(dd) > EXPONENT_WINDOW:
            raise ExponentOverflow("denominator degree outside window")
        object.__setattr__(self, "num", nn)
        object.__setattr__(self, "den", dd)

    def __setattr__(self, *_):
        raise AttributeError("QScalar is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero():
        return QScalar()

    @staticmethod
    def one():
        return QScalar(1)

    @staticmethod
    def rational(x):
        return QScalar(Fraction(x))

    @staticmethod
    def spow(k):
        """s^k, i.e. q^(k/2)."""
        return QScalar({int(k): Fraction(1)})

    @staticmethod
    def qpow(n):
        """q^n."""
        return QScalar({2 * int(n): Fraction(1)})

    @staticmethod
    def q():
        return QScalar.qpow(1)

    @staticmethod
    def s():
        return QScalar.spow(1)

    @staticmethod
    def lam():
        """lambda = q - q^-1."""
        return QScalar({2: Fraction(1), -2: Fraction(-1)})

    @staticmethod
    def beta():
        """beta = (q^(1/2) + q^(-1/2))^-1 = s/(s^2 + 1)."""
        return QScalar({1: Fraction(1)}, {2: Fraction(1), 0: Fraction(1)})

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == {0: Fraction(1)} and self.den == {0: Fraction(1)}

    def is_rational(self):
        return self.den == {0: Fraction(1)} and set(self.num) <= {0}

    def leading_negative(self):
        """True if the highest s-power of the numerator has negative sign."""
        if not self.num:
            return False
        return self.num[max(self.num)] < 0

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, QScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return QScalar(x)
        return NotImplemented

    def __add__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return QScalar(_ladd(self.num, o.num), dict(self.den))
        return QScalar(
            _ladd(_lmul(self.num, o.den), _lmul(o.num, self.den)),
            _lmul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return QScalar({e: -c for e, c in self.num.items()}, dict(self.den))

    def __sub__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QScalar(_lmul(self.num, o.num), _lmul(self.den, o.den))

    __rmul__ = __mul__

    def reciprocal(self):
        if not self.num:
            raise ZeroDivisionError("inverting zero QScalar")
        return QScalar(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.reciprocal() ** (-n)
        out = QScalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((frozenset(self.num.items()), frozenset(self.den.items())))

    def conj(self):
        """Complex conjugation for real q: coefficients are rational."""
        return self

    # -- evaluation ----------------------------------------------------------

    def qeval(self, q0):
        """Evaluate at a concrete q0, using the principal square root for s."""
        s0 = cmath.sqrt(q0)
        nv = sum(complex(c) * s0 ** e for e, c in self.num.items())
        dv = sum(complex(c) * s0 ** e for e, c in self.den.items())
        if abs(dv) < 1e-300:
            raise ZeroDivisionError("denominator vanishes at this q0")
        return nv / dv

    # -- printing -------------------------------------------------------------

    @staticmethod
    def _fmt_term(e, c, lead):
        if e == 0:
            body = str(abs(c) if lead else c)
        else:
            if e % 2 == 0:
                var = "q" if e == 2 else f"q^{e // 2}"
            else:
                var = "s" if e == 1 else f"s^{e}"
            mag = abs(c) if lead else c
            body = var if mag == 1 else f"{mag}*{var}"
            if not lead and c == -1:
                body = f"-{var}"
        return body

    @staticmethod
    def _fmt_poly(p):
        if not p:
            return "0"
        exps = sorted(p, reverse=True)
        parts = [QScalar._fmt_term(exps[0], p[exps[0]], lead=False)]
        for e in exps[1:]:
            c = p[e]
            sign = " - " if c < 0 else " + "
            parts.append(sign + QScalar._fmt_term(e, abs(c), lead=False))
        return "".join(parts)

    def __str__(self):
        ns = QScalar._fmt_poly(self.num)
        if self.den == {0: Fraction(1)}:
            return ns
        ds = QScalar._fmt_poly(self.den)
        if len(self.num) > 1:
            ns = f"({ns})"
        return f"{ns}/({ds})"

    def __repr__(self):
        return f"QScalar({self})"


def qnum(n, kind="symmetric", base_exp=1):
    """q-number [n].

    kind="symmetric": [n] = (q^n - q^-n)/(q - q^-1), expanded as the Laurent
    polynomial q^(n-1) + q^(n-3) + ... + q^(1-n); [0] = 0, [-n] = -[n].

    kind="basic": [n; q^base_exp] = (q^(k*n) - 1)/(q^k - 1) with k=base_exp,
    expanded as 1 + q^k + ... + q^(k(n-1)); defined here for n >= 0.
    """
    n = int(n)
    if kind == "symmetric":
        if n == 0:
            return QScalar.zero()
        sign = 1
        if n < 0:
            n, sign = -n, -1
        return QScalar({2 * (n - 1 - 2 * j): Fraction(sign) for j in range(n)})
    if kind == "basic":
        if n < 0:
            raise ValueError("basic q-number defined for n >= 0 here")
        k = int(base_exp)
        out = {}
        for j in range(n):
            e = 2 * k * j
            out[e] = out.get(e, Fraction(0)) + 1
        return QScalar(out)
    raise ValueError(f"unknown q-number kind: {kind!r}")


def qeval(x, q0):
    return QScalar._coerce(x).qeval(q0)


def qreduce(num, den):
    """Canonicalize a numerator/denominator pair into a QScalar."""
    n = num if isinstance(num, QScalar) else QScalar(num)
    d = den if isinstance(den, QScalar) else QScalar(den)
    return n / d


# Frequently used constants, built fresh to keep immutability trivial.

def lam():
    return QScalar.lam()


def q_scalar(n=1):
    return QScalar.qpow(n)


def s_scalar(k=1):
    return QScalar.spow(k)


def beta():
    return QScalar.beta()


def lam_inv():
    return QScalar.lam().reciprocal()
