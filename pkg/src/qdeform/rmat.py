"""R-matrix constants and matrix-form relation generators.

Everything here is exact: matrices hold QScalar entries (or Element
entries once a quantum matrix is substituted), and rank / inverse /
residual computations run over the exact coefficient field, so a passing
check means the residual is identically zero as a function of q.

Index conventions for 4x4 matrices acting on the tensor square: row
(i,k) -> 2i+k, column (j,l) -> 2j+l with i,j labelling the first factor.
"""

from __future__ import annotations

from .freealg import Element
from .scalars import QScalar

_Q = QScalar.qpow


class QMatrix:
    """Dense matrix with exact entries (QScalar, or Element when lifted)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        n = len(self.rows[0])
        if any(len(r) != n for r in self.rows):
            raise ValueError("ragged matrix")

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]))

    @staticmethod
    def zeros(n, m=None):
        m = n if m is None else m
        return QMatrix([[QScalar.zero() for _ in range(m)] for _ in range(n)])

    @staticmethod
    def identity(n):
        out = QMatrix.zeros(n)
        for i in range(n):
            out.rows[i][i] = QScalar.one()
        return out

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        n, m = self.shape
        return QMatrix(
            [[self.rows[i][j] + other.rows[i][j] for j in range(m)]
             for i in range(n)]
        )

    def __sub__(self, other):
        n, m = self.shape
        return QMatrix(
            [[self.rows[i][j] - other.rows[i][j] for j in range(m)]
             for i in range(n)]
        )

    def __mul__(self, other):
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError("shape mismatch")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = None
                for t in range(k):
                    term = self.rows[i][t] * other.rows[t][j]
                    acc = term if acc is None else acc + term
                row.append(acc)
            out.append(row)
        return QMatrix(out)

    def scale(self, c):
        n, m = self.shape
        return QMatrix(
            [[self.rows[i][j] * c for j in range(m)] for i in range(n)]
        )

    def kron(self, other):
        n, m = self.shape
        p, r = other.shape
        out = []
        for i in range(n):
            for a in range(p):
                row = []
                for j in range(m):
                    for b in range(r):
                        row.append(self.rows[i][j] * other.rows[a][b])
                out.append(row)
        return QMatrix(out)

    def transpose(self):
        n, m = self.shape
        return QMatrix([[self.rows[i][j] for i in range(n)] for j in range(m)])

    def t1(self):
        """Partial transpose in the first tensor factor of a 4x4 matrix:
        (M^t1)_{(ik),(jl)} = M_{(jk),(il)}."""
        if self.shape != (4, 4):
            raise ValueError("t1 is defined for 4x4 matrices")
        out = QMatrix.zeros(4)
        for i in range(2):
            for k in range(2):
                for j in range(2):
                    for l in range(2):
                        out.rows[2 * i + k][2 * j + l] = \
                            self.rows[2 * j + k][2 * i + l]
        return out

    def is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)

    def inverse(self):
        """Exact Gauss-Jordan inverse (QScalar entries only)."""
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of a non-square matrix")
        a = [list(r) for r in self.rows]
        b = QMatrix.identity(n).rows
        for col in range(n):
            piv = next(
                (r for r in range(col, n) if not a[r][col].is_zero()), None
            )
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            inv = a[col][col].reciprocal()
            a[col] = [x * inv for x in a[col]]
            b[col] = [x * inv for x in b[col]]
            for r in range(n):
                if r != col and not a[r][col].is_zero():
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return QMatrix(b)

    def evaluate(self, q0):
        """Numeric complex matrix at q = q0 (requires numpy)."""
        import numpy as np

        from .scalars import qeval

        n, m = self.shape
        out = np.zeros((n, m), dtype=complex)
        for i in range(n):
            for j in range(m):
                out[i, j] = qeval(self.rows[i][j], q0)
        return out

    def lift(self):
        """Lift QScalar entries to scalar Elements."""
        return QMatrix(
            [[Element.scalar(x) for x in r] for r in self.rows]
        )

    def __repr__(self):
        return "QMatrix(" + repr(
            [[str(x) for x in r] for r in self.rows]
        ) + ")"


# ---------------------------------------------------------------------------
# standard constants
# ---------------------------------------------------------------------------


def r_matrix():
    """The fundamental 4x4 R-matrix of GL_q(2)."""
    z = QScalar.zero()
    one = QScalar.one()
    return QMatrix(
        [
            [_Q(1), z, z, z],
            [z, one, z, z],
            [z, QScalar.lam(), one, z],
            [z, z, z, _Q(1)],
        ]
    )


def permutation_matrix():
    z = QScalar.zero()
    one = QScalar.one()
    return QMatrix(
        [
            [one, z, z, z],
            [z, z, one, z],
            [z, one, z, z],
            [z, z, z, one],
        ]
    )


def r_hat():
    """Braid form PR of the R-matrix; satisfies the Hecke condition."""
    return permutation_matrix() * r_matrix()


def r_plus():
    """R+ = q^(-1/2) P R P."""
    P = permutation_matrix()
    return (P * r_matrix() * P).scale(QScalar.spow(-1))


def r_minus():
    """R- = q^(1/2) R^-1."""
    return r_matrix().inverse().scale(QScalar.spow(1))


def eps_q():
    """q-deformed antisymmetric 2x2 tensor."""
    z = QScalar.zero()
    return QMatrix([[z, QScalar.one()], [-_Q(1), z]])


def k_upper(rho, mu, nu):
    """Upper-triangular constant solution family of the reflection equation."""
    return QMatrix([[rho, mu], [QScalar.zero(), nu]])


def standard_constants():
    return {
        "R": r_matrix(),
        "Rhat": r_hat(),
        "P": permutation_matrix(),
        "Rplus": r_plus(),
        "Rminus": r_minus(),
        "eps_q": eps_q(),
    }


# ---------------------------------------------------------------------------
# residuals of the constant equations
# ---------------------------------------------------------------------------


def _embed_12(R):
    return R.kron(QMatrix.identity(2))


def _embed_23(R):
    return QMatrix.identity(2).kron(R)


def _embed_13(R):
    P23 = _embed_23(permutation_matrix())
    return P23 * _embed_12(R) * P23


def yang_baxter_residual(R=None):
    """R12 R13 R23 - R23 R13 R12 on the tensor cube (8x8, exact)."""
    R = r_matrix() if R is None else R
    r12, r13, r23 = _embed_12(R), _embed_13(R), _embed_23(R)
    return (r12 * r13 * r23) - (r23 * r13 * r12)


def hecke_residual(Rhat=None):
    """Rhat^2 - lambda Rhat - 1, zero iff (Rhat - q)(Rhat + q^-1) = 0."""
    Rhat = r_hat() if Rhat is None else Rhat
    lam = QScalar.lam()
    return (Rhat * Rhat) - Rhat.scale(lam) - QMatrix.identity(4)


def braid_residual(Rhat=None):
    """Braid relation residual Rhat12 Rhat23 Rhat12 - Rhat23 Rhat12 Rhat23."""
    Rhat = r_hat() if Rhat is None else Rhat
    a, b = _embed_12(Rhat), _embed_23(Rhat)
    return (a * b * a) - (b * a * b)


# ---------------------------------------------------------------------------
# relation generators in matrix form
# ---------------------------------------------------------------------------

_T_NAMES = (("a", "b"), ("c", "d"))


def quantum_matrix(names=_T_NAMES):
    """2x2 matrix of generator Elements."""
    return QMatrix(
        [[Element.word((names[i][j],)) for j in range(2)] for i in range(2)]
    )


def rtt_relations(R=None, names=_T_NAMES):
    """The 16 entries of R T1 T2 - T2 T1 R as free-algebra Elements.

    (R T1 T2)_{(ik),(jl)} = sum R_{(ik),(mn)} t_{mj} t_{nl} and
    (T2 T1 R)_{(ik),(jl)} = sum t_{kn} t_{im} R_{(mn),(jl)}.
    """
    R = r_matrix() if R is None else R
    t = names
    out = []
    for i in range(2):
        for k in range(2):
            for j in range(2):
                for l in range(2):
                    acc = Element.zero()
                    for m in range(2):
                        for n in range(2):
                            cl = R[2 * i + k, 2 * m + n]
                            if not cl.is_zero():
                                acc = acc + Element(
                                    {(t[m][j], t[n][l]): cl}
                                )
                            cr = R[2 * m + n, 2 * j + l]
                            if not cr.is_zero():
                                acc = acc - Element(
                                    {(t[k][n], t[i][m]): cr}
                                )
                    out.append(acc)
    return out


_K_NAMES = (("alpha", "beta"), ("gamma", "delta"))


def re_relations(R=None, names=_K_NAMES):
    """The 16 entries of R K1 R^t1 K2 - K2 R^t1 K1 R as Elements."""
    R = r_matrix() if R is None else R
    Rl = R.lift()
    Rt1 = R.t1().lift()
    K = quantum_matrix(names)
    I2 = QMatrix.identity(2).lift()
    K1 = K.kron(I2)
    K2 = I2.kron(K)
    res = (Rl * K1 * Rt1 * K2) - (K2 * Rt1 * K1 * Rl)
    return [res[i, j] for i in range(4) for j in range(4)]


def plane_relations(shift, names=("x1", "x2"), Rhat=None):
    """Rows of (Rhat + shift) applied to the column X (x) X.

    shift = -q generates the symmetric (quantum-plane) relations and
    shift = q^-1 the antisymmetric (Grassmann-plane) ones.
    """
    Rhat = r_hat() if Rhat is None else Rhat
    f = Rhat + QMatrix.identity(4).scale(shift)
    out = []
    for row in range(4):
        acc = Element.zero()
        for j in range(2):
            for l in range(2):
                c = f[row, 2 * j + l]
                if not c.is_zero():
                    acc = acc + Element({(names[j], names[l]): c})
        out.append(acc)
    return out


def oscillator_vector_relations(names=("A", "Adag"), Rhat=None):
    """Rows of Rhat (X (x) X) - q (X (x) X) - V for X = (A, A†)^t.

    V = (0, -q^-1, 1, 0)^t; each row lies in the ideal of the single
    relation A A† - q A† A = 1.
    """
    Rhat = r_hat() if Rhat is None else Rhat
    V = [QScalar.zero(), -_Q(-1), QScalar.one(), QScalar.zero()]
    out = []
    for row in range(4):
        acc = Element.scalar(-V[row])
        for j in range(2):
            for l in range(2):
                c = Rhat[row, 2 * j + l]
                if 2 * j + l == row:
                    c = c - _Q(1)
                if not c.is_zero():
                    acc = acc + Element({(names[j], names[l]): c})
        out.append(acc)
    return out


def eps_covariance_residual():
    """T eps_q T^t - eps_q D_q and T^t eps_q T - eps_q D_q over glq2."""
    from .catalog import quantum_determinant

    T = quantum_matrix()
    Eq = eps_q()
    El = Eq.lift()
    Dq = quantum_determinant()
    EDq = QMatrix(
        [[Dq.scale(Eq[i, j]) for j in range(2)] for i in range(2)]
    )
    r1 = (T * El * T.transpose()) - EDq
    r2 = (T.transpose() * El * T) - EDq
    return r1, r2


def normalize_matrix(M, pres):
    """Normalize every Element entry in the presentation pres."""
    n, m = M.shape
    return QMatrix(
        [[pres.normalize(M[i, j]) for j in range(m)] for i in range(n)]
    )


def matrix_is_zero(M):
    n, m = M.shape
    return all(M[i, j].is_zero() for i in range(n) for j in range(m))


# ---------------------------------------------------------------------------
# exact linear algebra over the coefficient field
# ---------------------------------------------------------------------------


def element_matrix(elements):
    """Coefficient matrix of the elements over their combined support."""
    words = sorted(
        {w for e in elements for w in e.terms},
        key=lambda w: (len(w), w),
    )
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for e in elements:
        row = [QScalar.zero()] * len(words)
        for w, c in e.terms.items():
            row[index[w]] = c
        rows.append(row)
    return rows, words


def exact_rank(rows):
    """Row rank over the exact field, by fraction-free forward elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = next(
            (r for r in range(rank, len(rows)) if not rows[r][col].is_zero()),
            None,
        )
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].reciprocal()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def span_rank(elements):
    rows, _ = element_matrix(elements)
    return exact_rank(rows) if rows else 0


def same_span(elements1, elements2):
    """Exact equality of the linear spans of two element lists."""
    r1 = span_rank(elements1)
    r2 = span_rank(elements2)
    r12 = span_rank(list(elements1) + list(elements2))
    return r1 == r2 == r12
