"""Exact rational matrices, the pseudoinverse oracle, and Penrose checkers.

The oracle route is full-rank factorization: A = F G with F the pivot
columns of A and G the nonzero rref rows, then

    A+ = G^T (G G^T)^-1 (F^T F)^-1 F^T.

This is independent of any closed-form inverse being tested and works at
any rank. All arithmetic is exact; the inner kernels run on gmpy2.mpq when
available (identical results, several times faster on the largest sweeps)
and fall back to Fraction otherwise.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError, ShapeError, SingularError, ZeroMatrixError
from .rationals import rat_mod_p

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _Q = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(x):
    if type(x) is Fraction:
        return x
    if isinstance(x, int):
        return Fraction(x)
    # int() guards against mpq parts (mpz) leaking into Fraction internals
    return Fraction(int(x.numerator), int(x.denominator))


@dataclass(frozen=True)
class RatMatrix:
    """Immutable row-major matrix of ExactRational entries."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows_of_entries):
        rows = len(rows_of_entries)
        cols = len(rows_of_entries[0]) if rows else 0
        flat = []
        for row in rows_of_entries:
            if len(row) != cols:
                raise ShapeError("ragged rows")
            flat.extend(_as_fraction(x) for x in row)
        return cls(rows, cols, tuple(flat))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    def at(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        e = self.entries
        c = self.cols
        return RatMatrix(
            c, self.rows,
            tuple(e[i * c + j] for j in range(c) for i in range(self.rows)),
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n, m = self.rows, other.cols
        out = [_ZERO] * (n * m)
        for i in range(n):
            arow = self.row(i)
            base = i * m
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = other.row(k)
                for j, b in enumerate(brow):
                    if b:
                        out[base + j] += a * b
        return RatMatrix(n, m, tuple(out))

    def scale(self, s):
        s = _as_fraction(s)
        return RatMatrix(self.rows, self.cols, tuple(s * x for x in self.entries))

    def add(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("shape mismatch in add")
        return RatMatrix(
            self.rows, self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def is_zero(self):
        return all(not x for x in self.entries)

    def is_identity(self):
        if self.rows != self.cols:
            return False
        return all(
            self.entries[i * self.cols + j] == (_ONE if i == j else _ZERO)
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def is_symmetric(self):
        if self.rows != self.cols:
            return False
        return all(
            self.at(i, j) == self.at(j, i)
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )


@dataclass(frozen=True)
class IncidenceMatrix:
    """Sparse 0/1 matrix plus the labels indexing its rows and columns.

    row_support[i] is the strictly increasing tuple of column indices with
    a 1 in row i. Labels are whatever the construction indexed by: subsets,
    subspace bases, or blocks.
    """

    rows: int
    cols: int
    row_support: tuple
    row_labels: tuple = None
    col_labels: tuple = None

    def at(self, i, j):
        return 1 if j in self.row_support[i] else 0

    def nnz(self):
        return sum(len(s) for s in self.row_support)

    def row_sums(self):
        return [len(s) for s in self.row_support]

    def col_sums(self):
        sums = [0] * self.cols
        for support in self.row_support:
            for j in support:
                sums[j] += 1
        return sums

    def to_rat_matrix(self):
        flat = [_ZERO] * (self.rows * self.cols)
        for i, support in enumerate(self.row_support):
            base = i * self.cols
            for j in support:
                flat[base + j] = _ONE
        return RatMatrix(self.rows, self.cols, tuple(flat))


@dataclass(frozen=True)
class PenroseReport:
    """Outcome of the four defining conditions for X = A+."""

    cond1: bool  # A X A = A
    cond2: bool  # X A X = X
    cond3: bool  # (A X)^T = A X
    cond4: bool  # (X A)^T = X A

    @property
    def all_ok(self):
        return self.cond1 and self.cond2 and self.cond3 and self.cond4


# ---------------------------------------------------------------------------
# fast exact kernels (gmpy2.mpq when available)

def _q_rows(M):
    return [[_Q(x) for x in M.row(i)] for i in range(M.rows)]


def _q_rref(rows, ncols):
    """In-place rref of a list-of-lists; returns (reduced rows, rank, pivots)."""
    m = len(rows)
    pivots = []
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, m):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        pv = rows[rank][col]
        if pv != 1:
            inv = 1 / pv
            rows[rank] = [x * inv for x in rows[rank]]
        prow = rows[rank]
        for i in range(m):
            if i == rank:
                continue
            factor = rows[i][col]
            if factor:
                rows[i] = [x - factor * y for x, y in zip(rows[i], prow)]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    return rows[:rank], rank, pivots


def _q_inverse(rows):
    """Gauss-Jordan inverse of a square list-of-lists; SingularError if singular."""
    n = len(rows)
    aug = [list(row) + [_Q(1) if i == j else _Q(0) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        sel = None
        for i in range(col, n):
            if aug[i][col]:
                sel = i
                break
        if sel is None:
            raise SingularError("matrix is singular")
        aug[col], aug[sel] = aug[sel], aug[col]
        pv = aug[col][col]
        if pv != 1:
            inv = 1 / pv
            aug[col] = [x * inv for x in aug[col]]
        prow = aug[col]
        for i in range(n):
            if i == col:
                continue
            factor = aug[i][col]
            if factor:
                aug[i] = [x - factor * y for x, y in zip(aug[i], prow)]
    return [row[n:] for row in aug]


def _q_matmul(A, B):
    """Zero-skipping product of list-of-lists."""
    n = len(A)
    m = len(B[0]) if B else 0
    zero = _Q(0)
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        arow = A[i]
        orow = out[i]
        for k, a in enumerate(arow):
            if not a:
                continue
            brow = B[k]
            for j, b in enumerate(brow):
                if b:
                    orow[j] += a * b
    return out


def _q_transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def _from_q(rows, ncols):
    flat = []
    for row in rows:
        flat.extend(_as_fraction(x) for x in row)
    return RatMatrix(len(rows), ncols, tuple(flat))


# ---------------------------------------------------------------------------
# public operations

def rref_rational(A):
    """Unique reduced row echelon form over the rationals.

    Returns (rref, rank, pivot_columns); zero rows are trimmed so the rref
    has exactly rank rows.
    """
    reduced, rank, pivots = _q_rref(_q_rows(A), A.cols)
    return _from_q(reduced, A.cols), rank, tuple(pivots)


def full_rank_factorization(A):
    """A = F G with F = pivot columns of A (rows x rank) and G = rref rows.

    Raises ZeroMatrixError for the zero matrix (callers map A+ to the
    transposed zero matrix themselves).
    """
    if A.is_zero():
        raise ZeroMatrixError("zero matrix has no full-rank factorization")
    rref, rank, pivots = rref_rational(A)
    F = RatMatrix(
        A.rows, rank,
        tuple(A.at(i, j) for i in range(A.rows) for j in pivots),
    )
    return F, rref


def pseudoinverse_oracle(A):
    """The Moore-Penrose inverse of A via full-rank factorization, exactly."""
    if A.is_zero():
        return RatMatrix.zeros(A.cols, A.rows)
    rows_q = _q_rows(A)
    G, rank, pivots = _q_rref([list(r) for r in rows_q], A.cols)
    F = [[rows_q[i][j] for j in pivots] for i in range(A.rows)]
    Ft = _q_transpose(F)
    Gt = _q_transpose(G)
    GGt_inv = _q_inverse(_q_matmul(G, Gt))
    FtF_inv = _q_inverse(_q_matmul(Ft, F))
    X = _q_matmul(Gt, _q_matmul(GGt_inv, _q_matmul(FtF_inv, Ft)))
    return _from_q(X, A.rows)


def penrose_check(A, X):
    """Evaluate the four Penrose conditions for (A, X) with exact equality."""
    if X.rows != A.cols or X.cols != A.rows:
        raise ShapeError(
            f"X must be {A.cols}x{A.rows} for A {A.rows}x{A.cols}, "
            f"got {X.rows}x{X.cols}"
        )
    AX = A @ X
    XA = X @ A
    return PenroseReport(
        cond1=(AX @ A) == A,
        cond2=(XA @ X) == X,
        cond3=AX.is_symmetric(),
        cond4=XA.is_symmetric(),
    )


def rat_matrix_mod_p(A, p):
    """Entrywise reduction to GF(p); NotReducibleError if p divides a denominator."""
    return RatMatrix(
        A.rows, A.cols,
        tuple(Fraction(rat_mod_p(x, p).value) for x in A.entries),
    )


def _int_rows_mod(A, p):
    out = []
    for i in range(A.rows):
        row = []
        for x in A.row(i):
            if x.denominator != 1:
                raise ParameterError("mod-p Penrose check needs integer entries; reduce first")
            row.append(x.numerator % p)
        out.append(row)
    return out


def _mod_matmul(A, B, p):
    n, m = len(A), len(B[0]) if B else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        arow = A[i]
        orow = out[i]
        for k, a in enumerate(arow):
            if not a:
                continue
            brow = B[k]
            for j, b in enumerate(brow):
                if b:
                    orow[j] = (orow[j] + a * b) % p
    return out


def penrose_check_mod_p(A, X, p):
    """The four Penrose conditions over GF(p), plain transpose for 3 and 4.

    A and X must carry integer entries (already reduced, e.g. through
    rat_matrix_mod_p).
    """
    if X.rows != A.cols or X.cols != A.rows:
        raise ShapeError(
            f"X must be {A.cols}x{A.rows} for A {A.rows}x{A.cols}, "
            f"got {X.rows}x{X.cols}"
        )
    a = _int_rows_mod(A, p)
    x = _int_rows_mod(X, p)
    ax = _mod_matmul(a, x, p)
    xa = _mod_matmul(x, a, p)
    axa = _mod_matmul(ax, a, p)
    xax = _mod_matmul(xa, x, p)
    sym = lambda M: all(
        M[i][j] == M[j][i] for i in range(len(M)) for j in range(i + 1, len(M))
    )
    return PenroseReport(
        cond1=axa == a,
        cond2=xax == x,
        cond3=sym(ax),
        cond4=sym(xa),
    )


def first_difference(A, B):
    """(i, j) of the first entry where A and B differ, or None if equal."""
    if (A.rows, A.cols) != (B.rows, B.cols):
        raise ShapeError("shape mismatch")
    for i in range(A.rows):
        for j in range(A.cols):
            if A.at(i, j) != B.at(i, j):
                return (i, j)
    return None
