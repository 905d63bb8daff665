"""Dense exact matrices over F_q.

Entries are canonical integer codes of the owning ``GF``. Index sets passed
to ``minor`` are 0-based; sizes passed to ``leading_minor``/``trailing_minor``
count entries (1..n).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import (
    FieldMismatch,
    IndexOutOfRange,
    NonSquare,
    NotSymmetric,
    ParseError,
    Singular,
    SizeMismatch,
)
from .gf import GF


@dataclass(frozen=True)
class Matrix:
    field: GF
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise SizeMismatch("matrix must be at least 1x1")
        if any(len(r) != len(rows[0]) for r in rows):
            raise SizeMismatch("ragged rows")
        q = self.field.q
        if any(not 0 <= x < q for r in rows for x in r):
            rows = tuple(tuple(self.field.check(x) for x in r) for r in rows)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _trusted(cls, field: GF, rows):
        """Build without validation; rows must already be tuples of valid codes."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "rows", rows)
        return obj

    # symmetric and general matrices with equal entries compare equal
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, field: GF, n: int):
        return cls(field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field: GF, n_rows: int, n_cols: int | None = None):
        n_cols = n_rows if n_cols is None else n_cols
        return cls(field, ((0,) * n_cols,) * n_rows)

    @classmethod
    def diag(cls, field: GF, entries):
        entries = list(entries)
        n = len(entries)
        return cls(
            field,
            tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)),
        )

    # -- shape and access ---------------------------------------------------

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self):
        return self.n_rows, self.n_cols

    @property
    def n(self) -> int:
        self._require_square()
        return self.n_rows

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _require_square(self):
        if self.n_rows != self.n_cols:
            raise NonSquare(f"{self.n_rows}x{self.n_cols} matrix is not square")

    def _same_field(self, other: Matrix):
        if other.field != self.field:
            raise FieldMismatch("matrices over different fields")

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    @property
    def T(self) -> Matrix:
        return Matrix._trusted(self.field, tuple(zip(*self.rows)))

    def is_symmetric(self) -> bool:
        return self.n_rows == self.n_cols and self.rows == tuple(zip(*self.rows))

    def is_lower_triangular(self) -> bool:
        return all(
            self.rows[i][j] == 0
            for i in range(self.n_rows)
            for j in range(i + 1, self.n_cols)
        )

    def is_upper_triangular(self) -> bool:
        return self.T.is_lower_triangular()

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Matrix) -> Matrix:
        self._same_field(other)
        if self.shape != other.shape:
            raise SizeMismatch("shapes differ")
        F = self.field
        return Matrix._trusted(
            F,
            tuple(
                tuple(F.add(a, b) for a, b in zip(r, s))
                for r, s in zip(self.rows, other.rows)
            ),
        )

    def __neg__(self) -> Matrix:
        return self.map(self.field.neg)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __matmul__(self, other: Matrix) -> Matrix:
        self._same_field(other)
        if self.n_cols != other.n_rows:
            raise SizeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        cols = tuple(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(tuple(row))
        return Matrix._trusted(F, tuple(out))

    def scale(self, c: int) -> Matrix:
        F = self.field
        return self.map(lambda a: F.mul(c, a))

    def map(self, f) -> Matrix:
        """Entrywise image under the scalar map ``f`` (code -> code)."""
        return type(self)(self.field, tuple(tuple(f(a) for a in r) for r in self.rows))

    @classmethod
    def _rebuild(cls, like: Matrix, rows):
        # rows come from valid entries of ``like``; symmetry is inherited
        return cls._trusted(like.field, rows)

    def submatrix(self, rows, cols) -> Matrix:
        return Matrix(self.field, tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    # -- determinants -------------------------------------------------------

    def det(self) -> int:
        """Determinant by Gaussian elimination (first nonzero pivot in column order)."""
        self._require_square()
        F = self.field
        a = [list(r) for r in self.rows]
        n = len(a)
        det = 1
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                return 0
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = F.neg(det)
            pv = a[col][col]
            det = F.mul(det, pv)
            pinv = F.inv(pv)
            for r in range(col + 1, n):
                if a[r][col]:
                    f = F.mul(a[r][col], pinv)
                    row, prow = a[r], a[col]
                    for c in range(col + 1, n):
                        if prow[c]:
                            row[c] = F.sub(row[c], F.mul(f, prow[c]))
                    row[col] = 0
        return det

    def minor(self, rows, cols) -> int:
        rows, cols = list(rows), list(cols)
        if len(rows) != len(cols) or not rows:
            raise SizeMismatch("minor needs equal, nonempty index sets")
        for i in rows:
            if not 0 <= i < self.n_rows:
                raise IndexOutOfRange(f"row index {i}")
        for j in cols:
            if not 0 <= j < self.n_cols:
                raise IndexOutOfRange(f"column index {j}")
        return self.submatrix(rows, cols).det()

    def leading_minor(self, k: int) -> int:
        n = self.n
        if not 1 <= k <= n:
            raise IndexOutOfRange(f"minor size {k} outside 1..{n}")
        return self.minor(range(k), range(k))

    def trailing_minor(self, k: int) -> int:
        n = self.n
        if not 1 <= k <= n:
            raise IndexOutOfRange(f"minor size {k} outside 1..{n}")
        return self.minor(range(n - k, n), range(n - k, n))

    def leading_minors(self) -> list[int]:
        """All leading principal minors, sizes 1..n, from one elimination pass.

        Elimination runs without pivoting while pivots are nonzero; after the
        first zero pivot the remaining minors fall back to ``det``.
        """
        n = self.n
        F = self.field
        a = [list(r) for r in self.rows]
        out = []
        acc = 1
        for col in range(n):
            pv = a[col][col]
            if pv == 0:
                out.append(0)
                out.extend(self.leading_minor(k) for k in range(col + 2, n + 1))
                return out
            acc = F.mul(acc, pv)
            out.append(acc)
            pinv = F.inv(pv)
            for r in range(col + 1, n):
                if a[r][col]:
                    f = F.mul(a[r][col], pinv)
                    for c in range(col + 1, n):
                        if a[col][c]:
                            a[r][c] = F.sub(a[r][c], F.mul(f, a[col][c]))
        return out

    def trailing_minors(self) -> list[int]:
        return reverse_matrix(self).leading_minors()

    def inverse(self) -> Matrix:
        """Gauss-Jordan inverse; raises Singular when det is zero."""
        self._require_square()
        F = self.field
        n = self.n_rows
        a = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise Singular("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            pinv = F.inv(a[col][col])
            a[col] = [F.mul(pinv, x) for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], a[col])]
        return type(self)._rebuild(self, tuple(tuple(r[n:]) for r in a))

    # -- text -----------------------------------------------------------------

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


class SymMatrix(Matrix):
    """A square matrix checked to be symmetric at construction."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_symmetric():
            raise NotSymmetric("matrix is not symmetric")

    @classmethod
    def of(cls, m: Matrix) -> SymMatrix:
        if isinstance(m, SymMatrix):
            return m
        if not m.is_symmetric():
            raise NotSymmetric("matrix is not symmetric")
        return cls._trusted(m.field, m.rows)

    @property
    def T(self):
        return self

    def reverse(self) -> SymMatrix:
        return reverse_matrix(self)


def reverse_matrix(m: Matrix) -> Matrix:
    """Conjugation by the reversal permutation: rows and columns reversed."""
    rows = tuple(tuple(reversed(r)) for r in reversed(m.rows))
    return type(m)._rebuild(m, rows)


def reverse(m: SymMatrix) -> SymMatrix:
    return reverse_matrix(m)


def matrix(field: GF, rows) -> Matrix:
    return Matrix(field, tuple(tuple(r) for r in rows))


def sym(field: GF, rows) -> SymMatrix:
    return SymMatrix(field, tuple(tuple(r) for r in rows))


def frobenius_matrix(m: Matrix, ell: int = 1) -> Matrix:
    F = m.field
    return m.map(lambda a: F.frobenius(a, ell))


# -- text format ----------------------------------------------------------------
#
#   p k n
#   c_0 c_1 ... c_k        (modulus, only when k > 1)
#   n lines of n canonical codes


def format_matrix(m: Matrix) -> str:
    F = m.field
    lines = [f"{F.p} {F.k} {m.n}"]
    if F.k > 1:
        lines.append(" ".join(map(str, F.modulus)))
    lines.extend(" ".join(map(str, r)) for r in m.rows)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, symmetric: bool = True) -> Matrix:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    try:
        p, k, n = (int(t) for t in lines[0].split())
        pos = 1
        modulus = None
        if k > 1:
            modulus = tuple(int(t) for t in lines[1].split())
            pos = 2
        body = [tuple(int(t) for t in ln.split()) for ln in lines[pos:]]
    except (ValueError, IndexError) as exc:
        raise ParseError(f"malformed matrix text: {exc}") from None
    if len(lines[0].split()) != 3:
        raise ParseError("header must be 'p k n'")
    F = GF(p, k, modulus)
    if len(body) != n or any(len(r) != n for r in body):
        raise ParseError(f"expected {n} rows of {n} entries")
    if any(not 0 <= x < F.q for r in body for x in r):
        raise ParseError(f"entries must be codes in 0..{F.q - 1}")
    cls = SymMatrix if symmetric else Matrix
    return cls(F, tuple(body))


# -- batched minors ---------------------------------------------------------------
#
# Used by the census and the preserver scans. Determinants are expanded over
# permutations with table lookups, which keeps them independent of the
# elimination code above.


def field_tables(F: GF):
    """(add, mul, neg, chi) lookup arrays for F."""
    cached = _TABLES.get(F)
    if cached is not None:
        return cached
    q = F.q
    els = np.arange(q)
    if F.k == 1:
        add = (els[:, None] + els[None, :]) % q
    else:
        add = np.zeros((q, q), dtype=np.int64)
        scale = 1
        for _ in range(F.k):
            da = (els // scale) % F.p
            add += ((da[:, None] + da[None, :]) % F.p) * scale
            scale *= F.p
    mul = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    neg = np.array([F.neg(a) for a in range(q)], dtype=np.int64)
    chi = np.array([F.chi(a) for a in range(q)], dtype=np.int64)
    _TABLES[F] = (add.astype(np.int64), mul, neg, chi)
    return _TABLES[F]


_TABLES: dict = {}


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def batch_det(F: GF, mats: np.ndarray) -> np.ndarray:
    """Determinants of a stack of k x k code matrices, shape (..., k, k) -> (...)."""
    add, mul, neg, _ = field_tables(F)
    k = mats.shape[-1]
    total = np.zeros(mats.shape[:-2], dtype=np.int64)
    for perm in permutations(range(k)):
        term = mats[..., 0, perm[0]]
        for i in range(1, k):
            term = mul[term, mats[..., i, perm[i]]]
        if _perm_sign(perm) < 0:
            term = neg[term]
        total = add[total, term]
    return total


def batch_leading_minors(F: GF, mats: np.ndarray) -> np.ndarray:
    """Leading principal minors of a stack, shape (..., n, n) -> (..., n)."""
    n = mats.shape[-1]
    return np.stack([batch_det(F, mats[..., :k, :k]) for k in range(1, n + 1)], axis=-1)


def batch_trailing_minors(F: GF, mats: np.ndarray) -> np.ndarray:
    return batch_leading_minors(F, mats[..., ::-1, ::-1])
