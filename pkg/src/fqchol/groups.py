"""Group laws on lower triangular matrices with square diagonal, and the laws
they induce on LPM cones through unique Cholesky coordinates.

Over a definite field every A in LPM_n is L D_eps L^T for a unique such L,
where D_eps is the canonical +/-1 diagonal anchor. A group law on the
triangular factors therefore transports to LPM_n (``box``) and to each single
cone LPM_n(eps) (``circledast``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .cholesky import factor
from .cones import anchor_diag, canonical_anchors, sign_pattern_lpm
from .errors import FieldMismatch, NonDefiniteField, PatternMismatch, SizeMismatch
from .gf import GF
from .matfq import Matrix, SymMatrix


class TriGroupLaw(enum.Enum):
    PROD = "prod"
    CHOLADD = "choladd"


def _same_shape(L: Matrix, K: Matrix):
    if L.field != K.field:
        raise FieldMismatch("factors over different fields")
    if L.shape != K.shape:
        raise SizeMismatch(f"{L.shape} vs {K.shape}")


def tri_op(law: TriGroupLaw, L: Matrix, K: Matrix) -> Matrix:
    """PROD: L K.  CHOLADD: strict lower parts add, diagonals multiply."""
    _same_shape(L, K)
    if law is TriGroupLaw.PROD:
        return L @ K
    F = L.field
    n = L.n
    return Matrix(
        F,
        tuple(
            tuple(
                F.add(L[i, j], K[i, j]) if i > j else F.mul(L[i, i], K[i, i]) if i == j else 0
                for j in range(n)
            )
            for i in range(n)
        ),
    )


def tri_inv(law: TriGroupLaw, L: Matrix) -> Matrix:
    if law is TriGroupLaw.PROD:
        return L.inverse()
    F = L.field
    n = L.n
    return Matrix(
        F,
        tuple(
            tuple(
                F.neg(L[i, j]) if i > j else F.inv(L[i, i]) if i == j else 0
                for j in range(n)
            )
            for i in range(n)
        ),
    )


def lower_pos_tri_all(F: GF, n: int):
    """Every lower triangular n x n matrix with square diagonal, in a fixed order."""
    squares = F.squares()
    strict = [(i, j) for i in range(n) for j in range(i)]
    for diag in product(squares, repeat=n):
        for low in product(range(F.q), repeat=len(strict)):
            rows = [[0] * n for _ in range(n)]
            for i, d in enumerate(diag):
                rows[i][i] = d
            for (i, j), x in zip(strict, low):
                rows[i][j] = x
            yield Matrix(F, tuple(map(tuple, rows)))


def _require_definite(F: GF):
    if not F.has_unique_sqrt:
        raise NonDefiniteField(f"F_{F.q} has no unique Cholesky coordinates")


@lru_cache(maxsize=1 << 14)
def cholesky_coords(A: SymMatrix):
    """(L, eps) with A = L D_eps L^T against the canonical anchor."""
    _require_definite(A.field)
    fac = factor(A, anchor_diag(A.field, sign_pattern_lpm(A), canonical_anchors(A.field)))
    return fac.L, fac.eps


@lru_cache(maxsize=None)
def _anchor_product(F: GF, eps, eps2) -> SymMatrix:
    D1 = anchor_diag(F, eps, canonical_anchors(F))
    D2 = anchor_diag(F, eps2, canonical_anchors(F))
    prod = SymMatrix.of(D1 @ D2)
    if F.p != 2:
        pointwise = tuple(a * b for a, b in zip(eps, eps2))
        assert sign_pattern_lpm(prod) == pointwise
        assert prod == anchor_diag(F, pointwise, canonical_anchors(F))
    return prod


def box(law: TriGroupLaw, A: SymMatrix, B: SymMatrix) -> SymMatrix:
    """(L o K)(D_eps D_eps')(L o K)^T for A = L D_eps L^T, B = K D_eps' K^T."""
    L, eps = cholesky_coords(A)
    K, eps2 = cholesky_coords(B)
    M = tri_op(law, L, K)
    return SymMatrix.of(M @ _anchor_product(A.field, eps, eps2) @ M.T)


def box_inverse(law: TriGroupLaw, A: SymMatrix) -> SymMatrix:
    L, eps = cholesky_coords(A)
    Li = tri_inv(law, L)
    D = anchor_diag(A.field, eps, canonical_anchors(A.field))
    return SymMatrix.of(Li @ D @ Li.T)


def circledast(law: TriGroupLaw, A: SymMatrix, B: SymMatrix, eps=None) -> SymMatrix:
    """(L o K) D_eps (L o K)^T inside the single cone LPM_n(eps)."""
    L, e1 = cholesky_coords(A)
    K, e2 = cholesky_coords(B)
    eps = e1 if eps is None else tuple(eps)
    for got in (e1, e2):
        if got != eps:
            k = next(i for i, (a, b) in enumerate(zip(got, eps), start=1) if a != b)
            raise PatternMismatch(k, got, eps)
    M = tri_op(law, L, K)
    D = anchor_diag(A.field, eps, canonical_anchors(A.field))
    return SymMatrix.of(M @ D @ M.T)


def circledast_inverse(law: TriGroupLaw, A: SymMatrix) -> SymMatrix:
    return box_inverse(law, A)


# -- finite group verification --------------------------------------------------


@dataclass
class GroupCheck:
    order: int
    closure: bool
    associative: bool
    identity: bool
    inverses: bool
    abelian: bool
    noncommuting: tuple | None = None

    @property
    def is_group(self) -> bool:
        return self.closure and self.associative and self.identity and self.inverses


def cayley_table(elements, op) -> np.ndarray:
    """Index table T[i, j] = index of op(e_i, e_j); -1 where the result leaves the set."""
    index = {e: i for i, e in enumerate(elements)}
    N = len(elements)
    table = np.full((N, N), -1, dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index.get(op(a, b), -1)
    return table


def check_group(elements, op, identity, inverse=None) -> GroupCheck:
    """Verify the group axioms for a finite set by building its full Cayley table."""
    elements = list(elements)
    T = cayley_table(elements, op)
    N = len(elements)
    closure = bool((T >= 0).all())
    associative = False
    if closure:
        idx = np.arange(N)
        left = T[T[:, :, None], idx[None, None, :]]
        right = T[idx[:, None, None], T[None, :, :]]
        associative = bool((left == right).all())
    e = elements.index(identity) if identity in elements else -1
    ident = e >= 0 and bool((T[e] == np.arange(N)).all() and (T[:, e] == np.arange(N)).all())
    if inverse is not None:
        index = {x: i for i, x in enumerate(elements)}
        inv_idx = [index.get(inverse(x), -1) for x in elements]
        inverses = e >= 0 and all(
            j >= 0 and T[i, j] == e and T[j, i] == e for i, j in enumerate(inv_idx)
        )
    else:
        inverses = e >= 0 and all((T[i] == e).any() and (T[:, i] == e).any() for i in range(N))
    abelian = bool((T == T.T).all())
    witness = None
    if not abelian:
        i, j = map(int, np.argwhere(T != T.T)[0])
        witness = (elements[i], elements[j])
    return GroupCheck(N, closure, associative, ident, inverses, abelian, witness)
