"""Generalized Cholesky factorization A = L A_eps L^T over F_q.

For definite fields and characteristic 2 every A in LPM_n(eps) has exactly
one lower triangular L with square (positive) diagonal such that
A = L A_eps L^T, for any fixed anchor A_eps in the same cone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import (
    SignPattern,
    anchor_diag,
    canonical_anchors,
    effective_pattern,
    require_pattern,
    sign_pattern_lpm,
)
from .errors import DefiniteField, NonDefiniteField, NotLowerPosTri, SingularL, SizeMismatch
from .gf import GF
from .matfq import Matrix, SymMatrix, reverse_matrix


def is_lower_pos_tri(L: Matrix) -> bool:
    F = L.field
    return (
        L.n_rows == L.n_cols
        and L.is_lower_triangular()
        and all(F.chi(d) == 1 for d in L.diagonal())
    )


def check_lower_pos_tri(L: Matrix) -> Matrix:
    if not is_lower_pos_tri(L):
        raise NotLowerPosTri("expected lower triangular matrix with square diagonal")
    return L


def _require_unique_roots(field: GF):
    if not field.has_unique_sqrt:
        raise NonDefiniteField(
            f"F_{field.q} is non-definite; Cholesky factors are not unique"
        )


@dataclass(frozen=True)
class Factorization:
    L: Matrix
    anchor: SymMatrix
    eps: SignPattern

    def reconstruct(self) -> SymMatrix:
        return SymMatrix.of(self.L @ self.anchor @ self.L.T)


@dataclass(frozen=True)
class UpperFactorization:
    U: Matrix
    anchor: SymMatrix
    eps: SignPattern

    def reconstruct(self) -> SymMatrix:
        return SymMatrix.of(self.U @ self.anchor @ self.U.T)


def congruence(L: Matrix, anchor: SymMatrix) -> SymMatrix:
    """L A_eps L^T for invertible lower triangular L; keeps the LPM pattern."""
    if not L.is_lower_triangular() or L.n_rows != L.n_cols:
        raise SingularL("L must be square lower triangular")
    if any(d == 0 for d in L.diagonal()):
        raise SingularL("L has a zero diagonal entry")
    eps = sign_pattern_lpm(anchor)
    out = SymMatrix.of(L @ anchor @ L.T)
    assert sign_pattern_lpm(out) == eps
    return out


def factor(A: SymMatrix, anchor: SymMatrix | None = None) -> Factorization:
    """The unique L with square diagonal such that A = L anchor L^T.

    ``anchor`` defaults to the canonical diagonal anchor of A's own pattern.
    Column m of L solves, with K the leading block already found,
    s^2 = (det A_m det E_{m-1}) / (det A_{m-1} det E_m) and
    p = E_{m-1}^{-1} (K^{-1} b - s u), where E is the anchor. K^{-1} and
    E_{m-1}^{-1} are carried forward by bordering updates.
    """
    F = A.field
    _require_unique_roots(F)
    eps = sign_pattern_lpm(A)
    if anchor is None:
        anchor = anchor_diag(F, eps, canonical_anchors(F))
    if anchor.n != A.n:
        raise SizeMismatch(f"anchor is {anchor.n}x{anchor.n}, A is {A.n}x{A.n}")
    require_pattern(anchor, eps)

    n = A.n
    minA = [1] + A.leading_minors()
    minE = [1] + anchor.leading_minors()
    a, e = A.rows, anchor.rows
    add, sub, mul, inv, neg = F.add, F.sub, F.mul, F.inv, F.neg

    def dot(x, y):
        acc = 0
        for s, t in zip(x, y):
            if s and t:
                acc = add(acc, mul(s, t))
        return acc

    L: list[list[int]] = []
    Linv: list[list[int]] = []
    Einv: list[list[int]] = []
    for m in range(n):
        b = [a[i][m] for i in range(m)]
        u = [e[i][m] for i in range(m)]
        ratio = mul(mul(minA[m + 1], minE[m]), inv(mul(minA[m], minE[m + 1])))
        s = F.positive_sqrt(ratio)
        kb = [dot(row, b) for row in Linv]
        rhs = [sub(x, mul(s, y)) for x, y in zip(kb, u)]
        p = [dot(row, rhs) for row in Einv]

        s_inv = inv(s)
        # row m of L^{-1}: -s^{-1} p^T K^{-1}, then s^{-1}
        new_inv = [neg(mul(s_inv, dot(p, [Linv[r][c] for r in range(m)]))) for c in range(m)]
        for row in L:
            row.append(0)
        L.append(p + [s])
        for row in Linv:
            row.append(0)
        Linv.append(new_inv + [s_inv])

        # bordered inverse of the anchor's leading block
        w = [dot(row, u) for row in Einv]
        sigma_inv = inv(sub(e[m][m], dot(u, w)))
        nw = [neg(mul(sigma_inv, x)) for x in w]
        for i in range(m):
            Einv[i] = [sub(Einv[i][j], mul(w[i], nw[j])) for j in range(m)] + [nw[i]]
        Einv.append(nw + [sigma_inv])

    return Factorization(Matrix(F, tuple(map(tuple, L))), anchor, eps)


def factor_tpm(A: SymMatrix, anchor: SymMatrix | None = None) -> UpperFactorization:
    """The unique upper triangular U with square diagonal, A = U anchor U^T."""
    F = A.field
    _require_unique_roots(F)
    rev_anchor = None if anchor is None else reverse_matrix(anchor)
    fac = factor(reverse_matrix(A), rev_anchor)
    return UpperFactorization(reverse_matrix(fac.L), reverse_matrix(fac.anchor), fac.eps)


def psi(anchor: SymMatrix, L: Matrix) -> SymMatrix:
    """L -> L anchor L^T on lower triangular matrices with square diagonal."""
    check_lower_pos_tri(L)
    return congruence(L, anchor)


def psi_inv(anchor: SymMatrix, A: SymMatrix) -> Matrix:
    return factor(A, anchor).L


def transition(A: SymMatrix, anchor_from: SymMatrix, anchor_to: SymMatrix) -> SymMatrix:
    """L anchor_from L^T -> L anchor_to L^T."""
    return psi(anchor_to, psi_inv(anchor_from, A))


def nonuniqueness_witness(field: GF, n: int, anchor: SymMatrix | None = None):
    """Two distinct square-diagonal L with L anchor L^T equal, on a non-definite field.

    Uses L and -L: -1 is a square when q = 1 mod 4, so both have square
    diagonals, and (-L) A (-L)^T = L A L^T.
    """
    if field.has_unique_sqrt:
        raise DefiniteField(f"F_{field.q} admits unique factorizations")
    if anchor is None:
        anchor = SymMatrix.identity(field, n)
    L1 = Matrix.identity(field, n)
    L2 = Matrix.diag(field, [field.neg(1)] * n)
    assert is_lower_pos_tri(L1) and is_lower_pos_tri(L2) and L1 != L2
    assert congruence(L1, anchor) == congruence(L2, anchor)
    return L1, L2


def default_anchor(field: GF, eps) -> SymMatrix:
    return anchor_diag(field, effective_pattern(field, eps), canonical_anchors(field))
