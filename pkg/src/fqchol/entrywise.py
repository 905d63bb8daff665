"""Entrywise transforms f[A] and exhaustive preserver searches.

A scalar map f: F_q -> F_q is stored as its table of output codes. Tables
are ordered lexicographically by (f(0), f(1), ..., f(q-1)), i.e. by the
base-q number whose most significant digit is f(0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .census import DEFAULT_BUDGET, cone_array, sym_count
from .cholesky import psi, psi_inv
from .cones import SignPattern, anchor_diag, canonical_anchors, check_pattern, effective_pattern
from .errors import BudgetExceeded, FieldMismatch
from .gf import GF, FieldClass
from .matfq import Matrix, SymMatrix, batch_leading_minors, field_tables, frobenius_matrix


@dataclass(frozen=True)
class FuncTable:
    field: GF
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(x) for x in self.table)
        if len(table) != self.field.q or any(not 0 <= x < self.field.q for x in table):
            raise ValueError(f"table must list {self.field.q} codes")
        object.__setattr__(self, "table", table)

    def __call__(self, a: int) -> int:
        return self.table[a]

    @property
    def index(self) -> int:
        """Position in the lexicographic enumeration of all q^q tables."""
        out = 0
        for x in self.table:
            out = out * self.field.q + x
        return out

    def __str__(self):
        return " ".join(map(str, self.table))

    @classmethod
    def from_function(cls, F: GF, f):
        return cls(F, tuple(f(a) for a in F.elements()))

    @classmethod
    def identity(cls, F: GF):
        return cls(F, tuple(F.elements()))

    @classmethod
    def constant(cls, F: GF, c: int):
        return cls(F, (c,) * F.q)


def apply(f: FuncTable, A: Matrix) -> Matrix:
    """f[A] = (f(a_ij))."""
    if f.field != A.field:
        raise FieldMismatch("function and matrix live over different fields")
    return A.map(f)


def frob_table(F: GF, c: int, ell: int) -> FuncTable:
    """a -> c * a^(p^ell)."""
    return FuncTable.from_function(F, lambda a: F.mul(c, F.frobenius(a, ell)))


def frobenius_family(F: GF) -> list[FuncTable]:
    """All c * Frob^ell with c a nonzero square and 0 <= ell < k, in table order."""
    tables = {frob_table(F, c, ell) for c in F.squares() for ell in range(F.k)}
    return sorted(tables, key=lambda t: t.table)


@lru_cache(maxsize=64)
def _cone(F: GF, n: int, eps: SignPattern, budget: int) -> np.ndarray:
    return cone_array(F, n, eps, "lpm", budget)


def is_preserver(
    f: FuncTable, n: int, eps_from, eps_to, budget: int = DEFAULT_BUDGET
) -> bool:
    """True iff f[A] lies in LPM_n(eps_to) for every A in LPM_n(eps_from)."""
    F = f.field
    eps_from = effective_pattern(F, eps_from)
    eps_to = effective_pattern(F, eps_to)
    if len(eps_from) != n or len(eps_to) != n:
        raise ValueError("pattern length must equal n")
    cone = _cone(F, n, eps_from, budget)
    chi = field_tables(F)[3]
    table = np.array(f.table, dtype=np.int64)
    want = np.array(eps_to)
    chis = chi[batch_leading_minors(F, table[cone])]
    return bool((chis == want).all())


def theorem_applies(F: GF, n: int, s: int, eps_from, eps_to) -> bool:
    """Whether the classification predicts c * Frob^ell (or nothing) for this setup.

    Needs 2 <= s <= n and both patterns starting with s entries +1; definite
    fields need s >= 2, non-definite fields s >= 3 unless q is a square.
    """
    if not 2 <= s <= n or F.p == 2:
        return False
    if any(e != 1 for e in tuple(eps_from)[:s] + tuple(eps_to)[:s]):
        return False
    if F.classify() is FieldClass.DEFINITE:
        return True
    return s >= 3 or F.k % 2 == 0


@dataclass
class ScanConfig:
    budget: int = DEFAULT_BUDGET
    sample: int = 2000
    seed: int = 0


@dataclass
class PreserverScan:
    field: GF
    n: int
    s: int
    eps_from: SignPattern
    eps_to: SignPattern
    mode: str
    scanned: int
    found: list[FuncTable]
    expected: list[FuncTable] | None = field(default=None)

    @property
    def agrees(self) -> bool | None:
        if self.expected is None:
            return None
        return [f.table for f in self.found] == [f.table for f in self.expected]

    def verdict(self) -> str:
        fam = "matches" if self.agrees else "DIFFERS FROM"
        if self.agrees is None:
            return f"verdict no-claim ({self.mode} scan of {self.scanned}, {len(self.found)} found)"
        what = "c*Frob^l family" if self.eps_from == self.eps_to else "empty set"
        return f"verdict {fam} {what} ({self.mode} scan of {self.scanned}, {len(self.found)} found)"


def _all_tables(q: int) -> np.ndarray:
    idx = np.arange(q**q, dtype=np.int64)
    out = np.empty((q**q, q), dtype=np.int8 if q < 128 else np.int64)
    for pos in range(q - 1, -1, -1):
        out[:, pos] = idx % q
        idx //= q
    return out


def _scan(F: GF, n: int, eps_from, eps_to, tables: np.ndarray, budget: int) -> np.ndarray:
    """Indices of the rows of ``tables`` that map the eps_from cone into the eps_to cone."""
    cone = _cone(F, n, eps_from, budget)
    chi = field_tables(F)[3]
    want = np.array(eps_to)
    alive = np.arange(len(tables))
    pos = 0
    while pos < len(cone) and len(alive):
        block = max(1, (1 << 20) // (len(alive) * n * n))
        mats = cone[pos : pos + block]
        pos += len(mats)
        images = tables[alive][:, mats].astype(np.int64)
        chis = chi[batch_leading_minors(F, images)]
        ok = (chis == want).all(axis=(-1, -2))
        alive = alive[ok]
    return alive


def classify_preservers(
    F: GF, n: int, s: int, eps_from, eps_to, config: ScanConfig | None = None
) -> PreserverScan:
    """Every f with f[LPM_n(eps_from)] inside LPM_n(eps_to).

    With q^q within budget all tables are scanned; otherwise the scan covers
    every c * Frob^ell (c in F_q) plus a seeded random sample of tables.
    """
    config = config or ScanConfig()
    eps_from = effective_pattern(F, check_pattern(eps_from))
    eps_to = effective_pattern(F, check_pattern(eps_to))
    if sym_count(F.q, n) > config.budget:
        raise BudgetExceeded(sym_count(F.q, n), config.budget)
    q = F.q
    if q**q <= config.budget:
        mode = "full"
        tables = _all_tables(q)
    else:
        mode = "restricted"
        family = {frob_table(F, c, ell).table for c in F.elements() for ell in range(F.k)}
        rng = np.random.default_rng(config.seed)
        sample = rng.integers(0, q, size=(config.sample, q))
        tables = np.unique(np.vstack([np.array(sorted(family)), sample]), axis=0)
    hits = _scan(F, n, eps_from, eps_to, tables, config.budget)
    found = [FuncTable(F, tuple(int(x) for x in tables[i])) for i in hits]
    expected = None
    if theorem_applies(F, n, s, eps_from, eps_to):
        expected = frobenius_family(F) if eps_from == eps_to else []
    return PreserverScan(F, n, s, eps_from, eps_to, mode, len(tables), found, expected)


# -- compatibility with the Cholesky maps -----------------------------------------


def scale_frob(M: Matrix, c: int, ell: int) -> Matrix:
    """c * Frob^ell[M]."""
    return frobenius_matrix(M, ell).scale(c)


@dataclass
class CompatibilityReport:
    inverse_chain: bool
    forward_chain: bool
    inverse_dual: bool
    commutation: bool | None

    def __bool__(self):
        return all(v is not False for v in vars(self).values())


def check_compatibility(
    anchor: SymMatrix, c: int, ell: int, A: SymMatrix, L: Matrix
) -> CompatibilityReport:
    """Evaluate the Frobenius/Cholesky identities exactly.

    inverse_chain:
        psi_inv[E](c Frob[A]) == Frob[psi_inv[c Frob[E]](A)] == sqrt(c) Frob[psi_inv[Frob[E]](A)]
    forward_chain:
        c Frob[psi[E](L)] == psi[c Frob[E]](Frob[L]) == psi[Frob[E]](sqrt(c) Frob[L])
    inverse_dual (the forward chain solved for L):
        psi_inv[c Frob[E]](c Frob[A]) == Frob[psi_inv[E](A)]
        psi_inv[Frob[E]](c Frob[A]) == sqrt(c) Frob[psi_inv[E](A)]
    commutation, only for the canonical +/-1 anchor with c == 1:
        psi_inv[D](Frob[A]) == Frob[psi_inv[D](A)] and psi[D](Frob[L]) == Frob[psi[D](L)]
    """
    F = anchor.field
    root = F.positive_sqrt(c)
    fr = lambda M: frobenius_matrix(M, ell)  # noqa: E731
    E = anchor
    cFE = SymMatrix.of(scale_frob(E, c, ell))
    FE = SymMatrix.of(fr(E))
    cFA = SymMatrix.of(scale_frob(A, c, ell))

    lhs = psi_inv(E, cFA)
    mid = fr(psi_inv(cFE, A))
    rhs = fr(psi_inv(FE, A)).scale(root)
    inverse_chain = lhs == mid == rhs

    flhs = scale_frob(psi(E, L), c, ell)
    fmid = psi(cFE, fr(L))
    frhs = psi(FE, fr(L).scale(root))
    forward_chain = flhs == fmid == frhs

    base = psi_inv(E, A)
    inverse_dual = psi_inv(cFE, cFA) == fr(base) and psi_inv(FE, cFA) == fr(base).scale(root)

    commutation = None
    eps = tuple(F.chi(m) for m in E.leading_minors())
    D = anchor_diag(F, eps, canonical_anchors(F))
    if c == 1 and E == D and F.classify() is FieldClass.DEFINITE:
        commutation = (
            psi_inv(D, SymMatrix.of(fr(A))) == fr(psi_inv(D, A))
            and psi(D, fr(L)) == fr(psi(D, L))
        )
    return CompatibilityReport(inverse_chain, forward_chain, inverse_dual, commutation)
