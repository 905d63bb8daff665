"""Exhaustive enumeration of symmetric matrices and cone counts.

Symmetric matrices are indexed by their upper triangle read row by row,
(a_11, a_12, ..., a_1n, a_22, ..., a_nn), as a base-q number with a_11 most
significant. Enumeration runs in ascending index order; a shard ``(i, m)``
takes the i-th of m contiguous ranges of first-row values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .cones import SignPattern, all_patterns, effective_pattern, format_pattern
from .errors import BudgetExceeded, CensusMismatch, Singular, SizeMismatch
from .gf import GF
from .matfq import SymMatrix, batch_leading_minors, batch_trailing_minors, field_tables

DEFAULT_BUDGET = 10**7
CHUNK = 1 << 16


def sym_count(q: int, n: int) -> int:
    return q ** (n * (n + 1) // 2)


def formula_count(q: int, n: int) -> int:
    """(q-1)^n q^C(n,2): size of LPM_n over F_q."""
    return (q - 1) ** n * q ** comb(n, 2)


def _upper_slots(n):
    return [(i, j) for i in range(n) for j in range(i, n)]


def sym_array(F: GF, n: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Symmetric matrices with indices in [start, stop) as an (N, n, n) code array."""
    q = F.q
    slots = _upper_slots(n)
    stop = sym_count(q, n) if stop is None else stop
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((len(idx), n, n), dtype=np.int64)
    for i, j in reversed(slots):
        digit = idx % q
        idx = idx // q
        out[:, i, j] = digit
        out[:, j, i] = digit
    return out


def _check_budget(F: GF, n: int, budget: int):
    needed = sym_count(F.q, n)
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    return needed


def enumerate_sym(F: GF, n: int, budget: int = DEFAULT_BUDGET):
    """Yield every n x n symmetric matrix over F once, in ascending index order."""
    total = _check_budget(F, n, budget)
    for lo in range(0, total, CHUNK):
        for mat in sym_array(F, n, lo, min(total, lo + CHUNK)):
            yield SymMatrix(F, tuple(map(tuple, mat.tolist())))


def _pattern_codes(chis: np.ndarray) -> np.ndarray:
    """Map rows of +/-1 characters to the index used by ``all_patterns``."""
    n = chis.shape[-1]
    weights = 1 << np.arange(n - 1, -1, -1)
    return ((chis < 0).astype(np.int64) * weights).sum(axis=-1)


def cone_array(
    F: GF, n: int, eps=None, kind: str = "lpm", budget: int = DEFAULT_BUDGET
) -> np.ndarray:
    """All members of LPM_n(eps) (or TPM_n(eps)); every nonzero-minor matrix if eps is None."""
    total = _check_budget(F, n, budget)
    chi = field_tables(F)[3]
    minors_of = batch_leading_minors if kind == "lpm" else batch_trailing_minors
    want = None if eps is None else np.array(effective_pattern(F, eps))
    parts = []
    for lo in range(0, total, CHUNK):
        mats = sym_array(F, n, lo, min(total, lo + CHUNK))
        chis = chi[minors_of(F, mats)]
        keep = (chis != 0).all(axis=1)
        if want is not None:
            keep &= (chis == want).all(axis=1)
        parts.append(mats[keep])
    return np.concatenate(parts)


@dataclass
class CensusReport:
    field: GF
    n: int
    total_sym: int
    lpm_total: int
    tpm_total: int
    per_pattern: dict[SignPattern, int]
    tpm_per_pattern: dict[SignPattern, int]
    shard: tuple[int, int] | None = None
    checked: bool = field(default=False, compare=False)

    @property
    def formula_value(self) -> int:
        return formula_count(self.field.q, self.n)

    @property
    def density(self) -> Fraction:
        return Fraction(self.lpm_total, self.total_sym)

    @property
    def expected_density(self) -> Fraction:
        return (1 - Fraction(1, self.field.q)) ** self.n

    def expected_per_pattern(self) -> int:
        if self.field.p == 2:
            return self.formula_value
        return self.formula_value // 2**self.n

    def patterns(self):
        if self.field.p == 2:
            return [(1,) * self.n]
        return list(all_patterns(self.n))

    def merge(self, other: CensusReport) -> CensusReport:
        if other.field != self.field or other.n != self.n:
            raise SizeMismatch("cannot merge censuses of different shapes")
        keys = set(self.per_pattern) | set(other.per_pattern)
        tkeys = set(self.tpm_per_pattern) | set(other.tpm_per_pattern)
        return CensusReport(
            self.field,
            self.n,
            self.total_sym + other.total_sym,
            self.lpm_total + other.lpm_total,
            self.tpm_total + other.tpm_total,
            {k: self.per_pattern.get(k, 0) + other.per_pattern.get(k, 0) for k in keys},
            {k: self.tpm_per_pattern.get(k, 0) + other.tpm_per_pattern.get(k, 0) for k in tkeys},
        )

    def check(self) -> CensusReport:
        """Compare the counts with the closed forms; raise CensusMismatch on any difference."""
        q, n = self.field.q, self.n
        if self.total_sym != sym_count(q, n):
            raise CensusMismatch(f"partial census: {self.total_sym} of {sym_count(q, n)} matrices")
        f = self.formula_value
        if not self.lpm_total == self.tpm_total == f:
            raise CensusMismatch(
                f"totals lpm={self.lpm_total} tpm={self.tpm_total}, formula {f}"
            )
        want = self.expected_per_pattern()
        for eps in self.patterns():
            for kind, table in (("lpm", self.per_pattern), ("tpm", self.tpm_per_pattern)):
                got = table.get(eps, 0)
                if got != want:
                    raise CensusMismatch(
                        f"{kind} pattern {format_pattern(eps)}: {got} members, expected {want}"
                    )
        if self.density != self.expected_density:
            raise CensusMismatch(f"density {self.density} != {self.expected_density}")
        self.checked = True
        return self

    def format_table(self) -> str:
        F, n = self.field, self.n
        want = self.expected_per_pattern()
        width = max(7, 2 * n)
        lines = [f"field {F}", f"n {n}", f"{'pattern':<{width}} {'lpm':>10} {'tpm':>10} {'expected':>10}  check"]
        for eps in self.patterns():
            lp = self.per_pattern.get(eps, 0)
            tp = self.tpm_per_pattern.get(eps, 0)
            ok = "ok" if lp == tp == want else "FAIL"
            lines.append(f"{format_pattern(eps):<{width}} {lp:>10} {tp:>10} {want:>10}  {ok}")
        f = self.formula_value
        ok = "ok" if self.lpm_total == self.tpm_total == f else "FAIL"
        lines.append(f"{'total':<{width}} {self.lpm_total:>10} {self.tpm_total:>10} {f:>10}  {ok}")
        d, e = self.density, self.expected_density
        lines.append(
            f"density {self.lpm_total}/{self.total_sym} = {d}; "
            f"(1-1/q)^n = {e}  {'ok' if d == e else 'FAIL'}"
        )
        if self.shard is not None:
            lines.append(f"shard {self.shard[0]}/{self.shard[1]} (partial)")
        return "\n".join(lines) + "\n"


def shard_range(q: int, n: int, shard: tuple[int, int]) -> tuple[int, int]:
    i, m = shard
    if not 0 <= i < m:
        raise ValueError(f"bad shard {i}/{m}")
    rows = q**n
    rest = sym_count(q, n) // rows
    return (i * rows // m) * rest, ((i + 1) * rows // m) * rest


def run_census(
    F: GF, n: int, budget: int = DEFAULT_BUDGET, shard: tuple[int, int] | None = None
) -> CensusReport:
    """Count LPM/TPM members per sign pattern; full runs are checked against the closed forms."""
    total = _check_budget(F, n, budget)
    lo, hi = (0, total) if shard is None else shard_range(F.q, n, shard)
    chi = field_tables(F)[3]
    lpm_counts = np.zeros(2**n, dtype=np.int64)
    tpm_counts = np.zeros(2**n, dtype=np.int64)
    for start in range(lo, hi, CHUNK):
        mats = sym_array(F, n, start, min(hi, start + CHUNK))
        for counts, minors_of in (
            (lpm_counts, batch_leading_minors),
            (tpm_counts, batch_trailing_minors),
        ):
            chis = chi[minors_of(F, mats)]
            chis = chis[(chis != 0).all(axis=1)]
            counts += np.bincount(_pattern_codes(chis), minlength=2**n)
    pats = list(all_patterns(n))
    report = CensusReport(
        F,
        n,
        hi - lo,
        int(lpm_counts.sum()),
        int(tpm_counts.sum()),
        {p: int(c) for p, c in zip(pats, lpm_counts) if c},
        {p: int(c) for p, c in zip(pats, tpm_counts) if c},
        shard,
    )
    if shard is None:
        report.check()
    return report


def verify_extension_bijection(A: SymMatrix, u) -> bool:
    """x -> det [[A, u], [u^T, x]] hits every field value exactly once."""
    F = A.field
    if A.det() == 0:
        raise Singular("A must be invertible")
    u = [F.check(x) for x in u]
    if len(u) != A.n:
        raise SizeMismatch("border vector has wrong length")
    seen = set()
    for x in F.elements():
        rows = [list(r) + [u[i]] for i, r in enumerate(A.rows)] + [u + [x]]
        seen.add(SymMatrix(F, tuple(map(tuple, rows))).det())
    return len(seen) == F.q
