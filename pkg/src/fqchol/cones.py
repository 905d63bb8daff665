"""Sign patterns, LPM/TPM cone membership and canonical anchors.

A sign pattern is a plain tuple of integers drawn from {+1, -1}; it is never
a tuple of field elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPattern, PatternMismatch, ZeroMinor
from .gf import GF, FieldClass
from .matfq import Matrix, SymMatrix, reverse_matrix

SignPattern = tuple[int, ...]


def check_pattern(eps) -> SignPattern:
    eps = tuple(int(e) for e in eps)
    if not eps or any(e not in (1, -1) for e in eps):
        raise InvalidPattern(f"sign pattern must be a nonempty +/-1 vector, got {eps}")
    return eps


def parse_pattern(text: str) -> SignPattern:
    out = []
    for tok in text.replace("−", "-").split(","):
        tok = tok.strip()
        if tok in ("+", "+1", "1"):
            out.append(1)
        elif tok in ("-", "-1"):
            out.append(-1)
        else:
            raise InvalidPattern(f"bad sign token {tok!r} in {text!r}")
    return tuple(out)


def format_pattern(eps) -> str:
    return ",".join("+" if e > 0 else "-" for e in eps)


def all_patterns(n: int):
    """All 2**n sign patterns, (+,...,+) first."""
    for code in range(2**n):
        yield tuple(-1 if (code >> (n - 1 - i)) & 1 else 1 for i in range(n))


def effective_pattern(field: GF, eps) -> SignPattern:
    """In characteristic 2 every pattern denotes the single cone (+,...,+)."""
    eps = check_pattern(eps)
    if field.p == 2:
        return (1,) * len(eps)
    return eps


def _pattern_from_minors(field: GF, minors, kind) -> SignPattern:
    out = []
    for k, m in enumerate(minors, start=1):
        if m == 0:
            raise ZeroMinor(k, kind)
        out.append(field.chi(m))
    return tuple(out)


def sign_pattern_lpm(A: Matrix) -> SignPattern:
    """Characters of the leading principal minors; ZeroMinor if one vanishes."""
    return _pattern_from_minors(A.field, A.leading_minors(), "leading")


def sign_pattern_tpm(A: Matrix) -> SignPattern:
    return _pattern_from_minors(A.field, A.trailing_minors(), "trailing")


def in_lpm(A: Matrix, eps=None) -> bool:
    try:
        got = sign_pattern_lpm(A)
    except ZeroMinor:
        return False
    return eps is None or got == effective_pattern(A.field, eps)


def in_tpm(A: Matrix, eps=None) -> bool:
    try:
        got = sign_pattern_tpm(A)
    except ZeroMinor:
        return False
    return eps is None or got == effective_pattern(A.field, eps)


def require_pattern(A: Matrix, eps, kind: str = "leading") -> SignPattern:
    got = sign_pattern_lpm(A) if kind == "leading" else sign_pattern_tpm(A)
    want = effective_pattern(A.field, eps)
    for k, (g, w) in enumerate(zip(got, want), start=1):
        if g != w:
            raise PatternMismatch(k, got, want)
    return got


@dataclass(frozen=True)
class AnchorPair:
    omega_plus: int
    omega_minus: int | None

    def omega(self, sign: int) -> int:
        return self.omega_plus if sign > 0 else self.omega_minus


def canonical_anchors(field: GF) -> AnchorPair:
    """omega_+ = 1; omega_- = -1 on definite fields, else the smallest non-square code."""
    cls = field.classify()
    if cls is FieldClass.EVEN_CHAR:
        return AnchorPair(1, None)
    if cls is FieldClass.DEFINITE:
        return AnchorPair(1, field.neg(1))
    return AnchorPair(1, field.first_nonsquare())


def anchor_diag(field: GF, eps, anchors: AnchorPair | None = None) -> SymMatrix:
    """diag(w_1, w_1 w_2, ..., w_{n-1} w_n) with chi(w_k) = eps_k.

    The k-th leading minor telescopes to (w_1 ... w_{k-1})^2 * w_k.
    """
    eps = check_pattern(eps)
    if field.p == 2:
        return SymMatrix.identity(field, len(eps))
    anchors = anchors or canonical_anchors(field)
    if field.chi(anchors.omega_plus) != 1 or field.chi(anchors.omega_minus) != -1:
        raise InvalidPattern("anchor pair must be (square, non-square)")
    w = [anchors.omega(e) for e in eps]
    entries = [w[0]] + [field.mul(w[i - 1], w[i]) for i in range(1, len(w))]
    return SymMatrix.diag(field, entries)


def anchor_tpm(field: GF, eps, anchors: AnchorPair | None = None) -> SymMatrix:
    return reverse_matrix(anchor_diag(field, eps, anchors))


def inverse_pattern(eps) -> SignPattern:
    """TPM pattern of A^{-1} for A in LPM(eps): (e_n e_{n-1}, ..., e_n e_1, e_n)."""
    eps = check_pattern(eps)
    n = len(eps)
    last = eps[-1]
    return tuple(last * eps[n - 1 - k] for k in range(1, n)) + (last,)


def map_inverse_cone(A: SymMatrix) -> SymMatrix:
    """A in LPM(eps) -> A^{-1} in TPM(inverse_pattern(eps))."""
    eps = sign_pattern_lpm(A)
    inv = SymMatrix.of(A.inverse())
    got = sign_pattern_tpm(inv)
    assert got == inverse_pattern(eps), (got, eps)
    return inv


def map_inverse_cone_tpm(A: SymMatrix) -> SymMatrix:
    """A in TPM(eps) -> A^{-1} in LPM(inverse_pattern(eps)); undoes map_inverse_cone."""
    eps = sign_pattern_tpm(A)
    inv = SymMatrix.of(A.inverse())
    got = sign_pattern_lpm(inv)
    assert got == inverse_pattern(eps), (got, eps)
    return inv
