"""Independent oracles shared by the test modules."""

from itertools import permutations, product

from fqchol.matfq import Matrix, SymMatrix


def leibniz_det(F, rows):
    """Determinant by the permutation expansion, scalar field ops only."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = 1
        for i in range(n):
            term = F.mul(term, rows[i][perm[i]])
        if inversions % 2:
            term = F.neg(term)
        total = F.add(total, term)
    return total


def brute_sqrt_roots(F, a):
    return [b for b in F.elements() if F.mul(b, b) == a]


def all_sym(F, n):
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    for vals in product(range(F.q), repeat=len(slots)):
        rows = [[0] * n for _ in range(n)]
        for (i, j), v in zip(slots, vals):
            rows[i][j] = rows[j][i] = v
        yield SymMatrix(F, tuple(map(tuple, rows)))


def brute_lpm_pattern(F, A):
    """Characters of leading minors via the Leibniz oracle; None if one vanishes."""
    out = []
    for k in range(1, A.n + 1):
        d = leibniz_det(F, [r[:k] for r in A.rows[:k]])
        if d == 0:
            return None
        out.append(1 if F.p == 2 else (1 if any(F.mul(b, b) == d for b in F.nonzero()) else -1))
    return tuple(out)


def brute_tpm_pattern(F, A):
    rev = SymMatrix(F, tuple(tuple(reversed(r)) for r in reversed(A.rows)))
    return brute_lpm_pattern(F, rev)


def all_lower_pos(F, n):
    squares = [a for a in F.nonzero() if any(F.mul(b, b) == a for b in F.nonzero())]
    strict = [(i, j) for i in range(n) for j in range(i)]
    for diag in product(squares, repeat=n):
        for low in product(range(F.q), repeat=len(strict)):
            rows = [[0] * n for _ in range(n)]
            for i, d in enumerate(diag):
                rows[i][i] = d
            for (i, j), x in zip(strict, low):
                rows[i][j] = x
            yield Matrix(F, tuple(map(tuple, rows)))


def random_sym(F, n, rng):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randrange(F.q)
    return SymMatrix(F, tuple(map(tuple, rows)))


def random_lower_pos(F, n, rng):
    squares = F.squares()
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.choice(squares)
        for j in range(i):
            rows[i][j] = rng.randrange(F.q)
    return Matrix(F, tuple(map(tuple, rows)))
