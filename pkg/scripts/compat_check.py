"""Frobenius/Cholesky compatibility identities on random samples.

Prints, per field, how often each identity holds, and splits the printed
inverse chain by whether c = 1 and Frob^l fixes the anchor.

    python3 scripts/compat_check.py [--samples 500] [--seed 8]
"""

import argparse
import random
from collections import Counter

from fqchol.cholesky import psi
from fqchol.cones import anchor_diag
from fqchol.entrywise import check_compatibility
from fqchol.gf import field_new
from fqchol.matfq import Matrix, frobenius_matrix


def random_lower_pos(F, n, rng):
    squares = F.squares()
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.choice(squares)
        for j in range(i):
            rows[i][j] = rng.randrange(F.q)
    return Matrix(F, tuple(map(tuple, rows)))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--seed", type=int, default=8)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for F in (field_new(7), field_new(3, 3)):
        tally = Counter()
        for _ in range(args.samples):
            n = rng.choice((2, 3))
            eps = tuple(rng.choice((1, -1)) for _ in range(n))
            D = anchor_diag(F, eps)
            E = D if rng.random() < 0.5 else psi(D, random_lower_pos(F, n, rng))
            A = psi(E, random_lower_pos(F, n, rng))
            c, ell = rng.choice(F.squares()), rng.randrange(F.k)
            rep = check_compatibility(E, c, ell, A, random_lower_pos(F, n, rng))
            fixed = c == 1 and frobenius_matrix(E, ell) == E
            tally["forward"] += rep.forward_chain
            tally["dual"] += rep.inverse_dual
            tally["inverse, c=1 and anchor fixed"] += fixed
            tally["inverse holds there"] += fixed and rep.inverse_chain
            tally["inverse holds elsewhere"] += (not fixed) and rep.inverse_chain
        print(f"F_{F.q}, {args.samples} samples")
        for key, val in tally.items():
            print(f"    {key:<32} {val}")


if __name__ == "__main__":
    main()
