"""Census tables for the standard grid of small fields, plus the density trend.

    python3 scripts/census_report.py [--max-n 4]
"""

import argparse
import time

from fqchol.census import run_census
from fqchol.gf import field_new

GRID = {(2, 1): 4, (3, 1): 4, (2, 2): 3, (5, 1): 3, (7, 1): 3, (3, 2): 2}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--quiet", action="store_true", help="skip the per-pattern tables")
    args = ap.parse_args()

    densities = {}
    t0 = time.perf_counter()
    for (p, k), top in GRID.items():
        F = field_new(p, k)
        for n in range(1, min(top, args.max_n) + 1):
            rep = run_census(F, n)
            densities[(F.q, n)] = rep.density
            if not args.quiet:
                print(rep.format_table())
    print(f"census grid done in {time.perf_counter() - t0:.2f}s\n")

    qs = sorted({q for q, _ in densities})
    print("density of LPM_n in Sym_n, equal to (1-1/q)^n")
    print("n  " + "".join(f"{'q=' + str(q):>10}" for q in qs))
    for n in range(1, args.max_n + 1):
        cells = [f"{float(densities[(q, n)]):>10.4f}" if (q, n) in densities else f"{'-':>10}" for q in qs]
        print(f"{n:<3}" + "".join(cells))


if __name__ == "__main__":
    main()
