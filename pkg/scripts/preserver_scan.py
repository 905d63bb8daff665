"""Entrywise preserver scans over small fields.

Runs the full scans over F_3 and F_7, the cross-pattern scans, and the
non-definite scans whose outcome is only reported.

    python3 scripts/preserver_scan.py
"""

import time

from fqchol.cones import format_pattern
from fqchol.entrywise import ScanConfig, classify_preservers
from fqchol.gf import field_new

RUNS = [
    # (p, k, n, s, eps_from, eps_to)
    (3, 1, 2, 2, (1, 1), (1, 1)),
    (7, 1, 2, 2, (1, 1), (1, 1)),
    (3, 1, 2, 2, (1, 1), (1, -1)),
    (3, 1, 2, 2, (1, -1), (1, 1)),
    (7, 1, 2, 2, (1, 1), (1, -1)),
    (7, 1, 2, 2, (1, -1), (1, 1)),
    (3, 1, 3, 2, (1, 1, 1), (1, 1, -1)),
    (7, 1, 3, 2, (1, 1, -1), (1, 1, 1)),
    (7, 1, 3, 3, (1, 1, 1), (1, 1, 1)),
    (5, 1, 2, 2, (1, 1), (1, 1)),
    (5, 1, 3, 3, (1, 1, 1), (1, 1, 1)),
    (3, 2, 2, 2, (1, 1), (1, 1)),
]


def main():
    for p, k, n, s, a, b in RUNS:
        F = field_new(p, k)
        t0 = time.perf_counter()
        scan = classify_preservers(F, n, s, a, b, ScanConfig(sample=2000))
        dt = time.perf_counter() - t0
        print(f"F_{F.q} n={n} s={s} {format_pattern(a)} -> {format_pattern(b)}  [{dt:.2f}s]")
        shown = scan.found[:12]
        for f in shown:
            print(f"    {f}")
        if len(scan.found) > len(shown):
            print(f"    ... {len(scan.found) - len(shown)} more")
        print(f"    {scan.verdict()}")


if __name__ == "__main__":
    main()
