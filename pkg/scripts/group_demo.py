"""Group axioms for the transported laws on LPM_2, with a non-commuting pair.

    python3 scripts/group_demo.py [--p 7]
"""

import argparse
import time

from fqchol.census import cone_array
from fqchol.cones import all_patterns, anchor_diag, format_pattern, sign_pattern_lpm
from fqchol.gf import field_new
from fqchol.groups import TriGroupLaw, box, box_inverse, check_group, circledast
from fqchol.matfq import SymMatrix


def members(F, eps=None):
    return [SymMatrix(F, tuple(map(tuple, m.tolist()))) for m in cone_array(F, 2, eps)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=7)
    args = ap.parse_args()
    F = field_new(args.p)
    lpm = members(F)
    I = SymMatrix.identity(F, 2)
    for law in TriGroupLaw:
        t0 = time.perf_counter()
        g = check_group(lpm, lambda a, b: box(law, a, b), I, lambda a: box_inverse(law, a))
        print(
            f"box[{law.value}] on LPM_2(F_{F.q}): order {g.order}, group {g.is_group}, "
            f"abelian {g.abelian}  [{time.perf_counter() - t0:.1f}s]"
        )
        if g.noncommuting:
            a, b = g.noncommuting
            print(f"    A = {a.rows}, B = {b.rows}")
            print(f"    A.B = {box(law, a, b).rows}, B.A = {box(law, b, a).rows}")
        squares = {sign_pattern_lpm(box(law, A, A)) for A in lpm}
        print(f"    patterns of A.A: {sorted(format_pattern(e) for e in squares)}")
        for eps in all_patterns(2):
            cone = members(F, eps)
            g = check_group(cone, lambda a, b: circledast(law, a, b), anchor_diag(F, eps))
            print(f"    cone {format_pattern(eps)}: order {g.order}, group {g.is_group}, abelian {g.abelian}")


if __name__ == "__main__":
    main()
