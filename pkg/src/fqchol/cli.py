"""Command line entry point: ``fqchol <subcommand> ...``.

Exit status is 0 on success, 2 on domain errors (a non-definite field, a
pattern mismatch, a vanishing minor, a singular matrix, ...) and 1 on usage or
input-format errors. Errors print one line ``E_CODE: message`` to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import census as census_mod
from .cholesky import factor, factor_tpm, nonuniqueness_witness, transition
from .cones import (
    anchor_diag,
    canonical_anchors,
    format_pattern,
    map_inverse_cone,
    parse_pattern,
    sign_pattern_lpm,
    sign_pattern_tpm,
)
from .entrywise import ScanConfig, classify_preservers
from .errors import (
    DegreeUnsupported,
    FqError,
    InvalidModulus,
    InvalidPattern,
    NotPrime,
    NotSymmetric,
    ParseError,
)
from .gf import GF
from .groups import TriGroupLaw, box, box_inverse, cayley_table, check_group, circledast
from .matfq import Matrix, SymMatrix, format_matrix, parse_matrix

GRAMMAR = """\
matrix file grammar:
  line 1:    p k n                      (prime, extension degree, size)
  line 2:    c_0 c_1 ... c_k            (modulus coefficients, constant first;
                                         present only when k > 1)
  then n lines of n integers: the canonical codes of the entries, where the
  element c_0 + c_1 x + ... + c_{k-1} x^{k-1} has code sum(c_i * p^i).
sign patterns are written as comma separated signs, e.g. +,-,+
"""

USAGE_ERRORS = (
    ParseError, NotPrime, NotSymmetric, DegreeUnsupported, InvalidModulus, InvalidPattern
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_matrix(path: str, symmetric: bool = True) -> Matrix:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_matrix(text, symmetric=symmetric)


def _shard(text: str):
    try:
        i, m = (int(t) for t in text.split("/"))
    except ValueError:
        raise argparse.ArgumentTypeError("shard must look like i/m") from None
    if not 0 <= i < m:
        raise argparse.ArgumentTypeError("shard index must satisfy 0 <= i < m")
    return i, m


# -- subcommands -------------------------------------------------------------------


def cmd_field_info(args, out):
    F = GF(args.p, args.k)
    anchors = canonical_anchors(F)
    out.write(f"field {F}\n")
    out.write(f"q {F.q}\n")
    out.write(f"class {F.classify().value}\n")
    out.write(f"squares {' '.join(map(str, F.squares()))}\n")
    minus = "-" if anchors.omega_minus is None else anchors.omega_minus
    out.write(f"anchors omega+ {anchors.omega_plus} omega- {minus}\n")


def cmd_classify(args, out):
    A = _read_matrix(args.matrix)
    eps = sign_pattern_tpm(A) if args.tpm else sign_pattern_lpm(A)
    out.write(format_pattern(eps) + "\n")


def cmd_factor(args, out):
    A = _read_matrix(args.matrix)
    anchor = _read_matrix(args.anchor) if args.anchor else None
    fac = factor(A, anchor)
    out.write(format_matrix(fac.L))
    out.write(f"pattern {format_pattern(fac.eps)}\n")


def cmd_factor_tpm(args, out):
    A = _read_matrix(args.matrix)
    anchor = _read_matrix(args.anchor) if args.anchor else None
    fac = factor_tpm(A, anchor)
    out.write(format_matrix(fac.U))
    out.write(f"pattern {format_pattern(fac.eps)}\n")


def cmd_transition(args, out):
    A = _read_matrix(args.matrix)
    F = A.field
    src = _read_matrix(args.anchor_from) if args.anchor_from else None
    if src is None:
        src = anchor_diag(F, sign_pattern_lpm(A), canonical_anchors(F))
    if args.anchor_to:
        dst = _read_matrix(args.anchor_to)
    elif args.to_pattern:
        dst = anchor_diag(F, parse_pattern(args.to_pattern), canonical_anchors(F))
    else:
        raise UsageError("transition needs --to or --to-pattern")
    B = transition(A, src, dst)
    out.write(format_matrix(B))
    out.write(f"pattern {format_pattern(sign_pattern_lpm(B))}\n")


def cmd_inverse_map(args, out):
    A = _read_matrix(args.matrix)
    B = map_inverse_cone(A)
    out.write(format_matrix(B))
    out.write(f"tpm-pattern {format_pattern(sign_pattern_tpm(B))}\n")


def cmd_census(args, out):
    F = GF(args.p, args.k)
    report = census_mod.run_census(F, args.n, budget=args.budget, shard=args.shard)
    out.write(report.format_table())


def cmd_preservers(args, out):
    F = GF(args.p, args.k)
    eps = parse_pattern(args.eps) if args.eps else (1,) * args.n
    eps_to = parse_pattern(args.eps_to) if args.eps_to else eps
    if len(eps) != args.n or len(eps_to) != args.n:
        raise UsageError("patterns must have length n")
    config = ScanConfig(budget=args.budget, sample=args.sample, seed=args.seed)
    scan = classify_preservers(F, args.n, args.s, eps, eps_to, config)
    for f in scan.found:
        out.write(f"{f}\n")
    out.write(scan.verdict() + "\n")


def cmd_group_op(args, out):
    law = TriGroupLaw(args.law)
    if args.cayley:
        _cayley(args, law, out)
        return
    if not args.a:
        raise UsageError("group-op needs a matrix file (or --cayley)")
    A = _read_matrix(args.a)
    if args.square:
        R = box(law, A, A)
    elif args.inverse:
        R = box_inverse(law, A)
    else:
        if not args.b:
            raise UsageError("group-op needs two matrix files unless --square or --inverse")
        B = _read_matrix(args.b)
        R = circledast(law, A, B) if args.cone else box(law, A, B)
    out.write(format_matrix(R))
    out.write(f"pattern {format_pattern(sign_pattern_lpm(R))}\n")


CAYLEY_LIMIT = 400


def _cayley(args, law, out):
    if args.p is None or args.n is None:
        raise UsageError("--cayley needs --p and --n")
    F = GF(args.p, args.k)
    eps = parse_pattern(args.eps) if args.eps else None
    mats = census_mod.cone_array(F, args.n, eps)
    if len(mats) > CAYLEY_LIMIT:
        raise UsageError(f"cone has {len(mats)} members; --cayley is limited to {CAYLEY_LIMIT}")
    els = [SymMatrix(F, tuple(map(tuple, m.tolist()))) for m in mats]
    if eps is None:
        op = lambda a, b: box(law, a, b)  # noqa: E731
    else:
        op = lambda a, b: circledast(law, a, b)  # noqa: E731
    ident = anchor_diag(F, eps, canonical_anchors(F)) if eps else SymMatrix.identity(F, args.n)
    for i, m in enumerate(els):
        out.write(f"{i}: {' '.join(str(x) for r in m.rows for x in r)}\n")
    for row in cayley_table(els, op):
        out.write(" ".join(map(str, row)) + "\n")
    g = check_group(els, op, ident, lambda a: box_inverse(law, a))
    out.write(
        f"group {'yes' if g.is_group else 'no'} abelian {'yes' if g.abelian else 'no'} order {g.order}\n"
    )


def cmd_witness(args, out):
    F = GF(args.p, args.k)
    L1, L2 = nonuniqueness_witness(F, args.n)
    out.write(format_matrix(L1))
    out.write(format_matrix(L2))


# -- parser --------------------------------------------------------------------------


def _field_flags(p, required=True):
    p.add_argument("--p", type=int, required=required, help="field characteristic")
    p.add_argument("--k", type=int, default=1, help="extension degree (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fqchol",
        description="Cholesky factorizations, sign-pattern cones and related "
        "structures for symmetric matrices over F_q.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def add(name, func, help):
        sp = sub.add_parser(
            name, help=help, epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter
        )
        sp.set_defaults(func=func)
        return sp

    sp = add("field-info", cmd_field_info, "describe F_{p^k}")
    _field_flags(sp)

    sp = add("classify", cmd_classify, "print the LPM (or TPM) sign pattern of a matrix")
    sp.add_argument("matrix")
    sp.add_argument("--tpm", action="store_true", help="use trailing minors")

    sp = add("factor", cmd_factor, "factor A = L anchor L^T")
    sp.add_argument("matrix")
    sp.add_argument("--anchor", help="anchor matrix file (default: canonical diagonal anchor)")

    sp = add("factor-tpm", cmd_factor_tpm, "factor A = U anchor U^T (trailing minors)")
    sp.add_argument("matrix")
    sp.add_argument("--anchor")

    sp = add("transition", cmd_transition, "map L A_from L^T to L A_to L^T")
    sp.add_argument("matrix")
    sp.add_argument("--from", dest="anchor_from", help="source anchor (default canonical)")
    sp.add_argument("--to", dest="anchor_to", help="target anchor file")
    sp.add_argument("--to-pattern", help="target canonical anchor by sign pattern")

    sp = add("inverse-map", cmd_inverse_map, "A -> A^{-1}, from LPM(eps) to TPM(eps')")
    sp.add_argument("matrix")

    sp = add("census", cmd_census, "count LPM/TPM members per sign pattern")
    _field_flags(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--budget", type=int, default=census_mod.DEFAULT_BUDGET)
    sp.add_argument("--shard", type=_shard, help="i/m: run the i-th of m shards")

    sp = add("preservers", cmd_preservers, "search entrywise maps between LPM cones")
    _field_flags(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=int, default=2)
    sp.add_argument("--eps", help="source pattern (default all +)")
    sp.add_argument("--eps-to", help="target pattern (default: same as --eps)")
    sp.add_argument("--budget", type=int, default=census_mod.DEFAULT_BUDGET)
    sp.add_argument("--sample", type=int, default=2000, help="random tables in restricted mode")
    sp.add_argument("--seed", type=int, default=0)

    sp = add("group-op", cmd_group_op, "transported group laws on LPM cones")
    sp.add_argument("--law", choices=[law.value for law in TriGroupLaw], required=True)
    sp.add_argument("a", nargs="?")
    sp.add_argument("b", nargs="?")
    sp.add_argument("--square", action="store_true", help="print A [box] A")
    sp.add_argument("--inverse", action="store_true", help="print the group inverse of A")
    sp.add_argument("--cone", action="store_true", help="use the single-cone law")
    sp.add_argument("--cayley", action="store_true", help="emit the full Cayley table")
    _field_flags(sp, required=False)
    sp.add_argument("--n", type=int)
    sp.add_argument("--eps", help="with --cayley: restrict to one cone")

    sp = add("witness-nonunique", cmd_witness, "two factors with equal image (non-definite F_q)")
    _field_flags(sp)
    sp.add_argument("--n", type=int, required=True)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args, out)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        err.write(f"E_USAGE: {exc}\n")
        return 1
    except USAGE_ERRORS as exc:
        err.write(f"{exc.code}: {exc}\n")
        return 1
    except FqError as exc:
        err.write(f"{exc.code}: {exc}\n")
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
