"""Command-line front end: enumeration, series expansion and verification.

Exit codes: 0 success, 2 bad arguments, 3 enumeration budget exceeded,
4 a generating function disagrees with the enumeration oracle,
5 verification found a mismatch that no recorded correction explains.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import List, Optional, Sequence

from . import matrixverify, qsums
from .arith import Poly
from .genfunc import K_MAX_SYMBOLIC, WHICH, gf
from .wordstats import (CSV_COLUMNS, CYCLIC, KINDS, LINEAR, BudgetExceeded,
                        brute_distribution, dp_distribution, special_count)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_SELFCHECK = 4
EXIT_MISMATCH = 5

K_MAX = 12
SELFCHECK_MAX_N = 8

GF_COLUMNS = ["n", "t_degree", "coefficient"]

EPILOG = f"""\
CSV columns (a header row is always written):
  dist             {",".join(CSV_COLUMNS)}
  gf               {",".join(GF_COLUMNS)}   (preceded by a '# closed: ...' line)
  verify q         {",".join(qsums.REPORT_COLUMNS)}
  verify matrix    {",".join(matrixverify.REPORT_COLUMNS)}
  verify all       the q block, a blank line, then the matrix block

exit codes: 0 ok, 2 bad arguments, 3 enumeration budget exceeded,
4 closed form disagrees with enumeration, 5 unexplained verification mismatch
"""


class UsageError(Exception):
    pass


def render(header: Sequence[str], rows: Sequence[Sequence], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    cells = [[str(c) for c in header]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "".join("  ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip() + "\n"
                   for r in cells)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def _check_k(k: int, hi: int = K_MAX) -> None:
    if not 2 <= k <= hi:
        raise UsageError(f"--k must lie in [2, {hi}], got {k}")


def cmd_dist(args) -> tuple:
    _need(args, "k", "n")
    _check_k(args.k)
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    kinds = KINDS if args.kind == "both" else (args.kind,)
    dists = []
    for kind in kinds:
        if args.method == "dp":
            dists.append(dp_distribution(args.n, args.k, kind))
        else:
            dists.append(brute_distribution(args.n, args.k, kind))
    rows = [list(r) for d in dists for r in d.rows()]
    return render(CSV_COLUMNS, rows, args.format), EXIT_OK


def _oracle(which: str, n: int, k: int) -> Poly:
    if which == "F":
        return dp_distribution(n, k, LINEAR).as_poly()
    if which == "G":
        return dp_distribution(n, k, CYCLIC).as_poly()
    key = which.replace("-", "_")
    return Poly([special_count(n, k, key)], "t")


def selfcheck_failures(which: str, k: int, order: int) -> List[int]:
    """Orders n <= min(order, 8) where the closed form disagrees with enumeration."""
    series = gf(which, k, order).series
    return [n for n in range(min(order, SELFCHECK_MAX_N) + 1)
            if series[n] != _oracle(which, n, k)]


def cmd_gf(args) -> tuple:
    _need(args, "k")
    _check_k(args.k, K_MAX_SYMBOLIC)
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    res = gf(args.which, args.k, args.order)
    if args.format == "csv":
        rows = []
        for n, p in enumerate(res.series.coeffs):
            terms = [[n, m, c] for m, c in enumerate(p.coeffs) if c]
            rows.extend(terms or [[n, 0, 0]])
        text = f"# closed: {res.closed}\n" + render(GF_COLUMNS, rows, "csv")
    else:
        rows = [[n, str(c)] for n, c in enumerate(res.series.coeffs)]
        text = f"closed: {res.closed}\n" + render(["n", "coefficient"], rows, "plain")
    bad = selfcheck_failures(args.which, args.k, args.order)
    if bad:
        print(f"self-check failed at n = {bad}", file=sys.stderr)
        return text, EXIT_SELFCHECK
    return text, EXIT_OK


def cmd_verify(args) -> tuple:
    k_max = args.k_max
    parts = []
    code = EXIT_OK
    if args.scope in ("q", "all"):
        hi = 12 if k_max is None else k_max
        if not 1 <= hi <= K_MAX:
            raise UsageError(f"--k-max must lie in [1, {K_MAX}]")
        entries = qsums.verify_all(hi, args.samples, args.seed)
        parts.append(render(qsums.REPORT_COLUMNS, qsums.report_rows(entries), args.format))
        if any(e.blocking for e in entries):
            code = EXIT_MISMATCH
    if args.scope in ("matrix", "all"):
        hi = 6 if k_max is None else k_max
        if not 2 <= hi <= K_MAX:
            raise UsageError(f"--k-max must lie in [2, {K_MAX}]")
        results = matrixverify.run_matrix_suite(hi, args.seed, args.points)
        parts.append(render(matrixverify.REPORT_COLUMNS,
                            matrixverify.report_rows(results), args.format))
        if not all(r.passed for r in results):
            code = EXIT_MISMATCH
    return "\n".join(parts), code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="staircase",
        description="Exact statistics and generating functions for staircase words.",
        epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv"),
                        help="default: plain for dist and gf, csv for verify")
    common.add_argument("--out", help="write to this file instead of standard output")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", parents=[common],
                       help="distribution of the statistic over [k]^n")
    d.add_argument("--k", type=int)
    d.add_argument("--n", type=int)
    d.add_argument("--kind", choices=KINDS + ("both",), default=LINEAR)
    d.add_argument("--method", choices=("brute", "dp"), default="brute",
                   help="brute force (budgeted) or transfer matrix")
    d.set_defaults(func=cmd_dist)

    g = sub.add_parser("gf", parents=[common],
                       help="closed form and series coefficients")
    g.add_argument("--k", type=int)
    g.add_argument("--which", choices=WHICH, default="F")
    g.add_argument("--order", type=int, default=12, help="highest power of x in the output (N)")
    g.set_defaults(func=cmd_gf)

    v = sub.add_parser("verify", parents=[common], help="q-identity audit and matrix checks")
    v.add_argument("--scope", choices=("q", "matrix", "all"), default="all")
    v.add_argument("--k-max", type=int, dest="k_max",
                   help="largest k checked (default 12 for q, 6 for matrix)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--points", type=int, default=5, help="random points per k (matrix)")
    v.add_argument("--samples", type=int, default=0,
                   help="extra random evaluation points per identity (q)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    if args.format is None:
        args.format = "csv" if args.command == "verify" else "plain"
    try:
        text, code = args.func(args)
    except UsageError as e:
        print(f"staircase: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"staircase: {e}", file=sys.stderr)
        return EXIT_BUDGET
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
