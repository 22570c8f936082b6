"""Command-line surface tying the series, identity, and scan modules together.

Subcommands: coeffs, verify, scan, table, oracle.  Exit codes: 0 pass,
1 theorem or identity failure, 2 usage error, 3 conjecture counterexample.
The SEVENCORES_ORDER environment variable supplies a default expansion
order; an explicit --order flag always wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .exprlang import ExprEvalError, ExprSyntaxError, evaluate
from .identities import REGISTRY, get_record, verify, verify_all
from .inequalities import (
    DEFAULT_DEPTH,
    claim_ids,
    core_split,
    run_all,
    run_claim,
)
from .partitions import PARTITION_BOUND, rank_histogram

ENV_ORDER = "SEVENCORES_ORDER"


def _resolve_order(parser, flag_value, fallback):
    """Explicit flag wins; then the environment; then the fallback."""
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(ENV_ORDER)
    if raw is None:
        return fallback
    try:
        value = int(raw)
    except ValueError:
        parser.error(f"{ENV_ORDER} must be an integer, got {raw!r}")
    if value < 0:
        parser.error(f"{ENV_ORDER} must be nonnegative, got {value}")
    return value


def _cmd_coeffs(args, parser):
    order = _resolve_order(parser, args.order, 200)
    try:
        series = evaluate(args.expr, order)
    except (ExprSyntaxError, ExprEvalError) as exc:
        parser.error(str(exc))
    lo = args.from_ if args.from_ is not None else 0
    hi = args.to if args.to is not None else order
    if not 0 <= lo <= hi <= order:
        parser.error(
            f"need 0 <= from <= to <= order, got from={lo} to={hi} order={order}"
        )
    for n in range(lo, hi + 1):
        print(n, series[n])
    return 0


def _report_json(r):
    fields = {
        "id": r.id,
        "note": r.note,
        "order": r.order,
        "status": r.status,
        "millis": round(r.millis, 3),
    }
    if r.status != "pass":
        fields["mismatch_exponent"] = r.mismatch_exponent
        fields["lhs"] = r.lhs_coeff
        fields["rhs"] = r.rhs_coeff
    return json.dumps(fields)


def _report_table_row(r):
    line = f"{r.id:<16} {r.status:<5} order={r.order:<5} {r.millis:9.1f}ms  {r.note}"
    if r.status != "pass":
        line += (
            f"  [first mismatch at q^{r.mismatch_exponent}:"
            f" {r.lhs_coeff} vs {r.rhs_coeff}]"
        )
    return line


def _cmd_verify(args, parser):
    if (args.id is None) == (not args.all):
        parser.error("give exactly one of: an identity id, or --all")
    order = _resolve_order(parser, args.order, 200)
    if args.all:
        reports = verify_all(order)
    else:
        try:
            record = get_record(args.id)
        except KeyError as exc:
            parser.error(str(exc.args[0]))
        reports = [verify(record, order)]
    reports = sorted(reports, key=lambda r: r.id)
    for r in reports:
        print(_report_json(r) if args.format == "jsonlike" else _report_table_row(r))
    passed = sum(1 for r in reports if r.status == "pass")
    if args.format != "jsonlike":
        print(f"{passed}/{len(reports)} identities pass at order {order}")
    return 0 if passed == len(reports) else 1


def _scan_row(r):
    line = (
        f"{r.claim:<20} {r.kind:<10} n={r.n_range[0]}..{r.n_range[1]:<6}"
        f" {r.status:<8} {r.description}"
    )
    if r.samples:
        n, lhs, rhs = r.samples[0]
        line += f"  [first instance n={n}: {lhs} vs {rhs}]"
    return line


def _cmd_scan(args, parser):
    selectors = sum((args.claim is not None, args.conjectures, args.theorems))
    if selectors != 1:
        parser.error(
            "give exactly one of: a claim id, --conjectures, or --theorems"
        )
    order = _resolve_order(parser, args.order, DEFAULT_DEPTH)
    if args.claim is not None:
        if args.claim not in claim_ids():
            parser.error(
                f"unknown claim id {args.claim!r}; known ids: "
                + ", ".join(sorted(claim_ids()))
            )
        reports = [run_claim(args.claim, order)]
    else:
        reports = run_all(order, "conjecture" if args.conjectures else "theorem")
    reports = sorted(reports, key=lambda r: r.claim)
    bad_theorem = bad_conjecture = False
    for r in reports:
        print(_scan_row(r))
        if r.status == "violated":
            n, lhs, rhs = r.violation
            print(f"  counterexample at n={n}: lhs={lhs} rhs={rhs}")
            if r.kind == "theorem":
                bad_theorem = True
            else:
                bad_conjecture = True
    holds = sum(1 for r in reports if r.status == "holds")
    print(f"{holds}/{len(reports)} claims hold to order {order}")
    if bad_theorem:
        return 1
    if bad_conjecture:
        return 3
    return 0


def _cmd_table(args, parser):
    if args.max < 0:
        parser.error(f"--max must be nonnegative, got {args.max}")
    cs = core_split(args.max)
    if args.which == "a7":
        headers = ("n", "a7")
        rows = [(n, cs.a7[n]) for n in range(args.max + 1)]
    else:
        headers = ("n", "a7", "a7_m1", "a7_0", "a7_1", "a7_2")
        rows = [
            (n, cs.a7[n], cs.a7_m1[n], cs.a7_0[n], cs.a7_1[n], cs.a7_2[n])
            for n in range(args.max + 1)
        ]
    if args.csv:
        print(",".join(headers))
        for row in rows:
            print(",".join(str(v) for v in row))
    else:
        widths = [
            max(len(h), max(len(str(r[i])) for r in rows))
            for i, h in enumerate(headers)
        ]
        print("  ".join(h.rjust(w) for h, w in zip(headers, widths)))
        for row in rows:
            print("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))
    return 0


def _cmd_oracle(args, parser):
    if args.max < 1:
        parser.error(f"--max must be at least 1, got {args.max}")
    if args.max > PARTITION_BOUND:
        parser.error(
            f"--max cannot exceed the enumeration cap {PARTITION_BOUND}"
        )
    cs = core_split(args.max)
    ranks = (-1, 0, 1, 2)
    series_by_rank = (cs.a7_m1, cs.a7_0, cs.a7_1, cs.a7_2)
    for n in range(1, args.max + 1):
        counted = rank_histogram(n, 7)
        brute = [sum(counted.values())] + [counted.get(j, 0) for j in ranks]
        table = [cs.a7[n]] + [s[n] for s in series_by_rank]
        if brute != table:
            print(
                f"row n={n} differs: brute force {brute} vs series {table}"
                " (columns: total, rank -1, 0, 1, 2)"
            )
            return 1
    print(f"{args.max}/{args.max} rows identical")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sevencores",
        description="Exact q-series identity verification and coefficient scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="expand an expression and print coefficients")
    p.add_argument("expr", help="expression, e.g. 'E(q^7)^7/E(q)'")
    p.add_argument("--order", type=int, default=None, help="expansion order")
    p.add_argument("--from", dest="from_", type=int, default=None,
                   help="first exponent to print (default 0)")
    p.add_argument("--to", type=int, default=None,
                   help="last exponent to print (default: order)")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("verify", help="check identities from the catalog")
    p.add_argument("id", nargs="?", default=None, help="identity id, e.g. eq-3.2")
    p.add_argument("--all", action="store_true", help="verify the whole catalog")
    p.add_argument("--order", type=int, default=None,
                   help="expansion order (default 200)")
    p.add_argument("--format", choices=("table", "jsonlike"), default="table")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="scan inequality and progression claims")
    p.add_argument("claim", nargs="?", default=None, help="claim id, e.g. ineq-1.11")
    p.add_argument("--conjectures", action="store_true",
                   help="scan every conjectured claim")
    p.add_argument("--theorems", action="store_true",
                   help="scan every proved claim")
    p.add_argument("--order", type=int, default=None,
                   help=f"scan depth (default {DEFAULT_DEPTH})")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("table", help="tabulate 7-core counts from closed forms")
    p.add_argument("which", choices=("a7", "a7j"),
                   help="a7: totals only; a7j: split by rank class")
    p.add_argument("--max", type=int, required=True, help="last n to print")
    p.add_argument("--csv", action="store_true", help="emit CSV with fixed header")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("oracle",
                       help="diff brute-force core counts against the series table")
    p.add_argument("--max", type=int, required=True,
                   help=f"last n to check (at most {PARTITION_BOUND})")
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
