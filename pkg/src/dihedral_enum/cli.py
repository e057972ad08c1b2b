"""Command line interface.

Exit status: 0 success, 1 verification mismatch, 2 bad input, 3 oracle
size guard refused the request.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import counting
from .actions import ActionKind
from .dihedral_core import NotOddPrime, make_group
from .oracle import TooLarge, enumerate_orbits, verify
from .polya import Method, cycle_index, evaluate_constant

TABLE1_PRIMES = (3, 5, 7, 11, 13, 17, 19)
TABLE2_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_count(args) -> tuple[str, int]:
    kind = ActionKind(args.kind)
    if args.method == "oracle":
        rep = enumerate_orbits(args.p, kind, force=args.force)
        total = rep.connected_count if args.connected else rep.orbit_count
        report = counting.CountReport(
            args.p, kind, _filter(args), total, counting.CountMethod.ORACLE
        )
    elif args.method == "polya":
        total = evaluate_constant(cycle_index(make_group(args.p), kind), 2)
        if args.connected:
            # disconnected orbits: sets inside the rotations, plus the single reflection
            circ = (
                counting.count_circulant_digraphs(args.p)
                if kind is ActionKind.DIGRAPH
                else counting.count_circulant_graphs(args.p)
            )
            total -= circ + 1
        report = counting.CountReport(args.p, kind, _filter(args), total, counting.CountMethod.POLYA)
    else:
        report = counting.count_report(args.p, kind, args.connected)
    if args.format == "json":
        return _json(report.to_dict()), EXIT_OK
    if args.format == "csv":
        d = report.to_dict()
        keys = ["p", "kind", "filter", "method", "total"]
        return _csv([keys, [d[k] for k in keys]]), EXIT_OK
    return f"{report.total}\n", EXIT_OK


def _filter(args):
    return counting.Filter.CONNECTED if args.connected else counting.Filter.ALL


def cmd_degree_table(args) -> tuple[str, int]:
    kind = ActionKind(args.kind)
    if kind is ActionKind.GRAPH and args.connected:
        rep = enumerate_orbits(args.p, kind, force=args.force)
        report = counting.CountReport(
            args.p,
            kind,
            counting.Filter.CONNECTED,
            rep.connected_count,
            counting.CountMethod.ORACLE,
            rep.connected_by_size,
        )
    else:
        report = counting.count_report(args.p, kind, args.connected, by_degree=True)
    if args.format == "json":
        return _json(report.to_dict()), EXIT_OK
    rows = sorted(report.by_degree.items())
    if args.format == "csv":
        return _csv([["k", "count"], *rows]), EXIT_OK
    return "".join(f"{k} {c}\n" for k, c in rows), EXIT_OK


def cmd_cycle_index(args) -> tuple[str, int]:
    kind = ActionKind(args.kind)
    ci = cycle_index(make_group(args.p), kind, Method(args.form))
    if args.format == "json":
        terms = [
            {"coefficient": str(c), "monomial": {f"x{k}": e for k, e in mono}}
            for mono, c in ci.ordered_terms()
        ]
        body = {
            "p": args.p,
            "kind": kind.value,
            "method": args.form,
            "group_order": str(ci.group_order),
            "cycle_index": ci.render(),
            "terms": terms,
        }
        return _json(body), EXIT_OK
    return ci.render() + "\n", EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    kinds = [ActionKind.DIGRAPH, ActionKind.GRAPH] if args.kind == "both" else [ActionKind(args.kind)]
    reports = [verify(args.p, k, force=args.force) for k in kinds]
    passed = all(r.passed for r in reports)
    status = EXIT_OK if passed else EXIT_MISMATCH
    if args.format == "json":
        body = {
            "p": args.p,
            "kind": args.kind,
            "method": "oracle",
            "passed": passed,
            "reports": [r.to_dict() for r in reports],
        }
        return _json(body), status
    if args.format == "csv":
        rows = [["p", "kind", "check", "passed", "detail"]]
        for r in reports:
            rows += [[r.p, r.kind.value, c.name, c.passed, c.detail()] for c in r.checks]
        return _csv(rows), status
    lines = []
    for r in reports:
        for c in r.checks:
            lines.append(f"{'PASS' if c.passed else 'FAIL'} {r.kind.value} p={r.p} {c.name}: {c.detail()}")
    lines.append("all checks passed" if passed else "verification FAILED")
    return "\n".join(lines) + "\n", status


def table1_rows():
    for p in TABLE1_PRIMES:
        degrees = [counting.count_connected_digraphs_by_outdegree(p, k) for k in range(2, 2 * p)]
        yield p, counting.count_connected_digraphs(p), degrees


def table2_rows():
    for p in TABLE2_PRIMES:
        yield p, counting.count_connected_graphs(p)


def cmd_tables(args) -> tuple[str, int]:
    if args.which == 1:
        rows = list(table1_rows())
        if args.format == "json":
            body = {
                "table": 1,
                "kind": "digraph",
                "method": "closed_form",
                "rows": [
                    {"p": p, "N_1": str(n1), "connected_by_outdegree": {str(k): str(c) for k, c in enumerate(deg, 2)}}
                    for p, n1, deg in rows
                ],
            }
            return _json(body), EXIT_OK
        return _csv([["p", "N_1", "M'_2..M'_2p-1"]] + [[p, n1, *deg] for p, n1, deg in rows]), EXIT_OK
    rows = list(table2_rows())
    if args.format == "json":
        body = {
            "table": 2,
            "kind": "graph",
            "method": "closed_form",
            "rows": [{"p": p, "N_1'": str(n)} for p, n in rows],
        }
        return _json(body), EXIT_OK
    return _csv([["p", "N_1'"]] + [list(r) for r in rows]), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihedral-enum",
        description="Count Cayley digraphs and graphs on D_2p up to isomorphism.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    prime = argparse.ArgumentParser(add_help=False)
    prime.add_argument("--p", type=int, required=True, help="odd prime")

    kind = argparse.ArgumentParser(add_help=False)
    kind.add_argument("--kind", choices=["digraph", "graph"], default="digraph")

    force = argparse.ArgumentParser(add_help=False)
    force.add_argument("--force", action="store_true", help="ignore the oracle size guard")

    p = sub.add_parser("count", parents=[prime, kind, fmt, force], help="total number of classes")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--method", choices=["closed_form", "polya", "oracle"], default="closed_form")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("degree-table", parents=[prime, kind, fmt, force], help="counts by out-degree / valency")
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_degree_table)

    p = sub.add_parser("cycle-index", parents=[prime, kind, fmt], help="cycle index of Aut(D_2p)")
    p.add_argument("--form", choices=["closed", "direct"], default="closed")
    p.set_defaults(func=cmd_cycle_index)

    p = sub.add_parser("verify", parents=[prime, fmt, force], help="check formulas against brute force")
    p.add_argument("--kind", choices=["digraph", "graph", "both"], default="both")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", parents=[fmt], help="reproduce the two count tables")
    p.add_argument("--which", type=int, choices=[1, 2], required=True)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "p"):
            make_group(args.p)
        out, status = args.func(args)
    except NotOddPrime as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
