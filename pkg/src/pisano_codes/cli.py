"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 a checked theorem failed
numerically (or a table row disagrees with its printed value).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import report
from .coset_graph import export_edges
from .errors import InvalidInputError, InvariantViolation

EXIT_OK, EXIT_INPUT, EXIT_FALSIFIED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _cmd_analyze(args) -> int:
    rep = report.analyze(args.p, srg=args.srg)
    print(rep.to_json() if args.json else rep.render_text())
    return EXIT_OK


def _cmd_table(args) -> int:
    cmp = report.compare_table(args.which, workers=args.workers)
    if args.json:
        print(json.dumps(cmp.to_dict(), indent=2))
    elif args.csv:
        sys.stdout.write(cmp.to_csv())
    else:
        print(cmp.render_text())
    return EXIT_OK if cmp.ok else EXIT_FALSIFIED


def _cmd_search(args) -> int:
    primes = report.search(args.max, workers=args.workers)
    if args.json:
        print(json.dumps({"max_p": args.max, "primes": primes}))
    else:
        print(f"{len(primes)} primes p <= {args.max}, p = +-3 mod 10, with pi(p) = 2(p+1):")
        print(" ".join(map(str, primes)))
    return EXIT_OK


def _cmd_srg(args) -> int:
    cert, graph = report.srg_certificate(args.p)
    if args.json:
        print(json.dumps({**cert.__dict__, "eigenvalues": list(cert.eigenvalues)}))
    else:
        print(f"p = {args.p}: " + report._fmt_srg(cert))
    if args.export:
        n = export_edges(graph, args.export)
        print(f"wrote {n} edges to {args.export}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pisano-codes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="full analysis of C_p for one prime")
    a.add_argument("p", type=int)
    a.add_argument("--srg", action="store_true", help="also certify the coset graph (K = 1, p <= 61)")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=_cmd_analyze)

    t = sub.add_parser("table", help="recompute a published table and compare")
    t.add_argument("which", type=int, choices=(1, 2, 3, 4))
    fmt = t.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    t.add_argument("--workers", type=int, default=1)
    t.set_defaults(func=_cmd_table)

    s = sub.add_parser("search", help="primes p = +-3 mod 10 with pi(p) = 2(p+1)")
    s.add_argument("--max", type=int, required=True, metavar="P")
    s.add_argument("--json", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=_cmd_search)

    g = sub.add_parser("srg", help="certify the coset graph of the dual code")
    g.add_argument("p", type=int)
    g.add_argument("--export", metavar="PATH", help="write the edge list")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=_cmd_srg)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"THEOREM CHECK FAILED: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED


if __name__ == "__main__":
    sys.exit(main())
