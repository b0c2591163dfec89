"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 resource budget exceeded,
3 internal consistency violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .betti import HOCHSTER, METHODS, power_betti_table
from .cochordal import cochord_number
from .errors import ConsistencyError, EILError, InputValidationError, PreconditionError, ResourceError
from .graph import Graph, format_graph, parse_graph
from .harness import (
    FAMILY_DEFAULT_SIZES,
    ScanConfig,
    compute_invariants,
    describe,
    evaluate_bounds,
    hereditary_witness_search,
    LEMMA_ALIASES,
    scan,
)
from .homology import FIELDS, GF2
from .matchings import ind_match_k2c5, min_match_k2c5
from .structure import build_gn, build_hn, build_standard, figure2_candidate, pc_membership, whisker

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_CONSISTENCY = 0, 1, 2, 3
FORMATS = ("graph6", "edgelist", "json")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str, fmt: str | None) -> Graph:
    from .graph import _guess_format

    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_graph(text, fmt or _guess_format(path, text))


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_invariants(args) -> int:
    g = _load(args.graphfile, args.format)
    inv, _ = compute_invariants(g)
    witnesses: dict = {}
    for key, fn in (("ind_match_k2c5", ind_match_k2c5), ("min_match_k2c5", min_match_k2c5)):
        try:
            witnesses[key] = fn(g)[1].to_json()
        except ResourceError:
            witnesses[key] = None
    try:
        witnesses["cochord"] = cochord_number(g)[1].to_json()
    except ResourceError:
        witnesses["cochord"] = None
    try:
        ok, dec = pc_membership(g)
        inv["pc_membership"] = ok
        witnesses["pc"] = dec.to_json() if dec else None
    except ResourceError:
        inv["pc_membership"] = None
    _emit({"graph": describe(g), "invariants": inv, "witnesses": witnesses})
    return EXIT_OK


def cmd_regularity(args) -> int:
    g = _load(args.graphfile, args.format)
    res = power_betti_table(g, args.power, args.field, args.method, args.budget)
    out = {"graph": describe(g), "s": args.power, **res.to_json()}
    _emit(out)
    if args.table:
        print(res.table, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.graphfile, args.format)
    report = evaluate_bounds(g, args.power, args.field, args.method, args.budget, args.cross_field)
    _emit(report.to_json())
    return EXIT_CONSISTENCY if report.violations else EXIT_OK


def cmd_witness(args) -> int:
    g = _load(args.graphfile, args.format)
    _, record = hereditary_witness_search(g, LEMMA_ALIASES[args.lemma])
    _emit({"graph": describe(g), **record})
    return EXIT_OK


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputValidationError(f"{what} must be an integer, got {text!r}")


def cmd_construct(args) -> int:
    kind, params = args.kind, args.params
    if kind in ("cycle", "path", "complete", "hn"):
        if len(params) != 1:
            raise InputValidationError(f"construct {kind} takes one size parameter")
        k = _int(params[0], "size")
        g = build_hn(k) if kind == "hn" else build_standard(kind, k)
    elif kind == "whisker":
        if len(params) != 1:
            raise InputValidationError("construct whisker takes one graph file")
        g = whisker(_load(params[0], args.input_format))
    else:
        # gn HFILE|figure2 U N X
        if len(params) != 4:
            raise InputValidationError("construct gn takes HFILE U N X (HFILE may be 'figure2')")
        if params[0] == "figure2":
            h = figure2_candidate()[0]
        else:
            h = _load(params[0], args.input_format)
        g = build_gn(h, _int(params[1], "u"), _int(params[2], "n"), _int(params[3], "x"))
    text = format_graph(g, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parse_random(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise InputValidationError(f"--random expects SEED,N,COUNT, got {text!r}")
    return tuple(_int(p, "--random field") for p in parts)  # type: ignore[return-value]


def cmd_scan(args) -> int:
    s_values = list(range(args.smin, args.smax + 1))
    common = dict(s_values=s_values, field=args.field, method=args.method, output=args.output,
                  workers=args.workers, vertex_budget=args.vertex_budget, subset_budget=args.subset_budget)
    if args.exhaustive is not None:
        config = ScanConfig("exhaustive", n=args.exhaustive, **common)
    elif args.random is not None:
        seed, n, count = _parse_random(args.random)
        config = ScanConfig("random", n=n, seed=seed, count=count, forests=args.forests, **common)
    else:
        sizes = [_int(x, "--sizes entry") for x in args.sizes.split(",")] if args.sizes else None
        config = ScanConfig("family", family=args.family, family_sizes=sizes, **common)
    summary = scan(config, sink=None if args.output else sys.stdout)
    if args.output:
        _emit(summary)
    return EXIT_CONSISTENCY if summary["violations"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="eil", description="Exact edge-ideal regularity and graph invariants.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name: str, help_: str):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graphfile", help="graph file, or - for stdin")
        sp.add_argument("--format", choices=FORMATS, help="input format (guessed when omitted)")
        return sp

    def algebra_opts(sp, power_required: bool = True):
        sp.add_argument("--power", type=int, required=power_required, metavar="S")
        sp.add_argument("--field", choices=FIELDS, default=GF2)
        sp.add_argument("--budget", type=int, help="polarized-variable budget")
        sp.add_argument("--method", choices=METHODS, default=HOCHSTER)

    graph_cmd("invariants", "all graph invariants with witnesses").set_defaults(func=cmd_invariants)

    sp = graph_cmd("regularity", "reg(I(G)^S) and the Betti table")
    algebra_opts(sp)
    sp.add_argument("--table", action="store_true", help="also print the Betti table to stderr")
    sp.set_defaults(func=cmd_regularity)

    sp = graph_cmd("verify", "evaluate every bound on reg(I(G)^S)")
    algebra_opts(sp)
    sp.add_argument("--cross-field", action="store_true", help="also compute over the other field")
    sp.set_defaults(func=cmd_verify)

    sp = graph_cmd("witness", "vertex witness for a hereditary bound")
    sp.add_argument("--lemma", choices=sorted(LEMMA_ALIASES), required=True)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("construct", help="write a named graph")
    sp.add_argument("kind", choices=("hn", "whisker", "cycle", "path", "complete", "gn"))
    sp.add_argument("params", nargs="*")
    sp.add_argument("--format", choices=FORMATS, default="graph6", help="output format")
    sp.add_argument("--input-format", choices=FORMATS)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("scan", help="bound checks over a family of graphs (JSON lines)")
    gen = sp.add_mutually_exclusive_group(required=True)
    gen.add_argument("--exhaustive", type=int, metavar="N", help="connected graphs on <= N vertices")
    gen.add_argument("--random", metavar="SEED,N,COUNT")
    gen.add_argument("--family", choices=sorted(FAMILY_DEFAULT_SIZES))
    sp.add_argument("--smax", type=int, default=1)
    sp.add_argument("--smin", type=int, default=1)
    sp.add_argument("--sizes", help="comma-separated family parameters")
    sp.add_argument("--forests", action="store_true", help="random forests instead of G(n, 1/2)")
    sp.add_argument("--field", choices=FIELDS, default=GF2)
    sp.add_argument("--method", choices=METHODS, default=HOCHSTER)
    sp.add_argument("--output")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--vertex-budget", type=int)
    sp.add_argument("--subset-budget", type=int)
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"eil: resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConsistencyError as exc:
        print(f"eil: consistency violation: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (InputValidationError, PreconditionError, OSError) as exc:
        print(f"eil: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EILError as exc:
        print(f"eil: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
