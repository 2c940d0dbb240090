"""Command-line workbench: ``indpoly <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .conjecture import ATOM_MAX_VERTICES, build_atom_table, coverage, witness_table, write_witness_table
from .families import FAMILY_KINDS, FamilySpec, generate
from .fvs import decycling_number
from .graph import Graph, GraphError, cyclomatic_number, parse_edge_list, parse_graph6, to_graph6
from .harness import (
    DEFAULT_TIMEOUT,
    ReportWriter,
    check_corpus,
    exhaustive_source,
    read_edge_list_dir,
    read_graph6_file,
)
from .poly import alternating_number, eval_poly, ind_poly


def load_graph(arg: str) -> Graph:
    """A graph6 string, or ``@path`` naming an edge-list file."""
    if arg.startswith("@"):
        return parse_edge_list(Path(arg[1:]).read_text())
    return parse_graph6(arg)


def _int_or_float(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def parse_params(items: list[str]) -> dict:
    params = {}
    for item in items:
        for part in filter(None, item.split(",")):
            key, sep, value = part.partition("=")
            if not sep:
                raise GraphError(f"expected key=value, got {part!r}")
            params[key.strip()] = _int_or_float(value.strip())
    return params


def cmd_poly(args) -> int:
    p = ind_poly(load_graph(args.graph))
    print(" ".join(map(str, p.coeffs)))
    return 0


def cmd_eval(args) -> int:
    print(eval_poly(ind_poly(load_graph(args.graph)), args.at))
    return 0


def cmd_alt(args) -> int:
    print(alternating_number(load_graph(args.graph)))
    return 0


def cmd_nu(args) -> int:
    print(cyclomatic_number(load_graph(args.graph)))
    return 0


def cmd_fvs(args) -> int:
    result = decycling_number(load_graph(args.graph))
    print(result.size)
    print(" ".join(map(str, result.vertices)))
    return 0


def cmd_gen(args) -> int:
    params = parse_params(args.params)
    if args.seed is not None:
        params["seed"] = args.seed
    unknown = set(params) - {"n", "q", "alpha", "parts", "p", "seed"}
    if unknown:
        raise GraphError(f"unknown parameter(s): {', '.join(sorted(unknown))}")
    spec = FamilySpec(args.family, **params)
    print(to_graph6(generate(spec)))
    return 0


def cmd_check(args) -> int:
    if args.exhaustive is not None:
        source = exhaustive_source(args.exhaustive)
    elif Path(args.input).is_dir():
        source = read_edge_list_dir(args.input)
    else:
        source = read_graph6_file(args.input)
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = ReportWriter(out, args.format, timing=not args.no_timing)
        summary = check_corpus(source, writer, jobs=args.jobs, timeout=args.timeout or None)
        writer.close()
    finally:
        if out is not sys.stdout:
            out.close()
    for skip in summary.skips:
        where = f"{skip.source}:{skip.line}" if skip.line else skip.source
        print(f"skipped {where}: {skip.error}", file=sys.stderr)
    stats = summary.as_dict()
    del stats["skips"]
    print(json.dumps(stats), file=sys.stderr)
    if summary.violations:
        print(f"FATAL: {summary.violations} bound violation(s)", file=sys.stderr)
    return summary.exit_status


def cmd_conjecture(args) -> int:
    atoms = build_atom_table(args.atoms_max_n, jobs=args.jobs)
    rows = witness_table(args.kmax, atoms)
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        write_witness_table(rows, out, args.format)
    finally:
        if out is not sys.stdout:
            out.close()
    for k, entry in coverage(rows).items():
        print(f"k={k}: {entry['found']}/{entry['targets']} found, missing q={entry['missing']}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indpoly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    graph_help = "graph6 string or @file with an edge list"

    for name, func, text in [
        ("poly", cmd_poly, "print the independence polynomial coefficients s_0 .. s_alpha"),
        ("alt", cmd_alt, "print I(G;-1)"),
        ("nu", cmd_nu, "print the cyclomatic number"),
        ("fvs", cmd_fvs, "print the decycling number and a minimum decycling set"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("graph", help=graph_help)
        p.set_defaults(func=func)

    p = sub.add_parser("eval", help="evaluate I(G;x) at an integer")
    p.add_argument("graph", help=graph_help)
    p.add_argument("--at", type=int, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="verify |I(G;-1)| <= 2^phi <= 2^nu over a corpus")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="graph6 file (one graph per line) or directory of edge-list files")
    src.add_argument("--exhaustive", type=int, metavar="N", help="all labelled graphs on N <= 7 vertices")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT, help="per-graph seconds; 0 disables")
    p.add_argument("--output", help="report file (default: stdout)")
    p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0 for byte-stable reports")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="emit a family member as graph6")
    p.add_argument("--family", choices=FAMILY_KINDS, required=True)
    p.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("conjecture", help="witness table for phi=k, I(-1)=q, |q| <= 2^k")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--atoms-max-n", type=int, default=ATOM_MAX_VERTICES)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
