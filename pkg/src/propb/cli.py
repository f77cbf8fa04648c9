"""Command-line front end.

Commands: gen (edge list or DIMACS on stdout), count (exact edge count vs
analytic bound), bound (sweep over the valid l values of a k), witness
(monochromatic edge for a coloring), solve (DPLL on the dual CNF), and
verify-small (exhaustive non-2-colorability check).

Exit codes: 0 success, 2 usage or parameter error, 3 size refusal (edge cap
or exhaustive-search limit), 4 verification failure, which would mean a bug
in the construction.  The default edge cap can be overridden with --edge-cap
or the PROPB_EDGE_CAP environment variable.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from typing import IO, Sequence

from . import counting
from .construction import (
    DEFAULT_EDGE_CAP,
    EdgeCapError,
    build_full,
    dedup,
    iter_edges,
    write_edge_list,
)
from .params import ParameterError, Params, validate_params
from .satbridge import dpll_satisfiable, emit_dimacs, hypergraph_to_cnf
from .witness import (
    ColoringError,
    find_proper_coloring,
    monochromatic_witness,
    parse_coloring,
    random_coloring,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SIZE = 3
EXIT_VERIFY = 4

VERIFY_SMALL_MAX_VERTICES = 26


def _default_edge_cap() -> int:
    raw = os.environ.get("PROPB_EDGE_CAP")
    if raw is None:
        return DEFAULT_EDGE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"PROPB_EDGE_CAP must be an integer, got {raw!r}")


def _resolve_params(args: argparse.Namespace) -> Params:
    l = args.l if args.l is not None else counting.best_l(args.k)
    return validate_params(args.k, l)


def cmd_gen(args: argparse.Namespace, out: IO[str]) -> int:
    params = _resolve_params(args)
    total = counting.edge_count(params)
    if args.edge_cap is not None and total > args.edge_cap:
        raise EdgeCapError(total, args.edge_cap)
    if args.dedup:
        hypergraph = dedup(build_full(params, args.edge_cap))
        edges: Sequence = hypergraph.edges
        count = len(hypergraph.edges)
    else:
        edges = iter_edges(params)
        count = total
    if args.format == "edges":
        write_edge_list(out, params, edges, count)
    else:
        out.write(f"p cnf {params.num_vertices} {2 * count}\n")
        for edge in edges:
            out.write(" ".join([str(v + 1) for v in edge] + ["0"]) + "\n")
            out.write(" ".join([str(-(v + 1)) for v in edge] + ["0"]) + "\n")
    return EXIT_OK


def cmd_count(args: argparse.Namespace, out: IO[str]) -> int:
    params = _resolve_params(args)
    count = counting.edge_count(params)
    bound = counting.edge_count_upper_bound(params.k, params.l)
    verdict = "yes" if bound.certifies_at_most(count) else "NO"
    out.write(f"k = {params.k}, l = {params.l}, vertices = {params.num_vertices}\n")
    out.write(f"edge count = {count}\n")
    out.write(f"upper bound = {float(bound):.4e}\n")
    out.write(f"count <= bound: {verdict}\n")
    return EXIT_OK if verdict == "yes" else EXIT_VERIFY


def cmd_bound(args: argparse.Namespace, out: IO[str]) -> int:
    k = args.k
    if k < 1:
        raise ParameterError(f"k must be positive, got {k}")
    rows = []
    for l in counting.divisors(k):
        params = validate_params(k, l)
        count = counting.edge_count(params)
        bound = counting.edge_count_upper_bound(k, l)
        rows.append((l, params.seq_len, count, bound))
    best = counting.best_l(k)
    out.write(f"{'l':>4} {'seq_len':>8} {'edge_count':>16} {'upper_bound':>13} {'ok':>3}\n")
    failures = 0
    for l, seq_len, count, bound in rows:
        ok = bound.certifies_at_most(count)
        failures += 0 if ok else 1
        out.write(f"{l:>4} {seq_len:>8} {count:>16} {float(bound):>13.4e} {'yes' if ok else 'NO':>3}\n")
    out.write(f"best l = {best} (edge count {counting.edge_count(validate_params(k, best))})\n")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def cmd_witness(args: argparse.Namespace, out: IO[str]) -> int:
    params = _resolve_params(args)
    if args.coloring is not None:
        with open(args.coloring, "r", encoding="ascii") as handle:
            coloring = parse_coloring(params, handle.read())
    elif args.seed is not None:
        coloring = random_coloring(params, random.Random(args.seed))
    else:
        raise ParameterError("witness needs --coloring FILE or --seed N")
    hypergraph = build_full(params, args.edge_cap)
    witness = monochromatic_witness(params, hypergraph, coloring)
    out.write(f"color = {witness.color}\n")
    out.write(f"sequences = {' '.join(str(s) for s in witness.chosen_seqs)}\n")
    out.write(f"shifts = {' '.join(str(s) for s in witness.shifts)}\n")
    out.write(f"positions = {' '.join(str(r) for r in witness.positions)}\n")
    out.write(f"edge = {' '.join(str(v + 1) for v in witness.edge)}\n")
    out.write("verified: monochromatic and present in the construction\n")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace, out: IO[str]) -> int:
    params = _resolve_params(args)
    hypergraph = build_full(params, args.edge_cap)
    if args.dedup:
        hypergraph = dedup(hypergraph)
    cnf = hypergraph_to_cnf(hypergraph)
    result = dpll_satisfiable(cnf)
    stats = f"variables = {cnf.variable_count}, clauses = {len(cnf.clauses)}, decisions = {result.decisions}"
    if result.satisfiable:
        out.write(f"satisfiable ({stats})\n")
        out.write("ERROR: the dual CNF must be unsatisfiable; this is a bug\n")
        return EXIT_VERIFY
    out.write(f"unsatisfiable ({stats})\n")
    return EXIT_OK


def cmd_verify_small(args: argparse.Namespace, out: IO[str]) -> int:
    params = _resolve_params(args)
    if params.num_vertices > VERIFY_SMALL_MAX_VERTICES:
        out.write(
            f"refusing: {params.num_vertices} vertices exceed the exhaustive limit "
            f"of {VERIFY_SMALL_MAX_VERTICES}\n"
        )
        return EXIT_SIZE
    hypergraph = dedup(build_full(params, args.edge_cap))
    proper = find_proper_coloring(hypergraph, VERIFY_SMALL_MAX_VERTICES)
    checked = 2**params.num_vertices
    if proper is None:
        out.write(f"non-2-colorable: confirmed ({checked} colorings checked)\n")
        return EXIT_OK
    out.write(f"ERROR: found a proper 2-coloring {proper}; this is a bug\n")
    return EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="propb",
        description=(
            "Build k-uniform hypergraphs with no proper 2-coloring and their "
            "unsatisfiable monotone k-CNF duals; count, bound, witness, and verify."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_l: bool = True) -> None:
        p.add_argument("--k", type=int, required=True, help="edge size")
        if with_l:
            p.add_argument(
                "--l",
                type=int,
                default=None,
                help="grouping parameter (divisor of k); default: minimize the edge count",
            )
        p.add_argument(
            "--edge-cap",
            type=int,
            default=None,
            help=f"refuse constructions above this many edges (default {DEFAULT_EDGE_CAP} "
            "or PROPB_EDGE_CAP)",
        )

    p_gen = sub.add_parser("gen", help="emit the construction as an edge list or DIMACS CNF")
    add_common(p_gen)
    p_gen.add_argument("--format", choices=("edges", "dimacs"), default="edges")
    p_gen.add_argument("--dedup", action="store_true", help="emit distinct edges only")
    p_gen.set_defaults(func=cmd_gen)

    p_count = sub.add_parser("count", help="exact edge count and the analytic upper bound")
    add_common(p_count)
    p_count.set_defaults(func=cmd_count)

    p_bound = sub.add_parser("bound", help="sweep the valid l values for a given k")
    p_bound.add_argument("--k", type=int, required=True, help="edge size")
    p_bound.set_defaults(func=cmd_bound)

    p_witness = sub.add_parser("witness", help="monochromatic edge for a 2-coloring")
    add_common(p_witness)
    p_witness.add_argument("--coloring", type=str, default=None, help="coloring file (one line of R/B)")
    p_witness.add_argument("--seed", type=int, default=None, help="generate a random coloring instead")
    p_witness.set_defaults(func=cmd_witness)

    p_solve = sub.add_parser("solve", help="decide the dual CNF with the embedded DPLL")
    add_common(p_solve)
    p_solve.add_argument("--dedup", action="store_true", help="solve the deduplicated dual")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser(
        "verify-small", help="exhaustively check non-2-colorability (vertex count <= 26)"
    )
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify_small)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "edge_cap", None) is None and hasattr(args, "edge_cap"):
            args.edge_cap = _default_edge_cap()
        return args.func(args, sys.stdout)
    except (ParameterError, ColoringError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except AssertionError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
