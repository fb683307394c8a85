"""Command line front end.

Exit codes: 0 yes / success, 1 no / invalid decomposition, 2 input error,
3 parameter outside the solvable domain (``b < 3``).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import chordal, oracle, twdp
from .errors import DomainError, NotChordalError, ParseError, RLISError  # noqa: F401
from .graph import Graph, bits, parse_graph
from .treedec import (EXPLICIT_EDGES, BAG_COMPLETE, chordal_clique_tree, chordless_cycle,
                      format_td, heuristic_decomposition, is_chordal, make_nice, parse_td,
                      pinned_nice, validate_decomposition)

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2, 3
SOLVERS = ("auto", "chordal", "treewidth", "oracle")


@dataclass
class SolveRequest:
    graph: Graph
    mode: str = "rlis"
    v0: int | None = None
    a: int | None = None
    b: int | None = None
    solver: str = "auto"
    td: object = None
    method: str = "min-fill"


def _pick(req: SolveRequest) -> str:
    if req.solver == "auto":
        return "chordal" if is_chordal(req.graph) else "treewidth"
    if req.solver == "chordal" and not is_chordal(req.graph):
        raise NotChordalError(chordless_cycle(req.graph))
    return req.solver


def run_solve(req: SolveRequest) -> dict:
    """Answer one instance; the report carries verdict, witness, solver,
    width and elapsed milliseconds."""
    G = req.graph
    if req.b is not None and req.b < 3:
        raise DomainError("b must be at least 3")
    chordal.check_parameters(G, req.v0, req.a, req.b)
    start = time.perf_counter()
    solver = _pick(req)
    witness = None
    width = None
    if solver == "chordal":
        res = chordal.solve_chordal(G, req.v0, req.a, req.b, want_witness=True)
        verdict, witness, width = res.verdict, res.witness, res.width
    elif solver == "treewidth":
        N = pinned_nice(G, req.v0, req.td, req.method)
        res = twdp.solve_treewidth(G, N, req.v0, req.a, req.b)
        verdict, width = res.verdict, res.width
    else:
        verdict = False
        for rec in oracle.enumerate_induced_subtrees(G, req.a):
            if rec.size == req.a and rec.leaf_count >= req.b and rec.internal_set >> req.v0 & 1:
                verdict, witness = True, list(bits(rec.vertices))
                break
    report = {"verdict": "yes" if verdict else "no"}
    if witness is not None:
        report["witness"] = [G.labels[v] for v in witness]
    report.update(solver=solver, width=width,
                  millis=round((time.perf_counter() - start) * 1000, 3))
    return report


def run_leafmap(req: SolveRequest) -> dict:
    """Max leaves per subtree size, maximised over the internal vertex."""
    G = req.graph
    start = time.perf_counter()
    solver = _pick(req)
    if req.v0 is not None and not 0 <= req.v0 < G.n:
        raise DomainError(f"v0={req.v0!r} is not a vertex of the graph")
    centres = range(G.n) if req.v0 is None else [req.v0]
    best: dict[int, int] = {}
    if req.v0 is None:
        if G.n:
            best[1] = 0
        if G.m:
            best[2] = 2
    if solver == "oracle":
        profiles = oracle.internal_profiles(G)
    for v in centres:
        if solver == "chordal":
            prof = chordal.chordal_profile(G, v)
        elif solver == "treewidth":
            prof = twdp.treewidth_profile(G, pinned_nice(G, v, req.td, req.method), v)
        else:
            prof = profiles[v]
        for k, l in prof.items():
            if best.get(k, -1) < l:
                best[k] = l
        # a tree on k vertices has at most k - 1 leaves
        if all(best.get(k) == k - 1 for k in range(3, G.n + 1)):
            break
    return {"leafmap": {str(k): best[k] for k in sorted(best)}, "solver": solver,
            "millis": round((time.perf_counter() - start) * 1000, 3)}


def _read_graph(path: str, fmt: str | None) -> Graph:
    if fmt is None:
        fmt = "pace-gr" if path.endswith(".gr") else "edge-list"
    return parse_graph(Path(path).read_bytes(), fmt)


def _vertex(G: Graph, label: str) -> int:
    try:
        key = int(label)
    except ValueError:
        key = label
    return G.index_of(key)


def _emit(report: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(report, sort_keys=True) + "\n")
        return
    for key, val in report.items():
        if isinstance(val, dict):
            out.write(f"{key}:\n")
            for k, v in val.items():
                out.write(f"  {k} {v}\n")
        elif isinstance(val, list):
            out.write(f"{key}: {' '.join(map(str, val))}\n")
        else:
            out.write(f"{key}: {val}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rlis", description="Induced subtrees with many leaves.")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("--graph", required=True, help="PACE .gr file or edge list")
        p.add_argument("--format", choices=("pace-gr", "edge-list"), help="override format detection")

    p = sub.add_parser("solve", help="decide one instance")
    graph_args(p)
    p.add_argument("--td", help="PACE .td decomposition to use for the treewidth solver")
    p.add_argument("--v0", required=True, help="label of the vertex that must be internal")
    p.add_argument("--a", type=int, required=True, help="exact number of vertices")
    p.add_argument("--b", type=int, required=True, help="minimum number of leaves (>= 3)")
    p.add_argument("--solver", choices=SOLVERS, default="auto")
    p.add_argument("--method", choices=("min-fill", "min-degree"), default="min-fill")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("leafmap", help="max leaves for every subtree size")
    graph_args(p)
    p.add_argument("--td", help="PACE .td decomposition to use for the treewidth solver")
    p.add_argument("--v0", help="only subtrees with this vertex internal")
    p.add_argument("--solver", choices=SOLVERS, default="auto")
    p.add_argument("--method", choices=("min-fill", "min-degree"), default="min-fill")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("decompose", help="write a tree decomposition")
    graph_args(p)
    p.add_argument("--method", choices=("min-fill", "min-degree", "clique-tree"), default="min-fill")
    p.add_argument("-o", "--output", required=True, help="output .td file ('-' for stdout)")
    p.add_argument("--nice-json", help="also dump the nice decomposition as JSON")
    p.add_argument("--convention", choices=(BAG_COMPLETE, EXPLICIT_EDGES), default=BAG_COMPLETE)

    p = sub.add_parser("validate", help="check a decomposition against a graph")
    graph_args(p)
    p.add_argument("--td", required=True)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "b", None) is not None and args.b < 3:
        print("error: b must be at least 3", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        G = _read_graph(args.graph, args.format)
        if args.command in ("solve", "leafmap"):
            td = None
            if getattr(args, "td", None):
                td = parse_td(Path(args.td).read_bytes(), G.n)
                bad = validate_decomposition(G, td)
                if bad is not None:
                    raise ParseError(f"invalid decomposition: {bad}")
            v0 = None if args.v0 is None else _vertex(G, args.v0)
            req = SolveRequest(G, args.command, v0, getattr(args, "a", None), getattr(args, "b", None),
                               args.solver, td, args.method)
            if args.command == "solve":
                report = run_solve(req)
                _emit(report, args.json, out)
                return EXIT_YES if report["verdict"] == "yes" else EXIT_NO
            _emit(run_leafmap(req), args.json, out)
            return EXIT_YES
        if args.command == "decompose":
            D = chordal_clique_tree(G) if args.method == "clique-tree" else heuristic_decomposition(G, args.method)
            text = format_td(D, G.n)
            if args.output == "-":
                out.write(text)
            else:
                Path(args.output).write_text(text)
            if args.nice_json:
                N = make_nice(G, D, args.convention)
                Path(args.nice_json).write_text(json.dumps(N.to_json(G.labels), indent=1))
            return EXIT_YES
        td = parse_td(Path(args.td).read_bytes(), G.n)
        bad = validate_decomposition(G, td)
        if bad is None:
            out.write(f"ok: width {td.width}\n")
            return EXIT_YES
        out.write(f"{bad}\n")
        return EXIT_NO
    except (RLISError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
