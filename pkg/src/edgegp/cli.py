"""Command-line front end.

Graphs can be given either as a JSON graph file or as family tokens, e.g.
``grid 6 6``, ``hypercube 3`` (or ``q3``), ``cycle 7``, ``tree 12 --seed 4``,
``prufer 3 3 0``, ``fig1``.

Exit codes: 0 success/optimal, 1 a negative verification, 2 budget-limited
result, 3 guard or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from typing import Optional, Sequence

from . import constructions as cons
from .generators import (
    Complete,
    Cycle,
    Fig1Example,
    Grid,
    Hypercube,
    Path,
    Star,
    Tree,
    generate,
    graph_to_json,
    random_prufer,
    read_graph,
)
from .geodesy import InstanceTooLarge, find_violation
from .graph import all_pairs_distances, edge_ids_from_pairs
from .solver import Budget, enumerate_optima, gpe_exact
from .theta import theta_classes

EXIT_OK, EXIT_FALSE, EXIT_BUDGET, EXIT_ERROR = 0, 1, 2, 3

PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags, which would read as "budget-limited"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def parse_family(tokens: Sequence[str], seed: Optional[int] = None):
    if not tokens:
        raise UsageError("missing graph: give a JSON file or family tokens")
    name, args = tokens[0].lower(), list(tokens[1:])

    def ints(count: Optional[int]) -> list[int]:
        if count is not None and len(args) != count:
            raise UsageError(f"{name} expects {count} integer argument(s), got {len(args)}")
        try:
            return [int(a) for a in args]
        except ValueError:
            raise UsageError(f"{name} arguments must be integers: {args}") from None

    if name.startswith("q") and name[1:].isdigit() and not args:
        return Hypercube(int(name[1:]))
    if name == "path":
        return Path(*ints(1))
    if name == "cycle":
        return Cycle(*ints(1))
    if name == "complete":
        return Complete(*ints(1))
    if name == "star":
        return Star(*ints(1))
    if name == "hypercube":
        return Hypercube(*ints(1))
    if name == "grid":
        return Grid(*ints(2))
    if name == "tree":
        (n,) = ints(1)
        return Tree(prufer=random_prufer(n, random.Random(0 if seed is None else seed)))
    if name == "prufer":
        return Tree(prufer=tuple(ints(None)))
    if name == "fig1":
        ints(0)
        return Fig1Example()
    raise UsageError(f"unknown family {tokens[0]!r}")


def load_graph(tokens: Sequence[str], seed: Optional[int] = None):
    """Graph and (when given by family tokens) its descriptor."""
    if len(tokens) == 1 and os.path.exists(tokens[0]):
        return read_graph(tokens[0]), None
    family = parse_family(tokens, seed)
    return generate(family), family


def to_dot(g, highlight=(), classes=None) -> str:
    lines = [f'graph "{g.name or "G"}" {{']
    lines += [f"  {v};" for v in range(g.n)]
    highlight = set(highlight)
    for e, (u, v) in enumerate(g.edges):
        attrs = []
        if classes is not None:
            attrs.append(f'color="{PALETTE[classes[e] % len(PALETTE)]}"')
        if e in highlight:
            attrs.append("penwidth=3")
            if classes is None:
                attrs.append('color="red"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _write_dot(path: Optional[str], text: str):
    if path:
        with open(path, "w") as fh:
            fh.write(text)


def _emit(command: str, g, payload: dict, started: float, timings: bool):
    result = {
        "command": command,
        "graph": {"n": g.n, "m": g.m, "name": g.name},
        "payload": payload,
        "elapsed_ms": round((time.monotonic() - started) * 1000, 3) if timings else 0,
    }
    print(json.dumps(result))


def cmd_gen(args) -> int:
    g, _ = load_graph(args.family, args.seed)
    text = json.dumps(graph_to_json(g)) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    _write_dot(args.dot, to_dot(g))
    return EXIT_OK


def _budget(args) -> Budget:
    return Budget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def cmd_gpe(args) -> int:
    started = time.monotonic()
    g, family = load_graph(args.graph, args.seed)
    d = all_pairs_distances(g)
    report = gpe_exact(g, d, k=args.k, budget=_budget(args), family=family)
    payload = report.to_dict(g)
    code = EXIT_OK if report.optimal else EXIT_BUDGET
    if args.enumerate:
        opt = enumerate_optima(g, d, k=args.k, budget=_budget(args), family=family)
        payload["optima"] = [list(o) for o in opt.optima]
        payload["optima_edges"] = [[list(g.edges[e]) for e in o] for o in opt.optima]
        payload["enumeration_complete"] = opt.complete
        if not opt.complete:
            code = EXIT_BUDGET
    _write_dot(args.dot, to_dot(g, highlight=report.witness))
    _emit("gpe", g, payload, started, args.timings)
    return code


def _witness_from(kind: str, g, family, d, class_pair):
    if kind == "semi-boundary":
        if not isinstance(family, Grid):
            raise UsageError("--witness-from semi-boundary needs a grid family")
        return cons.semi_boundary_edges(family.r, family.s)
    if kind == "grid":
        if not isinstance(family, Grid):
            raise UsageError("--witness-from grid needs a grid family")
        return cons.family_witness(family, g, d)
    if kind == "pendant":
        return cons.pendant_edge_witness(g)
    if kind == "theta":
        i, j = class_pair
        return cons.two_theta_class_witness(g, theta_classes(g, d), i, j)
    if kind == "construction":
        w = cons.best_known_witness(g, d, family)
        if w is None:
            raise UsageError("no construction is known for this graph")
        return w
    raise UsageError(f"unknown witness construction {kind!r}")


def cmd_verify(args) -> int:
    started = time.monotonic()
    g, family = load_graph(args.graph, args.seed)
    d = all_pairs_distances(g)
    if args.edges:
        with open(args.edges) as fh:
            try:
                pairs = json.load(fh)
            except json.JSONDecodeError as exc:
                raise UsageError(f"edge set file is not valid JSON: {exc}") from None
        if not isinstance(pairs, list) or not all(isinstance(p, list) and len(p) == 2 for p in pairs):
            raise UsageError("edge set must be a JSON array of [u, v] pairs")
        try:
            s = edge_ids_from_pairs(g, pairs)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
    elif args.all_edges:
        s = list(range(g.m))
    elif args.witness_from:
        s = _witness_from(args.witness_from, g, family or cons.recognize_family(g), d, args.classes)
    else:
        raise UsageError("give --edges FILE, --all-edges or --witness-from NAME")
    violation = find_violation(s, g, d, args.k)
    payload = {
        "k": args.k,
        "size": len(s),
        "edges": [list(g.edges[e]) for e in s],
        "is_edge_gp": violation is None,
        "violation": None if violation is None else [list(g.edges[e]) for e in violation],
    }
    _write_dot(args.dot, to_dot(g, highlight=s))
    _emit("verify", g, payload, started, args.timings)
    return EXIT_OK if violation is None else EXIT_FALSE


def cmd_theta(args) -> int:
    started = time.monotonic()
    g, _ = load_graph(args.graph, args.seed)
    p = theta_classes(g, all_pairs_distances(g))
    payload = {
        "is_partial_cube": p.is_partial_cube,
        "classes": [list(c) for c in p.classes],
        "class_edges": [[list(g.edges[e]) for e in c] for c in p.classes],
        "class_sizes": p.class_sizes(),
    }
    _write_dot(args.dot, to_dot(g, classes=p.class_of))
    _emit("theta", g, payload, started, args.timings)
    return EXIT_OK


def cmd_cover(args) -> int:
    started = time.monotonic()
    g, family = load_graph(args.graph, args.seed)
    d = all_pairs_distances(g)
    note = None
    if isinstance(family, Hypercube) and family.r >= 2:
        cover, method = cons.hypercube_cover(family.r), "hypercube"
    elif isinstance(family, Grid) and family.r >= 6 and family.s >= 6:
        cover, method = cons.grid_cover(family.r, family.s), "grid"
    else:
        if isinstance(family, Grid):
            note = "the grid cover construction needs r >= 6 and s >= 6; fell back to the greedy cover"
            if args.construction_only:
                raise UsageError(note.split(";")[0])
        elif args.construction_only:
            raise UsageError("no cover construction for this graph (hypercube r >= 2 or grid r, s >= 6)")
        cover, method = cons.greedy_ipe_upper(g, d), "greedy"
    verdict = cons.verify_cover(g, cover, d)
    payload = {
        "method": method,
        "paths": [list(p.vertices) for p in cover.paths],
        "path_count": len(cover),
        "endpoint_bipartition_side": None
        if cover.endpoint_bipartition_side is None
        else sorted(cover.endpoint_bipartition_side),
        "verified": verdict.ok,
        "failure": verdict.reason,
        "gpe_upper_bound": cover.gpe_upper_bound,
    }
    if note:
        payload["note"] = note
    _emit("cover", g, payload, started, args.timings)
    return EXIT_OK if verdict.ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="edgegp", description="Edge general position sets in graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph_arg="graph"):
        p.add_argument(graph_arg, nargs="+", help="JSON graph file or family tokens")
        p.add_argument("--seed", type=int, default=None, help="seed for random trees")
        p.add_argument("--dot", metavar="PATH", help="also write a DOT drawing")
        p.add_argument("--no-timings", dest="timings", action="store_false", help="report elapsed_ms as 0")

    p = sub.add_parser("gen", help="write a family graph as JSON")
    p.add_argument("family", nargs="+")
    p.add_argument("-o", "--output", help="output path (default: stdout)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("gpe", help="exact gpₑ by branch and bound")
    common(p)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--budget-nodes", type=int, default=10_000_000)
    p.add_argument("--budget-seconds", type=float, default=60.0)
    p.add_argument("--enumerate", action="store_true", help="also list every optimum")
    p.set_defaults(func=cmd_gpe)

    p = sub.add_parser("verify", help="check an edge set for general position")
    common(p)
    p.add_argument("--k", type=int, default=3)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--edges", metavar="FILE", help="JSON array of [u, v] pairs")
    group.add_argument("--all-edges", action="store_true")
    group.add_argument("--witness-from", choices=["semi-boundary", "grid", "pendant", "theta", "construction"])
    p.add_argument("--classes", type=int, nargs=2, default=(0, 1), metavar=("I", "J"), help="Θ-classes for --witness-from theta")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("theta", help="Θ*-classes and partial-cube test")
    common(p)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("cover", help="isometric path edge cover and the implied bound")
    common(p)
    p.add_argument("--construction-only", action="store_true", help="fail instead of using the greedy fallback")
    p.set_defaults(func=cmd_cover)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, InstanceTooLarge, OSError) as exc:
        # GraphError, GraphFormatError, FamilyError, ConstructionError are ValueErrors
        print(f"edgegp: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
