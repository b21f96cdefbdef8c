"""Recompute gpe for the standard families and compare with the closed forms.

Usage: python scripts/reproduce_results.py [--max-grid 5] [--trees 20] [--json out.json]
"""

import argparse
import json
import random
import time

from edgegp.constructions import best_known_cover, formula_gpe
from edgegp.generators import Complete, Cycle, Grid, Hypercube, Tree, fig1_graph, generate, random_prufer
from edgegp.graph import all_pairs_distances
from edgegp.solver import Budget, gpe_exact


def families(max_grid, trees, seed):
    fams = [Complete(n) for n in range(2, 7)]
    fams += [Cycle(n) for n in range(3, 11)]
    fams += [Hypercube(r) for r in range(2, 5)]
    fams += [Grid(r, s) for r in range(2, max_grid + 1) for s in range(2, r + 1)]
    rng = random.Random(seed)
    fams += [Tree(prufer=random_prufer(rng.randint(3, 20), rng)) for _ in range(trees)]
    return fams


def solve_row(g, family, budget):
    d = all_pairs_distances(g)
    started = time.monotonic()
    r = gpe_exact(g, d, budget=budget, family=family)
    cover = best_known_cover(g, d, family)
    return {
        "graph": g.name,
        "n": g.n,
        "m": g.m,
        "gpe": r.value,
        "status": r.status,
        "formula": formula_gpe(family) if family is not None else None,
        "cover_bound": 2 * len(cover),
        "nodes": r.nodes_explored,
        "seconds": round(time.monotonic() - started, 3),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-grid", type=int, default=5)
    ap.add_argument("--trees", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--budget-seconds", type=float, default=600.0)
    ap.add_argument("--json", help="also write the rows to this file")
    args = ap.parse_args()

    budget = Budget(max_nodes=10**9, max_seconds=args.budget_seconds)
    rows = [solve_row(generate(f), f, budget) for f in families(args.max_grid, args.trees, args.seed)]
    rows.append(solve_row(fig1_graph(), None, budget))

    print(f"{'graph':<14}{'n':>5}{'m':>5}{'gpe':>6}{'formula':>9}{'cover':>7}{'nodes':>8}{'sec':>8}  status")
    mismatches = 0
    for row in rows:
        f = "-" if row["formula"] is None else row["formula"]
        bad = row["formula"] is not None and row["formula"] != row["gpe"]
        mismatches += bad
        print(
            f"{row['graph']:<14}{row['n']:>5}{row['m']:>5}{row['gpe']:>6}{f:>9}{row['cover_bound']:>7}"
            f"{row['nodes']:>8}{row['seconds']:>8.2f}  {row['status']}{'  MISMATCH' if bad else ''}"
        )
    print(f"\n{len(rows)} graphs, {mismatches} mismatch(es)")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
