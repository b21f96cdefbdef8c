"""List every maximum edge general position set of small grids.

Usage: python scripts/grid_optima.py 4 4 [5 5 ...]
"""

import argparse
from itertools import combinations

from edgegp.constructions import classify_grid_edges, semi_boundary_edges, two_theta_class_witness
from edgegp.generators import Grid, generate
from edgegp.graph import all_pairs_distances
from edgegp.solver import Budget, enumerate_optima
from edgegp.theta import theta_classes


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("dims", type=int, nargs="+", help="pairs r s")
    ap.add_argument("--budget-seconds", type=float, default=1800.0)
    args = ap.parse_args()
    if len(args.dims) % 2:
        ap.error("give grid sizes as pairs r s")
    for r, s in zip(args.dims[::2], args.dims[1::2]):
        g = generate(Grid(r, s))
        d = all_pairs_distances(g)
        res = enumerate_optima(g, d, budget=Budget(max_nodes=10**9, max_seconds=args.budget_seconds))
        p = theta_classes(g, d)
        unions = {two_theta_class_witness(g, p, i, j) for i, j in combinations(range(len(p.classes)), 2)}
        semi = semi_boundary_edges(r, s)
        labels = classify_grid_edges(r, s)
        print(f"Grid({r},{s}): gpe = {res.value}, {len(res.optima)} optima, complete = {res.complete}")
        for o in res.optima:
            tags = []
            if o == semi:
                tags.append("semi-boundary")
            if o in unions:
                tags.append("two Θ-classes")
            kinds = sorted({labels[e] for e in o})
            print(f"  {[g.edges[e] for e in o]}  [{', '.join(tags) or '/'.join(kinds)}]")


if __name__ == "__main__":
    main()
