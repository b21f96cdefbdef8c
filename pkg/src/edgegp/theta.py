"""Djoković–Winkler relation, its transitive closure and partial-cube recognition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import DistanceMatrix, EdgeSet, Graph, all_pairs_distances, bipartition


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        return True


@dataclass(frozen=True)
class ThetaPartition:
    class_of: tuple[int, ...]
    classes: tuple[EdgeSet, ...]
    is_partial_cube: bool

    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


def theta_related(e: int, f: int, g: Graph, d: DistanceMatrix) -> bool:
    x, y = g.edges[e]
    u, v = g.edges[f]
    D = d.dist
    return int(D[x, u]) + int(D[y, v]) != int(D[x, v]) + int(D[y, u])


def _theta_row(e: int, us: np.ndarray, vs: np.ndarray, D: np.ndarray) -> np.ndarray:
    x, y = us[e], vs[e]
    lhs = D[x, us].astype(np.int32) + D[y, vs]
    rhs = D[x, vs].astype(np.int32) + D[y, us]
    return lhs != rhs


def theta_classes(g: Graph, d: Optional[DistanceMatrix] = None) -> ThetaPartition:
    """Θ*-classes by union-find over all Θ-related pairs.

    The partial-cube flag is Winkler's criterion: bipartite, and every edge is
    Θ-related to every other edge of its class.
    """
    if d is None:
        d = all_pairs_distances(g)
    m = g.m
    if m == 0:
        return ThetaPartition((), (), bipartition(g) is not None)
    us = np.array([u for u, _ in g.edges], dtype=np.intp)
    vs = np.array([v for _, v in g.edges], dtype=np.intp)
    D = d.dist

    uf = UnionFind(m)
    for e in range(m):
        row = _theta_row(e, us, vs, D)
        for f in np.flatnonzero(row[e + 1 :]) + e + 1:
            uf.union(e, int(f))

    roots = [uf.find(e) for e in range(m)]
    # Class order: by smallest contained EdgeId.
    index_of_root: dict[int, int] = {}
    members: list[list[int]] = []
    for e, root in enumerate(roots):
        if root not in index_of_root:
            index_of_root[root] = len(members)
            members.append([])
        members[index_of_root[root]].append(e)
    class_of = tuple(index_of_root[root] for root in roots)
    classes = tuple(EdgeSet(c) for c in members)

    transitive = True
    if bipartition(g) is None:
        partial = False
    else:
        class_arr = np.array(class_of)
        for e in range(m):
            row = _theta_row(e, us, vs, D)
            if not np.array_equal(row, class_arr == class_of[e]):
                transitive = False
                break
        partial = transitive
    return ThetaPartition(class_of, classes, partial)


def is_partial_cube(g: Graph, d: Optional[DistanceMatrix] = None) -> bool:
    return theta_classes(g, d).is_partial_cube
