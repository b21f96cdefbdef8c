"""Canonical simple graphs, BFS distances and basic structure queries.

Edges are stored as ``(u, v)`` with ``u < v`` in lexicographic order, so the
integer id of an edge is its position in that list and never changes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for rejected graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]
    name: Optional[str] = None
    _edge_index: dict = field(default=None, repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        """EdgeId of ``uv`` in either orientation; ``KeyError`` if absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"


def build_graph(n: int, edge_list: Iterable[Sequence[int]], name: Optional[str] = None) -> Graph:
    if n < 1:
        raise VertexRangeError(f"graph needs at least one vertex, got n={n}")
    seen: set[Edge] = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
    edges = tuple(sorted(seen))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in nbrs)

    reached = _bfs_order(adjacency, 0)
    if len(reached) != n:
        raise DisconnectedGraphError(f"graph is disconnected: {len(reached)} of {n} vertices reachable from 0")

    return Graph(n, edges, adjacency, name, {e: i for i, e in enumerate(edges)})


def _bfs_order(adjacency: Sequence[Sequence[int]], source: int) -> list[int]:
    seen = {source}
    order = [source]
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source`` by plain breadth-first search."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


class DistanceMatrix:
    """Dense all-pairs hop distances. Index as ``d[u, v]`` or ``d.dist[u][v]``."""

    __slots__ = ("dist",)

    def __init__(self, dist: np.ndarray):
        dist = np.asarray(dist)
        dist.setflags(write=False)
        self.dist = dist

    def __getitem__(self, key):
        return self.dist[key]

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def max(self) -> int:
        return int(self.dist.max())

    def tolist(self) -> list[list[int]]:
        return self.dist.tolist()


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    if g.m == 0:
        return DistanceMatrix(np.zeros((g.n, g.n), dtype=np.int16))
    rows = [u for u, v in g.edges] + [v for u, v in g.edges]
    cols = [v for u, v in g.edges] + [u for u, v in g.edges]
    adj = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(g.n, g.n))
    d = shortest_path(adj, method="D", unweighted=True, directed=False)
    dtype = np.int16 if g.n < np.iinfo(np.int16).max else np.int32
    return DistanceMatrix(d.astype(dtype))


def diameter(g: Graph, d: DistanceMatrix) -> int:
    return d.max()


def bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two-colouring classes, the one holding vertex 0 first; ``None`` if not bipartite."""
    colour = [-1] * g.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if colour[y] < 0:
                colour[y] = 1 - colour[x]
                queue.append(y)
            elif colour[y] == colour[x]:
                return None
    side0 = frozenset(v for v in range(g.n) if colour[v] == 0)
    side1 = frozenset(v for v in range(g.n) if colour[v] == 1)
    return side0, side1


class EdgeSet(tuple):
    """Sorted, duplicate-free tuple of EdgeIds."""

    def __new__(cls, members: Iterable[int] = (), m: Optional[int] = None):
        ids = sorted(set(int(e) for e in members))
        if ids and ids[0] < 0:
            raise ValueError(f"negative EdgeId {ids[0]}")
        if m is not None and ids and ids[-1] >= m:
            raise ValueError(f"EdgeId {ids[-1]} out of range for m={m}")
        return super().__new__(cls, ids)

    def __repr__(self) -> str:
        return f"EdgeSet({list(self)})"


def edge_pairs(g: Graph, s: Iterable[int]) -> list[list[int]]:
    return [list(g.edges[e]) for e in s]


def edge_ids_from_pairs(g: Graph, pairs: Iterable[Sequence[int]]) -> EdgeSet:
    ids = []
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not g.has_edge(u, v):
            raise KeyError(f"({u}, {v}) is not an edge of the graph")
        ids.append(g.edge_id(u, v))
    return EdgeSet(ids, g.m)
