"""Collinearity of edge tuples along geodesics and edge general position checks.

A tuple of ``k`` edges lies on a common geodesic iff some ordering
``e_1..e_k`` and orientation ``e_i = (u_i, v_i)`` satisfy

    d(u_1, v_k) == k + sum(d(v_i, u_{i+1}) for i < k)

i.e. the walk that traverses each edge and joins consecutive edges by
shortest paths is itself no longer than a shortest ``u_1, v_k``-path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb
from typing import Iterable, Optional, Sequence

from .graph import DistanceMatrix, EdgeSet, Graph

MAX_K = 5
CONFLICT_GUARD = 10**8


class InstanceTooLarge(RuntimeError):
    """Enumeration would exceed a configured size guard."""


@dataclass(frozen=True)
class GeodesicPath:
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    def __len__(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def edge_ids(self, g: Graph) -> list[int]:
        return [g.edge_id(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def is_geodesic(self, g: Graph, d: DistanceMatrix) -> bool:
        vs = self.vertices
        if not all(g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
            return False
        return int(d[vs[0], vs[-1]]) == len(vs) - 1


# (index permutation, orientation bits) pairs; a chain and its reversal test the
# same condition, so only permutations with perm[0] < perm[-1] are kept.
_SCHEDULES: dict[int, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}


def _schedule(k: int):
    if k not in _SCHEDULES:
        perms = [p for p in permutations(range(k)) if p[0] < p[-1]]
        _SCHEDULES[k] = [(p, o) for p in perms for o in product((0, 1), repeat=k)]
    return _SCHEDULES[k]


def _chain_ok(ends: Sequence[tuple[int, int]], dl: Sequence[Sequence[int]]) -> bool:
    k = len(ends)
    for perm, orient in _schedule(k):
        seq = [ends[p][::-1] if o else ends[p] for p, o in zip(perm, orient)]
        target = dl[seq[0][0]][seq[-1][1]]
        total = k
        for (_, v), (u, _) in zip(seq, seq[1:]):
            total += dl[v][u]
            if total > target:
                break
        else:
            if total == target:
                return True
    return False


def _as_lists(d: DistanceMatrix):
    # nested lists index far faster than numpy scalars in the inner loops
    return d.tolist()


def collinear(edges: Sequence[int], g: Graph, d: DistanceMatrix, _dl=None) -> bool:
    """True iff some geodesic of ``g`` contains every edge in ``edges``."""
    k = len(edges)
    if not 2 <= k <= MAX_K:
        raise ValueError(f"collinearity supports 2 <= k <= {MAX_K}, got k={k}")
    if len(set(edges)) != k:
        raise ValueError(f"edges must be distinct: {list(edges)}")
    dl = _dl if _dl is not None else _as_lists(d)
    return _chain_ok([g.edges[e] for e in edges], dl)


def _pair_table(ids: Sequence[int], g: Graph, dl) -> dict[int, int]:
    """For each id, bitmask over positions in ``ids`` of edges sharing a geodesic with it."""
    masks = {i: 0 for i in range(len(ids))}
    for a, b in combinations(range(len(ids)), 2):
        if _chain_ok([g.edges[ids[a]], g.edges[ids[b]]], dl):
            masks[a] |= 1 << b
            masks[b] |= 1 << a
    return masks


def _collinear_tuples(ids: Sequence[int], g: Graph, dl, k: int, first_only: bool = False):
    """Collinear k-subsets of ``ids`` (as position tuples, lexicographic)."""
    pair = _pair_table(ids, g, dl)
    out = []

    def extend(prefix: list[int], allowed: int):
        if len(prefix) == k:
            if _chain_ok([g.edges[ids[p]] for p in prefix], dl):
                out.append(tuple(prefix))
                return first_only
            return False
        start = prefix[-1] + 1
        rest = allowed >> start
        pos = start
        while rest:
            if rest & 1:
                prefix.append(pos)
                if extend(prefix, allowed & pair[pos]):
                    return True
                prefix.pop()
            rest >>= 1
            pos += 1
        return False

    for first in range(len(ids)):
        if extend([first], pair[first]):
            break
    return out


def conflict_triples(g: Graph, d: DistanceMatrix, k: int = 3) -> list[tuple[int, ...]]:
    """All collinear k-subsets of E(g), each sorted, in lexicographic order."""
    if not 2 <= k <= MAX_K:
        raise ValueError(f"collinearity supports 2 <= k <= {MAX_K}, got k={k}")
    if comb(g.m, k) > CONFLICT_GUARD:
        raise InstanceTooLarge(f"C({g.m},{k}) exceeds the conflict enumeration guard {CONFLICT_GUARD}")
    ids = list(range(g.m))
    return _collinear_tuples(ids, g, _as_lists(d), k)


def find_violation(s: Iterable[int], g: Graph, d: DistanceMatrix, k: int = 3) -> Optional[tuple[int, ...]]:
    """First collinear k-subset of ``s`` in lexicographic order, or ``None``."""
    ids = sorted(set(s))
    if len(ids) < k:
        return None
    found = _collinear_tuples(ids, g, _as_lists(d), k, first_only=True)
    if not found:
        return None
    return tuple(ids[p] for p in found[0])


def is_edge_gp(s: Iterable[int], g: Graph, d: DistanceMatrix, k: int = 3) -> bool:
    return find_violation(s, g, d, k) is None


class _Counter:
    def __init__(self, cap: int):
        self.cap = cap
        self.count = 0

    def bump(self):
        self.count += 1
        if self.count > self.cap:
            raise InstanceTooLarge(f"more than {self.cap} geodesics")


def _descend(g: Graph, dl, u: int, v: int, counter: "_Counter", out: list) -> None:
    du, dv = dl[u], dl[v]
    stack = [[u]]
    while stack:
        walk = stack.pop()
        w = walk[-1]
        if w == v:
            counter.bump()
            out.append(GeodesicPath(tuple(walk)))
            continue
        step = du[w] + 1
        for x in reversed(g.adjacency[w]):
            if du[x] == step and dv[x] == dv[w] - 1:
                stack.append(walk + [x])


def enumerate_geodesics(g: Graph, cap: int, d: Optional[DistanceMatrix] = None) -> list[GeodesicPath]:
    """Every geodesic between every vertex pair ``u < v``, by descent in the shortest-path DAG."""
    if d is None:
        from .graph import all_pairs_distances

        d = all_pairs_distances(g)
    dl = _as_lists(d)
    counter = _Counter(cap)
    out: list[GeodesicPath] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            _descend(g, dl, u, v, counter, out)
    return out


def _extendable(g: Graph, dl, u: int, v: int) -> bool:
    duv = dl[u][v]
    return any(dl[u][x] == duv + 1 for x in g.adjacency[v]) or any(dl[y][v] == duv + 1 for y in g.adjacency[u])


def maximal_geodesics(g: Graph, d: DistanceMatrix, cap: int) -> list[GeodesicPath]:
    """Geodesics that cannot be prolonged at either end.

    These are exactly the geodesics whose edge sets are maximal under
    inclusion, since any geodesic contained in another is a subpath of it.
    """
    dl = _as_lists(d)
    counter = _Counter(cap)
    out: list[GeodesicPath] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not _extendable(g, dl, u, v):
                _descend(g, dl, u, v, counter, out)
    return out
