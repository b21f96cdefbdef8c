"""Closed-form gpₑ values, explicit witnesses and isometric path edge covers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .generators import (
    Complete,
    Cycle,
    FamilyDescriptor,
    FamilyError,
    Grid,
    Hypercube,
    Path,
    Star,
    Tree,
    generate,
    grid_vertex,
)
from .geodesy import GeodesicPath
from .graph import DistanceMatrix, EdgeSet, Graph, all_pairs_distances, bipartition, diameter
from .theta import ThetaPartition, theta_classes

BOUNDARY = "boundary"
SEMI_BOUNDARY = "semi-boundary"
INTERNAL = "internal"


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class CoverCertificate:
    """Oriented geodesics claimed to cover every edge; vertex order is the orientation."""

    paths: tuple[GeodesicPath, ...]
    covers_all_edges: bool = True
    endpoint_bipartition_side: Optional[frozenset[int]] = None

    def __len__(self) -> int:
        return len(self.paths)

    @property
    def gpe_upper_bound(self) -> int:
        return 2 * len(self.paths)


@dataclass(frozen=True)
class CoverVerdict:
    ok: bool
    reason: Optional[str] = None
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


# -- closed forms ---------------------------------------------------------------


def pendant_count(g: Graph) -> int:
    deg = g.degrees()
    return sum(1 for u, v in g.edges if deg[u] == 1 or deg[v] == 1)


def formula_gpe(f: FamilyDescriptor) -> int:
    if isinstance(f, Complete):
        return f.n * (f.n - 1) // 2
    if isinstance(f, Cycle):
        if f.n < 3:
            raise FamilyError("Cycle needs n >= 3")
        return f.n if f.n <= 5 else 4
    if isinstance(f, Hypercube):
        if f.r < 2:
            raise FamilyError("closed form for hypercubes needs r >= 2")
        return 2**f.r
    if isinstance(f, (Tree, Path, Star)):
        return pendant_count(generate(f))
    if isinstance(f, Grid):
        r, s = f.normalized().r, f.normalized().s
        if s < 2:
            raise FamilyError("closed form for grids needs r, s >= 2")
        if s == 2:
            return r + 2
        if s == 3:
            return 2 * r
        return 2 * r + 2 * s - 8
    raise FamilyError(f"no closed form for {f!r}")


# -- witnesses -------------------------------------------------------------------


def two_theta_class_witness(g: Graph, p: ThetaPartition, i: int, j: int) -> EdgeSet:
    if not p.is_partial_cube:
        raise ConstructionError("Θ-class unions are only certified on partial cubes")
    if i == j or not (0 <= i < len(p.classes) and 0 <= j < len(p.classes)):
        raise ConstructionError(f"need two distinct class indices in 0..{len(p.classes) - 1}, got {i}, {j}")
    return EdgeSet(p.classes[i] + p.classes[j], g.m)


def pendant_edge_witness(t: Graph) -> EdgeSet:
    if t.m != t.n - 1:
        raise ConstructionError(f"not a tree: n={t.n}, m={t.m}")
    deg = t.degrees()
    return EdgeSet(e for e, (u, v) in enumerate(t.edges) if deg[u] == 1 or deg[v] == 1)


def classify_grid_edges(r: int, s: int) -> dict[int, str]:
    """Label every edge of Grid(r, s) by the degrees of its endpoints.

    Degree pairs {2, 2} and {2, 3}, which only occur when r or s is 2, count
    as boundary so the labelling is total.
    """
    if r < 2 or s < 2:
        raise ConstructionError("grid classification needs r, s >= 2")
    g = generate(Grid(r, s))
    deg = g.degrees()
    labels = {}
    for e, (u, v) in enumerate(g.edges):
        pair = sorted((deg[u], deg[v]))
        if pair == [3, 4]:
            labels[e] = SEMI_BOUNDARY
        elif pair == [4, 4]:
            labels[e] = INTERNAL
        else:
            labels[e] = BOUNDARY
    return labels


def semi_boundary_edges(r: int, s: int) -> EdgeSet:
    return EdgeSet(e for e, label in classify_grid_edges(r, s).items() if label == SEMI_BOUNDARY)


def _grid_theta_class(r: int, s: int, g: Graph, direction: str, step: int) -> list[int]:
    # direction "column": edges (i,step)-(i,step+1) for all i (r edges);
    # direction "row": edges (step,j)-(step+1,j) for all j (s edges).
    spec = Grid(r, s)
    if direction == "column":
        return [g.edge_id(grid_vertex(spec, i, step), grid_vertex(spec, i, step + 1)) for i in range(1, r + 1)]
    return [g.edge_id(grid_vertex(spec, step, j), grid_vertex(spec, step + 1, j)) for j in range(1, s + 1)]


def _transpose_grid_edges(ids: EdgeSet, src: Grid, g: Graph) -> EdgeSet:
    """Map edge ids of ``src`` = Grid(r, s) onto ``g`` = Grid(s, r) by swapping coordinates."""
    h = generate(src)
    swap = lambda v: (v % src.s) * src.r + v // src.s
    return EdgeSet((g.edge_id(swap(u), swap(v)) for u, v in (h.edges[e] for e in ids)), g.m)


def grid_witness(r: int, s: int) -> EdgeSet:
    if not r >= s >= 2:
        raise ConstructionError(f"grid witness needs r >= s >= 2, got ({r}, {s})")
    if s >= 4:
        return semi_boundary_edges(r, s)
    g = generate(Grid(r, s))
    if s == 3:
        return EdgeSet(_grid_theta_class(r, s, g, "column", 1) + _grid_theta_class(r, s, g, "column", 2), g.m)
    return EdgeSet(_grid_theta_class(r, s, g, "column", 1) + _grid_theta_class(r, s, g, "row", 1), g.m)


# -- covers ----------------------------------------------------------------------


def hypercube_cover(r: int) -> CoverCertificate:
    """Recursive cover of Q_r by 2^(r-1) oriented geodesics ending on one colour class."""
    if r < 2:
        raise ConstructionError("hypercube cover needs r >= 2")
    # Q_2 on 00,01,10,11: 01 -> 00 -> 10 and 10 -> 11 -> 01, ending at {01, 10}.
    paths = [(1, 0, 2), (2, 3, 1)]
    for _ in range(2, r):
        # Q_{k+1} = Q_k x K_2; vertex v of layer b becomes 2v + b.
        lower = [tuple(2 * v for v in p) + (2 * p[-1] + 1,) for p in paths]
        upper = [tuple(2 * (v ^ 1) + 1 for v in p) + (2 * (p[-1] ^ 1),) for p in paths]
        paths = lower + upper
    ends = frozenset(p[-1] for p in paths)
    return CoverCertificate(tuple(GeodesicPath(p) for p in paths), True, ends)


def _grid_walk(spec: Grid, corners: list[tuple[int, int]]) -> GeodesicPath:
    """Axis-parallel walk through the given 1-based corner points."""
    pts = [corners[0]]
    for a, b in zip(corners, corners[1:]):
        (i, j), (i2, j2) = a, b
        if i == i2:
            step = 1 if j2 > j else -1
            pts += [(i, jj) for jj in range(j + step, j2 + step, step)]
        else:
            step = 1 if i2 > i else -1
            pts += [(ii, j) for ii in range(i + step, i2 + step, step)]
    return GeodesicPath(tuple(grid_vertex(spec, i, j) for i, j in pts))


def grid_cover(r: int, s: int) -> CoverCertificate:
    """Cover of Grid(r, s), r, s >= 6, by r + s - 4 geodesics.

    Four L-shaped paths take the columns 2, 3, r-2, r-1 together with rows 1
    and s; four more take rows 2, 3, s-2, s-1 with columns 1 and r; the
    remaining columns and rows are taken one straight path each.
    """
    if r < 6 or s < 6:
        raise ConstructionError(f"the grid cover construction needs r, s >= 6, got ({r}, {s})")
    spec = Grid(r, s)
    walks = [
        [(3, 1), (3, s), (1, s)],
        [(2, 1), (2, s), (r, s)],
        [(r - 2, s), (r - 2, 1), (r, 1)],
        [(r - 1, s), (r - 1, 1), (1, 1)],
        [(1, 3), (r, 3), (r, 1)],
        [(1, 2), (r, 2), (r, s)],
        [(r, s - 2), (1, s - 2), (1, s)],
        [(r, s - 1), (1, s - 1), (1, 1)],
    ]
    walks += [[(i, 1), (i, s)] for i in range(4, r - 2)]
    walks += [[(1, j), (r, j)] for j in range(4, s - 2)]
    return CoverCertificate(tuple(_grid_walk(spec, w) for w in walks), True, None)


def canonical_geodesic(g: Graph, d: DistanceMatrix, u: int, v: int) -> GeodesicPath:
    """The ``u, v``-geodesic following smallest-index BFS parents back from ``v``."""
    D = d.dist
    walk = [v]
    cur = v
    while cur != u:
        target = D[u, cur] - 1
        cur = next(w for w in g.adjacency[cur] if D[u, w] == target)
        walk.append(cur)
    return GeodesicPath(tuple(reversed(walk)))


def greedy_ipe_upper(g: Graph, d: Optional[DistanceMatrix] = None) -> CoverCertificate:
    """Greedy set cover of E(g) by canonical geodesics, one candidate per vertex pair."""
    if d is None:
        d = all_pairs_distances(g)
    candidates = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            p = canonical_geodesic(g, d, u, v)
            mask = 0
            for e in p.edge_ids(g):
                mask |= 1 << e
            candidates.append((p, mask))
    uncovered = (1 << g.m) - 1
    chosen = []
    while uncovered:
        best, best_gain = None, 0
        for p, mask in candidates:
            gain = (mask & uncovered).bit_count()
            if gain > best_gain:
                best, best_gain = (p, mask), gain
        chosen.append(best[0])
        uncovered &= ~best[1]
    return CoverCertificate(tuple(chosen), True, None)


def verify_cover(g: Graph, c: CoverCertificate, d: Optional[DistanceMatrix] = None) -> CoverVerdict:
    if d is None:
        d = all_pairs_distances(g)
    covered = set()
    for idx, p in enumerate(c.paths):
        if any(not (0 <= v < g.n) for v in p.vertices) or not p.is_geodesic(g, d):
            return CoverVerdict(False, "non-geodesic path", {"path": idx})
        covered.update(p.edge_ids(g))
    missing = sorted(set(range(g.m)) - covered)
    if missing:
        return CoverVerdict(False, "uncovered edge", {"edges": missing})
    if c.endpoint_bipartition_side is not None:
        ends = [p.end for p in c.paths]
        sides = bipartition(g)
        if len(set(ends)) != len(ends) or sides is None or frozenset(ends) not in sides:
            return CoverVerdict(False, "endpoint-set mismatch", {"ends": sorted(ends)})
        if frozenset(ends) != c.endpoint_bipartition_side:
            return CoverVerdict(False, "endpoint-set mismatch", {"ends": sorted(ends)})
    return CoverVerdict(True)


# -- family recognition ----------------------------------------------------------


def recognize_family(g: Graph) -> Optional[FamilyDescriptor]:
    """Family whose generated graph is identical to ``g`` under the fixed numbering."""
    n, m = g.n, g.m
    r = n.bit_length() - 1
    if n == 1 << r and r >= 2 and m == r * (n // 2) and generate(Hypercube(r)) == g:
        return Hypercube(r)
    for s in range(2, n + 1):
        if n % s == 0 and n // s >= s:
            rr = n // s
            if m == rr * (s - 1) + s * (rr - 1) and generate(Grid(rr, s)) == g:
                return Grid(rr, s)
            if m == rr * (s - 1) + s * (rr - 1) and generate(Grid(s, rr)) == g:
                return Grid(s, rr)
    if n >= 3 and m == n and generate(Cycle(n)) == g:
        return Cycle(n)
    if m == n * (n - 1) // 2:
        return Complete(n)
    if m == n - 1 and n >= 2:
        return Tree(edges=g.edges, n=n)
    return None


def family_witness(f: FamilyDescriptor, g: Graph, d: DistanceMatrix) -> Optional[EdgeSet]:
    """Certified witness for a recognized family, ``None`` when no construction applies."""
    if isinstance(f, Hypercube) and f.r >= 2:
        return two_theta_class_witness(g, theta_classes(g, d), 0, 1)
    if isinstance(f, Grid) and min(f.r, f.s) >= 2:
        if f.r >= f.s:
            return grid_witness(f.r, f.s)
        return _transpose_grid_edges(grid_witness(f.s, f.r), Grid(f.s, f.r), g)
    if isinstance(f, (Tree, Path, Star)):
        return pendant_edge_witness(g)
    if diameter(g, d) <= 2:
        return EdgeSet(range(g.m))
    return None


def best_known_witness(g: Graph, d: DistanceMatrix, family: Optional[FamilyDescriptor] = None) -> Optional[EdgeSet]:
    if family is None:
        family = recognize_family(g)
    if family is not None:
        w = family_witness(family, g, d)
        if w is not None:
            return w
    if diameter(g, d) <= 2:
        return EdgeSet(range(g.m))
    p = theta_classes(g, d)
    if p.is_partial_cube and len(p.classes) >= 2:
        i, j = sorted(range(len(p.classes)), key=lambda c: (-len(p.classes[c]), c))[:2]
        return two_theta_class_witness(g, p, i, j)
    return None


def best_known_cover(g: Graph, d: DistanceMatrix, family: Optional[FamilyDescriptor] = None) -> CoverCertificate:
    if family is None:
        family = recognize_family(g)
    if isinstance(family, Hypercube) and family.r >= 2:
        return hypercube_cover(family.r)
    if isinstance(family, Grid) and family.r >= 6 and family.s >= 6:
        return grid_cover(family.r, family.s)
    return greedy_ipe_upper(g, d)
