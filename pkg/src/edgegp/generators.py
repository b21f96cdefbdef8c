"""Graph families used throughout the package, plus JSON graph I/O.

Vertex numbering is fixed per family:

* ``Path``/``Cycle``/``Complete``: vertices ``0..n-1`` in order.
* ``Star(n)``: the star K_{1,n}, centre ``0`` and leaves ``1..n``.
* ``Hypercube(r)``: vertex ``v`` is the integer whose binary digits are the
  coordinate word (last coordinate = least significant bit).
* ``Grid(r, s)``: vertex ``(i, j)``, ``i in [r]``, ``j in [s]`` (1-based) is
  ``(i - 1) * s + (j - 1)``.
* ``Product(G, H)``: vertex ``(g, h)`` is ``g * n(H) + h``.
"""

from __future__ import annotations

import heapq
import json
import random
from dataclasses import dataclass
from pathlib import Path as FilePath
from typing import IO, Optional, Sequence, Union

from .graph import EdgeSet, Graph, build_graph


class FamilyError(ValueError):
    """Descriptor parameters outside the family's valid range."""


class GraphFormatError(ValueError):
    """Input is not a valid JSON graph document."""


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Hypercube:
    r: int


@dataclass(frozen=True)
class Grid:
    r: int
    s: int

    def normalized(self) -> "Grid":
        return self if self.r >= self.s else Grid(self.s, self.r)


@dataclass(frozen=True)
class Tree:
    """A tree given either by an explicit edge list (with ``n``) or a Prüfer sequence."""

    edges: Optional[tuple[tuple[int, int], ...]] = None
    prufer: Optional[tuple[int, ...]] = None
    n: Optional[int] = None

    def __post_init__(self):
        if (self.edges is None) == (self.prufer is None):
            raise FamilyError("Tree needs exactly one of edges= or prufer=")
        if self.edges is not None:
            object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.prufer is not None:
            object.__setattr__(self, "prufer", tuple(self.prufer))


@dataclass(frozen=True)
class Star:
    n: int


@dataclass(frozen=True)
class Fig1Example:
    pass


@dataclass(frozen=True)
class Product:
    left: "FamilyDescriptor"
    right: "FamilyDescriptor"


FamilyDescriptor = Union[Path, Cycle, Complete, Hypercube, Grid, Tree, Star, Fig1Example, Product]


def describe(f: FamilyDescriptor) -> str:
    if isinstance(f, Path):
        return f"path({f.n})"
    if isinstance(f, Cycle):
        return f"cycle({f.n})"
    if isinstance(f, Complete):
        return f"complete({f.n})"
    if isinstance(f, Hypercube):
        return f"hypercube({f.r})"
    if isinstance(f, Grid):
        return f"grid({f.r},{f.s})"
    if isinstance(f, Star):
        return f"star({f.n})"
    if isinstance(f, Tree):
        n = tree_order(f)
        return f"tree({n})"
    if isinstance(f, Fig1Example):
        return "fig1"
    if isinstance(f, Product):
        return f"{describe(f.left)}x{describe(f.right)}"
    raise FamilyError(f"unknown descriptor {f!r}")


def prufer_to_edges(seq: Sequence[int]) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence over ``0..len(seq)+1`` into tree edges."""
    n = len(seq) + 2
    for x in seq:
        if not 0 <= x < n:
            raise FamilyError(f"Prüfer entry {x} outside 0..{n - 1}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def random_prufer(n: int, rng: random.Random) -> tuple[int, ...]:
    if n < 2:
        raise FamilyError("random trees need n >= 2")
    return tuple(rng.randrange(n) for _ in range(n - 2))


def tree_order(t: Tree) -> int:
    if t.prufer is not None:
        return len(t.prufer) + 2
    if t.n is not None:
        return t.n
    return len(t.edges) + 1


def _raw(f: FamilyDescriptor) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(f, Path):
        if f.n < 1:
            raise FamilyError("Path needs n >= 1")
        return f.n, [(i, i + 1) for i in range(f.n - 1)]
    if isinstance(f, Cycle):
        if f.n < 3:
            raise FamilyError("Cycle needs n >= 3")
        return f.n, [(i, (i + 1) % f.n) for i in range(f.n)]
    if isinstance(f, Complete):
        if f.n < 1:
            raise FamilyError("Complete needs n >= 1")
        return f.n, [(u, v) for u in range(f.n) for v in range(u + 1, f.n)]
    if isinstance(f, Star):
        if f.n < 1:
            raise FamilyError("Star needs n >= 1")
        return f.n + 1, [(0, i) for i in range(1, f.n + 1)]
    if isinstance(f, Hypercube):
        if f.r < 1:
            raise FamilyError("Hypercube needs r >= 1")
        edges = [(v, v ^ (1 << b)) for v in range(1 << f.r) for b in range(f.r) if not v >> b & 1]
        return 1 << f.r, edges
    if isinstance(f, Grid):
        if f.r < 1 or f.s < 1:
            raise FamilyError("Grid needs r, s >= 1")
        return _raw(Product(Path(f.r), Path(f.s)))
    if isinstance(f, Tree):
        if f.prufer is not None:
            return len(f.prufer) + 2, prufer_to_edges(f.prufer)
        n = tree_order(f)
        if len(f.edges) != n - 1:
            raise FamilyError(f"a tree on {n} vertices has {n - 1} edges, got {len(f.edges)}")
        return n, list(f.edges)
    if isinstance(f, Fig1Example):
        return 12, list(FIG1_EDGES)
    if isinstance(f, Product):
        n1, e1 = _raw(f.left)
        n2, e2 = _raw(f.right)
        edges = [(g * n2 + h, g2 * n2 + h) for g, g2 in e1 for h in range(n2)]
        edges += [(g * n2 + h, g * n2 + h2) for g in range(n1) for h, h2 in e2]
        return n1 * n2, edges
    raise FamilyError(f"unknown descriptor {f!r}")


def generate(f: FamilyDescriptor) -> Graph:
    n, edges = _raw(f)
    return build_graph(n, edges, name=describe(f))


# x1..x12 -> 0..11, listed in the order of the figure's coordinates
# (0,0) (0,1) (0,2) (0,3) (1,0) (1,1) (1,2) (1,3) (2,0) (2,1) (3,0) (3,1).
_FIG1_WALK = [1, 2, 3, 4, 8, 7, 6, 10, 12, 11, 9, 5, 1]
_FIG1_CHORDS = [(3, 7), (2, 6), (5, 6), (9, 10)]
FIG1_EDGES = tuple(
    [(a - 1, b - 1) for a, b in zip(_FIG1_WALK, _FIG1_WALK[1:])] + [(a - 1, b - 1) for a, b in _FIG1_CHORDS]
)
# The two Θ-classes marked in the figure, as x-labels.
FIG1_MARKED_CLASSES = (
    ((1, 5), (2, 6), (3, 7), (4, 8)),
    ((1, 2), (5, 6), (9, 10), (11, 12)),
)


def fig1_graph() -> Graph:
    return generate(Fig1Example())


def layer_edges(grid: Graph, spec: Grid, which: str, index: int) -> EdgeSet:
    """EdgeIds of one layer of ``Grid(r, s)``.

    ``which="row"`` is the P_r-layer through all ``(i, index)``, ``index in [s]``
    (r - 1 edges); ``which="column"`` is the P_s-layer through all
    ``(index, j)``, ``index in [r]`` (s - 1 edges). Indices are 1-based.
    """
    r, s = spec.r, spec.s
    if which == "row":
        if not 1 <= index <= s:
            raise IndexError(f"row layer index {index} outside 1..{s}")
        j = index - 1
        pairs = [(i * s + j, (i + 1) * s + j) for i in range(r - 1)]
    elif which == "column":
        if not 1 <= index <= r:
            raise IndexError(f"column layer index {index} outside 1..{r}")
        i = index - 1
        pairs = [(i * s + j, i * s + j + 1) for j in range(s - 1)]
    else:
        raise ValueError(f"which must be 'row' or 'column', got {which!r}")
    return EdgeSet((grid.edge_id(u, v) for u, v in pairs), grid.m)


def grid_vertex(spec: Grid, i: int, j: int) -> int:
    """Vertex number of the 1-based grid point ``(i, j)``."""
    return (i - 1) * spec.s + (j - 1)


def graph_to_json(g: Graph) -> dict:
    doc = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.name is not None:
        doc["name"] = g.name
    return doc


def _from_document(doc) -> Graph:
    if not isinstance(doc, dict):
        raise GraphFormatError("graph document must be a JSON object")
    n = doc.get("n")
    edges = doc.get("edges")
    name = doc.get("name")
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphFormatError('"n" must be an integer')
    if not isinstance(edges, list):
        raise GraphFormatError('"edges" must be an array')
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise GraphFormatError(f"edge entry {e!r} is not a pair of integers")
    if name is not None and not isinstance(name, str):
        raise GraphFormatError('"name" must be a string')
    return build_graph(n, edges, name=name)


def read_graph(source: Union[str, FilePath, IO[str]]) -> Graph:
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = FilePath(source).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"not valid JSON: {exc}") from exc
    return _from_document(doc)


def write_graph(g: Graph, target: Union[str, FilePath, IO[str]]) -> None:
    text = json.dumps(graph_to_json(g)) + "\n"
    if hasattr(target, "write"):
        target.write(text)
    else:
        FilePath(target).write_text(text)
