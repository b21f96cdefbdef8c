"""Independent oracles and hypothesis strategies shared across the tests."""

from collections import deque
from itertools import combinations

from hypothesis import strategies as st

from edgegp.geodesy import enumerate_geodesics
from edgegp.graph import build_graph

# filled by the acceptance module, echoed in the terminal summary
ACCEPTANCE_LINES = []


def report_criterion(number, title, failures, detail=""):
    """Print one PASS/FAIL line and return whether the criterion held."""
    ok = not failures
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += f"; {len(failures)} failure(s), first: {failures[0]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


@st.composite
def connected_graphs(draw, min_n=2, max_n=8, max_extra=8):
    """Random spanning tree plus a few extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if missing:
        extra = draw(st.lists(st.sampled_from(missing), max_size=max_extra, unique=True))
        edges.update(extra)
    return build_graph(n, sorted(edges))


def geodesic_edge_sets(g, cap=100_000):
    return [frozenset(p.edge_ids(g)) for p in enumerate_geodesics(g, cap)]


def oracle_collinear(edges, geodesic_sets):
    want = set(edges)
    return any(want <= s for s in geodesic_sets)


def oracle_is_gp(s, geodesic_sets, k=3):
    s = set(s)
    return all(len(s & p) < k for p in geodesic_sets)


def brute_force_gpe(g, k=3):
    """Largest edge k-general position set by exhaustive search over subsets."""
    sets = geodesic_edge_sets(g)
    for size in range(g.m, -1, -1):
        for cand in combinations(range(g.m), size):
            if oracle_is_gp(cand, sets, k):
                return size
    return 0


def brute_force_optima(g, k=3):
    sets = geodesic_edge_sets(g)
    for size in range(g.m, -1, -1):
        found = [c for c in combinations(range(g.m), size) if oracle_is_gp(c, sets, k)]
        if found:
            return found
    return [()]


def floyd_warshall(g):
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for w in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][w] + d[w][j] < d[i][j]:
                    d[i][j] = d[i][w] + d[w][j]
    return d


def two_colour(g):
    colour = {0: 0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in colour:
                colour[y] = 1 - colour[x]
                queue.append(y)
    return colour
