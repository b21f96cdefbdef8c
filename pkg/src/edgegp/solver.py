"""Exact edge (k-)general position numbers by branch and bound.

The search decides edges one at a time (include / exclude).  Including an
edge immediately removes every candidate that would complete a collinear
k-tuple with the chosen edges.  Nodes are bounded by splitting the remaining
candidates into groups that each lie on one geodesic: a geodesic ``P`` can
still take at most ``k - 1 - |S ∩ P|`` more edges.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional, Sequence

import numpy as np

from .constructions import best_known_cover, best_known_witness, recognize_family
from .generators import FamilyDescriptor
from .geodesy import (
    CONFLICT_GUARD,
    InstanceTooLarge,
    MAX_K,
    _as_lists,
    _chain_ok,
    conflict_triples,
    is_edge_gp,
    maximal_geodesics,
)
from .graph import DistanceMatrix, EdgeSet, Graph, diameter

OPTIMAL = "optimal"
LOWER_BOUND_ONLY = "lower-bound-only"

GEODESIC_CAP = 200_000
OPTIMA_GUARD = 100_000


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10_000_000
    max_seconds: float = 60.0


@dataclass
class SolveReport:
    k: int
    value: int
    witness: EdgeSet
    status: str
    upper_bound: int
    lower_bound: int
    nodes_explored: int
    elapsed: float
    bound_sources: dict = field(default_factory=dict)

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL

    def to_dict(self, g: Optional[Graph] = None) -> dict:
        out = {
            "k": self.k,
            "value": self.value,
            "status": self.status,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "witness": list(self.witness),
        }
        if g is not None:
            out["witness_edges"] = [list(g.edges[e]) for e in self.witness]
        out["nodes_explored"] = self.nodes_explored
        out["bound_sources"] = dict(self.bound_sources)
        return out


@dataclass
class OptimaResult:
    value: int
    optima: list[EdgeSet]
    complete: bool
    nodes_explored: int
    elapsed: float
    truncated: bool = False


class _BudgetExhausted(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def greedy_witness(
    g: Graph, d: DistanceMatrix, k: int = 3, order: Optional[Sequence[int]] = None
) -> EdgeSet:
    """Maximal edge k-general position set built by a single pass over ``order``.

    ``order`` defaults to ascending EdgeIds; edges not listed are appended in
    ascending order.
    """
    dl = _as_lists(d)
    seq = list(order) if order is not None else []
    listed = set(seq)
    seq += [e for e in range(g.m) if e not in listed]
    chosen: list[int] = []
    for e in seq:
        ok = True
        if len(chosen) >= k - 1:
            for sub in combinations(chosen, k - 1):
                if _chain_ok([g.edges[x] for x in sub] + [g.edges[e]], dl):
                    ok = False
                    break
        if ok:
            chosen.append(e)
    return EdgeSet(chosen, g.m)


def _to_vec(mask: int, m: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((m + 7) // 8 or 1, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:m].astype(np.int32)


class _Search:
    """One branch-and-bound run; ``enumerate`` keeps every set of the best size."""

    def __init__(self, g: Graph, d: DistanceMatrix, k: int, budget: Budget, tuples, groups, enumerate_all: bool):
        self.g, self.k, self.m = g, k, g.m
        self.dl = _as_lists(d)
        self.budget = budget
        self.enumerate_all = enumerate_all
        self.nodes = 0
        self.started = time.monotonic()

        self.lazy = tuples is None
        if not self.lazy:
            self.tuple_masks = [sum(1 << e for e in t) for t in tuples]
            self.by_edge: list[list[int]] = [[] for _ in range(self.m)]
            for mask, t in zip(self.tuple_masks, tuples):
                for e in t:
                    self.by_edge[e].append(mask)
            self.tuple_matrix = np.zeros((len(tuples), self.m), dtype=np.int32)
            for row, t in enumerate(tuples):
                self.tuple_matrix[row, list(t)] = 1
        self.group_matrix = np.zeros((len(groups), self.m), dtype=np.int32)
        for row, grp in enumerate(groups):
            self.group_matrix[row, list(grp)] = 1

        self.best_size = -1
        self.best: Optional[int] = None
        self.optima: list[int] = []
        self.truncated = False

    # -- pieces ------------------------------------------------------------

    def forbidden_after(self, e: int, chosen: int, cand: int) -> int:
        """Candidates that would complete a collinear k-tuple once ``e`` joins ``chosen``."""
        new = chosen | (1 << e)
        out = 0
        if not self.lazy:
            for mask in self.by_edge[e]:
                rest = mask & ~new
                if rest & cand and rest.bit_count() == 1:
                    out |= rest
            return out
        members = list(_bits(chosen))
        if len(members) < self.k - 2:
            return 0
        ends_e = self.g.edges[e]
        for sub in combinations(members, self.k - 2):
            base = [self.g.edges[x] for x in sub] + [ends_e]
            for c in _bits(cand & ~out):
                if _chain_ok(base + [self.g.edges[c]], self.dl):
                    out |= 1 << c
        return out

    def upper_bound(self, chosen: int, cand: int) -> int:
        size = chosen.bit_count()
        ncand = cand.bit_count()
        if not len(self.group_matrix) or ncand == 0:
            return size + ncand
        G = self.group_matrix
        caps = (self.k - 1) - G @ _to_vec(chosen, self.m)
        np.maximum(caps, 0, out=caps)
        rem = _to_vec(cand, self.m)
        total = 0
        while True:
            cnt = G @ rem
            contrib = np.minimum(cnt, caps)
            savings = cnt - contrib
            j = int(np.argmax(savings))
            if savings[j] <= 0:
                break
            total += int(contrib[j])
            rem = rem * (1 - G[j])
        return size + total + int(rem.sum())

    def pick(self, chosen: int, cand: int) -> int:
        """Candidate of largest residual conflict degree, smallest EdgeId on ties."""
        if self.lazy:
            return (cand & -cand).bit_length() - 1
        excluded = ((1 << self.m) - 1) & ~(chosen | cand)
        T = self.tuple_matrix
        if not len(T):
            return (cand & -cand).bit_length() - 1
        live = (T @ _to_vec(excluded, self.m)) == 0
        deg = T[live].sum(axis=0)
        cvec = _to_vec(cand, self.m).astype(bool)
        deg = np.where(cvec, deg, -1)
        return int(np.argmax(deg))

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _BudgetExhausted
        if self.nodes & 255 == 0 and time.monotonic() - self.started > self.budget.max_seconds:
            raise _BudgetExhausted

    def record(self, chosen: int):
        size = chosen.bit_count()
        if size > self.best_size:
            self.best_size, self.best = size, chosen
            if self.enumerate_all:
                self.optima = []
        if self.enumerate_all and size == self.best_size:
            if len(self.optima) >= OPTIMA_GUARD:
                self.truncated = True
            else:
                self.optima.append(chosen)

    def seed(self, witness: EdgeSet):
        mask = sum(1 << e for e in witness)
        self.best_size, self.best = len(witness), mask

    # -- tree ----------------------------------------------------------------

    def run(self, chosen: int, cand: int):
        self.tick()
        if cand == 0:
            self.record(chosen)
            return
        if not self.enumerate_all and chosen.bit_count() > self.best_size:
            self.record(chosen)
        ub = self.upper_bound(chosen, cand)
        if ub < self.best_size or (ub == self.best_size and not self.enumerate_all):
            return
        e = self.pick(chosen, cand)
        bit = 1 << e
        rest = cand & ~bit
        self.run(chosen | bit, rest & ~self.forbidden_after(e, chosen, rest))
        self.run(chosen, rest)


def _prepare(g: Graph, d: DistanceMatrix, k: int):
    if not 2 <= k <= MAX_K:
        raise ValueError(f"k must be in 2..{MAX_K}, got {k}")
    if comb(g.m, k) <= CONFLICT_GUARD:
        tuples = conflict_triples(g, d, k)
    elif k == 3:
        raise InstanceTooLarge(f"C({g.m},3) exceeds the conflict enumeration guard {CONFLICT_GUARD}")
    else:
        tuples = None
    try:
        groups = [p.edge_ids(g) for p in maximal_geodesics(g, d, GEODESIC_CAP)]
    except InstanceTooLarge:
        # any family of geodesics gives a sound bound; fall back to one per pair
        from .constructions import canonical_geodesic

        seen = set()
        groups = []
        for u in range(g.n):
            for v in range(u + 1, g.n):
                ids = tuple(canonical_geodesic(g, d, u, v).edge_ids(g))
                if ids not in seen:
                    seen.add(ids)
                    groups.append(list(ids))
    groups = [grp for grp in groups if len(grp) >= k]
    return tuples, groups


def _root_bounds(g: Graph, d: DistanceMatrix, k: int, family, search: _Search):
    lower_sources = {}
    greedy = greedy_witness(g, d, k)
    best = greedy
    lower_sources["greedy"] = len(greedy)
    if k == 3:
        known = best_known_witness(g, d, family)
        if known is not None and is_edge_gp(known, g, d, k):
            lower_sources["construction"] = len(known)
            if len(known) > len(best):
                best = known
    upper_sources = {"m": g.m}
    if diameter(g, d) < k:
        upper_sources["small-diameter"] = g.m
    cover = best_known_cover(g, d, family)
    upper_sources["cover"] = (k - 1) * len(cover)
    upper_sources["geodesic-groups"] = search.upper_bound(0, (1 << g.m) - 1)
    return best, lower_sources, upper_sources


def gpe_exact(
    g: Graph,
    d: DistanceMatrix,
    k: int = 3,
    budget: Budget = Budget(),
    family: Optional[FamilyDescriptor] = None,
) -> SolveReport:
    started = time.monotonic()
    if family is None:
        family = recognize_family(g)
    tuples, groups = _prepare(g, d, k)
    search = _Search(g, d, k, budget, tuples, groups, enumerate_all=False)
    seed, lower_sources, upper_sources = _root_bounds(g, d, k, family, search)
    search.seed(seed)
    root_upper = min(upper_sources.values())
    finished = True
    if search.best_size < root_upper:
        try:
            search.run(0, (1 << g.m) - 1)
        except _BudgetExhausted:
            finished = False
    witness = EdgeSet(_bits(search.best), g.m)
    lower = len(witness)
    upper = lower if finished else root_upper
    return SolveReport(
        k=k,
        value=lower,
        witness=witness,
        status=OPTIMAL if finished else LOWER_BOUND_ONLY,
        upper_bound=upper,
        lower_bound=lower,
        nodes_explored=search.nodes,
        elapsed=time.monotonic() - started,
        bound_sources={"lower": lower_sources, "upper": upper_sources},
    )


def enumerate_optima(
    g: Graph,
    d: DistanceMatrix,
    k: int = 3,
    budget: Budget = Budget(),
    family: Optional[FamilyDescriptor] = None,
) -> OptimaResult:
    """Every maximum edge k-general position set, lexicographically sorted.

    ``complete`` is false when the budget ran out or more than the optima
    guard were found; the list is then only what was collected.
    """
    started = time.monotonic()
    if family is None:
        family = recognize_family(g)
    tuples, groups = _prepare(g, d, k)
    search = _Search(g, d, k, budget, tuples, groups, enumerate_all=True)
    seed, _, _ = _root_bounds(g, d, k, family, search)
    # Only the size is seeded; the seed set itself is re-found as a leaf.
    search.best_size = len(seed)
    complete = True
    try:
        search.run(0, (1 << g.m) - 1)
    except _BudgetExhausted:
        complete = False
    optima = sorted(tuple(_bits(mask)) for mask in search.optima)
    return OptimaResult(
        value=search.best_size,
        optima=[EdgeSet(o, g.m) for o in optima],
        complete=complete and not search.truncated,
        nodes_explored=search.nodes,
        elapsed=time.monotonic() - started,
        truncated=search.truncated,
    )
