"""Deciding G -> (nK_{1,p}, K_{1,m}) and checking red/blue colorings.

A coloring is *good* for an instance when its red edges contain fewer than
``n`` vertex-disjoint copies of K_{1,p} and its blue edges have maximum
degree below ``m``.  ``G`` arrows the instance iff it has no good coloring.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .canon import canonize
from .graph import Graph, bits, parse_graph6, to_graph6
from .packing import greedy_star_packing, star_packing_number

DEFAULT_BUDGET_NODES = 2**26
NAIVE_MAX_EDGES = 20


class SearchBudgetExceeded(RuntimeError):
    """The node or time budget ran out before a verdict was reached."""

    def __init__(self, message: str, stats: SearchStats):
        super().__init__(message)
        self.stats = stats


@dataclass(frozen=True)
class ArrowingInstance:
    n: int
    p: int
    m: int

    def __post_init__(self):
        for name in ("n", "p", "m"):
            if not isinstance(getattr(self, name), int) or getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer, got {getattr(self, name)!r}")

    def __str__(self) -> str:
        return f"({self.n}K_1,{self.p}, K_1,{self.m})"


@dataclass(frozen=True)
class TwoColoring:
    graph: Graph
    red: frozenset[int]
    blue: frozenset[int]

    def __post_init__(self):
        if self.red & self.blue:
            raise ValueError("red and blue overlap")
        if len(self.red) + len(self.blue) != self.graph.edge_count or any(
            not 0 <= e < self.graph.edge_count for e in self.red | self.blue
        ):
            raise ValueError("red and blue must partition the edge index set")

    @classmethod
    def from_red(cls, graph: Graph, red: Iterable[int]) -> TwoColoring:
        red = frozenset(red)
        return cls(graph, red, frozenset(range(graph.edge_count)) - red)

    @classmethod
    def from_red_pairs(cls, graph: Graph, pairs: Iterable[tuple[int, int]]) -> TwoColoring:
        return cls.from_red(graph, (graph.edge_id(u, v) for u, v in pairs))

    def swapped(self) -> TwoColoring:
        return TwoColoring(self.graph, self.blue, self.red)

    def color_adjacency(self, red: bool) -> list[int]:
        adj = [0] * self.graph.vertex_count
        for e in self.red if red else self.blue:
            u, v = self.graph.edges[e]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def red_edges(self) -> list[tuple[int, int]]:
        return [self.graph.edges[e] for e in sorted(self.red)]


def blue_max_degree(c: TwoColoring) -> int:
    return max((a.bit_count() for a in c.color_adjacency(red=False)), default=0)


def red_max_degree(c: TwoColoring) -> int:
    return max((a.bit_count() for a in c.color_adjacency(red=True)), default=0)


def coloring_is_good(c: TwoColoring, inst: ArrowingInstance) -> bool:
    """No red nK_{1,p} and no blue K_{1,m}."""
    if blue_max_degree(c) >= inst.m:
        return False
    return star_packing_number(c.color_adjacency(red=True), inst.p, target=inst.n) < inst.n


@dataclass
class SearchStats:
    nodes: int = 0
    blue_prunes: int = 0
    red_prunes: int = 0
    lookahead_prunes: int = 0
    leaf_rejects: int = 0
    wall_time: float = 0.0

    def as_dict(self) -> dict[str, int]:
        """Deterministic counters only; wall time is left out on purpose."""
        return {
            "nodes": self.nodes,
            "blue_prunes": self.blue_prunes,
            "red_prunes": self.red_prunes,
            "lookahead_prunes": self.lookahead_prunes,
            "leaf_rejects": self.leaf_rejects,
        }


@dataclass
class ArrowingCertificate:
    instance: ArrowingInstance
    graph: Graph
    arrows: bool
    witness: TwoColoring | None
    stats: SearchStats = field(default_factory=SearchStats)

    def __post_init__(self):
        if self.arrows and self.witness is not None:
            raise ValueError("an arrowing certificate carries no witness")
        if not self.arrows and self.witness is None:
            raise ValueError("a refutation needs a witness coloring")

    @property
    def graph6(self) -> str:
        return to_graph6(canonize(self.graph)[0])

    def to_dict(self) -> dict:
        canon, perm = canonize(self.graph)
        red_ids = None
        if self.witness is not None:
            red_ids = sorted(canon.edge_id(perm[u], perm[v]) for u, v in self.witness.red_edges())
        return {
            "graph6": to_graph6(canon),
            "n": self.instance.n,
            "p": self.instance.p,
            "m": self.instance.m,
            "arrows": self.arrows,
            "witness_red_edge_ids": red_ids,
            "stats": self.stats.as_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def check_certificate(record: dict) -> bool:
    """Re-validate a serialized certificate with parsing and the checker only.

    Refutations are checked by re-running :func:`coloring_is_good` on the
    witness.  Arrowing claims cannot be checked without search, so for them
    only the record's shape is validated.
    """
    g = parse_graph6(record["graph6"])
    if to_graph6(g) != record["graph6"]:
        return False
    inst = ArrowingInstance(record["n"], record["p"], record["m"])
    red = record.get("witness_red_edge_ids")
    if record["arrows"]:
        return red is None
    if red is None or any(not 0 <= e < g.edge_count for e in red):
        return False
    return coloring_is_good(TwoColoring.from_red(g, red), inst)


# -- exact search ----------------------------------------------------------------

UNCOLORED, RED, BLUE = 0, 1, 2


class _Search:
    def __init__(self, g: Graph, inst: ArrowingInstance, budget_nodes: int,
                 time_limit: float | None, lookahead: bool):
        self.g = g
        self.inst = inst
        self.budget = budget_nodes
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.use_lookahead = lookahead
        self.stats = SearchStats()
        nv = g.vertex_count
        deg = g.degrees()
        self.deg = deg
        self.order = sorted(range(g.edge_count),
                            key=lambda e: (-(deg[g.edges[e][0]] + deg[g.edges[e][1]]), e))
        self.incident = [[] for _ in range(nv)]
        for e, (u, v) in enumerate(g.edges):
            self.incident[u].append(e)
            self.incident[v].append(e)
        self.color = [UNCOLORED] * g.edge_count
        self.red_deg = [0] * nv
        self.blue_deg = [0] * nv
        self.red_adj = [0] * nv
        self.unc_adj = list(g.adjacency)
        self.trail: list[int] = []
        # final red degree of v is at least deg(v) - (m - 1)
        self.forced_red = [d - (inst.m - 1) for d in deg]

    def assign(self, e: int, c: int) -> None:
        u, v = self.g.edges[e]
        self.color[e] = c
        self.unc_adj[u] &= ~(1 << v)
        self.unc_adj[v] &= ~(1 << u)
        if c == RED:
            self.red_deg[u] += 1
            self.red_deg[v] += 1
            self.red_adj[u] |= 1 << v
            self.red_adj[v] |= 1 << u
        else:
            self.blue_deg[u] += 1
            self.blue_deg[v] += 1
        self.trail.append(e)

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            e = self.trail.pop()
            u, v = self.g.edges[e]
            if self.color[e] == RED:
                self.red_deg[u] -= 1
                self.red_deg[v] -= 1
                self.red_adj[u] &= ~(1 << v)
                self.red_adj[v] &= ~(1 << u)
            else:
                self.blue_deg[u] -= 1
                self.blue_deg[v] -= 1
            self.unc_adj[u] |= 1 << v
            self.unc_adj[v] |= 1 << u
            self.color[e] = UNCOLORED

    def saturate(self, vertices: Iterable[int]) -> None:
        """Vertices with m-1 blue edges get all their uncolored edges red."""
        limit = self.inst.m - 1
        for x in vertices:
            if self.blue_deg[x] >= limit and self.unc_adj[x]:
                for e in self.incident[x]:
                    if self.color[e] == UNCOLORED:
                        self.assign(e, RED)

    def red_bound_hit(self) -> bool:
        return greedy_star_packing(self.red_adj, self.inst.p) >= self.inst.n

    def forced_packing_hit(self) -> bool:
        """Lower-bound the red packing of every completion of the coloring.

        Each vertex ends with red degree at least ``need(x)``.  A set S of
        such vertices packs |S| stars in every completion when each x in S
        is guaranteed ``p`` red neighbours outside S and outside the other
        members' neighbourhoods.
        """
        p, n = self.inst.p, self.inst.n
        adj = self.g.adjacency
        need = [max(r, f) for r, f in zip(self.red_deg, self.forced_red)]
        cands = sorted((x for x in range(len(need)) if need[x] >= p), key=lambda x: (-need[x], x))
        if len(cands) < n:
            return False
        chosen: list[int] = []

        def feasible(group: list[int]) -> bool:
            gmask = 0
            for x in group:
                gmask |= 1 << x
            for x in group:
                others = gmask
                for y in group:
                    if y != x:
                        others |= adj[y]
                blocked = adj[x] & others
                private = adj[x] & ~blocked
                known = self.red_adj[x]
                sure = (known & private).bit_count()
                sure += max(0, need[x] - known.bit_count() - (self.unc_adj[x] & blocked).bit_count())
                if sure < p:
                    return False
            return True

        for x in cands:
            if feasible(chosen + [x]):
                chosen.append(x)
                if len(chosen) >= n:
                    return True
        return False

    def check_limits(self) -> None:
        self.stats.nodes += 1
        if self.stats.nodes > self.budget:
            raise SearchBudgetExceeded(f"node budget {self.budget} exceeded", self.stats)
        if self.deadline is not None and self.stats.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded("time limit exceeded", self.stats)

    def prune(self) -> bool:
        if self.red_bound_hit():
            self.stats.red_prunes += 1
            return True
        if self.use_lookahead and self.forced_packing_hit():
            self.stats.lookahead_prunes += 1
            return True
        return False

    def dfs(self, pos: int) -> bool:
        self.check_limits()
        if self.prune():
            return False
        order = self.order
        while pos < len(order) and self.color[order[pos]] != UNCOLORED:
            pos += 1
        if pos == len(order):
            if star_packing_number(self.red_adj, self.inst.p, target=self.inst.n) < self.inst.n:
                return True
            self.stats.leaf_rejects += 1
            return False
        e = order[pos]
        u, v = self.g.edges[e]
        mark = len(self.trail)
        if self.blue_deg[u] + 1 < self.inst.m and self.blue_deg[v] + 1 < self.inst.m:
            self.assign(e, BLUE)
            self.saturate((u, v))
            if self.dfs(pos + 1):
                return True
            self.undo(mark)
        else:
            self.stats.blue_prunes += 1
        self.assign(e, RED)
        if self.dfs(pos + 1):
            return True
        self.undo(mark)
        return False

    def run(self) -> TwoColoring | None:
        start = time.monotonic()
        try:
            self.saturate(range(self.g.vertex_count))
            found = self.dfs(0)
        finally:
            self.stats.wall_time = time.monotonic() - start
        if not found:
            return None
        return TwoColoring.from_red(self.g, (e for e, c in enumerate(self.color) if c == RED))


def find_good_coloring(g: Graph, inst: ArrowingInstance, budget_nodes: int = DEFAULT_BUDGET_NODES,
                       time_limit: float | None = None, lookahead: bool = True
                       ) -> tuple[TwoColoring | None, SearchStats]:
    search = _Search(g, inst, budget_nodes, time_limit, lookahead)
    witness = search.run()
    if witness is not None and not coloring_is_good(witness, inst):
        raise AssertionError("search produced a coloring that fails the checker")
    return witness, search.stats


def arrows(g: Graph, inst: ArrowingInstance, budget_nodes: int = DEFAULT_BUDGET_NODES,
           time_limit: float | None = None, lookahead: bool = True) -> ArrowingCertificate:
    """Exact decision of ``g -> (nK_{1,p}, K_{1,m})`` with a certificate.

    Raises :class:`SearchBudgetExceeded` instead of guessing when the node or
    time budget runs out.
    """
    witness, stats = find_good_coloring(g, inst, budget_nodes, time_limit, lookahead)
    return ArrowingCertificate(inst, g, witness is None, witness, stats)


def naive_arrows(g: Graph, inst: ArrowingInstance) -> bool:
    """Decide arrowing by trying all 2^e colorings against the checker."""
    e = g.edge_count
    if e > NAIVE_MAX_EDGES:
        raise ValueError(f"naive enumeration limited to {NAIVE_MAX_EDGES} edges, got {e}")
    if e == 0:
        return not coloring_is_good(TwoColoring.from_red(g, ()), inst)
    masks = np.arange(1 << e, dtype=np.int64)
    red = ((masks[:, None] >> np.arange(e)) & 1).astype(np.int16)
    incidence = np.zeros((e, g.vertex_count), dtype=np.int16)
    for i, (u, v) in enumerate(g.edges):
        incidence[i, u] = incidence[i, v] = 1
    blue_deg = (1 - red) @ incidence
    for mask in masks[blue_deg.max(axis=1) < inst.m]:
        c = TwoColoring.from_red(g, (i for i in range(e) if mask >> i & 1))
        if coloring_is_good(c, inst):
            return False
    return True
