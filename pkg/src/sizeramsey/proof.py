"""Constructive good colorings for sub-threshold connected hosts.

Given a connected graph with at most ``n(m+p) - 2`` edges and ``m`` at or
above :func:`~sizeramsey.constructions.m_min`, :func:`proof_color` builds a
coloring with no red ``nK_{1,p}`` and no blue ``K_{1,m}`` by walking the
induction on ``n``:

* ``n = 1``: split each vertex's edges into fewer than ``p`` red and fewer
  than ``m`` blue (:func:`base_color`).
* fewer than ``n`` vertices of degree ``>= m``: red on their edges, blue
  elsewhere.
* exactly ``n`` such vertices: peel edges inside the low-degree side (blue)
  and inside the high-degree side (red), splitting at bridges with smaller
  star budgets; once every edge crosses sides, move removable crossing edges
  to fresh pendant vertices until the host is a tree, pick a deepest
  low-degree vertex of the leafless core and finish with a direct coloring or
  a recursion on ``n - 1``.

Every intermediate coloring is re-checked with
:func:`~sizeramsey.arrowing.coloring_is_good`.  Whenever a step does not
apply or a check fails, the exact search takes over for that subproblem; if
the search finds no good coloring the host would contradict the upper-bound
threshold and :class:`TheoremViolation` is raised.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .arrowing import (
    DEFAULT_BUDGET_NODES,
    ArrowingInstance,
    TwoColoring,
    coloring_is_good,
    find_good_coloring,
)
from .constructions import DegreePartition, degree_partition, m_min
from .graph import Edge, Graph, _reach, from_edge_list, to_graph6

BASE = "BASE"
CASE1_COVER = "CASE1_COVER"
CASE3_V_EDGE = "CASE3_V_EDGE"
CASE3_V_BRIDGE = "CASE3_V_BRIDGE"
CASE3_U_EDGE = "CASE3_U_EDGE"
CASE3_U_BRIDGE = "CASE3_U_BRIDGE"
PENDANT_MOVE = "PENDANT_MOVE"
LEAF_PRUNE = "LEAF_PRUNE"
LOW_DEGREE_TERMINAL = "LOW_DEGREE_TERMINAL"
TWIN_LEAF_TERMINAL = "TWIN_LEAF_TERMINAL"
HIGH_DEGREE_RECURSE = "HIGH_DEGREE_RECURSE"
V2_U3_TERMINAL = "V2_U3_TERMINAL"
FALLBACK_SEARCH = "FALLBACK_SEARCH"

TWO_LEAVES = "TWO_LEAVES"
ONE_LEAF_DEG2 = "ONE_LEAF_DEG2"


class PreconditionError(ValueError):
    pass


class DegenerateTree(ValueError):
    """No low-degree vertex of the leafless core has the required shape."""


class TheoremViolation(RuntimeError):
    """Exact search found no good coloring for a host inside the theorem's range."""


class StepFailed(RuntimeError):
    """A step did not apply and fallback search was disabled."""


@dataclass(frozen=True)
class ProofStep:
    tag: str
    depth: int
    n: int
    graph6: str
    vertices: tuple[int, ...] = ()
    edges: tuple[Edge, ...] = ()
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "tag": self.tag,
            "depth": self.depth,
            "n": self.n,
            "graph6": self.graph6,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "detail": self.detail,
        }


@dataclass
class ProofTrace:
    steps: list[ProofStep] = field(default_factory=list)

    def tags(self) -> list[str]:
        return [s.tag for s in self.steps]

    def count(self, tag: str) -> int:
        return sum(s.tag == tag for s in self.steps)

    def to_json(self) -> str:
        return json.dumps([s.as_dict() for s in self.steps])

    def to_text(self) -> str:
        lines = []
        for s in self.steps:
            parts = [f"{'  ' * s.depth}{s.tag} n={s.n}"]
            if s.vertices:
                parts.append(f"vertices={list(s.vertices)}")
            if s.edges:
                parts.append(f"edges={[list(e) for e in s.edges]}")
            if s.detail:
                parts.append(" ".join(f"{k}={v}" for k, v in s.detail.items()))
            lines.append(" ".join(parts))
        return "\n".join(lines)


@dataclass(frozen=True)
class PendantMap:
    """Edges of the tree ``G'`` that replaced edges of ``G``.

    ``moves`` maps a pendant edge ``(u, v')`` of ``G'`` to the edge ``(u, v)``
    of ``G`` it stands for; every other edge maps to itself.
    """

    moves: dict[Edge, Edge]
    original_vertex_count: int

    def lift(self, edge: Edge) -> Edge:
        return self.moves.get(edge, edge)

    def lift_coloring(self, c: TwoColoring, original: Graph) -> TwoColoring:
        return TwoColoring.from_red_pairs(original, (self.lift(e) for e in c.red_edges()))


@dataclass(frozen=True)
class Selection:
    v1: int
    v2: int
    kind: str
    leaves: tuple[int, ...]


def split_budgets(e1: int, e2: int, m: int, p: int) -> tuple[int, int]:
    """Star budgets ``a`` with ``(m+p)a - 1 <= e <= (m+p)(a+1) - 2``."""
    return (e1 + 1) // (m + p), (e2 + 1) // (m + p)


def _pairs_to_adj(nv: int, pairs: Iterable[Edge]) -> list[int]:
    adj = [0] * nv
    for u, v in pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def base_color(g: Graph, p: int, m: int) -> TwoColoring:
    """Coloring with red degrees below ``p`` and blue degrees below ``m``.

    Always exists when ``g`` has at most ``m + p - 2`` edges.  Larger hosts
    are accepted too; :class:`PreconditionError` is raised if they have no
    such coloring.
    """
    nv = g.vertex_count
    deg = g.degrees()
    red: set[int] = set()
    red_deg = [0] * nv
    for v in sorted(range(nv), key=lambda x: (-deg[x], x)):
        excess = deg[v] - (m - 1) - red_deg[v]
        for w in sorted(g.neighbors(v), key=lambda x: (red_deg[x], x)):
            if excess <= 0:
                break
            e = g.edge_id(v, w)
            if e not in red and red_deg[v] < p - 1 and red_deg[w] < p - 1:
                red.add(e)
                red_deg[v] += 1
                red_deg[w] += 1
                excess -= 1

    def blue_deg(x: int) -> int:
        return deg[x] - red_deg[x]

    # repair: relieve blue-overloaded vertices by flips or one-step swaps
    for _ in range(g.edge_count ** 2):
        bad = next((x for x in range(nv) if blue_deg(x) >= m), None)
        if bad is None:
            break
        moved = False
        for w in g.neighbors(bad):
            e = g.edge_id(bad, w)
            if e in red or red_deg[bad] >= p - 1:
                continue
            if red_deg[w] < p - 1:
                red.add(e)
                red_deg[bad] += 1
                red_deg[w] += 1
                moved = True
                break
            # w is red-saturated: hand one of w's red edges back to blue
            for x in g.neighbors(w):
                f = g.edge_id(w, x)
                if f in red and x != bad and blue_deg(x) < m - 1:
                    red.discard(f)
                    red_deg[w] -= 1
                    red_deg[x] -= 1
                    red.add(e)
                    red_deg[bad] += 1
                    red_deg[w] += 1
                    moved = True
                    break
            if moved:
                break
        if not moved:
            break
    c = TwoColoring.from_red(g, red)
    inst = ArrowingInstance(1, p, m)
    if coloring_is_good(c, inst):
        return c
    w, _ = find_good_coloring(g, inst)
    if w is None:
        if g.edge_count > m + p - 2:
            raise PreconditionError(f"{to_graph6(g)} has no coloring with red degree < {p} "
                                    f"and blue degree < {m}")
        raise TheoremViolation(f"no base coloring for {to_graph6(g)} with p={p}, m={m}")
    return w


def reduce_to_tree(g: Graph, part: DegreePartition) -> tuple[Graph, PendantMap]:
    """Move removable U-V edges to fresh pendant vertices until ``g`` is a tree."""
    for u, v in g.edges:
        if (u in part.U) == (v in part.U):
            raise PreconditionError(f"edge ({u}, {v}) does not join U and V")
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    nv = g.vertex_count
    pairs = list(g.edges)
    moves: dict[Edge, Edge] = {}
    changed = True
    while changed:
        changed = False
        for a, b in sorted(pairs):
            if (a, b) in moves:
                continue
            u, v = (a, b) if a in part.U else (b, a)
            adj = _pairs_to_adj(nv, pairs)
            adj[a] &= ~(1 << b)
            adj[b] &= ~(1 << a)
            if _reach(adj, a, (1 << nv) - 1) >> b & 1:
                pairs.remove((a, b))
                new = (u, nv)
                pairs.append(new)
                moves[new] = (a, b)
                nv += 1
                changed = True
    return from_edge_list(nv, pairs), PendantMap(moves, g.vertex_count)


def prune_and_select(gprime: Graph, part: DegreePartition) -> Selection:
    """Delete the leaves of tree ``gprime`` and pick the deepest V-vertex.

    ``v2`` is the lowest-index V-vertex of the leafless core whose largest
    distance to another core V-vertex is maximum; ``v1`` is the lowest-index
    vertex at that distance.  The selection reports whether ``v2`` has two
    core-leaf neighbours or exactly one with core degree two.
    """
    nv = gprime.vertex_count
    deg = gprime.degrees()
    core = {v for v in range(nv) if deg[v] >= 2}
    core_v = sorted(v for v in core if v not in part.U)
    if not core_v:
        raise DegenerateTree("leafless core has no V-vertex")
    core_adj = {v: [w for w in gprime.neighbors(v) if w in core] for v in core}

    def bfs(s: int) -> dict[int, int]:
        dist = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in core_adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        return dist

    best = None
    for v in core_v:
        dist = bfs(v)
        far = max(dist[w] for w in core_v)
        if best is None or far > best[0]:
            best = (far, v, min(w for w in core_v if dist[w] == far))
    _, v2, v1 = best
    core_leaves = [w for w in core_adj[v2] if len(core_adj[w]) == 1]
    if len(core_leaves) >= 2:
        return Selection(v1, v2, TWO_LEAVES, tuple(core_leaves[:2]))
    if len(core_leaves) == 1 and len(core_adj[v2]) == 2:
        return Selection(v1, v2, ONE_LEAF_DEG2, (core_leaves[0],))
    raise DegenerateTree(f"vertex {v2} has {len(core_leaves)} core-leaf neighbours "
                         f"and core degree {len(core_adj[v2])}")


class _Colorer:
    def __init__(self, p: int, m: int, allow_fallback: bool, budget_nodes: int):
        self.p = p
        self.m = m
        self.allow_fallback = allow_fallback
        self.budget_nodes = budget_nodes
        self.trace = ProofTrace()

    def log(self, tag: str, g: Graph, depth: int, n: int, vertices=(), edges=(), **detail) -> None:
        self.trace.steps.append(
            ProofStep(tag, depth, n, to_graph6(g), tuple(vertices), tuple(edges), detail))

    def inst(self, n: int) -> ArrowingInstance:
        return ArrowingInstance(n, self.p, self.m)

    def checked(self, g: Graph, n: int, red: set[Edge], depth: int) -> set[Edge]:
        if coloring_is_good(TwoColoring.from_red_pairs(g, red), self.inst(n)):
            return red
        return self.fallback(g, n, depth, "verification failed")

    def fallback(self, g: Graph, n: int, depth: int, reason: str) -> set[Edge]:
        self.log(FALLBACK_SEARCH, g, depth, n, reason=reason)
        if not self.allow_fallback:
            raise StepFailed(f"{reason} on {to_graph6(g)} (n={n})")
        w, _ = find_good_coloring(g, self.inst(n), self.budget_nodes)
        if w is None:
            raise TheoremViolation(
                f"{to_graph6(g)} arrows {self.inst(n)} with {g.edge_count} edges")
        return set(w.red_edges())

    def color(self, g: Graph, n: int, depth: int) -> set[Edge]:
        p, m = self.p, self.m
        if g.edge_count == 0:
            self.log(BASE, g, depth, n)
            return set()
        isolated = g.isolated_vertices()
        if isolated:
            sub, relabel = g.delete_vertices(isolated)
            back = {new: old for old, new in relabel.items()}
            return {(back[u], back[v]) for u, v in self.color(sub, n, depth)}
        if n == 1:
            c = base_color(g, p, m)
            self.log(BASE, g, depth, n, edges=c.red_edges())
            return set(c.red_edges())
        part = degree_partition(g, m)
        if part.t <= n - 1:
            self.log(CASE1_COVER, g, depth, n, vertices=sorted(part.U))
            red = {(u, v) for u, v in g.edges if u in part.U or v in part.U}
            return self.checked(g, n, red, depth)
        if part.t >= n + 1:
            return self.fallback(g, n, depth, f"t={part.t} exceeds n")

        inside_v = [e for e, (u, v) in enumerate(g.edges) if u in part.V and v in part.V]
        inside_u = [e for e, (u, v) in enumerate(g.edges) if u in part.U and v in part.U]
        for inside, make_red, tags in ((inside_v, False, (CASE3_V_EDGE, CASE3_V_BRIDGE)),
                                       (inside_u, True, (CASE3_U_EDGE, CASE3_U_BRIDGE))):
            if not inside:
                continue
            bridges = g.bridges()
            removable = [e for e in inside if e not in bridges]
            e = removable[0] if removable else inside[0]
            edge = g.edges[e]
            if removable:
                self.log(tags[0], g, depth, n, edges=[edge])
                red = self.color(g.delete_edge(e), n, depth + 1)
            else:
                red = self.split(g, e, n, depth, tags[1])
            if make_red:
                red = red | {edge}
            return self.checked(g, n, red, depth)

        try:
            gp, pmap = reduce_to_tree(g, part)
        except PreconditionError as exc:
            return self.fallback(g, n, depth, str(exc))
        if pmap.moves:
            self.log(PENDANT_MOVE, gp, depth, n, edges=sorted(pmap.moves),
                     replaced=[list(pmap.moves[k]) for k in sorted(pmap.moves)])
        part_p = degree_partition(gp, m)
        try:
            sel = prune_and_select(gp, part_p)
        except DegenerateTree as exc:
            return self.fallback(g, n, depth, str(exc))
        self.log(LEAF_PRUNE, gp, depth, n, vertices=(sel.v1, sel.v2, *sel.leaves), kind=sel.kind)
        red_p = self.finish_tree(gp, sel, n, depth)
        if red_p is None:
            return self.fallback(g, n, depth, "no terminal step applies")
        return self.checked(g, n, {pmap.lift(e) for e in red_p}, depth)

    def split(self, g: Graph, e: int, n: int, depth: int, tag: str) -> set[Edge]:
        m, p = self.m, self.p
        sides = g.delete_edge(e).components()
        parts = [g.induced_subgraph(side) for side in sides]
        a1, a2 = split_budgets(parts[0][0].edge_count, parts[1][0].edge_count, m, p)
        self.log(tag, g, depth, n, edges=[g.edges[e]], a1=a1, a2=a2)
        if a1 + a2 >= n:
            return self.fallback(g, n, depth, f"bridge budgets {a1}+{a2} reach n")
        red: set[Edge] = set()
        for (sub, relabel), a in zip(parts, (a1, a2)):
            back = {new: old for old, new in relabel.items()}
            for u, v in self.color(sub, a + 1, depth + 1):
                x, y = back[u], back[v]
                red.add((x, y) if x < y else (y, x))
        return red

    def recurse_without(self, gp: Graph, drop: set[int], n: int, depth: int) -> set[Edge]:
        sub, relabel = gp.delete_vertices(drop)
        back = {new: old for old, new in relabel.items()}
        out = set()
        for u, v in self.color(sub, n - 1, depth + 1):
            x, y = back[u], back[v]
            out.add((x, y) if x < y else (y, x))
        return out

    def finish_tree(self, gp: Graph, sel: Selection, n: int, depth: int) -> set[Edge] | None:
        m, p = self.m, self.p
        deg = gp.degrees()

        def leaves(u: int) -> list[int]:
            return [x for x in gp.neighbors(u) if deg[x] == 1]

        def norm(a: int, b: int) -> Edge:
            return (a, b) if a < b else (b, a)

        all_edges = set(gp.edges)
        low = [u for u in sel.leaves if deg[u] <= m + p - 2]
        if low:
            u = low[0]
            lv = leaves(u)
            if len(lv) >= m - 1:
                blue = {norm(u, x) for x in lv[:m - 1]}
            else:
                blue = {norm(u, x) for x in gp.neighbors(u)}
            self.log(LOW_DEGREE_TERMINAL, gp, depth, n, vertices=[u], edges=sorted(blue))
            return all_edges - blue
        if sel.kind == TWO_LEAVES and all(deg[u] == m + p - 1 for u in sel.leaves):
            u1, u2 = sel.leaves
            blue = {norm(u, x) for u in (u1, u2) for x in leaves(u)[:m - 1]}
            self.log(TWIN_LEAF_TERMINAL, gp, depth, n, vertices=[u1, u2], edges=sorted(blue))
            return all_edges - blue
        high = [u for u in sel.leaves if deg[u] >= m + p]
        if high:
            u = high[0]
            drop = {u, *leaves(u)}
            self.log(HIGH_DEGREE_RECURSE, gp, depth, n, vertices=[u], removed_edges=deg[u])
            red = self.recurse_without(gp, drop, n, depth)
            return red | {norm(u, x) for x in gp.neighbors(u)}
        if sel.kind == ONE_LEAF_DEG2 and deg[sel.leaves[0]] == m + p - 1:
            u3, v2 = sel.leaves[0], sel.v2
            lv = leaves(u3)
            drop = {u3, v2, *lv}
            removed = sum(1 for a, b in gp.edges if a in drop or b in drop)
            self.log(V2_U3_TERMINAL, gp, depth, n, vertices=[v2, u3], removed_edges=removed)
            red = self.recurse_without(gp, drop, n, depth)
            red |= {norm(u3, x) for x in lv[m - 1:]}
            red |= {norm(v2, w) for w in gp.neighbors(v2)}
            return red
        return None


def check_preconditions(g: Graph, inst: ArrowingInstance) -> None:
    n, p, m = inst.n, inst.p, inst.m
    if not g.is_connected():
        raise PreconditionError("host must be connected")
    if g.edge_count > n * (m + p) - 2:
        raise PreconditionError(
            f"host has {g.edge_count} edges; at most n(m+p)-2 = {n * (m + p) - 2} allowed")
    if m < m_min(n, p):
        raise PreconditionError(f"m={m} is below the threshold {m_min(n, p)} for n={n}, p={p}")


def proof_color(g: Graph, inst: ArrowingInstance, allow_fallback: bool = True,
                budget_nodes: int = DEFAULT_BUDGET_NODES) -> tuple[TwoColoring, ProofTrace]:
    """Good coloring of a sub-threshold host plus the trace of steps taken.

    Raises :class:`PreconditionError` outside the theorem's range and
    :class:`TheoremViolation` if the exact fallback finds the host arrowing.
    """
    check_preconditions(g, inst)
    colorer = _Colorer(inst.p, inst.m, allow_fallback, budget_nodes)
    red = colorer.color(g, inst.n, 0)
    c = TwoColoring.from_red_pairs(g, red)
    if not coloring_is_good(c, inst):
        raise AssertionError("proof_color produced a coloring that fails the checker")
    return c, colorer.trace
