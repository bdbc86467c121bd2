"""Immutable small simple graphs backed by per-vertex adjacency bitmasks.

Vertices are ``0 .. vertex_count - 1`` and the edge list is kept in
lexicographic ``(u, v)`` order with ``u < v``; an edge's position in that list
is its EdgeId.  Every coloring and certificate in the package refers to edges
by EdgeId.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

MAX_VERTICES = 64

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or surgery request."""


class Graph6Error(ValueError):
    """Malformed graph6 text."""


def bits(mask: int) -> Iterable[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=True)
class Graph:
    vertex_count: int
    adjacency: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, edges={list(self.edges)})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident_masks(self) -> tuple[int, ...]:
        """Per vertex, the bitmask of incident EdgeIds."""
        inc = [0] * self.vertex_count
        for i, (u, v) in enumerate(self.edges):
            inc[u] |= 1 << i
            inc[v] |= 1 << i
        return tuple(inc)

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[key]
        except KeyError:
            raise GraphError(f"no edge {key}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v} out of range")
        return self.adjacency[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adjacency]

    def degree_sequence(self) -> list[int]:
        """Degrees sorted in non-increasing order."""
        return sorted(self.degrees(), reverse=True)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    # -- connectivity -----------------------------------------------------

    def components(self) -> list[set[int]]:
        seen = 0
        comps = []
        for s in range(self.vertex_count):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adjacency[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(set(bits(comp)))
        return comps

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        full = (1 << self.vertex_count) - 1
        return _reach(self.adjacency, 0, full) == full

    def bridges(self) -> set[int]:
        """EdgeIds whose removal increases the number of components."""
        n = self.vertex_count
        disc = [-1] * n
        low = [0] * n
        out: set[int] = set()
        timer = 0
        for root in range(n):
            if disc[root] >= 0:
                continue
            disc[root] = low[root] = timer
            timer += 1
            stack = [(root, -1, iter(self.neighbors(root)))]
            while stack:
                v, parent_edge, it = stack[-1]
                advanced = False
                for w in it:
                    eid = self.edge_id(v, w)
                    if eid == parent_edge:
                        continue
                    if disc[w] < 0:
                        disc[w] = low[w] = timer
                        timer += 1
                        stack.append((w, eid, iter(self.neighbors(w))))
                        advanced = True
                        break
                    low[v] = min(low[v], disc[w])
                if advanced:
                    continue
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        out.add(parent_edge)
        return out

    def is_bridge(self, e: int) -> bool:
        self._check_edge(e)
        u, v = self.edges[e]
        adj = list(self.adjacency)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return not (_reach(adj, u, (1 << self.vertex_count) - 1) >> v & 1)

    # -- surgery ----------------------------------------------------------

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < self.edge_count:
            raise GraphError(f"EdgeId {e} out of range 0..{self.edge_count - 1}")

    def delete_edge(self, e: int) -> Graph:
        return self.delete_edges([e])

    def delete_edges(self, eids: Iterable[int]) -> Graph:
        drop = set(eids)
        for e in drop:
            self._check_edge(e)
        keep = [uv for i, uv in enumerate(self.edges) if i not in drop]
        return from_edge_list(self.vertex_count, keep)

    def add_edges(self, pairs: Iterable[Edge], new_vertices: int = 0) -> Graph:
        return from_edge_list(self.vertex_count + new_vertices, [*self.edges, *pairs])

    def delete_vertices(self, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Remove ``drop`` and relabel survivors order-preservingly.

        Returns the new graph and the old -> new vertex map of the survivors.
        """
        drop = set(drop)
        for v in drop:
            if not 0 <= v < self.vertex_count:
                raise GraphError(f"vertex {v} out of range")
        return self.induced_subgraph(v for v in range(self.vertex_count) if v not in drop)

    def induced_subgraph(self, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        keep = sorted(set(keep))
        relabel = {old: new for new, old in enumerate(keep)}
        pairs = [(relabel[u], relabel[v]) for u, v in self.edges if u in relabel and v in relabel]
        return from_edge_list(max(len(keep), 1), pairs), relabel

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return from_edge_list(self.vertex_count, [(perm[u], perm[v]) for u, v in self.edges])

    def complement_free_pairs(self) -> list[Edge]:
        """Vertex pairs that are not edges, in lexicographic order."""
        n = self.vertex_count
        return [(u, v) for u in range(n) for v in range(u + 1, n) if not self.adjacency[u] >> v & 1]

    def isolated_vertices(self) -> list[int]:
        return [v for v, a in enumerate(self.adjacency) if not a]


def _reach(adj: Sequence[int], start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def from_edge_list(vertex_count: int, pairs: Iterable[Edge]) -> Graph:
    """Build a graph, dropping duplicate pairs and sorting the edge list."""
    if not 1 <= vertex_count <= MAX_VERTICES:
        raise GraphError(f"vertex_count must be in 1..{MAX_VERTICES}, got {vertex_count}")
    adj = [0] * vertex_count
    for u, v in pairs:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    edges = tuple((u, v) for u in range(vertex_count) for v in bits(adj[u] >> (u + 1) << (u + 1)))
    return Graph(vertex_count, tuple(adj), edges)


def from_adjacency(adjacency: Sequence[int]) -> Graph:
    n = len(adjacency)
    return from_edge_list(n, ((u, v) for u in range(n) for v in bits(adjacency[u]) if u < v))


# -- named graphs used across tests and demos ---------------------------------

def path(k: int) -> Graph:
    return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(k: int) -> Graph:
    return from_edge_list(k, [(u, v) for u in range(k) for v in range(u + 1, k)])


def disjoint_union(*graphs: Graph) -> Graph:
    pairs = []
    offset = 0
    for g in graphs:
        pairs.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return from_edge_list(offset, pairs)


# -- graph6 ---------------------------------------------------------------------

def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    n = g.vertex_count
    out = [_size_prefix(n)]
    acc = nbits = 0
    for v in range(1, n):
        row = g.adjacency[v]
        for u in range(v):
            acc = (acc << 1) | (row >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"character outside graph6 range in {text!r}")
    if codes[0] == 63:
        if len(codes) < 4 or codes[1] == 63:
            raise Graph6Error("unsupported or truncated extended size header")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]
    if n == 0:
        raise Graph6Error("graph6 with zero vertices is not representable")
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise Graph6Error(f"expected {(need + 5) // 6} data bytes for n={n}, got {len(body)}")
    pairs = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                pairs.append((u, v))
            k += 1
    if need % 6 and body[-1] & ((1 << (6 - need % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return from_edge_list(n, pairs)
