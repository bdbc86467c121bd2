"""Exact canonical labeling by partition refinement and backtracking.

The search tree is the usual individualize-and-refine tree; the canonical
labeling is the leaf whose relabeled adjacency is lexicographically largest.
Subtrees are skipped only when a known automorphism fixing the current
individualized prefix maps them onto an already explored subtree, so the
result is exact.  Known automorphisms are seeded with twin transpositions
(vertices with equal open or closed neighborhoods), which keeps stars and
other leaf-heavy graphs from blowing up the tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, to_graph6


@dataclass(frozen=True)
class CanonicalForm:
    graph6: str

    def __str__(self) -> str:
        return self.graph6


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Refine an ordered partition (list of vertex bitmasks) to equitable."""
    cells = list(cells)
    changed = True
    while changed:
        changed = False
        out: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cell):
                a = adj[v]
                key = tuple((a & c).bit_count() for c in cells)
                groups[key] = groups.get(key, 0) | (1 << v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            out.extend(groups[k] for k in sorted(groups))
        cells = out
    return cells


def _twin_generators(adj: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(adj)
    gens = []
    for closed in (False, True):
        classes: dict[int, list[int]] = {}
        for v in range(n):
            key = adj[v] | (1 << v) if closed else adj[v]
            classes.setdefault(key, []).append(v)
        for members in classes.values():
            for a, b in zip(members, members[1:]):
                perm = list(range(n))
                perm[a], perm[b] = b, a
                gens.append(tuple(perm))
    return gens


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for w in bits(adj[v]):
            r |= 1 << (len(order) - 1 - pos[w])
        rows.append(r)
    return tuple(rows)


class _Search:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.autos = _twin_generators(adj)
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None

    def _orbits(self, prefix: list[int]) -> list[int]:
        """Union-find roots under known automorphisms fixing ``prefix``."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[v] == v for v in prefix):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def run(self, cells: list[int], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells)
        target = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if target is None:
            order = [c.bit_length() - 1 for c in cells]
            cert = _certificate(self.adj, order)
            if self.best is None or cert > self.best:
                self.best, self.best_order = cert, order
            elif cert == self.best:
                # equal certificates at two leaves give an automorphism
                perm = [0] * self.n
                for a, b in zip(self.best_order, order):
                    perm[a] = b
                self.autos.append(tuple(perm))
            return
        cell = cells[target]
        explored: list[int] = []
        while True:
            root = self._orbits(prefix)
            covered = {root[v] for v in explored}
            v = next((w for w in bits(cell) if root[w] not in covered), None)
            if v is None:
                return
            explored.append(v)
            child = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:]
            self.run(child, prefix + [v])


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``perm`` with ``g.relabel(perm)`` the canonical representative."""
    search = _Search(g.adjacency)
    search.run([(1 << g.vertex_count) - 1], [])
    perm = [0] * g.vertex_count
    for new, old in enumerate(search.best_order):
        perm[old] = new
    return perm


def canonize(g: Graph) -> tuple[Graph, list[int]]:
    perm = canonical_labeling(g)
    return g.relabel(perm), perm


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(to_graph6(canonize(g)[0]))
