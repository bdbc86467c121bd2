"""Exact matching and star-packing numbers by branch and bound.

All routines accept either a :class:`Graph` or a raw sequence of adjacency
bitmasks, so the arrowing search can call them on red subgraphs without
building graph objects.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .graph import Graph, bits


def _adj(g: Graph | Sequence[int]) -> Sequence[int]:
    return g.adjacency if isinstance(g, Graph) else g


def _support(adj: Sequence[int]) -> int:
    mask = 0
    for v, a in enumerate(adj):
        if a:
            mask |= 1 << v
    return mask


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    mask = 0
    for v in cover:
        mask |= 1 << v
    return all(mask >> u & 1 or mask >> v & 1 for u, v in g.edges)


def greedy_vertex_cover(g: Graph) -> set[int]:
    """Cover from repeatedly taking a maximum-degree vertex (no optimality)."""
    adj = list(g.adjacency)
    cover = set()
    while any(adj):
        v = max(range(len(adj)), key=lambda x: (adj[x].bit_count(), -x))
        cover.add(v)
        for w in bits(adj[v]):
            adj[w] &= ~(1 << v)
        adj[v] = 0
    return cover


def max_matching_size(g: Graph | Sequence[int], target: int | None = None) -> int:
    """Size of a maximum matching.

    With ``target`` the search stops as soon as a matching of that size is
    found, so the return value is then only ``min(true value, target)``.
    """
    adj = _adj(g)
    goal = len(adj) if target is None else target
    best = 0

    def dfs(avail: int, cur: int) -> bool:
        nonlocal best
        # a pendant vertex can always be matched to its only neighbour
        while True:
            for v in bits(avail):
                nb = adj[v] & avail
                if nb == 0:
                    avail &= ~(1 << v)
                    break
                if nb & (nb - 1) == 0:
                    avail &= ~(1 << v | nb)
                    cur += 1
                    break
            else:
                break
        if cur > best:
            best = cur
            if best >= goal:
                return True
        if not avail or cur + avail.bit_count() // 2 <= best:
            return False
        v = min(bits(avail), key=lambda x: (adj[x] & avail).bit_count())
        for w in bits(adj[v] & avail):
            if dfs(avail & ~(1 << v | 1 << w), cur + 1):
                return True
        return dfs(avail & ~(1 << v), cur)

    dfs(_support(adj), 0)
    return best


def star_packing_number(g: Graph | Sequence[int], p: int, target: int | None = None) -> int:
    """Maximum number of vertex-disjoint K_{1,p} subgraphs.

    Branches on a candidate centre: either it is a centre (one branch per
    choice of leaves, up to twins) or it is never a centre.  Pruned by
    ``min(free vertices // (p+1), candidate centres)``.  With ``target`` the
    search stops once that many stars are packed.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    adj = _adj(g)
    if p == 1:
        return max_matching_size(adj, target)
    goal = len(adj) if target is None else target
    best = 0

    def dfs(avail: int, noncenter: int, cur: int) -> bool:
        nonlocal best
        while True:
            cands = 0
            for v in bits(avail & ~noncenter):
                if (adj[v] & avail).bit_count() >= p:
                    cands |= 1 << v
            useful = cands
            for v in bits(cands):
                useful |= adj[v] & avail
            if useful == avail:
                break
            avail = useful
        if cur > best:
            best = cur
            if best >= goal:
                return True
        if not cands:
            return False
        bound = min(avail.bit_count() // (p + 1), cands.bit_count())
        if cur + bound <= best:
            return False
        v = min(bits(cands), key=lambda x: ((adj[x] & avail).bit_count(), x))
        rest = avail & ~(1 << v)
        classes: dict[tuple[int, bool], list[int]] = {}
        for x in bits(adj[v] & avail):
            key = (adj[x] & rest, bool(noncenter >> x & 1))
            classes.setdefault(key, []).append(x)
        groups = list(classes.values())
        for counts in product(*(range(min(len(gr), p) + 1) for gr in groups)):
            if sum(counts) != p:
                continue
            leaves = 0
            for gr, c in zip(groups, counts):
                for x in gr[:c]:
                    leaves |= 1 << x
            if dfs(rest & ~leaves, noncenter, cur + 1):
                return True
        return dfs(avail, noncenter | 1 << v, cur)

    dfs(_support(adj), 0, 0)
    return best


def greedy_star_packing(adj: Sequence[int], p: int) -> int:
    """Lower bound: repeatedly centre a star at a max free-degree vertex."""
    avail = _support(adj)
    count = 0
    while True:
        v, deg = -1, -1
        for x in bits(avail):
            d = (adj[x] & avail).bit_count()
            if d > deg:
                v, deg = x, d
        if deg < p:
            return count
        nbrs = sorted(bits(adj[v] & avail), key=lambda x: ((adj[x] & avail).bit_count(), x))
        used = 1 << v
        for x in nbrs[:p]:
            used |= 1 << x
        avail &= ~used
        count += 1
