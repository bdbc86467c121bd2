"""Seeded random connected hosts for property tests and theorem probing.

Three families are mixed.  ``sparse`` hosts are a random tree plus random
chords.  ``hub`` and ``tight`` hosts put about ``n`` vertices near degree
``m`` around a shared pool of low-degree vertices, which is where the
colorer's harder branches live (a high-degree side of exactly ``n``
vertices, bridges, shared leaves).
"""

from __future__ import annotations

import random

from .graph import Graph, from_edge_list


def _connect_and_trim(rng: random.Random, nv: int, edges: set[tuple[int, int]],
                      max_edges: int) -> Graph:
    def norm(a, b):
        return (a, b) if a < b else (b, a)

    g = from_edge_list(nv, edges)
    comps = [sorted(c) for c in g.components() if len(c) > 1 or g.edge_count == 0]
    if not comps:
        comps = [[0]]
    for a, b in zip(comps, comps[1:]):
        edges.add(norm(rng.choice(a), rng.choice(b)))
    g = from_edge_list(nv, edges)
    keep, _ = g.induced_subgraph(v for v in range(nv) if g.adjacency[v] or nv == 1)
    g = keep
    # drop non-bridge or pendant edges until under budget
    while g.edge_count > max_edges:
        bridges = g.bridges()
        deg = g.degrees()
        removable = [e for e, (u, v) in enumerate(g.edges)
                     if e not in bridges or deg[u] == 1 or deg[v] == 1]
        e = rng.choice(removable)
        g = g.delete_edge(e)
        g, _ = g.induced_subgraph(v for v in range(g.vertex_count) if g.adjacency[v])
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    return g.relabel(perm)


def random_sparse_host(rng: random.Random, edges: int) -> Graph:
    """Random tree on a random number of vertices plus random chords."""
    edges = max(edges, 1)
    nv = rng.randint(max(2, int(edges ** 0.5) + 1), edges + 1)
    pairs = {(rng.randrange(v), v) for v in range(1, nv)}
    tries = 0
    while len(pairs) < edges and tries < 50 * edges:
        a, b = rng.sample(range(nv), 2)
        pairs.add((min(a, b), max(a, b)))
        tries += 1
    return _connect_and_trim(rng, nv, pairs, edges)


def random_hub_host(rng: random.Random, n: int, p: int, m: int, edges: int) -> Graph:
    """Around ``n`` hubs of degree near ``m .. m+p`` sharing a pool of spokes."""
    hubs = max(1, n + rng.choice((-1, 0, 0, 0, 1)))
    pairs: set[tuple[int, int]] = set()
    nv = hubs
    pool: list[int] = []
    for h in range(hubs):
        target = rng.randint(max(1, m - 2), m + p + 1)
        for _ in range(target):
            if pool and rng.random() < 0.25:
                w = rng.choice(pool)
            else:
                w = nv
                nv += 1
                pool.append(w)
            pairs.add((h, w))
    for _ in range(rng.randint(0, 3)):
        if len(pool) >= 2:
            a, b = rng.sample(pool, 2)
            pairs.add((min(a, b), max(a, b)))
    if hubs >= 2 and rng.random() < 0.3:
        a, b = rng.sample(range(hubs), 2)
        pairs.add((min(a, b), max(a, b)))
    if nv > 64:
        return random_sparse_host(rng, edges)
    return _connect_and_trim(rng, nv, pairs, edges)


def random_tight_host(rng: random.Random, n: int, p: int, m: int, edges: int) -> Graph:
    """Exactly ``n`` hubs of degree ``>= m`` built to fit in ``edges`` edges.

    Hubs are chained through shared spokes, so the high-degree side has size
    ``n`` and spare edges go to chords, hub-hub edges or pendant paths.
    """
    degs = [rng.randint(m, m + p) for _ in range(n)]
    while sum(degs) > edges and max(degs) > m:
        degs[degs.index(max(degs))] -= 1
    if sum(degs) > edges:
        return random_sparse_host(rng, edges)
    pairs: set[tuple[int, int]] = set()
    nv = n
    pool: list[int] = []
    for h, d in enumerate(degs):
        mine: list[int] = []
        if h and pool:
            w = rng.choice(pool)
            pairs.add((h, w))
            mine.append(w)
        while len(mine) < d:
            if pool and rng.random() < 0.15:
                w = rng.choice(pool)
                if w in mine:
                    continue
            else:
                w = nv
                nv += 1
            pairs.add((h, w))
            mine.append(w)
        pool.extend(w for w in mine if w not in pool)
    spare = edges - len(pairs)
    for _ in range(rng.randint(0, max(spare, 0))):
        r = rng.random()
        if r < 0.4 and len(pool) >= 2:
            a, b = rng.sample(pool, 2)
        elif r < 0.55 and n >= 2:
            a, b = rng.sample(range(n), 2)
        else:
            a, b = rng.choice(pool + list(range(n, nv))), nv
            nv += 1
        if nv > 64:
            break
        pairs.add((min(a, b), max(a, b)))
    if nv > 64:
        return random_sparse_host(rng, edges)
    return _connect_and_trim(rng, nv, pairs, edges)


def random_host(rng: random.Random, n: int, p: int, m: int, max_edges: int) -> Graph:
    """One connected host with at most ``max_edges`` edges."""
    r = rng.random()
    if r < 0.45:
        return random_tight_host(rng, n, p, m, max_edges)
    if r < 0.7:
        return random_hub_host(rng, n, p, m, max_edges)
    return random_sparse_host(rng, rng.randint(max(1, max_edges - 6), max_edges))
