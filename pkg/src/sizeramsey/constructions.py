"""Extremal hosts and formula-level quantities for star-matching vs. star."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arrowing import TwoColoring
from .graph import Graph, from_edge_list


@dataclass(frozen=True)
class DegreePartition:
    """High-degree vertices ``U`` (degree >= m) and the rest ``V``."""

    U: frozenset[int]
    V: frozenset[int]
    m: int

    @property
    def t(self) -> int:
        return len(self.U)


def m_min(n: int, p: int) -> int:
    """Smallest integer m with 2m >= n^2 + 2pn + n - 3."""
    if n < 1 or p < 1:
        raise ValueError("n and p must be positive")
    num = n * n + 2 * p * n + n - 3
    return max(1, -(-num // 2))


def upper_bound_value(n: int, p: int, m: int) -> int:
    return n * (m + p) - 1


def construct_upper(n: int, p: int, m: int) -> Graph:
    """``n`` disjoint copies of K_{1,m+p-1} with centres joined in a path.

    Centre ``i`` is vertex ``i * (m + p)``; its leaves follow it.
    """
    if min(n, p, m) < 1:
        raise ValueError("n, p, m must be positive")
    size = m + p
    pairs = []
    for i in range(n):
        c = i * size
        pairs.extend((c, c + j) for j in range(1, size))
        if i:
            pairs.append((c - size, c))
    return from_edge_list(n * size, pairs)


def degree_partition(g: Graph, m: int) -> DegreePartition:
    deg = g.degrees()
    U = frozenset(v for v in range(g.vertex_count) if deg[v] >= m)
    return DegreePartition(U, frozenset(range(g.vertex_count)) - U, m)


def cover_coloring(g: Graph, part: DegreePartition) -> TwoColoring:
    """Red on every edge touching ``U``, blue elsewhere."""
    return TwoColoring.from_red(
        g, (e for e, (u, v) in enumerate(g.edges) if u in part.U or v in part.U))


def min_edges_for_t(t: int, m: int) -> int:
    """Fewest edges a graph can have when ``t`` vertices have degree >= m.

    Each of the ``t`` vertices sees at least ``m`` edges and at most
    ``C(t, 2)`` edges are counted twice.  Only meaningful for ``t <= m``.
    """
    if t < 0 or m < 1:
        raise ValueError("need t >= 0 and m >= 1")
    if t > m:
        raise ValueError(f"bound t*m - C(t,2) is not valid for t={t} > m={m}")
    return t * m - comb(t, 2)
