"""Isomorph-free hosts by edge count, exact size Ramsey values, verdict cache.

Graphs with ``e`` edges are grown from the representatives with ``e - 1``
edges by adding one edge in every possible way (between existing vertices,
to one new vertex, or, for possibly disconnected hosts, between two new
vertices); children are deduplicated on their exact canonical form.  Every
connected graph with ``e`` edges has a connected parent with ``e - 1`` edges
(drop a cycle edge or a pendant edge), and every isolate-free graph has an
isolate-free parent, so each level is complete.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .arrowing import (
    DEFAULT_BUDGET_NODES,
    ArrowingCertificate,
    ArrowingInstance,
    TwoColoring,
    arrows,
    coloring_is_good,
)
from .canon import canonize
from .graph import Graph, from_edge_list, parse_graph6, to_graph6

MAX_ENUM_EDGES = 14
CACHE_ENV = "SIZERAMSEY_CACHE_DIR"


class EnumerationBudgetExceeded(ValueError):
    pass


class CacheConflict(RuntimeError):
    """A stored verdict disagrees with a new one for the same key."""


class NoArrowingHost(RuntimeError):
    """No host up to ``e_max`` edges arrows; ``lower_bound`` is still valid."""

    def __init__(self, message: str, lower_bound: int, refuted_counts: dict[int, int]):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.refuted_counts = refuted_counts


@dataclass(frozen=True)
class GraphClassQuery:
    edge_count: int
    connected_only: bool = True
    max_vertices: int | None = None

    @property
    def vertex_limit(self) -> int:
        cap = 2 * self.edge_count if not self.connected_only else self.edge_count + 1
        return min(cap, self.max_vertices) if self.max_vertices else cap


@lru_cache(maxsize=None)
def _level(e: int, connected_only: bool, vertex_limit: int) -> tuple[str, ...]:
    """Canonical graph6 strings of all isolate-free hosts with ``e`` edges."""
    if e == 1:
        return (to_graph6(from_edge_list(2, [(0, 1)])),) if vertex_limit >= 2 else ()
    seen: dict[str, None] = {}
    for code in _level(e - 1, connected_only, vertex_limit):
        g = parse_graph6(code)
        nv = g.vertex_count
        children = [((u, v), 0) for u, v in g.complement_free_pairs()]
        if nv + 1 <= vertex_limit:
            children += [((u, nv), 1) for u in range(nv)]
        if not connected_only and nv + 2 <= vertex_limit:
            children.append(((nv, nv + 1), 2))
        for pair, extra in children:
            child = g.add_edges([pair], new_vertices=extra)
            key = to_graph6(canonize(child)[0])
            if key not in seen:
                seen[key] = None
    return tuple(sorted(seen))


def enumerate_graphs(q: GraphClassQuery, budget_edges: int = MAX_ENUM_EDGES) -> Iterator[Graph]:
    """One canonical representative per isomorphism class matching ``q``."""
    if q.edge_count > budget_edges:
        raise EnumerationBudgetExceeded(
            f"enumeration of {q.edge_count}-edge hosts exceeds the {budget_edges}-edge budget")
    if q.edge_count < 1:
        return
    for code in _level(q.edge_count, q.connected_only, q.vertex_limit):
        yield parse_graph6(code)


# the public name promised by the package surface
enumerate = enumerate_graphs  # noqa: A001


# -- cache -------------------------------------------------------------------------

@dataclass(frozen=True)
class CacheRecord:
    graph6: str
    n: int
    p: int
    m: int
    arrows: bool
    witness_red_edge_ids: tuple[int, ...] | None
    timestamp: float = 0.0

    @property
    def key(self) -> tuple[str, int, int, int]:
        return (self.graph6, self.n, self.p, self.m)

    def validate(self) -> bool:
        """Re-check a refutation's witness on the stored canonical graph."""
        if self.arrows:
            return self.witness_red_edge_ids is None
        g = parse_graph6(self.graph6)
        c = TwoColoring.from_red(g, self.witness_red_edge_ids or ())
        return coloring_is_good(c, ArrowingInstance(self.n, self.p, self.m))

    def to_json(self) -> str:
        d = {"graph6": self.graph6, "n": self.n, "p": self.p, "m": self.m, "arrows": self.arrows,
             "witness_red_edge_ids": None if self.witness_red_edge_ids is None
             else list(self.witness_red_edge_ids),
             "timestamp": self.timestamp}
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> CacheRecord:
        d = json.loads(line)
        red = d.get("witness_red_edge_ids")
        return cls(d["graph6"], d["n"], d["p"], d["m"], d["arrows"],
                   None if red is None else tuple(red), d.get("timestamp", 0.0))

    @classmethod
    def from_certificate(cls, cert: ArrowingCertificate) -> CacheRecord:
        d = cert.to_dict()
        red = d["witness_red_edge_ids"]
        return cls(d["graph6"], d["n"], d["p"], d["m"], d["arrows"],
                   None if red is None else tuple(red), time.time())


class VerdictCache:
    """Append-only JSON Lines store keyed by (canonical graph6, n, p, m).

    ``path=None`` keeps records in memory only.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else None
        self._records: dict[tuple[str, int, int, int], CacheRecord] = {}
        if self.path is not None and self.path.exists():
            with self.path.open(encoding="utf-8") as fh:
                for line in fh:
                    if line.strip():
                        rec = CacheRecord.from_json(line)
                        self._remember(rec)

    @classmethod
    def default(cls) -> VerdictCache:
        root = os.environ.get(CACHE_ENV)
        return cls(Path(root) / "verdicts.jsonl" if root else None)

    def __len__(self) -> int:
        return len(self._records)

    def _remember(self, rec: CacheRecord) -> bool:
        old = self._records.get(rec.key)
        if old is not None:
            if old.arrows != rec.arrows:
                raise CacheConflict(f"conflicting verdicts for {rec.key}")
            return False
        self._records[rec.key] = rec
        return True

    def get(self, graph6: str, n: int, p: int, m: int) -> CacheRecord | None:
        return self._records.get((graph6, n, p, m))

    def put(self, rec: CacheRecord) -> None:
        if self._remember(rec) and self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(rec.to_json() + "\n")

    def records(self) -> list[CacheRecord]:
        return list(self._records.values())


def cache_get(cache: VerdictCache, graph6: str, n: int, p: int, m: int) -> CacheRecord | None:
    return cache.get(graph6, n, p, m)


def cache_put(cache: VerdictCache, record: CacheRecord) -> None:
    cache.put(record)


def decide(g: Graph, inst: ArrowingInstance, cache: VerdictCache | None = None,
           budget_nodes: int = DEFAULT_BUDGET_NODES) -> CacheRecord:
    """Arrowing verdict for ``g``, served from ``cache`` when present."""
    code = to_graph6(canonize(g)[0])
    if cache is not None:
        hit = cache.get(code, inst.n, inst.p, inst.m)
        if hit is not None:
            return hit
    rec = CacheRecord.from_certificate(arrows(g, inst, budget_nodes))
    if cache is not None:
        cache.put(rec)
    return rec


# -- size Ramsey numbers -----------------------------------------------------------

@dataclass
class RamseyResult:
    instance: ArrowingInstance
    connected_only: bool
    value: int
    witness: str
    refuted_edge_count: int
    refuted_counts: dict[int, int] = field(default_factory=dict)

    def summary(self) -> str:
        kind = "connected size Ramsey" if self.connected_only else "size Ramsey"
        lines = [f"{kind} number for {self.instance}: {self.value}",
                 f"witness host (graph6): {self.witness}"]
        for e in sorted(self.refuted_counts):
            lines.append(f"  e={e}: {self.refuted_counts[e]} hosts refuted")
        return "\n".join(lines)


def compute_size_ramsey(inst: ArrowingInstance, connected_only: bool = True, e_max: int = 10,
                        cache: VerdictCache | None = None,
                        budget_nodes: int = DEFAULT_BUDGET_NODES) -> RamseyResult:
    """Smallest edge count of a host arrowing ``inst``, by exhaustive search.

    Every host below the returned value is refuted with a checked witness;
    the first arrowing host found at the value is returned as witness.
    """
    if e_max > MAX_ENUM_EDGES:
        raise EnumerationBudgetExceeded(f"e_max={e_max} exceeds {MAX_ENUM_EDGES}")
    refuted: dict[int, int] = {}
    for e in range(1, e_max + 1):
        count = 0
        for g in enumerate_graphs(GraphClassQuery(e, connected_only)):
            rec = decide(g, inst, cache, budget_nodes)
            if rec.arrows:
                return RamseyResult(inst, connected_only, e, rec.graph6, e - 1, refuted)
            if not rec.validate():
                raise AssertionError(f"stored witness for {rec.graph6} fails the checker")
            count += 1
        refuted[e] = count
    raise NoArrowingHost(f"no host with at most {e_max} edges arrows {inst}", e_max + 1, refuted)
