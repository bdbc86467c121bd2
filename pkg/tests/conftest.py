import random

import networkx as nx
import pytest

from sizeramsey.enumeration import GraphClassQuery, enumerate_graphs
from sizeramsey.graph import Graph, from_edge_list


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def random_graph(rng: random.Random, max_vertices: int = 8, density: float = 0.4) -> Graph:
    n = rng.randint(1, max_vertices)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return from_edge_list(n, pairs)


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    """All connected graphs with at most 7 edges plus seeded random graphs."""
    graphs = [g for e in range(1, 8) for g in enumerate_graphs(GraphClassQuery(e))]
    rng = random.Random(11)
    graphs += [random_graph(rng) for _ in range(60)]
    return graphs


@pytest.fixture(scope="session")
def small_connected() -> list[Graph]:
    return [g for e in range(1, 7) for g in enumerate_graphs(GraphClassQuery(e))]
