import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sizeramsey.graph import (
    Graph6Error,
    GraphError,
    complete,
    cycle,
    disjoint_union,
    from_edge_list,
    parse_graph6,
    path,
    star,
    to_graph6,
)

from .conftest import to_nx


def test_from_edge_list_examples():
    k2 = from_edge_list(2, [(0, 1)])
    assert k2.edge_count == 1
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.edge_count == 4
    assert c4.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    k14 = from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert k14.degree_sequence() == [4, 1, 1, 1, 1]


def test_from_edge_list_dedups_and_sorts():
    g = from_edge_list(3, [(2, 1), (1, 2), (0, 2)])
    assert g.edges == ((0, 2), (1, 2))
    assert g.adjacency == (0b100, 0b100, 0b011)


@pytest.mark.parametrize("n, pairs", [
    (3, [(0, 3)]),
    (3, [(1, 1)]),
    (65, []),
    (0, []),
    (2, [(-1, 0)]),
])
def test_from_edge_list_rejects(n, pairs):
    with pytest.raises(GraphError):
        from_edge_list(n, pairs)


def test_sixty_four_vertices_allowed():
    g = path(64)
    assert g.edge_count == 63 and g.is_connected()


def test_connectivity():
    assert cycle(4).is_connected()
    assert not from_edge_list(4, [(0, 1), (2, 3)]).is_connected()
    assert star(4).is_connected()
    assert from_edge_list(1, []).is_connected()


def test_degrees():
    assert star(4).degree(0) == 4
    assert all(cycle(4).degree(v) == 2 for v in range(4))
    assert path(4).degree(0) == 1
    with pytest.raises(GraphError):
        path(4).degree(4)


def test_delete_edge_examples():
    p4 = cycle(4).delete_edge(0)
    assert p4.edge_count == 3 and p4.is_connected()
    assert sorted(p4.degrees()) == [1, 1, 2, 2]
    middle = path(4).edge_id(1, 2)
    two_k2 = path(4).delete_edge(middle)
    assert not two_k2.is_connected()
    with pytest.raises(GraphError):
        path(4).delete_edge(3)


def test_delete_vertices_relabels():
    g, relabel = star(4).delete_vertices({0})
    assert g.vertex_count == 4 and g.edge_count == 0
    assert relabel == {1: 0, 2: 1, 3: 2, 4: 3}
    h, relabel = path(5).delete_vertices({1})
    assert relabel == {0: 0, 2: 1, 3: 2, 4: 3}
    assert h.edges == ((1, 2), (2, 3))


def test_components():
    assert sorted(map(sorted, from_edge_list(4, [(0, 1), (2, 3)]).components())) == [[0, 1], [2, 3]]
    assert cycle(4).components() == [{0, 1, 2, 3}]
    k13_plus = from_edge_list(5, [(0, 1), (0, 2), (0, 3)])
    assert sorted(len(c) for c in k13_plus.components()) == [1, 4]


def test_bridges_match_networkx():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 9)
        g = from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35])
        expected = {g.edge_id(*e) for e in nx.bridges(to_nx(g))}
        assert g.bridges() == expected
        for e in range(g.edge_count):
            assert g.is_bridge(e) == (e in expected)


def test_edge_deletion_invariants(corpus):
    for g in corpus:
        comps = len(g.components())
        for e in range(g.edge_count):
            h = g.delete_edge(e)
            assert h.edge_count == g.edge_count - 1
            assert comps <= len(h.components()) <= comps + 1


# -- graph6 --------------------------------------------------------------------------

def test_graph6_k3_matches_reference_encoder():
    reference = nx.to_graph6_bytes(nx.complete_graph(3), header=False).decode().strip()
    assert reference == "Bw"
    assert to_graph6(complete(3)) == reference


def test_graph6_single_vertex():
    g = parse_graph6("@")
    assert g.vertex_count == 1 and g.edge_count == 0
    assert to_graph6(g) == "@"


def test_graph6_matches_networkx_on_random_graphs():
    rng = random.Random(2)
    for _ in range(150):
        n = rng.randint(1, 64)
        g = from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.1])
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert to_graph6(g) == ref
        back = nx.from_graph6_bytes(ref.encode())
        assert sorted(tuple(sorted(e)) for e in back.edges) == list(g.edges)


def test_graph6_extended_header():
    g = path(64)
    text = to_graph6(g)
    assert text.startswith("~?@?")
    assert parse_graph6(text) == g


def test_graph6_round_trip_corpus(corpus):
    for g in corpus:
        assert parse_graph6(to_graph6(g)) == g


@given(st.integers(1, 20).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                                            .filter(lambda e: e[0] != e[1]), max_size=40))))
@settings(max_examples=200, deadline=None)
def test_graph6_round_trip_property(data):
    n, pairs = data
    g = from_edge_list(n, pairs)
    s = to_graph6(g)
    assert to_graph6(parse_graph6(s)) == s


@pytest.mark.parametrize("text", ["", "B", "Bww", "C", "~", "~??", "B\x7f", "~~??????"])
def test_graph6_malformed(text):
    with pytest.raises(Graph6Error):
        parse_graph6(text)


def test_graph6_too_many_vertices():
    g = nx.path_graph(65)
    with pytest.raises(Graph6Error):
        parse_graph6(nx.to_graph6_bytes(g, header=False).decode())


def test_disjoint_union():
    g = disjoint_union(complete(3), complete(3))
    assert g.vertex_count == 6 and g.edge_count == 6 and len(g.components()) == 2
