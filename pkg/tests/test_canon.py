import itertools
import random

import networkx as nx

from sizeramsey.canon import canonical_form, canonical_labeling, canonize
from sizeramsey.graph import cycle, from_edge_list, path, star

from .conftest import random_graph, to_nx


def shuffled(g, rng):
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_c4_invariant_under_relabeling():
    rng = random.Random(0)
    c4 = cycle(4)
    for _ in range(20):
        assert canonical_form(shuffled(c4, rng)) == canonical_form(c4)


def test_p4_differs_from_k13():
    assert canonical_form(path(4)) != canonical_form(star(3))


def test_paw_all_labelings_one_form():
    paw = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    forms = {canonical_form(paw.relabel(perm)) for perm in itertools.permutations(range(4))}
    assert len(forms) == 1


def test_canonize_returns_isomorphic_relabeling():
    rng = random.Random(3)
    for _ in range(100):
        g = random_graph(rng, 9)
        h, perm = canonize(g)
        assert h == g.relabel(perm)
        assert sorted(perm) == list(range(g.vertex_count))
        assert canonical_labeling(g) == perm


def test_exact_against_networkx_isomorphism():
    rng = random.Random(4)
    graphs = [random_graph(rng, 7, 0.45) for _ in range(250)]
    forms = [canonical_form(g) for g in graphs]
    for i in range(len(graphs)):
        for j in range(i + 1, min(len(graphs), i + 40)):
            iso = nx.is_isomorphic(to_nx(graphs[i]), to_nx(graphs[j]))
            assert (forms[i] == forms[j]) == iso


def test_symmetric_graphs():
    rng = random.Random(5)
    petersen = from_edge_list(10, [tuple(e) for e in nx.petersen_graph().edges])
    cube = from_edge_list(8, [tuple(e) for e in nx.convert_node_labels_to_integers(nx.hypercube_graph(3)).edges])
    k33 = from_edge_list(6, [(u, v) for u in range(3) for v in range(3, 6)])
    for g in (petersen, cube, k33, star(30), cycle(12)):
        f = canonical_form(g)
        for _ in range(5):
            assert canonical_form(shuffled(g, rng)) == f


def test_permutation_invariance_small_corpus(small_connected):
    rng = random.Random(6)
    for g in small_connected:
        f = canonical_form(g)
        for _ in range(10):
            assert canonical_form(shuffled(g, rng)) == f
