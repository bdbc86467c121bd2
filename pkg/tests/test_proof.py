import itertools
import json
import random

import pytest

from sizeramsey.arrowing import ArrowingInstance, coloring_is_good, find_good_coloring
from sizeramsey.constructions import DegreePartition, construct_upper, degree_partition, m_min
from sizeramsey.enumeration import GraphClassQuery, enumerate_graphs
from sizeramsey.graph import cycle, from_edge_list, path, star
from sizeramsey.proof import (
    BASE,
    CASE1_COVER,
    CASE3_U_BRIDGE,
    CASE3_V_BRIDGE,
    HIGH_DEGREE_RECURSE,
    FALLBACK_SEARCH,
    ONE_LEAF_DEG2,
    TWO_LEAVES,
    V2_U3_TERMINAL,
    DegenerateTree,
    PreconditionError,
    base_color,
    prune_and_select,
    proof_color,
    reduce_to_tree,
    split_budgets,
)
from sizeramsey.sampling import random_host

ALL_TAGS = {
    "BASE", "CASE1_COVER", "CASE3_V_EDGE", "CASE3_V_BRIDGE", "CASE3_U_EDGE", "CASE3_U_BRIDGE",
    "PENDANT_MOVE", "LEAF_PRUNE", "LOW_DEGREE_TERMINAL", "TWIN_LEAF_TERMINAL",
    "HIGH_DEGREE_RECURSE", "V2_U3_TERMINAL", "FALLBACK_SEARCH",
}


def partition(nv, U, m):
    return DegreePartition(frozenset(U), frozenset(range(nv)) - frozenset(U), m)


def is_tree(g):
    return g.is_connected() and g.edge_count == g.vertex_count - 1


# -- base case -------------------------------------------------------------------

def test_base_color_path_all_blue():
    c = base_color(path(5), 1, 4)
    assert not c.red
    assert coloring_is_good(c, ArrowingInstance(1, 1, 4))


@pytest.mark.parametrize("p,m", [(1, 2), (2, 2), (3, 4), (2, 6)])
def test_base_color_star(p, m):
    g = star(m + p - 2)
    c = base_color(g, p, m)
    assert len(c.red) == p - 1 and len(c.blue) == m - 1


def test_base_color_on_small_corpus(small_connected):
    for g in small_connected:
        for p, m in itertools.product((1, 2, 3), (1, 2, 3, 4)):
            inst = ArrowingInstance(1, p, m)
            if g.edge_count <= m + p - 2:
                assert coloring_is_good(base_color(g, p, m), inst)
            else:
                exists = find_good_coloring(g, inst)[0] is not None
                if exists:
                    assert coloring_is_good(base_color(g, p, m), inst)
                else:
                    with pytest.raises(PreconditionError):
                        base_color(g, p, m)


# -- pendant reduction and selection ------------------------------------------------

def test_reduce_tree_is_identity():
    g = from_edge_list(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
    gp, pmap = reduce_to_tree(g, partition(7, {1, 2, 3}, 2))
    assert gp == g and not pmap.moves


def test_reduce_c4_alternating():
    g = cycle(4)
    gp, pmap = reduce_to_tree(g, partition(4, {0, 2}, 2))
    assert len(pmap.moves) == 1
    assert gp.vertex_count == 5 and is_tree(gp)


def test_reduce_rerouted_construction():
    base = construct_upper(2, 1, 4)
    g = base.delete_edge(base.edge_id(0, 5)).add_edges([(5, 1), (5, 2)])
    part = degree_partition(g, 4)
    assert part.U == frozenset({0, 5})
    gp, pmap = reduce_to_tree(g, part)
    assert is_tree(gp) and gp.edge_count == g.edge_count
    lifted = {pmap.lift(e) for e in gp.edges}
    assert lifted == set(g.edges)


def test_reduce_rejects_non_crossing_edges():
    with pytest.raises(PreconditionError):
        reduce_to_tree(path(3), partition(3, {0, 1}, 1))


def test_pendant_map_lifts_colorings():
    rng = random.Random(5)
    g = cycle(6)
    part = partition(6, {0, 2, 4}, 2)
    gp, pmap = reduce_to_tree(g, part)
    from sizeramsey.arrowing import TwoColoring
    for _ in range(20):
        red = [e for e in range(gp.edge_count) if rng.random() < 0.5]
        c = pmap.lift_coloring(TwoColoring.from_red(gp, red), g)
        assert len(c.red) == len(red)


def test_prune_spider_two_leaves():
    # centre 0 in V, legs 0-i-(i+3)
    g = from_edge_list(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
    sel = prune_and_select(g, partition(7, {1, 2, 3}, 2))
    assert sel.v2 == 0 and sel.kind == TWO_LEAVES
    assert set(sel.leaves) <= {1, 2, 3}


def test_prune_one_leaf_deg2():
    # core path U-V-U-V-U, each U vertex with one pendant leaf
    g = from_edge_list(8, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (2, 6), (4, 7)])
    sel = prune_and_select(g, partition(8, {0, 2, 4}, 2))
    assert sel.kind == ONE_LEAF_DEG2 and sel.v2 == 1 and sel.leaves == (0,)


def test_prune_degenerate_cases():
    with pytest.raises(DegenerateTree):
        prune_and_select(path(3), partition(3, {0, 2}, 1))
    double_star = from_edge_list(8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])
    with pytest.raises(DegenerateTree):
        prune_and_select(double_star, partition(8, {0, 1}, 4))


# -- budgets -------------------------------------------------------------------

@pytest.mark.parametrize("m,p", [(4, 1), (6, 2), (3, 3)])
def test_split_budgets(m, p):
    s = m + p
    assert split_budgets(s - 1, s - 2, m, p) == (1, 0)
    assert split_budgets(2 * s - 2, 0, m, p) == (1, 0)
    assert split_budgets(2 * s - 1, 1, m, p) == (2, 0)
    for e in range(0, 5 * s):
        a, _ = split_budgets(e, 0, m, p)
        assert s * a - 1 <= e <= s * (a + 1) - 2


# -- the colorer --------------------------------------------------------------------

def test_proof_color_base_only():
    for p, m in [(1, 3), (2, 2), (2, 5)]:
        c, trace = proof_color(star(m + p - 2), ArrowingInstance(1, p, m))
        assert trace.tags() == [BASE]
        assert coloring_is_good(c, ArrowingInstance(1, p, m))


def test_proof_color_construction_minus_leaf_edge():
    g = construct_upper(2, 1, 4)
    inst = ArrowingInstance(2, 1, 4)
    h, _ = g.delete_edge(g.edge_id(0, 1)).delete_vertices([1])
    c, trace = proof_color(h, inst)
    assert coloring_is_good(c, inst)
    assert trace.steps


def test_proof_color_rejects_out_of_range():
    inst = ArrowingInstance(2, 1, 4)
    with pytest.raises(PreconditionError):
        proof_color(construct_upper(2, 1, 4), inst)
    with pytest.raises(PreconditionError):
        proof_color(from_edge_list(4, [(0, 1), (2, 3)]), inst)
    with pytest.raises(PreconditionError):
        proof_color(path(4), ArrowingInstance(2, 1, 3))


def test_case1_cover():
    inst = ArrowingInstance(2, 1, 4)
    c, trace = proof_color(star(6), inst)
    assert trace.tags() == [CASE1_COVER]
    assert c.red == frozenset(range(6))


def test_every_connected_host_up_to_eight_edges():
    inst = ArrowingInstance(2, 1, 4)
    for e in range(1, 9):
        for g in enumerate_graphs(GraphClassQuery(e)):
            c, trace = proof_color(g, inst)
            assert coloring_is_good(c, inst)
            assert trace.count(FALLBACK_SEARCH) == 0


def test_trace_well_formed_and_v2u3_removes_m_plus_p():
    rng = random.Random(17)
    seen = set()
    for n, p, extra in itertools.product((2, 3), (1, 2), (0, 1, 2)):
        m = m_min(n, p) + extra
        inst = ArrowingInstance(n, p, m)
        for _ in range(100):
            g = random_host(rng, n, p, m, n * (m + p) - 2)
            c, trace = proof_color(g, inst)
            assert coloring_is_good(c, inst)
            doc = json.loads(trace.to_json())
            assert len(doc) == len(trace.steps)
            steps = trace.steps
            for i, step in enumerate(steps):
                assert step.tag in ALL_TAGS and step.depth >= 0 and 1 <= step.n <= n
                seen.add(step.tag)
                if step.tag == V2_U3_TERMINAL:
                    assert step.detail["removed_edges"] == m + p
                if step.tag in (V2_U3_TERMINAL, HIGH_DEGREE_RECURSE):
                    assert steps[i + 1].depth == step.depth + 1 and steps[i + 1].n == step.n - 1
                if step.tag in (CASE3_V_BRIDGE, CASE3_U_BRIDGE) and steps[i + 1].tag != FALLBACK_SEARCH:
                    assert step.detail["a1"] + step.detail["a2"] < step.n
    assert {BASE, CASE1_COVER, V2_U3_TERMINAL} <= seen


def test_proof_color_is_deterministic():
    g = random_host(random.Random(3), 2, 2, 6, 14)
    inst = ArrowingInstance(2, 2, 6)
    assert proof_color(g, inst)[0] == proof_color(g, inst)[0]
    assert proof_color(g, inst)[1].to_json() == proof_color(g, inst)[1].to_json()
