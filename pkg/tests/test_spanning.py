import random

from twoec.digraph import build, delete_edge_view, scc
from twoec.dominators import FlowGraph, dominator_tree, flow_bridges
from twoec.fixtures import g1, g2, g4, g5, random_strongly_connected
from twoec.spanning import (
    SpanningTree, edge_disjoint_pair, edge_prioritized_dfs, independent_pair,
    verify_independent,
)


def test_edge_disjoint_pair_g2():
    g = g2()
    fg = FlowGraph(g, 0)
    pair = edge_disjoint_pair(fg)
    assert pair.kind == "edge-disjoint"
    assert pair.blue.edge_set() == pair.red.edge_set() == {0, 1}
    assert pair.common_edges() == flow_bridges(fg, dominator_tree(fg))


def test_edge_disjoint_pair_g1_disjoint():
    fg = FlowGraph(g1(), 0)
    pair = edge_disjoint_pair(fg)
    assert pair.blue.edge_set() & pair.red.edge_set() == set()


def test_edge_disjoint_pair_g4_shares_bridges():
    fg = FlowGraph(g4(), 0)
    pair = edge_disjoint_pair(fg)
    assert pair.common_edges() == flow_bridges(fg, dominator_tree(fg))
    assert len(pair.common_edges()) == 5


def test_independent_pair_path_graph():
    g = build(3, [(0, 1), (1, 2)])
    fg = FlowGraph(g, 0)
    dt = dominator_tree(fg)
    pair = independent_pair(fg, dt)
    assert pair.blue.edge_set() == pair.red.edge_set() == {0, 1}
    assert verify_independent(fg, pair, dt)


def test_independent_pair_g1():
    g = g1()
    fg = FlowGraph(g, 0)
    dt = dominator_tree(fg)
    pair = independent_pair(fg, dt)
    assert verify_independent(fg, pair, dt)
    for v in (1, 2):
        shared = set(pair.blue.path_vertices(g, v)) & set(pair.red.path_vertices(g, v))
        assert shared == {0, v}


def test_independent_pair_two_route():
    # s -> a, s -> b, a -> b, b -> a: paths to b intersect in {s, b} only
    g = build(3, [(0, 1), (0, 2), (1, 2), (2, 1)])
    fg = FlowGraph(g, 0)
    dt = dominator_tree(fg)
    pair = independent_pair(fg, dt)
    assert verify_independent(fg, pair, dt)
    shared = set(pair.blue.path_vertices(g, 2)) & set(pair.red.path_vertices(g, 2))
    assert shared == {0, 2}


def test_verify_rejects_equal_trees_on_g1():
    g = g1()
    fg = FlowGraph(g, 0)
    dt = dominator_tree(fg)
    tree = edge_prioritized_dfs(fg, set())
    fake = independent_pair(fg, dt)
    from twoec.spanning import TreePair
    assert not verify_independent(fg, TreePair(tree, tree, "independent"), dt)


def test_independent_random_graphs():
    rng = random.Random(17)
    for _ in range(400):
        g = random_strongly_connected(rng, rng.randint(2, 50))
        fg = FlowGraph(g, 0)
        dt = dominator_tree(fg)
        pair = independent_pair(fg, dt)
        assert verify_independent(fg, pair, dt)
        bridges = flow_bridges(fg, dt)
        assert pair.common_edges() == bridges
        distinct = len(pair.blue.edge_set() | pair.red.edge_set())
        assert distinct == 2 * (g.n - 1) - len(bridges)


def test_union_tolerates_nonbridge_deletion():
    rng = random.Random(19)
    for _ in range(60):
        g = random_strongly_connected(rng, rng.randint(2, 12))
        fg = FlowGraph(g, 0)
        dt = dominator_tree(fg)
        pair = independent_pair(fg, dt)
        union = sorted(pair.blue.edge_set() | pair.red.edge_set())
        bridges = flow_bridges(fg, dt)
        sub = g.subgraph_edges(union)
        for e in union:
            if e in bridges:
                continue
            rest = delete_edge_view(sub, e)
            seen = {0}
            stack = [0]
            while stack:
                v = stack.pop()
                for e2 in rest.out_ids(v).tolist():
                    h = rest.head(e2)
                    if h not in seen:
                        seen.add(h)
                        stack.append(h)
            assert len(seen) == g.n


def test_determinism():
    rng = random.Random(23)
    for _ in range(20):
        g = random_strongly_connected(rng, rng.randint(2, 15))
        fg = FlowGraph(g, 0)
        a = independent_pair(fg)
        b = independent_pair(fg)
        assert a.blue.parent_edge.tolist() == b.blue.parent_edge.tolist()
        assert a.red.parent_edge.tolist() == b.red.parent_edge.tolist()


def test_edge_prioritized_dfs_plain():
    g = g1()
    tree = edge_prioritized_dfs(FlowGraph(g, 0), set())
    assert tree.parent_edge[0] == -1
    assert len(tree.edge_set()) == 2


def test_edge_prioritized_dfs_prefers_cycle():
    g = g1()
    # a directed 3-cycle inside G1: (0,1), (1,2), (2,0) are ids 0, 2, 5
    cycle = {0, 2, 5}
    tree = edge_prioritized_dfs(FlowGraph(g, 0), cycle)
    assert tree.edge_set() <= cycle


def test_edge_prioritized_dfs_prefers_bridge_cycle_g4():
    g = g4()
    from twoec.dominators import strong_bridges
    pref = strong_bridges(g)
    tree = edge_prioritized_dfs(FlowGraph(g, 0), pref)
    assert tree.edge_set() <= pref
