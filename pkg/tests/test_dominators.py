import random

import pytest

from twoec.digraph import GraphError, build, delete_edge_view, scc
from twoec.dominators import FlowGraph, dominator_tree, flow_bridges, strong_bridges
from twoec.fixtures import g1, g2, g4, g5, random_strongly_connected


def _removal_dominates(g, s, u, w):
    """Oracle: u dominates w iff removing u's edges disconnects s from w."""
    if u == w or u == s:
        return True
    keep = [e for e in g.edge_ids.tolist() if g.tail(e) != u and g.head(e) != u]
    sub = g.subgraph_edges(keep)
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        for e in sub.out_ids(v).tolist():
            h = sub.head(e)
            if h not in seen:
                seen.add(h)
                stack.append(h)
    return w not in seen


def test_dominator_tree_path():
    g = build(3, [(0, 1), (1, 2)])
    dt = dominator_tree(FlowGraph(g, 0))
    assert dt.idom.tolist() == [-1, 0, 1]


def test_dominator_tree_diamondish():
    g = build(3, [(0, 1), (1, 2), (2, 0), (0, 2)])
    dt = dominator_tree(FlowGraph(g, 0))
    assert dt.idom.tolist() == [-1, 0, 0]


def test_dominator_chain_g4():
    dt = dominator_tree(FlowGraph(g4(), 0))
    assert dt.idom.tolist() == [-1, 0, 1, 2, 3, 4]


def test_dominator_tree_unreachable_raises():
    g = build(3, [(0, 1)])
    with pytest.raises(GraphError):
        dominator_tree(FlowGraph(g, 0))


def test_dominators_match_removal_oracle():
    rng = random.Random(2)
    for _ in range(120):
        g = random_strongly_connected(rng, rng.randint(2, 10))
        dt = dominator_tree(FlowGraph(g, 0))
        for w in range(g.n):
            doms = set(dt.dominators(w))
            for u in range(g.n):
                assert (u in doms) == _removal_dominates(g, 0, u, w)


def test_flow_bridges_path_and_g1():
    g = build(3, [(0, 1), (1, 2)])
    fg = FlowGraph(g, 0)
    assert flow_bridges(fg, dominator_tree(fg)) == {0, 1}
    fg1 = FlowGraph(g1(), 0)
    assert flow_bridges(fg1, dominator_tree(fg1)) == set()


def test_flow_bridges_g4():
    g = g4()
    fg = FlowGraph(g, 0)
    found = flow_bridges(fg, dominator_tree(fg))
    pairs = sorted((g.tail(e), g.head(e)) for e in found)
    assert pairs == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]


def test_flow_bridges_match_removal_oracle():
    rng = random.Random(3)
    for _ in range(150):
        g = random_strongly_connected(rng, rng.randint(2, 10))
        fg = FlowGraph(g, 0)
        found = flow_bridges(fg, dominator_tree(fg))
        for e in g.edge_ids.tolist():
            sub = delete_edge_view(g, e)
            seen = {0}
            stack = [0]
            while stack:
                v = stack.pop()
                for e2 in sub.out_ids(v).tolist():
                    h = sub.head(e2)
                    if h not in seen:
                        seen.add(h)
                        stack.append(h)
            assert (len(seen) != g.n) == (e in found)


def test_strong_bridges_fixtures():
    assert strong_bridges(g2()) == {0, 1, 2}
    assert strong_bridges(g1()) == set()
    g = g4()
    pairs = sorted((g.tail(e), g.head(e)) for e in strong_bridges(g))
    assert pairs == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]
    assert len(strong_bridges(g5())) == 8


def test_strong_bridges_requires_strongly_connected():
    with pytest.raises(GraphError):
        strong_bridges(build(3, [(0, 1), (1, 2)]))


def test_strong_bridges_match_removal_oracle():
    rng = random.Random(4)
    for _ in range(200):
        g = random_strongly_connected(rng, rng.randint(2, 12))
        found = strong_bridges(g)
        truth = {e for e in g.edge_ids.tolist()
                 if scc(delete_edge_view(g, e)).count > 1}
        assert found == truth


def test_flow_bridges_subset_of_strong_bridges():
    rng = random.Random(5)
    for _ in range(60):
        g = random_strongly_connected(rng, rng.randint(2, 10))
        fg = FlowGraph(g, 0)
        assert flow_bridges(fg, dominator_tree(fg)) <= strong_bridges(g)
