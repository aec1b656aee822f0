"""Dominator trees of flow graphs, flow-graph bridges, and strong bridges."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .digraph import Digraph, GraphError, scc

__all__ = ["FlowGraph", "DominatorTree", "dominator_tree", "flow_bridges", "strong_bridges"]


@dataclass(frozen=True)
class FlowGraph:
    """A digraph with a distinguished start vertex all vertices can be reached from."""

    graph: Digraph
    start: int


@dataclass(frozen=True)
class DominatorTree:
    """Immediate-dominator parents plus orderings for ancestor queries.

    `idom[v]` is the parent of v in the dominator tree (-1 at the start
    vertex).  `pre`/`post` are Euler intervals of the dominator tree itself:
    u is an ancestor of w iff pre[u] <= pre[w] < post[u].  `dfs_pre` is the
    preorder number from the graph DFS that built the tree (dominators of w
    always have smaller dfs_pre than w).
    """

    idom: np.ndarray
    pre: np.ndarray
    post: np.ndarray
    dfs_pre: np.ndarray
    dfs_order: np.ndarray

    def is_ancestor(self, u: int, w: int) -> bool:
        return self.pre[u] <= self.pre[w] < self.post[u]

    def dominators(self, w: int) -> list[int]:
        """Ancestors of w in the dominator tree, inclusive of w."""
        out = [w]
        while self.idom[w] != -1:
            w = int(self.idom[w])
            out.append(w)
        return out[::-1]

    def children(self) -> list[list[int]]:
        ch: list[list[int]] = [[] for _ in range(len(self.idom))]
        for v, p in enumerate(self.idom.tolist()):
            if p != -1:
                ch[p].append(v)
        return ch


def _dfs(g: Digraph, s: int):
    """Iterative DFS exploring out-edges in edge-id order."""
    n = g.n
    pre = [-1] * n
    parent = [-1] * n
    order = [s]
    pre[s] = 0
    out_start = g._out_start.tolist()
    out_eids = g._out_eids.tolist()
    heads = g.heads
    stack = [(s, out_start[s])]
    cnt = 1
    while stack:
        v, pos = stack[-1]
        if pos < out_start[v + 1]:
            stack[-1] = (v, pos + 1)
            w = int(heads[out_eids[pos]])
            if pre[w] == -1:
                pre[w] = cnt
                cnt += 1
                parent[w] = v
                order.append(w)
                stack.append((w, out_start[w]))
        else:
            stack.pop()
    return pre, parent, order


def dominator_tree(fg: FlowGraph) -> DominatorTree:
    """Dominator tree via semidominators with path compression (semi-NCA)."""
    g, s = fg.graph, fg.start
    n = g.n
    pre, parent, order = _dfs(g, s)
    if len(order) != n:
        raise GraphError("flow graph has a vertex unreachable from the start")

    semi = pre[:]                      # semidominator preorder numbers
    label = list(range(n))             # min-semi vertex on compressed paths
    ancestor = [-1] * n
    in_start = g._in_start.tolist()
    in_eids = g._in_eids.tolist()
    tails = g.tails

    def evaluate(v: int) -> int:
        if ancestor[v] == -1:
            return v
        # collect the path up to (excluding) the link-forest root
        chain = []
        r = v
        while ancestor[r] != -1:
            chain.append(r)
            r = ancestor[r]
        # propagate min labels from nearest-to-root downwards
        for i in range(len(chain) - 2, -1, -1):
            x = chain[i]
            up = chain[i + 1]
            if semi[label[up]] < semi[label[x]]:
                label[x] = label[up]
            ancestor[x] = r
        return label[v]

    for w in reversed(order[1:]):
        pw = pre[w]
        best = semi[w]
        for pos in range(in_start[w], in_start[w + 1]):
            u = int(tails[in_eids[pos]])
            if pre[u] <= pw:
                cand = pre[u]
            else:
                cand = semi[evaluate(u)]
            if cand < best:
                best = cand
        semi[w] = best
        ancestor[w] = parent[w]

    # semi-NCA: ascend from the DFS parent to the semidominator level
    idom = [-1] * n
    for w in order[1:]:
        v = parent[w]
        while pre[v] > semi[w]:
            v = idom[v]
        idom[w] = v

    idom_arr = np.asarray(idom, dtype=np.int64)

    # Euler intervals of the dominator tree (children in dfs-preorder)
    children: list[list[int]] = [[] for _ in range(n)]
    for w in order[1:]:
        children[idom[w]].append(w)
    tin = [0] * n
    tout = [0] * n
    clock = 0
    stack2: list[tuple[int, int]] = [(s, 0)]
    while stack2:
        v, pos = stack2[-1]
        if pos == 0:
            tin[v] = clock
            clock += 1
        if pos < len(children[v]):
            stack2[-1] = (v, pos + 1)
            stack2.append((children[v][pos], 0))
        else:
            tout[v] = clock
            stack2.pop()

    return DominatorTree(
        idom=idom_arr,
        pre=np.asarray(tin, dtype=np.int64),
        post=np.asarray(tout, dtype=np.int64),
        dfs_pre=np.asarray(pre, dtype=np.int64),
        dfs_order=np.asarray(order, dtype=np.int64),
    )


def flow_bridges(fg: FlowGraph, dt: DominatorTree) -> set[int]:
    """Edge ids of the bridges of the flow graph.

    (u, w) is a bridge iff it is the single edge entering w from outside
    the dominator subtree of w; its tail is then necessarily idom(w).
    """
    g = fg.graph
    tin = dt.pre
    tout = dt.post
    tails = g.tails
    in_start = g._in_start.tolist()
    in_eids = g._in_eids.tolist()
    bridges: set[int] = set()
    for w in range(g.n):
        if w == fg.start:
            continue
        lo, hi = int(tin[w]), int(tout[w])
        outside = -1
        count = 0
        for pos in range(in_start[w], in_start[w + 1]):
            e = in_eids[pos]
            t = int(tails[e])
            if not (lo <= tin[t] < hi):
                count += 1
                if count > 1:
                    break
                outside = e
        if count == 1:
            bridges.add(int(outside))
    return bridges


def strong_bridges(g: Digraph, s: int = 0) -> set[int]:
    """Edges whose removal disconnects the strongly connected digraph `g`.

    Union of the bridges of G(s) and of G^R(s); edge ids are shared between
    a graph and its reverse, so no remapping is needed.
    """
    if g.n > 1 and scc(g).count != 1:
        raise GraphError("strong bridges require a strongly connected graph")
    if g.n <= 1:
        return set()
    fg = FlowGraph(g, s)
    fwd = flow_bridges(fg, dominator_tree(fg))
    rg = FlowGraph(g.reverse(), s)
    bwd = flow_bridges(rg, dominator_tree(rg))
    return fwd | bwd
