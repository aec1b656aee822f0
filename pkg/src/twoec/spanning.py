"""Two maximally edge-disjoint / independent spanning trees of a flow graph.

Independence (the two root-to-v paths share only the dominators of v) is
built region by region: for each dominator-tree node u, the graph induces a
"local" flow graph on u and its dominator children, obtained by contracting
every child subtree to its root.  In any spanning-tree pair the segment of
the tree path between idom(v) and v projects onto a local tree path, so the
global pair is independent iff inside every local graph the two tree paths
of each child are internally disjoint.  The local solver realizes that with
an ordering of the children (built back to front) in which one tree only
uses entering arcs from earlier vertices and the other only arcs from later
vertices or spare root arcs; single-entry children are exactly the flow
bridges and share their forced arc.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .digraph import Digraph, GraphError
from .dominators import DominatorTree, FlowGraph, dominator_tree

__all__ = [
    "SpanningTree", "TreePair",
    "edge_disjoint_pair", "independent_pair", "verify_independent",
    "edge_prioritized_dfs",
]


@dataclass(frozen=True)
class SpanningTree:
    """Per-vertex entering edge id (-1 at the root)."""

    parent_edge: np.ndarray
    root: int

    def edge_set(self) -> set[int]:
        return {int(e) for e in self.parent_edge.tolist() if e != -1}

    def path_vertices(self, g: Digraph, v: int) -> list[int]:
        """Vertices on the tree path from the root to v, root first."""
        out = [v]
        guard = 0
        while v != self.root:
            e = int(self.parent_edge[v])
            if e == -1:
                raise GraphError(f"vertex {v} is not attached to the tree")
            v = g.tail(e)
            out.append(v)
            guard += 1
            if guard > len(self.parent_edge):
                raise GraphError("parent pointers contain a cycle")
        return out[::-1]


@dataclass(frozen=True)
class TreePair:
    blue: SpanningTree
    red: SpanningTree
    kind: str  # "edge-disjoint" | "independent"

    def common_edges(self) -> set[int]:
        return self.blue.edge_set() & self.red.edge_set()


class _LocalGraph:
    """Contracted flow graph on a dominator-tree node and its children."""

    __slots__ = ("root", "children", "in_arcs", "out_adj", "root_targets")

    def __init__(self, root: int, children: list[int]):
        self.root = root
        self.children = children
        self.in_arcs: dict[int, list[tuple[int, int]]] = {c: [] for c in children}
        self.out_adj: dict[int, set[int]] = {c: set() for c in children}
        self.root_targets: set[int] = set()

    def add_arc(self, rep: int, head: int, eid: int) -> None:
        self.in_arcs[head].append((rep, eid))
        if rep == self.root:
            self.root_targets.add(head)
        else:
            self.out_adj[rep].add(head)


def _reaches_all(local: _LocalGraph, members: set[int]) -> bool:
    """True if the local root reaches every member using arcs inside `members`."""
    if not members:
        return True
    seen: set[int] = set()
    frontier = [c for c in local.root_targets if c in members]
    seen.update(frontier)
    while frontier:
        nxt = []
        for c in frontier:
            for t in local.out_adj[c]:
                if t in members and t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return len(seen) == len(members)


def _front_order(local: _LocalGraph) -> list[int] | None:
    """Second fast path: grow the order front to back as a graph search.

    Any search order gives every vertex an earlier entering arc; the later
    entering arc required by the red tree is kept available by placing a
    vertex while one of its in-tails is still unplaced, preferring urgent
    vertices (a single unplaced tail left).  Validated before use.
    """
    import heapq

    root = local.root
    children = local.children
    tails = {c: {t for t, _ in local.in_arcs[c] if t != root}
             for c in children}
    exempt = {c for c in children
              if len(local.in_arcs[c]) == 1
              or any(t == root for t, _ in local.in_arcs[c])}
    untc = {c: len(tails[c]) for c in children}
    placed: dict[int, int] = {}
    in_frontier: set[int] = set()
    heap: list[tuple[int, int]] = []

    def priority(v: int) -> int:
        if v in exempt:
            return 1
        return 0 if untc[v] <= 1 else 1

    def enqueue(v: int) -> None:
        heapq.heappush(heap, (priority(v), v))

    for v in sorted(local.root_targets):
        in_frontier.add(v)
        enqueue(v)
    order: list[int] = []
    while heap:
        p, v = heapq.heappop(heap)
        if v in placed or p != priority(v):
            continue
        placed[v] = len(order)
        order.append(v)
        for z in sorted(local.out_adj[v]):
            if z in placed:
                continue
            if z not in in_frontier:
                in_frontier.add(z)
                enqueue(z)
            untc[z] -= 1
            if untc[z] == 1:
                enqueue(z)              # became urgent
    if len(order) != len(children):
        return None
    if not _order_valid(local, placed):
        return None
    return order[::-1]


def _extraction_order(local: _LocalGraph, backtrack_limit: int = 40) -> list[int]:
    """Back-to-front extraction order of the children of one local graph.

    Extracts batches of candidates (children enterable from the root, from
    an already extracted vertex, or through their single entering arc).  A
    batch S is safe when the surviving children remain reachable from the
    root without S and every member of S keeps an entering arc from the
    survivors, which one BFS verifies; the batch shrinks until safe, ending
    with sink candidates (no live out-arcs), which are always safe.
    """
    root = local.root
    remaining = set(local.children)
    candidates = {c for c in local.children
                  if len(local.in_arcs[c]) == 1
                  or any(t == root for t, _ in local.in_arcs[c])}
    order: list[int] = []

    def reach(surviving: set[int]) -> set[int]:
        seen = {c for c in local.root_targets if c in surviving}
        frontier = list(seen)
        while frontier:
            nxt = []
            for c in frontier:
                for t in local.out_adj[c]:
                    if t in surviving and t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        return seen

    while remaining:
        batch = sorted(candidates & remaining)
        while batch:
            surviving = remaining.difference(batch)
            pruned = [
                s for s in batch
                if any(t == root or t in surviving for t, _ in local.in_arcs[s])
            ]
            if len(pruned) != len(batch):
                batch = pruned
                continue
            reached = reach(surviving)
            if len(reached) == len(surviving):
                break
            lost = surviving - reached
            pruned = [s for s in batch if not (local.out_adj[s] & lost)]
            batch = pruned if len(pruned) != len(batch) else batch[: len(batch) // 2]
        if not batch:
            ready = sorted(candidates & remaining)
            for c in ready:                   # sinks are always safe
                if not (local.out_adj[c] & remaining) and any(
                        t == root or (t in remaining and t != c)
                        for t, _ in local.in_arcs[c]):
                    batch = [c]
                    break
            else:
                for c in ready:
                    surviving = remaining - {c}
                    if not any(t == root or t in surviving
                               for t, _ in local.in_arcs[c]):
                        continue
                    if len(reach(surviving)) == len(surviving):
                        batch = [c]
                        break
        if not batch:
            seq = _backtrack_order(local, remaining, order, backtrack_limit)
            if seq is None:
                raise GraphError(
                    f"no valid child ordering in local graph of {root}")
            order.extend(seq)
            return order
        for s in batch:
            remaining.discard(s)
            order.append(s)
            for z in local.out_adj[s]:
                if z in remaining:       # arcs from extracted vertices become
                    candidates.add(z)    # later-entry options
    return order


def _backtrack_order(local: _LocalGraph, remaining: set[int],
                     done: list[int], limit: int) -> list[int] | None:
    """Exhaustive fallback over extraction choices for small local graphs."""
    if len(remaining) > limit:
        return None
    root = local.root
    extracted = set(done)
    failed: set[frozenset[int]] = set()

    def solve(rem: frozenset[int]) -> list[int] | None:
        if not rem:
            return []
        if rem in failed:
            return None
        for v in sorted(rem):
            arcs = local.in_arcs[v]
            ok = (len(arcs) == 1
                  or any(t == root for t, _ in arcs)
                  or any(t != root and t not in rem for t, _ in arcs))
            if not ok:
                continue
            rest = rem - {v}
            if not _reaches_all(local, set(rest)):
                continue
            tail = solve(rest)
            if tail is not None:
                return [v] + tail
        failed.add(rem)
        return None

    return solve(frozenset(remaining))


def _preorder_order(local: _LocalGraph) -> list[int] | None:
    """Fast path: DFS preorder of the real local graph when it is valid.

    In a DFS every entering arc comes from an ancestor (earlier) or from a
    back/cross arc (later), so preorder is a valid order iff each non-exempt
    child keeps a later entering arc, which one O(m) pass verifies.
    """
    pos: dict[int, int] = {}
    order: list[int] = []
    roots = sorted(local.root_targets)
    adj = {c: sorted(local.out_adj[c]) for c in local.children}
    stack: list[tuple[int, int]] = []
    ri = 0
    while True:
        if not stack:
            while ri < len(roots) and roots[ri] in pos:
                ri += 1
            if ri == len(roots):
                break
            v = roots[ri]
            pos[v] = len(order)
            order.append(v)
            stack.append((v, 0))
            continue
        v, i = stack[-1]
        nxt = adj[v]
        while i < len(nxt) and nxt[i] in pos:
            i += 1
        if i == len(nxt):
            stack.pop()
        else:
            stack[-1] = (v, i + 1)
            w = nxt[i]
            pos[w] = len(order)
            order.append(w)
            stack.append((w, 0))
    if len(order) != len(local.children) or not _order_valid(local, pos):
        return None
    return order[::-1]          # extraction order runs back to front


def _order_valid(local: _LocalGraph, pos: dict[int, int]) -> bool:
    root = local.root
    for v in local.children:
        arcs = local.in_arcs[v]
        if len(arcs) == 1:
            continue
        has_root = any(t == root for t, _ in arcs)
        earlier = any(t != root and pos[t] < pos[v] for t, _ in arcs)
        later = any(t != root and pos[t] > pos[v] for t, _ in arcs)
        if not (earlier or has_root):
            return False
        if not (later or has_root):
            return False
    return True


def _solve_local(local: _LocalGraph, preferred: set[int]) -> dict[int, tuple[int, int]]:
    """Choose (blue, red) entering edge ids per child of one local graph."""
    root = local.root
    if not local.children:
        return {}

    def pick(arcs: list[tuple[int, int]], exclude: int = -1) -> int:
        best = -1
        best_key = None
        for _, eid in arcs:
            if eid == exclude:
                continue
            key = (0 if eid in preferred else 1, eid)
            if best_key is None or key < best_key:
                best_key = key
                best = eid
        return best

    seq = _preorder_order(local)
    if seq is None:
        seq = _front_order(local)
    if seq is None:
        seq = _extraction_order(local)
    parents: dict[int, tuple[int, int]] = {}
    remaining = set(local.children)
    for v in seq:
        remaining.discard(v)
        arcs = local.in_arcs[v]
        if len(arcs) == 1:
            e = arcs[0][1]
            parents[v] = (e, e)
            continue
        later = [a for a in arcs if a[0] != root and a[0] not in remaining]
        root_arcs = [a for a in arcs if a[0] == root]
        earlier = [a for a in arcs if a[0] in remaining]
        if later:
            e_red = pick(later)
            e_blue = pick(earlier + root_arcs)
        else:
            e_red = pick(root_arcs)
            e_blue = pick(earlier + root_arcs, exclude=e_red)
        if e_red < 0 or e_blue < 0:
            raise GraphError("internal error: no valid parent arcs in local graph")
        parents[v] = (e_blue, e_red)
    return parents


def _ancestor_at_depth(up: list[np.ndarray], depth: np.ndarray, v: int, d: int) -> int:
    delta = int(depth[v]) - d
    k = 0
    while delta:
        if delta & 1:
            v = int(up[k][v])
        delta >>= 1
        k += 1
    return v


def independent_pair(
    fg: FlowGraph,
    dt: DominatorTree | None = None,
    preferred: set[int] | None = None,
) -> TreePair:
    """Two independent spanning trees of the flow graph.

    The trees share exactly the bridges of the flow graph, so they are also
    maximally edge-disjoint.  `preferred` biases arc choices towards the
    given edge ids where several are valid.
    """
    g, s = fg.graph, fg.start
    n = g.n
    if dt is None:
        dt = dominator_tree(fg)
    preferred = preferred or set()

    idom = dt.idom
    depth = np.zeros(n, dtype=np.int64)
    for v in dt.dfs_order.tolist():
        if v != s:
            depth[v] = depth[idom[v]] + 1

    levels = max(1, int(depth.max()).bit_length()) if n else 1
    up = [idom.copy()]
    up[0][s] = s
    for _ in range(1, levels + 1):
        up.append(up[-1][up[-1]])

    children = dt.children()
    locals_: dict[int, _LocalGraph] = {
        u: _LocalGraph(u, ch) for u, ch in enumerate(children) if ch
    }

    tin, tout = dt.pre, dt.post
    for e in g.edge_ids.tolist():
        t = int(g.tails[e])
        h = int(g.heads[e])
        if h == s or t == h:
            continue
        u = int(idom[h])
        if t == u:
            rep = u
        else:
            if not (tin[u] <= tin[t] < tout[u]):
                raise GraphError(
                    "edge tail outside the dominator subtree of the head's idom")
            rep = _ancestor_at_depth(up, depth, t, int(depth[u]) + 1)
        if rep == h:
            continue
        locals_[u].add_arc(rep, h, e)

    parent_b = np.full(n, -1, dtype=np.int64)
    parent_r = np.full(n, -1, dtype=np.int64)
    for u in sorted(locals_):
        for v, (eb, er) in _solve_local(locals_[u], preferred).items():
            parent_b[v] = eb
            parent_r[v] = er

    return TreePair(
        blue=SpanningTree(parent_b, s),
        red=SpanningTree(parent_r, s),
        kind="independent",
    )


def edge_disjoint_pair(fg: FlowGraph) -> TreePair:
    """Two maximally edge-disjoint spanning trees (common edges = bridges).

    Independent spanning trees are maximally edge-disjoint, so this reuses
    the independent construction and retags the result.
    """
    pair = independent_pair(fg)
    return TreePair(blue=pair.blue, red=pair.red, kind="edge-disjoint")


def verify_independent(fg: FlowGraph, pair: TreePair, dt: DominatorTree | None = None) -> bool:
    """Check the normative contract: the two root-to-v paths of every vertex
    intersect exactly in the dominator set of v."""
    g, s = fg.graph, fg.start
    if dt is None:
        dt = dominator_tree(fg)
    for v in range(g.n):
        if v == s:
            continue
        try:
            pb = pair.blue.path_vertices(g, v)
            pr = pair.red.path_vertices(g, v)
        except GraphError:
            return False
        if set(pb) & set(pr) != set(dt.dominators(v)):
            return False
    return True


def edge_prioritized_dfs(fg: FlowGraph, preferred: set[int]) -> SpanningTree:
    """DFS spanning tree exploring preferred out-edges before the rest.

    Within each priority class edges are taken in id order, so the result
    is deterministic.
    """
    g, s = fg.graph, fg.start
    parent = np.full(g.n, -1, dtype=np.int64)
    seen = [False] * g.n
    seen[s] = True

    def ordered(v: int) -> list[int]:
        ids = g.out_ids(v).tolist()
        return [e for e in ids if e in preferred] + [e for e in ids if e not in preferred]

    stack: list[tuple[int, list[int], int]] = [(s, ordered(s), 0)]
    count = 1
    while stack:
        v, edges, pos = stack[-1]
        if pos < len(edges):
            stack[-1] = (v, edges, pos + 1)
            e = edges[pos]
            w = g.head(e)
            if not seen[w]:
                seen[w] = True
                parent[w] = e
                count += 1
                stack.append((w, ordered(w), 0))
        else:
            stack.pop()
    if count != g.n:
        raise GraphError("flow graph has a vertex unreachable from the start")
    return SpanningTree(parent, s)
