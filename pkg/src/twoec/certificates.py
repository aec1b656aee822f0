"""Sparse certificates and spanning-subgraph approximations.

`ist_b_original` is the plain three-phase block certificate; `ist_b` is the
modified construction whose auxiliary-vertex bookkeeping yields the
4-approximation bound; `ist_bc` lifts either to block-and-component
preservation through the condensed graph; `zni_scss`/`zni_c` are the
cycle-contraction SCSS approximation and its component-preserving variant;
`two_ecss_edt` is the edge-disjoint-spanning-trees 2ECSS 2-approximation.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blocks import (
    AuxGraph, canonical_decomposition, components, condense, _aux_graphs,
)
from .digraph import Digraph, GraphError, induced_subgraph, scc
from .dominators import FlowGraph, dominator_tree, flow_bridges, strong_bridges
from .spanning import edge_prioritized_dfs, independent_pair

__all__ = [
    "CertificateEdgeList", "CertificateStats",
    "ist_b_original", "ist_b", "two_ecss_edt", "zni_scss", "ist_bc", "zni_c",
]


@dataclass
class CertificateEdgeList:
    """Multiset of inserted original edges, tagged by construction phase."""

    insertions: list[tuple[int, str]]

    def edge_set(self) -> set[int]:
        return {e for e, _ in self.insertions}

    def edge_array(self) -> np.ndarray:
        return np.asarray(sorted(self.edge_set()), dtype=np.int64)

    def phase_new_counts(self) -> dict[str, int]:
        """Distinct edges first contributed by each phase."""
        seen: set[int] = set()
        counts: dict[str, int] = {}
        for e, tag in self.insertions:
            if e not in seen:
                seen.add(e)
                counts[tag] = counts.get(tag, 0) + 1
        return counts


@dataclass(frozen=True)
class CertificateStats:
    n: int
    n_prime: int          # ordinary vertices in nontrivial second-level SCCs
    bridges: int          # bridges of G(s)
    phase1_new: int
    phase2_new: int
    phase3_new: int

    @property
    def total_distinct(self) -> int:
        return self.phase1_new + self.phase2_new + self.phase3_new


def _require_sc(g: Digraph) -> None:
    if g.n > 1 and scc(g).count != 1:
        raise GraphError("input graph must be strongly connected")


def _tree_children_counts(parent_edge: np.ndarray, g: Digraph) -> np.ndarray:
    counts = np.zeros(g.n, dtype=np.int64)
    for e in parent_edge.tolist():
        if e != -1:
            counts[g.tail(e)] += 1
    return counts


def _ist_pipeline(g: Digraph, s: int, modified: bool):
    _require_sc(g)
    inserts: list[tuple[int, str]] = []
    in_l: set[int] = set()

    def insert(orig: int, tag: str) -> None:
        inserts.append((orig, tag))
        in_l.add(orig)

    n_prime = 0
    if g.n <= 1:
        cert = CertificateEdgeList(inserts)
        return cert, CertificateStats(g.n, 0, 0, 0, 0, 0)

    fg = FlowGraph(g, s)
    dt = dominator_tree(fg)
    bridges = flow_bridges(fg, dt)

    # Phase 1: two independent spanning trees of G(s)
    pair = independent_pair(fg, dt)
    for tree in (pair.blue, pair.red):
        for e in tree.parent_edge.tolist():
            if e != -1:
                insert(int(e), "P1")

    cd = canonical_decomposition(fg, dt, bridges)
    level1 = _aux_graphs(fg, dt, cd)

    for h in level1:
        rev = h.graph.reverse()
        fgr = FlowGraph(rev, h.root)
        dtr = dominator_tree(fgr)

        # Phase 2: independent trees of the reverse flow graph, reusing edges
            # already chosen where valid
        preferred = {int(e) for e in rev.edge_ids.tolist()
                     if int(h.orig_edge[e]) in in_l}
        pair_r = independent_pair(fgr, dtr, preferred=preferred)
        blue_kids = _tree_children_counts(pair_r.blue.parent_edge, rev)
        red_kids = _tree_children_counts(pair_r.red.parent_edge, rev)
        for x in range(rev.n):
            if x == h.root:
                continue
            eb = int(pair_r.blue.parent_edge[x])
            er = int(pair_r.red.parent_edge[x])
            if h.is_ordinary[x] or not modified:
                insert(int(h.orig_edge[eb]), "P2")
                insert(int(h.orig_edge[er]), "P2")
                continue
            # auxiliary vertex: a tree edge into a leaf carries no path and
            # may be dropped; if dropped from both trees keep one exit edge
            blue_leaf = blue_kids[x] == 0
            red_leaf = red_kids[x] == 0
            if not blue_leaf:
                insert(int(h.orig_edge[eb]), "P2")
            if not red_leaf:
                insert(int(h.orig_edge[er]), "P2")
            if blue_leaf and red_leaf:
                insert(min(int(h.orig_edge[eb]), int(h.orig_edge[er])), "P2")

        # Phase 3: strongly connected coverage of every second-level SCC
        brr = flow_bridges(fgr, dtr)
        cdr = canonical_decomposition(fgr, dtr, brr)
        for aux in _aux_graphs(fgr, dtr, cdr):
            work = aux.graph
            if aux.entering_bridge != -1:
                drop = np.flatnonzero(aux.orig_edge == aux.entering_bridge)
                work = work.subgraph_edges(np.setdiff1d(work.edge_ids, drop.astype(np.int64)))
            part = scc(work)
            for cls in part.classes():
                both_ord = [
                    int(v) for v in cls.tolist()
                    if aux.is_ordinary[v] and h.is_ordinary[aux.orig_vertex[v]]
                ]
                o_s = len(both_ord)
                if o_s >= 2:
                    n_prime += o_s
                if modified:
                    if o_s <= 1:
                        continue
                elif len(cls) < 2:
                    continue
                sub = induced_subgraph(work, cls)

                def resolve(e_sub: int) -> int:
                    return int(h.orig_edge[aux.orig_edge[sub.origin[e_sub]]])

                if modified:
                    pref = {int(e) for e in sub.edge_ids.tolist()
                            if resolve(int(e)) in in_l}
                    for e_sub in zni_scss(sub, preferred=pref):
                        insert(resolve(int(e_sub)), "P3")
                else:
                    if both_ord:
                        root = min(
                            both_ord,
                            key=lambda v: int(h.orig_vertex[aux.orig_vertex[v]]),
                        )
                    else:
                        root = int(cls.min())
                    root_local = int(np.flatnonzero(sub.vertex_origin == root)[0])
                    t_out = edge_prioritized_dfs(FlowGraph(sub, root_local), set())
                    t_in = edge_prioritized_dfs(FlowGraph(sub.reverse(), root_local), set())
                    for tree in (t_out, t_in):
                        for e_sub in tree.parent_edge.tolist():
                            if e_sub != -1:
                                insert(resolve(int(e_sub)), "P3")

    cert = CertificateEdgeList(inserts)
    counts = cert.phase_new_counts()
    stats = CertificateStats(
        n=g.n, n_prime=n_prime, bridges=len(bridges),
        phase1_new=counts.get("P1", 0),
        phase2_new=counts.get("P2", 0),
        phase3_new=counts.get("P3", 0),
    )
    return cert, stats


def ist_b_original(g: Digraph, s: int = 0) -> CertificateEdgeList:
    """Plain three-phase sparse certificate for the 2EC blocks."""
    cert, _ = _ist_pipeline(g, s, modified=False)
    return cert


def ist_b(g: Digraph, s: int = 0) -> tuple[CertificateEdgeList, CertificateStats]:
    """Modified sparse certificate; at most 4(n + n') distinct edges."""
    return _ist_pipeline(g, s, modified=True)


def two_ecss_edt(c: Digraph) -> set[int]:
    """2-approximate 2ECSS: union of two edge-disjoint spanning trees of
    C(v) and two of C^R(v)."""
    _require_sc(c)
    if c.n > 1 and strong_bridges(c):
        raise GraphError("input has a strong bridge; 2ECSS needs a 2-edge-connected graph")
    if c.n <= 1:
        return set()
    out: set[int] = set()
    for graph in (c, c.reverse()):
        pair = independent_pair(FlowGraph(graph, 0))
        out |= pair.blue.edge_set() | pair.red.edge_set()
    return out


class _ZniFrame:
    __slots__ = ("pending", "entry_edge", "best_idx", "best_edge", "anchor")

    def __init__(self, vertex: int, entry_edge: int):
        self.pending: list[list[int]] = [[vertex, 0]]   # [vertex, edge position]
        self.entry_edge = entry_edge
        self.best_idx: int | None = None
        self.best_edge: int | None = None
        self.anchor = vertex


def zni_scss(g: Digraph, preferred: set[int] | None = None) -> set[int]:
    """Cycle-contraction SCSS approximation (5/3 bound for the plain run).

    A DFS over supervertices delays contraction until a vertex has no more
    edges to scan and then closes the longest cycle seen, which avoids the
    wasteful two-cycles of eager contraction.  With `preferred`, strongly
    connected pieces of the preferred subgraph are contracted upfront (their
    internal preferred edges join the output for free) and preferred edges
    are scanned first.
    """
    _require_sc(g)
    preferred = preferred or set()
    if g.n <= 1:
        return set()

    from .blocks import _DSU

    dsu = _DSU(g.n)
    output: set[int] = set()

    if preferred:
        pre_edges = np.asarray(sorted(preferred), dtype=np.int64)
        psub = g.subgraph_edges(pre_edges)
        part = scc(psub)
        sizes = part.sizes()
        for e in pre_edges.tolist():
            t, h = g.tail(e), g.head(e)
            if part.comp[t] == part.comp[h] and sizes[part.comp[t]] >= 2:
                dsu.union(t, h)
                output.add(int(e))

    ordered: list[list[int]] = []
    for v in range(g.n):
        ids = g.out_ids(v).tolist()
        ordered.append([e for e in ids if e in preferred] +
                       [e for e in ids if e not in preferred])

    visited = [False] * g.n
    root_pos: dict[int, int] = {}

    start = 0
    stack = [_ZniFrame(start, -1)]
    visited[start] = True
    root_pos[dsu.find(start)] = 0
    # vertices pre-merged with the start belong to frame 0 and must be scanned
    stack[0].pending = [[v, 0] for v in range(g.n) if dsu.find(v) == dsu.find(start)]
    for v, _ in stack[0].pending:
        visited[v] = True

    while stack:
        frame = stack[-1]
        my_rep = dsu.find(frame.anchor)
        edge = None
        while frame.pending:
            v, pos = frame.pending[-1]
            lst = ordered[v]
            while pos < len(lst):
                e = lst[pos]
                pos += 1
                if dsu.find(g.head(e)) != my_rep:
                    edge = e
                    break
            frame.pending[-1][1] = pos
            if edge is not None:
                break
            frame.pending.pop()
        if edge is None:
            if frame.best_edge is not None:
                # contract the deepest cycle available from this supervertex
                i = frame.best_idx
                closing = frame.best_edge
                merged = stack[i:]
                del stack[i:]
                base = merged[0]
                for fr in merged[1:]:
                    output.add(int(fr.entry_edge))
                    root_pos.pop(dsu.find(fr.anchor), None)
                output.add(int(closing))
                root_pos.pop(dsu.find(base.anchor), None)
                pending = []
                best_idx = None
                best_edge = None
                for fr in merged:
                    pending.extend(fr.pending)
                    if fr.best_idx is not None and fr.best_idx < i:
                        if best_idx is None or fr.best_idx < best_idx:
                            best_idx, best_edge = fr.best_idx, fr.best_edge
                    dsu.union(base.anchor, fr.anchor)
                base.pending = pending
                base.best_idx, base.best_edge = best_idx, best_edge
                root_pos[dsu.find(base.anchor)] = i
                stack.append(base)
            else:
                if len(stack) != 1:
                    raise GraphError("internal error: stuck supervertex in a strongly connected graph")
                stack.pop()
        else:
            ry = dsu.find(g.head(edge))
            if ry in root_pos:
                idx = root_pos[ry]
                if frame.best_idx is None or idx < frame.best_idx:
                    frame.best_idx = idx
                    frame.best_edge = edge
            else:
                y = g.head(edge)
                if visited[y]:
                    raise GraphError("internal error: revisiting a finished supervertex")
                nf = _ZniFrame(y, edge)
                # vertices pre-merged with y join the new frame
                if preferred:
                    grp = [v for v in range(g.n) if not visited[v] and dsu.find(v) == ry]
                else:
                    grp = [y]
                nf.pending = [[v, 0] for v in grp]
                for v in grp:
                    visited[v] = True
                root_pos[ry] = len(stack)
                stack.append(nf)

    if any(not v for v in visited):
        raise GraphError("internal error: unvisited vertices after contraction")
    return output


def _reduce_condensed(cond_graph: Digraph, cap: int) -> Digraph:
    """Drop loops and keep at most `cap` parallel edges per ordered pair."""
    seen: dict[tuple[int, int], int] = {}
    keep: list[int] = []
    for e in cond_graph.edge_ids.tolist():
        t, h = cond_graph.tail(e), cond_graph.head(e)
        if t == h:
            continue
        cnt = seen.get((t, h), 0)
        if cnt >= cap:
            continue
        seen[(t, h)] = cnt + 1
        keep.append(e)
    keep_arr = np.asarray(keep, dtype=np.int64)
    return Digraph(
        cond_graph.n,
        cond_graph.tails[keep_arr] if len(keep_arr) else np.empty(0, dtype=np.int64),
        cond_graph.heads[keep_arr] if len(keep_arr) else np.empty(0, dtype=np.int64),
        multi=True,
        origin=(cond_graph.origin[keep_arr] if len(keep_arr) else np.empty(0, dtype=np.int64)),
    )


def _per_component_two_ecss(g: Digraph, comp) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {}
    for cid, cls in enumerate(comp.classes()):
        if len(cls) < 2:
            continue
        sub = induced_subgraph(g, cls)
        out[cid] = {int(sub.origin[e]) for e in two_ecss_edt(sub)}
    return out


def ist_bc(g: Digraph) -> CertificateEdgeList:
    """Block-and-component-preserving certificate via the condensed graph."""
    _require_sc(g)
    comp = components(g)
    per_comp = _per_component_two_ecss(g, comp)
    inserts: list[tuple[int, str]] = []
    for edges in per_comp.values():
        for e in sorted(edges):
            inserts.append((e, "C"))
    cond = condense(g, comp)
    reduced = _reduce_condensed(cond.graph, cap=2)
    if reduced.n > 1:
        cert, _ = ist_b(reduced, 0)
        for e_local, tag in cert.insertions:
            inserts.append((int(reduced.origin[e_local]), tag))
    return CertificateEdgeList(inserts)


def zni_c(g: Digraph) -> set[int]:
    """2-approximate component-preserving subgraph: per-component 2ECSS plus
    an SCSS of the simple condensed graph."""
    _require_sc(g)
    comp = components(g)
    per_comp = _per_component_two_ecss(g, comp)
    out: set[int] = set()
    for edges in per_comp.values():
        out |= edges
    cond = condense(g, comp)
    reduced = _reduce_condensed(cond.graph, cap=1)
    if reduced.n > 1:
        for e_local in zni_scss(reduced):
            out.add(int(reduced.origin[e_local]))
    return out
