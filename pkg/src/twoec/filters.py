"""Edge-deletion heuristics for 2EC-B and 2EC-B-C, with trivial-edge skipping.

The three strategies process each candidate edge once against the evolving
subgraph: `test2edp` deletes an edge when two edge-disjoint replacement
paths exist, `test2ecb` when the deletion keeps the 2EC blocks (and strong
connectivity), and `hybrid` dispatches between them on block membership.
By default they run on the sparse certificate of the input rather than the
input itself.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .blocks import blocks, components, condense, first_level_aux_graphs, _reverse_aux_graphs
from .certificates import _per_component_two_ecss, _reduce_condensed, ist_b
from .digraph import Digraph, GraphError, Partition, induced_subgraph, scc
from .dominators import FlowGraph

__all__ = [
    "FilterConfig", "FilterReport",
    "two_edge_disjoint", "test2edp_filter", "test2ecb_filter", "hybrid_filter",
    "is_trivial_edge", "aux_variant_filter", "filter_bc",
]


@dataclass(frozen=True)
class FilterConfig:
    mode: str = "B"                  # B | BC
    strategy: str = "test2edp"       # test2edp | test2ecb | hybrid
    edge_order: str = "input"        # input | reverse | random
    seed: int = 0
    trivial_skip: bool = True
    on_aux_graphs: bool = False
    certificate: bool = True         # preprocess with the sparse certificate


@dataclass
class FilterReport:
    surviving: set[int]
    decisions: dict[int, str]        # kept-trivial | kept-bridge | kept-needed | deleted
    counters: dict[str, int] = field(default_factory=dict)


class _Working:
    """Mutable adjacency state of the evolving subgraph G'."""

    def __init__(self, g: Digraph, edge_ids):
        self.n = g.n
        self.tail = {}
        self.head = {}
        self.out_adj: list[list[int]] = [[] for _ in range(g.n)]
        self.in_adj: list[list[int]] = [[] for _ in range(g.n)]
        self.alive: set[int] = set()
        self.out_deg = [0] * g.n
        self.in_deg = [0] * g.n
        for e in sorted(int(x) for x in edge_ids):
            t, h = g.tail(e), g.head(e)
            self.tail[e] = t
            self.head[e] = h
            self.out_adj[t].append(e)
            self.in_adj[h].append(e)
            self.alive.add(e)
            self.out_deg[t] += 1
            self.in_deg[h] += 1

    def delete(self, e: int) -> None:
        self.alive.discard(e)
        self.out_deg[self.tail[e]] -= 1
        self.in_deg[self.head[e]] -= 1

    def subgraph(self, g: Digraph, skip: int = -1) -> Digraph:
        ids = [e for e in self.alive if e != skip]
        return g.subgraph_edges(np.asarray(sorted(ids), dtype=np.int64))

    def strongly_connected_without(self, e_skip: int) -> bool:
        alive = self.alive
        for adj, start in ((self.out_adj, self.tail[e_skip]),
                           (self.in_adj, self.tail[e_skip])):
            seen = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for e in adj[v]:
                    if e == e_skip or e not in alive:
                        continue
                    w = self.head[e] if adj is self.out_adj else self.tail[e]
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != self.n:
                return False
        return True

    def two_disjoint_paths(self, x: int, y: int, e_skip: int = -1) -> bool:
        """Two edge-disjoint x->y paths avoiding e_skip (unit capacities)."""
        if x == y:
            return True
        alive = self.alive
        used: set[int] = set()
        for _ in range(2):
            parent: dict[int, tuple[int, int, bool]] = {x: (-1, -1, False)}
            stack = [x]
            reached = False
            while stack and not reached:
                v = stack.pop()
                for e in self.out_adj[v]:
                    if e == e_skip or e not in alive or e in used:
                        continue
                    w = self.head[e]
                    if w not in parent:
                        parent[w] = (v, e, False)
                        if w == y:
                            reached = True
                            break
                        stack.append(w)
                if reached:
                    break
                for e in self.in_adj[v]:
                    if e not in used:
                        continue
                    w = self.tail[e]
                    if w not in parent:
                        parent[w] = (v, e, True)
                        if w == y:
                            reached = True
                            break
                        stack.append(w)
            if not reached:
                return False
            v = y
            while v != x:
                pv, e, backward = parent[v]
                if backward:
                    used.discard(e)
                else:
                    used.add(e)
                v = pv
        return True


def two_edge_disjoint(g: Digraph, x: int, y: int) -> bool:
    """Two edge-disjoint paths from x to y in g (two augmenting searches)."""
    return _Working(g, g.edge_ids).two_disjoint_paths(x, y)


def is_trivial_edge(g: Digraph, block_partition: Partition, e: int) -> bool:
    """Edges whose removal obviously breaks the solution and need no test.

    Either endpoint sitting in a nontrivial block with residual degree at
    most two, or in a trivial block with degree one, pins the edge.
    """
    sizes = block_partition.sizes()
    x, y = g.tail(e), g.head(e)
    out_deg = len(g.out_ids(x))
    in_deg = len(g.in_ids(y))
    if sizes[block_partition.comp[x]] >= 2 and out_deg <= 2:
        return True
    if sizes[block_partition.comp[y]] >= 2 and in_deg <= 2:
        return True
    if sizes[block_partition.comp[x]] == 1 and out_deg == 1:
        return True
    if sizes[block_partition.comp[y]] == 1 and in_deg == 1:
        return True
    return False


def _ordered(edge_ids, cfg: FilterConfig) -> list[int]:
    order = sorted(int(e) for e in edge_ids)
    if cfg.edge_order == "reverse":
        order.reverse()
    elif cfg.edge_order == "random":
        random.Random(cfg.seed).shuffle(order)
    elif cfg.edge_order != "input":
        raise ValueError(f"unknown edge order {cfg.edge_order!r}")
    return order


def _run_strategy(g: Digraph, working_ids, cfg: FilterConfig) -> FilterReport:
    """Shared loop for test2edp / test2ecb / hybrid over a working edge set."""
    work = _Working(g, working_ids)
    wgraph = g.subgraph_edges(np.asarray(sorted(work.alive), dtype=np.int64))
    blocks0 = blocks(wgraph) if g.n > 1 else Partition(np.zeros(g.n, dtype=np.int64))
    sizes = blocks0.sizes()
    comp_of = blocks0.comp

    decisions: dict[int, str] = {}
    counters = {
        "working_edges": len(work.alive), "tested_2edp": 0, "tested_blocks": 0,
        "kept_trivial": 0, "kept_bridge": 0, "kept_needed": 0, "deleted": 0,
    }

    def trivial(e: int) -> bool:
        x, y = work.tail[e], work.head[e]
        if sizes[comp_of[x]] >= 2 and work.out_deg[x] <= 2:
            return True
        if sizes[comp_of[y]] >= 2 and work.in_deg[y] <= 2:
            return True
        if sizes[comp_of[x]] == 1 and work.out_deg[x] == 1:
            return True
        if sizes[comp_of[y]] == 1 and work.in_deg[y] == 1:
            return True
        return False

    for e in _ordered(work.alive, cfg):
        x, y = work.tail[e], work.head[e]
        if cfg.trivial_skip and trivial(e):
            decisions[e] = "kept-trivial"
            counters["kept_trivial"] += 1
            continue
        use_edp = cfg.strategy == "test2edp" or (
            cfg.strategy == "hybrid" and comp_of[x] == comp_of[y])
        if use_edp:
            counters["tested_2edp"] += 1
            if work.two_disjoint_paths(x, y, e_skip=e):
                work.delete(e)
                decisions[e] = "deleted"
                counters["deleted"] += 1
            else:
                decisions[e] = "kept-needed"
                counters["kept_needed"] += 1
        else:
            if not work.strongly_connected_without(e):
                decisions[e] = "kept-bridge"
                counters["kept_bridge"] += 1
                continue
            counters["tested_blocks"] += 1
            if blocks(work.subgraph(g, skip=e)) == blocks0:
                work.delete(e)
                decisions[e] = "deleted"
                counters["deleted"] += 1
            else:
                decisions[e] = "kept-needed"
                counters["kept_needed"] += 1

    return FilterReport(surviving=set(work.alive), decisions=decisions, counters=counters)


def _working_ids(g: Digraph, cfg: FilterConfig):
    if cfg.certificate:
        cert, _ = ist_b(g)
        return sorted(cert.edge_set())
    return [int(e) for e in g.edge_ids.tolist()]


def _mode_b_filter(g: Digraph, cfg: FilterConfig) -> FilterReport:
    if g.n > 1 and scc(g).count != 1:
        raise GraphError("filters require a strongly connected input")
    ids = _working_ids(g, cfg)
    rep = _run_strategy(g, ids, cfg)
    rep.counters["input_edges"] = g.m
    rep.counters["certificate_dropped"] = g.m - len(ids)
    return rep


def test2edp_filter(g: Digraph, cfg: FilterConfig = FilterConfig()) -> FilterReport:
    return _mode_b_filter(g, FilterConfig(**{**cfg.__dict__, "strategy": "test2edp"}))


def test2ecb_filter(g: Digraph, cfg: FilterConfig = FilterConfig()) -> FilterReport:
    return _mode_b_filter(g, FilterConfig(**{**cfg.__dict__, "strategy": "test2ecb"}))


def hybrid_filter(g: Digraph, cfg: FilterConfig = FilterConfig()) -> FilterReport:
    return _mode_b_filter(g, FilterConfig(**{**cfg.__dict__, "strategy": "hybrid"}))


def aux_variant_filter(g: Digraph, cfg: FilterConfig = FilterConfig()) -> FilterReport:
    """Run the strategy inside every second-level auxiliary graph.

    An edge is deleted only if every auxiliary graph containing it agreed to
    delete it; edges that appear in no second-level graph are kept.
    """
    if g.n > 1 and scc(g).count != 1:
        raise GraphError("filters require a strongly connected input")
    ids = _working_ids(g, cfg)
    work = g.subgraph_edges(np.asarray(ids, dtype=np.int64))
    inner_cfg = FilterConfig(
        mode="B", strategy=cfg.strategy, edge_order=cfg.edge_order, seed=cfg.seed,
        trivial_skip=cfg.trivial_skip, certificate=False,
    )
    appeared: set[int] = set()
    kept: set[int] = set()
    tested = 0
    if g.n > 1:
        for h in first_level_aux_graphs(FlowGraph(work, 0)):
            for aux in _reverse_aux_graphs(h):
                to_orig = {int(e): int(h.orig_edge[aux.orig_edge[e]])
                           for e in aux.graph.edge_ids.tolist()}
                appeared.update(to_orig.values())
                sub_rep = _run_strategy(aux.graph, aux.graph.edge_ids, inner_cfg)
                tested += sub_rep.counters["tested_2edp"] + sub_rep.counters["tested_blocks"]
                kept.update(to_orig[e] for e in sub_rep.surviving)
    surviving = (set(ids) - appeared) | kept
    decisions = {e: ("deleted" if e not in surviving else "kept-needed") for e in ids}
    return FilterReport(
        surviving=surviving,
        decisions=decisions,
        counters={
            "working_edges": len(ids), "input_edges": g.m,
            "certificate_dropped": g.m - len(ids),
            "aux_appeared": len(appeared), "tested_inner": tested,
            "deleted": len(ids) - len(surviving),
        },
    )


def _minimize_two_ecss(g: Digraph, comp_edges: set[int]) -> set[int]:
    """Shrink a per-component 2ECSS with the two-edge-disjoint-paths test."""
    work = _Working(g, comp_edges)
    for e in sorted(comp_edges):
        if work.two_disjoint_paths(work.tail[e], work.head[e], e_skip=e):
            work.delete(e)
    return set(work.alive)


def filter_bc(g: Digraph, cfg: FilterConfig = FilterConfig(mode="BC")) -> FilterReport:
    """Block-and-component preserving filter through the condensed graph.

    Components get an edge-disjoint-trees 2ECSS re-minimized by the
    two-edge-disjoint-paths test; the surviving condensed edges come from
    the configured strategy (optionally inside second-level aux graphs).
    """
    if g.n > 1 and scc(g).count != 1:
        raise GraphError("filters require a strongly connected input")
    comp = components(g)
    per_comp = _per_component_two_ecss(g, comp)
    surviving: set[int] = set()
    comp_edge_count = 0
    for cid, edges in per_comp.items():
        cls = np.flatnonzero(comp.comp == cid)
        sub = induced_subgraph(g, cls)
        local = {int(sub.origin[e]): int(e) for e in sub.edge_ids.tolist()}
        minimized = _minimize_two_ecss(sub, {local[e] for e in edges})
        surviving |= {int(sub.origin[e]) for e in minimized}
        comp_edge_count += len(minimized)

    cond = condense(g, comp)
    reduced = _reduce_condensed(cond.graph, cap=2)
    decisions: dict[int, str] = {}
    counters = {"component_edges": comp_edge_count, "input_edges": g.m}
    if reduced.n > 1:
        inner_cfg = FilterConfig(
            mode="B", strategy=cfg.strategy, edge_order=cfg.edge_order,
            seed=cfg.seed, trivial_skip=cfg.trivial_skip, certificate=cfg.certificate,
        )
        if cfg.on_aux_graphs:
            rep = aux_variant_filter(reduced, inner_cfg)
        else:
            rep = _mode_b_filter(reduced, inner_cfg)
        for e_local, what in rep.decisions.items():
            decisions[int(reduced.origin[e_local])] = what
        surviving |= {int(reduced.origin[e]) for e in rep.surviving}
        for key, val in rep.counters.items():
            counters["condensed_" + key] = val
    return FilterReport(surviving=surviving, decisions=decisions, counters=counters)
