"""Command-line front end: analyze, sparsify, bench, verify.

Exit codes: 0 ok, 1 input error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

import numpy as np

from .bench import ALGORITHMS, run_algorithm, run_experiment, write_csv
from .blocks import blocks, components, preservation_violations
from .digraph import GraphError, largest_scc
from .dominators import strong_bridges
from .io import load_graph


def _analyze(args) -> int:
    g = largest_scc(load_graph(args.graph, args.format))
    bstar = len(strong_bridges(g))
    block_part = blocks(g)
    comp_part = components(g)
    print(f"largest SCC: n={g.n} m={g.m}")
    print(f"strong bridges: {bstar}")
    for label, part in (("block", block_part), ("component", comp_part)):
        hist = Counter(int(s) for s in part.sizes().tolist())
        text = " ".join(f"{size}:{cnt}" for size, cnt in sorted(hist.items()))
        print(f"{label} size histogram: {text}")
    return 0


def _sparsify(args) -> int:
    expected = ALGORITHMS[args.algo]
    if args.problem and args.problem != expected:
        print(f"error: {args.algo} solves 2EC-{expected}, not 2EC-{args.problem}",
              file=sys.stderr)
        return 1
    g = largest_scc(load_graph(args.graph, args.format))
    out = run_algorithm(
        args.algo, g,
        order=args.order, seed=args.seed,
        certificate=not args.no_cert, trivial_skip=not args.no_trivial_skip,
    )
    lines = sorted((g.tail(e), g.head(e)) for e in out)
    sink = open(args.output, "w") if args.output else sys.stdout
    try:
        for t, h in lines:
            print(f"{t} {h}", file=sink)
    finally:
        if args.output:
            sink.close()
    return 0


def _bench(args) -> int:
    with open(args.config) as fh:
        config = json.load(fh)
    reports = run_experiment(config)
    write_csv(reports, args.output)
    print(f"wrote {len(reports)} rows to {args.output}")
    return 0


def _verify(args) -> int:
    g = largest_scc(load_graph(args.graph, args.format))
    pairs = []
    with open(args.subgraph) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            t, h = line.split()[:2]
            pairs.append((int(t), int(h)))
    index = {(g.tail(e), g.head(e)): e for e in g.edge_ids.tolist()}
    edges = []
    for p in pairs:
        if p not in index:
            print(f"error: edge {p} not present in the graph", file=sys.stderr)
            return 1
        edges.append(index[p])
    violations = preservation_violations(g, edges, args.problem)
    if violations:
        for v in violations:
            print(f"FAIL: {v}")
        return 2
    print("OK: subgraph preserves the required structure")
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="twoec")
    sub = ap.add_subparsers(dest="cmd", required=True)

    pa = sub.add_parser("analyze", help="largest-SCC stats, bridges, histograms")
    pa.add_argument("graph")
    pa.add_argument("--format", default="auto", choices=["auto", "dimacs", "snap"])
    pa.set_defaults(fn=_analyze)

    ps = sub.add_parser("sparsify", help="run one algorithm, print surviving edges")
    ps.add_argument("graph")
    ps.add_argument("--algo", required=True, choices=sorted(ALGORITHMS))
    ps.add_argument("--problem", choices=["B", "C", "BC"])
    ps.add_argument("--order", default="input", choices=["input", "reverse", "random"])
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--no-cert", action="store_true",
                    help="skip the sparse-certificate preprocessing")
    ps.add_argument("--no-trivial-skip", action="store_true")
    ps.add_argument("--format", default="auto", choices=["auto", "dimacs", "snap"])
    ps.add_argument("-o", "--output")
    ps.set_defaults(fn=_sparsify)

    pb = sub.add_parser("bench", help="run an experiment config, emit CSV")
    pb.add_argument("--config", required=True)
    pb.add_argument("-o", "--output", default="bench.csv")
    pb.set_defaults(fn=_bench)

    pv = sub.add_parser("verify", help="check a subgraph preserves structure")
    pv.add_argument("graph")
    pv.add_argument("subgraph")
    pv.add_argument("--problem", default="B", choices=["B", "C", "BC"])
    pv.add_argument("--format", default="auto", choices=["auto", "dimacs", "snap"])
    pv.set_defaults(fn=_verify)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
