"""End-to-end benchmark run on a generated input, emitting the CSV report."""
import random
import tempfile
from pathlib import Path

from twoec.bench import run_experiment
from twoec.fixtures import random_strongly_connected

rng = random.Random(11)
g = random_strongly_connected(rng, 60, 200)

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "demo.gr"
    lines = [f"p sp {g.n} {g.m}"]
    lines += [f"a {t + 1} {h + 1} 1" for t, h in g.edge_pairs()]
    path.write_text("\n".join(lines) + "\n")

    config = {
        "datasets": [{"name": "demo", "path": str(path)}],
        "algorithms": ["ist-b", "test2edp-b", "hybrid-b", "ist-bc", "zni-c"],
        "runs": 3,
    }
    out_csv = Path(tmp) / "report.csv"
    reports = run_experiment(config, out_csv)
    print(out_csv.read_text())
    for r in reports:
        print(f"{r.algorithm:>12}: {r.edges_out:4d} edges, quality ratio {r.q:.3f} "
              f"(theory cap 4.0), {1000 * r.seconds:.0f} ms")
