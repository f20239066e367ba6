#!/usr/bin/env python3
"""Run the clean/merge symmetrization on a built-in family and audit the trace.

Examples:
    python scripts/run_symmetrization_demo.py --family split --n 16 --alpha 0.05
    python scripts/run_symmetrization_demo.py --family star-blowup --n 18 \
        --alpha 0.065 --perturb 0.05 --seed 3
"""

import argparse
import random
import sys

from hlag.core import Hypergraph, blowup
from hlag.families import split, star
from hlag.symmetrize import audit, symmetrize


def build(name: str, n: int, seed: int) -> Hypergraph:
    if name == "split":
        return split(n, 4)
    if name == "star-blowup":
        # star on ~n/3 vertices blown up to n vertices, heavier center part
        base_n = max(5, n // 3)
        sizes = [n // base_n + (1 if i <= n % base_n else 0) for i in range(1, base_n + 1)]
        return blowup(star(base_n, 4), sizes)
    if name == "star":
        return star(n, 4)
    raise SystemExit(f"unknown family {name!r}")


def delete_fraction(G: Hypergraph, frac: float, seed: int) -> Hypergraph:
    # deletions keep the graph matching-free; additions could not be audited
    rng = random.Random(seed)
    keep = [e for e in sorted(G.edges) if rng.random() >= frac]
    return Hypergraph(G.r, G.n, frozenset(keep))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", default="split", choices=["split", "star-blowup", "star"])
    ap.add_argument("--n", type=int, default=16)
    ap.add_argument("--alpha", type=float, default=0.05)
    ap.add_argument("--perturb", type=float, default=0.0, help="fraction of edges to delete")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    G = build(args.family, args.n, args.seed)
    if args.perturb > 0:
        G = delete_fraction(G, args.perturb, args.seed)
    print(f"input: n={G.n} edges={len(G)}")

    trace = symmetrize(G, alpha=args.alpha)
    for step in trace.steps:
        state = step.state
        print(
            f"  step {step.index}: {step.kind:<5} -> "
            f"{len(state.vertices)} vertices, {state.edge_count()} edges  {step.detail}"
        )
    final, _ = trace.final_graph()
    print(f"final: n={final.n} edges={len(final)}")

    report = audit(trace)
    for check in report.checks:
        tail = f" {check.detail}" if check.detail else ""
        print(f"  audit {check.name:<24} {'ok' if check.ok else 'VIOLATION'}{tail}")
    print(f"vertex fraction {report.final_vertex_fraction:.4f} (alpha={report.alpha})")
    return 0 if all(c.ok for c in report.checks) else 1


if __name__ == "__main__":
    sys.exit(main())
