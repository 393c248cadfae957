#!/usr/bin/env python3
"""Compare the compiled rank kernel against the pure-Python fallback.

The oracle's cost is dominated by exact ranks of boundary matrices, so the
benchmark times full ``oracle_values`` runs over a reproducible corpus of
Cohen-Macaulay bipartite graphs.  The pure-Python timing is collected in a
subprocess with EIDEAL_PURE_PYTHON=1 so backend selection happens at import.

Usage: python benchmarks/bench_rank.py [--pairs N] [--count N] [--seed N]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def run_corpus(pairs: int, count: int, seed: int) -> float:
    from eideal.cm import random_cm_graph
    from eideal.oracle import oracle_values

    graphs = [random_cm_graph(pairs, 0.5, seed + i) for i in range(count)]
    start = time.perf_counter()
    for g in graphs:
        oracle_values(g)
    return time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=6)
    parser.add_argument("--count", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--inner", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.inner:
        elapsed = run_corpus(args.pairs, args.count, args.seed)
        print(json.dumps({"seconds": elapsed}))
        return 0

    from eideal.linalg import USING_EXTENSION

    if not USING_EXTENSION:
        print("compiled extension unavailable; only the fallback can be timed")

    results = {}
    for label, env_val in (("compiled", ""), ("pure-python", "1")):
        env = dict(os.environ, EIDEAL_PURE_PYTHON=env_val)
        out = subprocess.run(
            [sys.executable, __file__, "--inner", "--pairs", str(args.pairs),
             "--count", str(args.count), "--seed", str(args.seed)],
            env=env, capture_output=True, text=True, check=True,
        )
        results[label] = json.loads(out.stdout)["seconds"]
        print(f"{label:>12}: {results[label]:.2f}s "
              f"({args.count} graphs, {args.pairs} pairs each)")

    if results["compiled"] > 0:
        print(f"     speedup: {results['pure-python'] / results['compiled']:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
