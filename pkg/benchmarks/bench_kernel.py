"""Compare the compiled and pure-Python tick kernels on the same workload.

    python benchmarks/bench_kernel.py [--m 6] [--d 2] [--l 200] [--queries 5]
"""
import argparse
import random
import time

from systolic_cas.engine import BACKENDS, SystolicArray
from systolic_cas.forest import build_forest, node_counts
from systolic_cas.sequence import SearchConfig


def workload(m, d, l, queries, seed):
    rng = random.Random(seed)
    dna = lambda k: "".join(rng.choice("ACGT") for _ in range(k))
    db = dna(l)
    forest = build_forest(db, SearchConfig(m, d, queries + 1))
    return forest, [dna(l) for _ in range(queries)]


def time_backend(forest, queries, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        arr = SystolicArray(forest, backend)
        start = time.perf_counter()
        for j, q in enumerate(queries, start=2):
            arr.run_string(q, j)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=6)
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--l", type=int, default=200)
    ap.add_argument("--queries", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    forest, queries = workload(args.m, args.d, args.l, args.queries, args.seed)
    processing, exits = node_counts(forest)
    ticks = sum(2 * len(q) + args.m for q in queries)
    print(f"forest: {processing} processing nodes, {exits} exits; {ticks} ticks total")
    results = {}
    for backend in sorted(BACKENDS):
        secs = time_backend(forest, queries, backend, args.repeat)
        results[backend] = secs
        rate = ticks * (processing + exits) / secs
        print(f"{backend:>7}: {secs:9.4f} s  ({rate / 1e6:8.2f} M node-updates/s)")
    if len(results) == 2:
        print(f"speedup: {results['python'] / results['cython']:.1f}x")


if __name__ == "__main__":
    main()
