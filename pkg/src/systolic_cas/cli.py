"""Command-line entry point: build, run, oracle, estimate.

Exit codes: 0 success, 2 user error (bad input or arguments), 1 internal error.
"""
from __future__ import annotations

import argparse
import sys

from .engine import run_all, trace
from .forest import ORIENTATIONS, MOTIF_REVERSED, build_forest, load_forest, node_counts, save_forest
from .neighborhood import ball_size
from .oracle import CasInstance, oracle_cas
from .perf import (
    DEFAULT_PROFILE,
    MEASURED_SMALL_FOREST,
    estimate_clbs,
    estimate_latency,
    feasibility,
    worst_case_counts,
)
from .sequence import SearchConfig, read_fasta


class UsageError(Exception):
    pass


def _records(path, alphabet=None):
    records = read_fasta(path) if alphabet is None else read_fasta(path, alphabet)
    if not records:
        raise UsageError(f"{path}: no FASTA records")
    return records


def cmd_build(args) -> int:
    records = _records(args.fasta)
    n = args.n if args.n is not None else len(records)
    config = SearchConfig(m=args.m, d=args.d, n=n)
    forest = build_forest(records[0], config, args.orientation)
    save_forest(forest, args.out)
    processing, exits = node_counts(forest)
    bound = ball_size(config.m, config.d, forest.alphabet.sigma)
    windows = len(records[0]) - config.m + 1
    print(f"processing_nodes={processing} exit_nodes={exits}", file=sys.stderr)
    print(f"leaf_bound_per_generator={bound} generators={windows}", file=sys.stderr)
    return 0


def _queries(path, forest):
    records = read_fasta(path, forest.alphabet)
    n = forest.config.n
    # one-file mode repeats the database as record 1
    if len(records) == n:
        records = records[1:]
    if len(records) != n - 1:
        raise UsageError(
            f"{path}: expected {n - 1} query records (or {n} including the database), "
            f"got {len(records)}"
        )
    for r in records:
        if len(r) < forest.config.m:
            raise UsageError(f"query {r.id!r} shorter than motif length {forest.config.m}")
    return records


def cmd_run(args) -> int:
    forest = load_forest(args.forest)
    queries = _queries(args.queries, forest)
    if args.trace:
        with open(args.trace, "w") as fh:
            for j, q in enumerate(queries, start=2):
                fh.write(f"# string {j} {q.id}\n")
                trace(forest, q, fh, j)
    report = run_all(forest, queries)
    text = report.to_tsv()
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"verified={len(report.verified)} exits={len(report.records)}", file=sys.stderr)
    return 0


def cmd_oracle(args) -> int:
    records = _records(args.fasta)
    config = SearchConfig(m=args.m, d=args.d, n=len(records))
    for motif in oracle_cas(CasInstance(records, config)):
        print(motif)
    return 0


def cmd_estimate(args) -> int:
    forest = load_forest(args.forest)
    counts = node_counts(forest)
    cfg = forest.config
    clbs = estimate_clbs(counts)
    print(f"forest m={cfg.m} d={cfg.d} processing_nodes={counts[0]} exit_nodes={counts[1]}")
    line = f"clbs={clbs}"
    ref_counts, ref_clbs = MEASURED_SMALL_FOREST
    if counts == ref_counts:
        line += f" (measured {ref_clbs} on hardware for this forest)"
    print(line)

    fit = feasibility(counts, args.device_clbs)
    print(f"device_clbs={args.device_clbs} utilization={fit.utilization:.2%} "
          f"{'feasible' if fit.feasible else 'infeasible'}")

    worst = worst_case_counts(cfg.m, cfg.d, forest.alphabet.sigma)
    wfit = feasibility(worst, args.device_clbs)
    print(f"worst_case processing_nodes={worst[0]} exit_nodes={worst[1]} clbs={wfit.clbs} "
          f"utilization={wfit.utilization:.2%} {'feasible' if wfit.feasible else 'infeasible'}")

    l = args.l if args.l is not None else max(cfg.m, 1000)
    for name, hz in DEFAULT_PROFILE.clocks().items():
        print(f"latency l={l} clock={name} hz={hz:.0f} seconds={estimate_latency(l, cfg.m, hz):.6e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="systolic-cas", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="preprocess the database string into a forest file")
    p.add_argument("--fasta", required=True, help="FASTA file; record 1 is the database string")
    p.add_argument("--m", type=int, required=True, help="motif length")
    p.add_argument("--d", type=int, required=True, help="allowed substitutions")
    p.add_argument("--n", type=int, help="number of strings (default: FASTA record count)")
    p.add_argument("--orientation", choices=ORIENTATIONS, default=MOTIF_REVERSED)
    p.add_argument("--out", required=True, help="output CAF1 forest file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("run", help="stream query strings through a forest")
    p.add_argument("--forest", required=True)
    p.add_argument("--queries", required=True,
                   help="FASTA with strings 2..n, or 1..n with the database first")
    p.add_argument("--report", help="TSV report path (default: stdout)")
    p.add_argument("--trace", help="write a tick-by-tick trace per query")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("oracle", help="brute-force CAS motifs")
    p.add_argument("--fasta", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("estimate", help="CLB, feasibility and latency estimates")
    p.add_argument("--forest", required=True)
    p.add_argument("--device-clbs", type=int, default=13000)
    p.add_argument("--l", type=int, help="query length for latency (default 1000)")
    p.set_defaults(func=cmd_estimate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
