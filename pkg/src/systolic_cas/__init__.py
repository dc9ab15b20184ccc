"""Systolic-forest simulator for common approximate substrings (CAS).

Typical use::

    from systolic_cas import SearchConfig, build_forest, run_all
    forest = build_forest("TGACTCGACC", SearchConfig(m=5, d=1, n=4))
    report = run_all(forest, ["TACTGCCTCG", "CTGGCTAATA", "ATTCTGACT"])
    report.verified
"""
from .engine import (
    DEFAULT_BACKEND,
    Blank,
    CasRecord,
    CasReport,
    Character,
    Number,
    RunResult,
    SystolicArray,
    TickSchedule,
    run_all,
    run_string,
    trace,
)
from .forest import (
    MOTIF_REVERSED,
    PAPER_LITERAL,
    ExitNode,
    Forest,
    ForestFormatError,
    ForestNode,
    build_forest,
    deserialize,
    forest_from_motifs,
    node_counts,
    serialize,
)
from .neighborhood import ball, ball_size, hamming
from .oracle import CasInstance, oracle_cas, oracle_potential
from .perf import ResourceProfile, estimate_clbs, estimate_latency, feasibility
from .sequence import DNA, Alphabet, SearchConfig, Sequence, SequenceError, parse_fasta, windows

__version__ = "0.1.0"
