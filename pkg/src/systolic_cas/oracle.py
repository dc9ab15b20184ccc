"""Brute-force CAS solver used as ground truth.

Deliberately naive: every candidate motif is compared against every window of
every string with a plain Hamming count. Nothing here shares code with the
forest or the systolic engine except the window slicer and ``ball``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .neighborhood import ball, hamming
from .sequence import SearchConfig, Sequence, windows


@dataclass(frozen=True)
class CasInstance:
    strings: tuple[Sequence, ...]
    config: SearchConfig

    def __post_init__(self):
        object.__setattr__(self, "strings", tuple(self.strings))
        if len(self.strings) != self.config.n:
            raise ValueError(f"instance has {len(self.strings)} strings but n={self.config.n}")
        for s in self.strings:
            if len(s) < self.config.m:
                raise ValueError(f"string {s.id!r} shorter than m={self.config.m}")


def oracle_potential(s: Sequence | str, motif: str, d: int) -> bool:
    """True iff some window of ``s`` is within ``d`` substitutions of ``motif``."""
    return any(hamming(w, motif) <= d for w in windows(s, len(motif)))


def oracle_cas(instance: CasInstance) -> list[str]:
    """Verified motifs in lexicographic order."""
    cfg = instance.config
    db = instance.strings[0]
    alphabet = db.alphabet
    candidates = {x for w in windows(db, cfg.m) for x in ball(w, cfg.d, alphabet)}
    return sorted(
        M for M in candidates
        if all(oracle_potential(s, M, cfg.d) for s in instance.strings[1:])
    )
