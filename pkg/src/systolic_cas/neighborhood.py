"""Hamming balls around a generator motif."""
from __future__ import annotations

from itertools import combinations, product
from math import comb

from .sequence import DNA, Alphabet


def hamming(a: str, b: str) -> int:
    if len(a) != len(b):
        raise ValueError(f"hamming distance needs equal lengths, got {len(a)} and {len(b)}")
    return sum(x != y for x, y in zip(a, b))


def ball(generator: str, d: int, alphabet: Alphabet = DNA) -> list[str]:
    """Every motif within ``d`` substitutions of ``generator``.

    Motifs come out without duplicates, ordered by substitution count, then
    by the substituted positions (left to right), then by replacement symbols
    in alphabet order. The generator itself is always first.
    """
    m = len(generator)
    if not 0 <= d <= m:
        raise ValueError(f"need 0 <= d <= m, got d={d}, m={m}")
    for i, ch in enumerate(generator):
        if ch not in alphabet:
            raise ValueError(f"symbol {ch!r} at offset {i + 1} is not in alphabet {alphabet}")

    base = list(generator)
    others = {ch: [s for s in alphabet.symbols if s != ch] for ch in set(generator)}
    out = [generator]
    for k in range(1, d + 1):
        for positions in combinations(range(m), k):
            for replacement in product(*(others[base[p]] for p in positions)):
                motif = base[:]
                for p, s in zip(positions, replacement):
                    motif[p] = s
                out.append("".join(motif))
    return out


def ball_size(m: int, d: int, sigma: int = 4) -> int:
    """Closed-form size of a radius-``d`` Hamming ball over ``sigma`` symbols."""
    if not 0 <= d <= m:
        raise ValueError(f"need 0 <= d <= m, got d={d}, m={m}")
    if sigma < 2:
        raise ValueError(f"need sigma >= 2, got {sigma}")
    return sum(comb(m, i) * (sigma - 1) ** i for i in range(d + 1))
