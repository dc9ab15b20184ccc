"""Alphabets, validated sequences, sliding windows and FASTA ingestion."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, TextIO

# 8-bit numeric channel between nodes
MAX_SUM = 255


class SequenceError(ValueError):
    """Raised for malformed FASTA input or invalid sequence parameters."""


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...] = ("A", "C", "G", "T")
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if len(symbols) < 2:
            raise SequenceError("alphabet needs at least 2 symbols")
        if len(set(symbols)) != len(symbols):
            raise SequenceError(f"alphabet symbols are not distinct: {''.join(symbols)}")
        if any(len(s) != 1 or s.isspace() or s in "->#" for s in symbols):
            raise SequenceError(f"invalid alphabet symbols: {symbols!r}")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(symbols)})

    @classmethod
    def from_string(cls, text: str) -> "Alphabet":
        return cls(tuple(text))

    @property
    def sigma(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        return self._index[symbol]

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._index

    def __str__(self) -> str:
        return "".join(self.symbols)


DNA = Alphabet()


@dataclass(frozen=True)
class Sequence:
    id: str
    symbols: str
    alphabet: Alphabet = DNA

    def __post_init__(self):
        for offset, ch in enumerate(self.symbols, start=1):
            if ch not in self.alphabet:
                raise SequenceError(
                    f"record {self.id!r}: symbol {ch!r} at offset {offset} "
                    f"is not in alphabet {self.alphabet}"
                )

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.symbols


@dataclass(frozen=True)
class SearchConfig:
    """Motif length ``m``, substitution budget ``d`` and string count ``n``."""

    m: int
    d: int
    n: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise SequenceError(f"motif length must be >= 1, got m={self.m}")
        if not 0 <= self.d <= self.m:
            raise SequenceError(f"need 0 <= d <= m, got d={self.d}, m={self.m}")
        if self.n < 1:
            raise SequenceError(f"need n >= 1, got n={self.n}")
        if self.m + self.d + 1 > MAX_SUM:
            raise SequenceError(
                f"m + d + 1 = {self.m + self.d + 1} overflows the {MAX_SUM} sum channel"
            )


def parse_fasta(handle: TextIO | Iterable[str], alphabet: Alphabet = DNA) -> list[Sequence]:
    """Read FASTA records in file order.

    Sequence lines are concatenated with whitespace removed and upper-cased.
    An empty header gets the id ``seq<k>`` where ``k`` is the 1-based record
    position. Out-of-alphabet symbols and records without sequence data raise
    :class:`SequenceError`.
    """
    if isinstance(handle, str):
        raise TypeError("parse_fasta expects a text stream or iterable of lines, not str")
    records: list[tuple[str, list[str]]] = []
    for lineno, line in enumerate(handle, start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            header = line[1:].strip()
            name = header.split()[0] if header else f"seq{len(records) + 1}"
            records.append((name, []))
        elif not records:
            raise SequenceError(f"line {lineno}: sequence data before first '>' header")
        else:
            records[-1][1].append("".join(line.split()).upper())

    out = []
    for name, chunks in records:
        seq = "".join(chunks)
        if not seq:
            raise SequenceError(f"record {name!r} is empty")
        out.append(Sequence(name, seq, alphabet))
    return out


def read_fasta(path, alphabet: Alphabet = DNA) -> list[Sequence]:
    with open(path) as fh:
        return parse_fasta(fh, alphabet)


def format_fasta(records: Iterable[Sequence]) -> str:
    return "".join(f">{r.id}\n{r.symbols}\n" for r in records)


def windows(s: Sequence | str, m: int) -> list[str]:
    """All ``l - m + 1`` contiguous length-``m`` windows, left to right."""
    text = str(s)
    if m < 1:
        raise SequenceError(f"motif length must be >= 1, got m={m}")
    if len(text) < m:
        raise SequenceError(
            f"sequence shorter than motif length ({len(text)} < {m})"
        )
    return [text[i:i + m] for i in range(len(text) - m + 1)]
