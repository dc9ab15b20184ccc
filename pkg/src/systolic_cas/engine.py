"""Cycle-accurate simulation of a forest as a synchronous systolic array.

Each query of length ``l`` is streamed as ``2l + m`` tokens: characters on odd
ticks, error sums on even ticks (the first ``m - 1`` sums start poisoned at
``d + 1`` so incomplete windows can never fire), then ``m`` blanks to drain the
pipeline into the exit nodes.

The per-tick work runs in a compiled kernel when one was built, otherwise in
the pure-Python kernel; both produce identical state.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO, Union

import numpy as np

from . import _kernel_py
from .forest import Forest
from .sequence import Sequence

try:
    from . import _kernel as _ckernel
except ImportError:  # no compiled extension in this install
    _ckernel = None

BACKENDS = {"python": _kernel_py}
if _ckernel is not None:
    BACKENDS["cython"] = _ckernel
DEFAULT_BACKEND = "cython" if _ckernel is not None else "python"

BLANK, CHAR, NUM = _kernel_py.BLANK, _kernel_py.CHAR, _kernel_py.NUM


@dataclass(frozen=True)
class Character:
    symbol: str

    def __str__(self):
        return f"C:{self.symbol}"


@dataclass(frozen=True)
class Number:
    value: int

    def __str__(self):
        return f"N:{self.value}"


@dataclass(frozen=True)
class _Blank:
    def __str__(self):
        return "B"


Blank = _Blank()
StreamToken = Union[Character, Number, _Blank]


@dataclass(frozen=True)
class TickSchedule:
    l: int
    m: int
    d: int

    @property
    def total_ticks(self) -> int:
        return 2 * self.l + self.m

    def number(self, k: int) -> int:
        """Sum injected after character ``k``: poisoned until a full window exists."""
        return self.d + 1 if k <= self.m - 2 else 0

    def tokens(self, query: str) -> list[StreamToken]:
        if len(query) != self.l:
            raise ValueError(f"query length {len(query)} != schedule length {self.l}")
        out: list[StreamToken] = []
        for k, ch in enumerate(query):
            out.append(Character(ch))
            out.append(Number(self.number(k)))
        out.extend([Blank] * self.m)
        return out


@dataclass(frozen=True)
class RunResult:
    string_index: int
    potential: frozenset
    ticks: int


@dataclass(frozen=True)
class CasRecord:
    exit_id: int
    motif: str
    string_bits: int
    verified: bool

    @property
    def potential_count(self) -> int:
        return bin(self.string_bits).count("1")


@dataclass
class CasReport:
    n: int
    records: list[CasRecord] = field(default_factory=list)

    @property
    def verified(self) -> list[str]:
        return [r.motif for r in self.records if r.verified]

    def to_tsv(self) -> str:
        lines = ["#motif\tstring_bits\tpotential_count\tverified"]
        for r in self.records:
            lines.append(
                f"{r.motif}\t{r.string_bits:x}\t{r.potential_count}\t{int(r.verified)}"
            )
        lines.append(f"#verified={len(self.verified)} exits={len(self.records)} n={self.n}")
        return "\n".join(lines) + "\n"


def make_report(forest: Forest) -> CasReport:
    full = (1 << forest.config.n) - 1
    records = [
        CasRecord(ex.id, ex.motif, ex.string_bits, ex.string_bits & full == full)
        for ex in forest.exits.values()
    ]
    records.sort(key=lambda r: (r.motif, r.exit_id))
    return CasReport(forest.config.n, records)


def _text(query: Sequence | str) -> str:
    return query.symbols if isinstance(query, Sequence) else str(query)


class SystolicArray:
    """Mutable hardware state for one forest: bit vectors, slots and exit latches.

    Nodes are held in (level, id) order so parents precede children; exits in
    id order. The forest itself is only read.
    """

    def __init__(self, forest: Forest, backend: Optional[str] = None):
        self.forest = forest
        self.alphabet = forest.alphabet
        self.m = forest.config.m
        self.d = forest.config.d
        backend = backend or DEFAULT_BACKEND
        if backend not in BACKENDS:
            raise ValueError(f"unknown backend {backend!r}; available: {sorted(BACKENDS)}")
        if backend == "cython" and self.m > _ckernel.MAX_LEVEL:
            backend = "python"
        self.backend = backend
        self._kernel = BACKENDS[backend]

        order = sorted(forest.nodes.values(), key=lambda nd: (nd.level, nd.id))
        self.node_ids = [nd.id for nd in order]
        pos = {nid: i for i, nid in enumerate(self.node_ids)}
        self.exit_ids = sorted(forest.exits)
        n_nodes = len(order)
        n_exits = len(self.exit_ids)

        parent = [-1 if nd.parent is None else pos[nd.parent] for nd in order]
        level = [nd.level for nd in order]
        sym = [self.alphabet.index(nd.symbol) for nd in order]
        leaf = [pos[forest.exits[e].leaf] for e in self.exit_ids]
        if backend == "cython":
            i64 = np.int64
            self.parent = np.array(parent, dtype=i64)
            self.level = np.array(level, dtype=i64)
            self.sym = np.array(sym, dtype=i64)
            self.leaf = np.array(leaf, dtype=i64)
            self.bv = np.zeros(n_nodes, dtype=np.uint64)
            self.kind = np.zeros(n_nodes, dtype=i64)
            self.val = np.zeros(n_nodes, dtype=i64)
            self.ekind = np.zeros(n_exits, dtype=i64)
            self.evalue = np.zeros(n_exits, dtype=i64)
            self.hit = np.zeros(n_exits, dtype=np.uint8)
        else:
            # plain lists: arbitrary-width bit vectors, no numpy scalar overhead
            self.parent, self.level, self.sym, self.leaf = parent, level, sym, leaf
            self.bv = [0] * n_nodes
            self.kind = [BLANK] * n_nodes
            self.val = [0] * n_nodes
            self.ekind = [BLANK] * n_exits
            self.evalue = [0] * n_exits
            self.hit = [0] * n_exits
        self.ticks = 0

    def init_bits(self, mode: str = "zeros", seed: Optional[int] = None) -> None:
        """Set every bit vector to all zeros, all ones, or random bits."""
        if mode == "zeros":
            values = [0] * len(self.level)
        elif mode == "ones":
            values = [(1 << int(lv)) - 1 for lv in self.level]
        elif mode == "random":
            rng = random.Random(seed)
            values = [rng.getrandbits(int(lv)) for lv in self.level]
        else:
            raise ValueError(f"unknown bit initialisation {mode!r}")
        self.bv[:] = values

    def reset_slots(self) -> None:
        for arr, value in ((self.kind, BLANK), (self.val, 0), (self.ekind, BLANK),
                           (self.evalue, 0), (self.hit, 0)):
            arr[:] = [value] * len(arr)
        self.ticks = 0

    def _encode(self, token: StreamToken) -> tuple[int, int]:
        if isinstance(token, Character):
            return CHAR, self.alphabet.index(token.symbol)
        if isinstance(token, Number):
            return NUM, token.value
        return BLANK, 0

    def _decode(self, kind: int, value: int) -> StreamToken:
        if kind == CHAR:
            return Character(self.alphabet.symbols[value])
        if kind == NUM:
            return Number(int(value))
        return Blank

    def step(self, token: StreamToken) -> None:
        """Advance one clock: every node takes its parent's pre-tick slot."""
        kind, value = self._encode(token)
        self._kernel.step(
            self.parent, self.level, self.sym, self.bv, self.kind, self.val,
            self.leaf, self.ekind, self.evalue, self.hit, kind, value, self.d,
        )
        self.ticks += 1

    def feed(self, tokens: Iterable[StreamToken]) -> None:
        encoded = [self._encode(t) for t in tokens]
        tok_kind = [k for k, _ in encoded]
        tok_val = [v for _, v in encoded]
        if self.backend == "cython":
            tok_kind = np.array(tok_kind, dtype=np.int64)
            tok_val = np.array(tok_val, dtype=np.int64)
        self._kernel.run(
            self.parent, self.level, self.sym, self.bv, self.kind, self.val,
            self.leaf, self.ekind, self.evalue, self.hit, tok_kind, tok_val, self.d,
        )
        self.ticks += len(encoded)

    def schedule(self, query: str) -> TickSchedule:
        if len(query) < self.m:
            raise ValueError(f"query shorter than motif length ({len(query)} < {self.m})")
        for offset, ch in enumerate(query, start=1):
            if ch not in self.alphabet:
                raise ValueError(f"query symbol {ch!r} at offset {offset} not in alphabet {self.alphabet}")
        return TickSchedule(len(query), self.m, self.d)

    def run_string(self, query: Sequence | str, j: int = 2) -> RunResult:
        """Stream one query. Slots are cleared first; bit vectors carry over."""
        text = _text(query)
        sched = self.schedule(text)
        self.reset_slots()
        self.feed(sched.tokens(text))
        hits = frozenset(e for e, h in zip(self.exit_ids, self.hit) if h)
        return RunResult(j, hits, self.ticks)

    def node_state(self, i: int) -> tuple[str, StreamToken]:
        lv = int(self.level[i])
        bits = format(int(self.bv[i]), f"0{lv}b")
        return bits, self._decode(int(self.kind[i]), int(self.val[i]))

    def exit_state(self, i: int) -> tuple[StreamToken, int]:
        return self._decode(int(self.ekind[i]), int(self.evalue[i])), int(self.hit[i])


def run_string(forest: Forest, query: Sequence | str, j: int = 2, *,
               backend: Optional[str] = None, init: str = "zeros",
               seed: Optional[int] = None) -> RunResult:
    array = SystolicArray(forest, backend)
    array.init_bits(init, seed)
    return array.run_string(query, j)


def run_all(forest: Forest, queries: list[Sequence | str], *,
            backend: Optional[str] = None, init: str = "zeros",
            seed: Optional[int] = None) -> CasReport:
    """Stream strings 2..n through one array and OR each result into the exits.

    The forest's exit ``string_bits`` are updated in place; bit 1 is the
    database string and was set when the forest was built.
    """
    n = forest.config.n
    if len(queries) != n - 1:
        raise ValueError(f"expected {n - 1} query strings for n={n}, got {len(queries)}")
    array = SystolicArray(forest, backend)
    array.init_bits(init, seed)
    for j, query in enumerate(queries, start=2):
        result = array.run_string(query, j)
        for e in result.potential:
            forest.exits[e].string_bits |= 1 << (j - 1)
    return make_report(forest)


def trace(forest: Forest, query: Sequence | str, sink: TextIO, j: int = 2, *,
          backend: Optional[str] = None, init: str = "zeros",
          seed: Optional[int] = None) -> int:
    """Write a tick-by-tick dump of every node and exit; returns lines written.

    Format: ``TICKS <total>``, then per tick ``T <t> IN <token>``, one
    ``S <node-id> <bits> <slot>`` line per processing node and one
    ``X <exit-id> <slot> <hit>`` line per exit node, both in id order.
    An empty forest yields the header only.
    """
    text = _text(query)
    array = SystolicArray(forest, backend)
    array.init_bits(init, seed)
    sched = array.schedule(text)
    array.reset_slots()
    sink.write(f"TICKS {sched.total_ticks}\n")
    written = 1
    if not forest.nodes:
        return written
    node_rows = sorted(range(len(array.node_ids)), key=lambda i: array.node_ids[i])
    for t, token in enumerate(sched.tokens(text), start=1):
        array.step(token)
        lines = [f"T {t} IN {token}"]
        for i in node_rows:
            bits, slot = array.node_state(i)
            lines.append(f"S {array.node_ids[i]} {bits} {slot}")
        for i, eid in enumerate(array.exit_ids):
            slot, hit = array.exit_state(i)
            lines.append(f"X {eid} {slot} {hit}")
        sink.write("\n".join(lines) + "\n")
        written += len(lines)
    return written
