"""Prefix-shared forest of motif trees, plus the CAF1 text format.

A forest is a trie over the union of the Hamming balls of every window of the
database string. Prefixes are shared; each distinct motif keeps its own leaf
and exit node. Suffixes are never merged.

Path orientation matters because the systolic dataflow compares the number
leaving level ``j`` with the character that entered ``j - 1`` symbols before
the window's last character. A path spelling ``q`` therefore detects windows
within distance ``d`` of ``reversed(q)``. ``motif-reversed`` stores each motif
last-character-first so that an exit fires exactly on its own motif;
``paper-literal`` stores the motif as written, which reproduces the classic
hand-drawn example but is only correct for palindromic windows.
"""
from __future__ import annotations

import copy
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .neighborhood import ball
from .sequence import DNA, Alphabet, SearchConfig, Sequence, SequenceError, windows

MOTIF_REVERSED = "motif-reversed"
PAPER_LITERAL = "paper-literal"
ORIENTATIONS = (MOTIF_REVERSED, PAPER_LITERAL)

FORMAT_VERSION = "CAF1"


class ForestFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class ForestNode:
    id: int
    level: int
    symbol: str
    parent: Optional[int] = None
    children: list[int] = field(default_factory=list)
    exit: Optional[int] = None


@dataclass
class ExitNode:
    id: int
    leaf: int
    motif: str
    string_bits: int = 1
    d: int = 0

    def has_string(self, j: int) -> bool:
        return bool(self.string_bits >> (j - 1) & 1)


@dataclass
class Forest:
    config: SearchConfig
    alphabet: Alphabet = DNA
    orientation: str = MOTIF_REVERSED
    roots: list[int] = field(default_factory=list)
    nodes: dict[int, ForestNode] = field(default_factory=dict)
    exits: dict[int, ExitNode] = field(default_factory=dict)

    def path_string(self, motif: str) -> str:
        return motif[::-1] if self.orientation == MOTIF_REVERSED else motif

    def motifs(self) -> list[str]:
        return [self.exits[e].motif for e in sorted(self.exits)]

    def copy(self) -> "Forest":
        return copy.deepcopy(self)

    def clear_bits(self) -> None:
        """Reset every exit to the freshly built state (string 1 only)."""
        for ex in self.exits.values():
            ex.string_bits = 1


def node_counts(forest: Forest) -> tuple[int, int]:
    """(processing nodes, exit nodes)."""
    return len(forest.nodes), len(forest.exits)


def _check_orientation(orientation: str) -> None:
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")


def forest_from_motifs(
    motifs: Iterable[str],
    config: SearchConfig,
    alphabet: Alphabet = DNA,
    orientation: str = MOTIF_REVERSED,
) -> Forest:
    """Trie over ``motifs`` with breadth-first ids, siblings in alphabet order."""
    _check_orientation(orientation)
    reverse = orientation == MOTIF_REVERSED
    trie: dict = {}
    terminal: dict[int, str] = {}
    for motif in dict.fromkeys(motifs):
        if len(motif) != config.m:
            raise ValueError(f"motif {motif!r} does not have length m={config.m}")
        node = trie
        for ch in (motif[::-1] if reverse else motif):
            node = node.setdefault(ch, {})
        terminal[id(node)] = motif

    forest = Forest(config=config, alphabet=alphabet, orientation=orientation)
    order = alphabet.index
    queue = deque((ch, sub, None, 1) for ch, sub in sorted(trie.items(), key=lambda kv: order(kv[0])))
    leaves = []
    while queue:
        ch, sub, parent, level = queue.popleft()
        nid = len(forest.nodes)
        forest.nodes[nid] = ForestNode(nid, level, ch, parent)
        if parent is None:
            forest.roots.append(nid)
        else:
            forest.nodes[parent].children.append(nid)
        if level == config.m:
            leaves.append((nid, terminal[id(sub)]))
        for c2, s2 in sorted(sub.items(), key=lambda kv: order(kv[0])):
            queue.append((c2, s2, nid, level + 1))

    for eid, (leaf, motif) in enumerate(leaves):
        forest.nodes[leaf].exit = eid
        forest.exits[eid] = ExitNode(eid, leaf, motif, string_bits=1, d=config.d)
    return forest


def build_forest(
    db: Sequence | str,
    config: SearchConfig,
    orientation: str = MOTIF_REVERSED,
    alphabet: Optional[Alphabet] = None,
) -> Forest:
    """Preprocess the database string into its shared motif forest.

    Exit motifs are the union of ``ball(w, d)`` over all windows ``w`` of
    ``db``, each exactly once. String 1's bit is set on every exit.
    """
    if alphabet is None:
        alphabet = db.alphabet if isinstance(db, Sequence) else DNA
    if not isinstance(db, Sequence):
        db = Sequence("db", db, alphabet)
    motifs = (x for w in windows(db, config.m) for x in ball(w, config.d, alphabet))
    return forest_from_motifs(motifs, config, alphabet, orientation)


def serialize(forest: Forest) -> str:
    cfg = forest.config
    lines = [
        f"{FORMAT_VERSION} m={cfg.m} d={cfg.d} n={cfg.n} "
        f"alphabet={forest.alphabet} orientation={forest.orientation}"
    ]
    for nid in sorted(forest.nodes):
        node = forest.nodes[nid]
        parent = "-" if node.parent is None else str(node.parent)
        lines.append(f"N {nid} {node.level} {node.symbol} {parent}")
    for eid in sorted(forest.exits):
        ex = forest.exits[eid]
        lines.append(f"X {eid} {ex.leaf} {ex.motif} {ex.string_bits:x}")
    return "\n".join(lines) + "\n"


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ForestFormatError(lineno, f"{what} is not an integer: {tok!r}") from None


def _parse_header(line: str, lineno: int):
    parts = line.split()
    if not parts or parts[0] != FORMAT_VERSION:
        raise ForestFormatError(lineno, f"expected {FORMAT_VERSION} header, got {line!r}")
    fields = {}
    for part in parts[1:]:
        key, sep, value = part.partition("=")
        if not sep:
            raise ForestFormatError(lineno, f"malformed header field {part!r}")
        fields[key] = value
    missing = {"m", "d", "n", "alphabet", "orientation"} - fields.keys()
    if missing:
        raise ForestFormatError(lineno, f"header missing {', '.join(sorted(missing))}")
    try:
        config = SearchConfig(
            m=_int(fields["m"], lineno, "m"),
            d=_int(fields["d"], lineno, "d"),
            n=_int(fields["n"], lineno, "n"),
        )
        alphabet = Alphabet.from_string(fields["alphabet"])
    except SequenceError as exc:
        raise ForestFormatError(lineno, str(exc)) from None
    if fields["orientation"] not in ORIENTATIONS:
        raise ForestFormatError(lineno, f"unknown orientation {fields['orientation']!r}")
    return config, alphabet, fields["orientation"]


def deserialize(text: str) -> Forest:
    """Parse a CAF1 forest. Errors carry the offending line number."""
    forest = None
    node_line: dict[int, int] = {}
    exit_line: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if forest is None:
            config, alphabet, orientation = _parse_header(line, lineno)
            forest = Forest(config=config, alphabet=alphabet, orientation=orientation)
            continue
        parts = line.split()
        if parts[0] == "N" and len(parts) == 5:
            nid = _int(parts[1], lineno, "node id")
            level = _int(parts[2], lineno, "level")
            if nid in forest.nodes:
                raise ForestFormatError(lineno, f"duplicate node id {nid}")
            if not 1 <= level <= forest.config.m:
                raise ForestFormatError(lineno, f"level {level} outside 1..{forest.config.m}")
            if parts[3] not in forest.alphabet:
                raise ForestFormatError(lineno, f"symbol {parts[3]!r} not in alphabet")
            parent = None if parts[4] == "-" else _int(parts[4], lineno, "parent id")
            forest.nodes[nid] = ForestNode(nid, level, parts[3], parent)
            node_line[nid] = lineno
        elif parts[0] == "X" and len(parts) == 5:
            eid = _int(parts[1], lineno, "exit id")
            if eid in forest.exits:
                raise ForestFormatError(lineno, f"duplicate exit id {eid}")
            try:
                bits = int(parts[4], 16)
            except ValueError:
                raise ForestFormatError(lineno, f"string bits are not hex: {parts[4]!r}") from None
            forest.exits[eid] = ExitNode(
                eid, _int(parts[2], lineno, "leaf id"), parts[3], bits, forest.config.d
            )
            exit_line[eid] = lineno
        else:
            raise ForestFormatError(lineno, f"malformed line {line!r}")
    if forest is None:
        raise ForestFormatError(1, f"missing {FORMAT_VERSION} header")

    nodes = forest.nodes
    m = forest.config.m
    for nid in sorted(nodes):
        node = nodes[nid]
        lineno = node_line[nid]
        if node.parent is None:
            if node.level != 1:
                raise ForestFormatError(lineno, f"root {nid} must be at level 1")
            forest.roots.append(nid)
            siblings = [nodes[r] for r in forest.roots]
        else:
            parent = nodes.get(node.parent)
            if parent is None:
                raise ForestFormatError(lineno, f"node {nid} references missing parent id {node.parent}")
            if node.level != parent.level + 1:
                raise ForestFormatError(lineno, f"node {nid} level {node.level} != parent level + 1")
            parent.children.append(nid)
            siblings = [nodes[c] for c in parent.children]
        if sum(s.symbol == node.symbol for s in siblings) > 1:
            raise ForestFormatError(lineno, f"duplicate sibling symbol {node.symbol!r} at node {nid}")

    for eid in sorted(forest.exits):
        ex = forest.exits[eid]
        lineno = exit_line[eid]
        leaf = nodes.get(ex.leaf)
        if leaf is None:
            raise ForestFormatError(lineno, f"exit {eid} references missing leaf id {ex.leaf}")
        if leaf.level != m:
            raise ForestFormatError(lineno, f"exit {eid} attached to node {ex.leaf} at level {leaf.level}, not {m}")
        if leaf.exit is not None:
            raise ForestFormatError(lineno, f"leaf {ex.leaf} already has exit {leaf.exit}")
        path = []
        cur = leaf
        while cur is not None:
            path.append(cur.symbol)
            cur = nodes[cur.parent] if cur.parent is not None else None
        if forest.path_string(ex.motif) != "".join(reversed(path)):
            raise ForestFormatError(lineno, f"exit {eid} motif {ex.motif} does not match its path")
        leaf.exit = eid

    for nid, node in nodes.items():
        if node.level == m and node.exit is None:
            raise ForestFormatError(node_line[nid], f"leaf {nid} has no exit node")
    return forest


def load_forest(path) -> Forest:
    with open(path) as fh:
        return deserialize(fh.read())


def save_forest(forest: Forest, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize(forest))
