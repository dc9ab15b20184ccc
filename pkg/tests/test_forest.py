from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_union, prefix_count
from systolic_cas.forest import (
    MOTIF_REVERSED,
    PAPER_LITERAL,
    ForestFormatError,
    build_forest,
    deserialize,
    forest_from_motifs,
    node_counts,
    serialize,
)
from systolic_cas.neighborhood import ball_size
from systolic_cas.sequence import SearchConfig, Sequence

DATA = Path(__file__).parent / "data"
both = pytest.mark.parametrize("orientation", [MOTIF_REVERSED, PAPER_LITERAL])


def paths(forest):
    out = {}
    for ex in forest.exits.values():
        syms = []
        nid = ex.leaf
        while nid is not None:
            syms.append(forest.nodes[nid].symbol)
            nid = forest.nodes[nid].parent
        out[ex.motif] = "".join(reversed(syms))
    return out


def check_structure(forest):
    m = forest.config.m
    for node in forest.nodes.values():
        kids = [forest.nodes[c] for c in node.children]
        assert len({k.symbol for k in kids}) == len(kids)
        assert all(k.level == node.level + 1 for k in kids)
        assert (node.exit is not None) == (node.level == m)
        if node.level == m:
            assert not node.children
    roots = [forest.nodes[r] for r in forest.roots]
    assert len({r.symbol for r in roots}) == len(roots) <= forest.alphabet.sigma
    assert all(ex.string_bits & 1 for ex in forest.exits.values())


def test_act_d1_paper_literal_counts():
    f = build_forest("ACT", SearchConfig(3, 1, 4), PAPER_LITERAL)
    assert node_counts(f) == (21, 10)
    check_structure(f)


@both
def test_single_path_when_d_zero(orientation):
    f = build_forest("ACT", SearchConfig(3, 0, 1), orientation)
    assert node_counts(f) == (3, 1)
    assert f.exits[0].motif == "ACT"


@both
def test_d_zero_any_m(orientation):
    for m in range(1, 9):
        f = build_forest("ACGTTGCA"[:m], SearchConfig(m, 0, 1), orientation)
        assert node_counts(f) == (m, 1)


def test_overlapping_generators_act_ctt():
    db = "ACTT"  # windows ACT, CTT
    f = build_forest(db, SearchConfig(3, 1, 2), PAPER_LITERAL)
    union = brute_union(db, 3, 1)
    assert len(union) == 18
    assert set(f.motifs()) == union
    assert node_counts(f) == (prefix_count(union), 18)


def test_path_orientation():
    f = build_forest("ACG", SearchConfig(3, 0, 1), MOTIF_REVERSED)
    assert paths(f) == {"ACG": "GCA"}
    f = build_forest("ACG", SearchConfig(3, 0, 1), PAPER_LITERAL)
    assert paths(f) == {"ACG": "ACG"}


def test_bad_orientation():
    with pytest.raises(ValueError):
        build_forest("ACG", SearchConfig(3, 0, 1), "sideways")


def test_db_shorter_than_m():
    with pytest.raises(ValueError):
        build_forest("AC", SearchConfig(3, 0, 1))


random_db = st.integers(1, 6).flatmap(
    lambda m: st.tuples(st.just(m), st.integers(0, min(2, m)),
                        st.text("ACGT", min_size=m, max_size=20))
)


@settings(max_examples=60, deadline=None)
@given(random_db, st.sampled_from([MOTIF_REVERSED, PAPER_LITERAL]))
def test_exits_match_brute_union(case, orientation):
    m, d, db = case
    f = build_forest(db, SearchConfig(m, d, 1), orientation)
    union = brute_union(db, m, d)
    assert sorted(f.motifs()) == sorted(union)
    p = paths(f)
    assert all(p[x] == f.path_string(x) for x in union)
    assert node_counts(f) == (prefix_count(p.values()), len(union))
    check_structure(f)


@given(st.integers(1, 7).flatmap(lambda m: st.tuples(st.text("ACGT", min_size=m, max_size=m),
                                                     st.integers(0, min(3, m)))))
def test_single_window_exit_count(case):
    g, d = case
    f = build_forest(g, SearchConfig(len(g), d, 1))
    assert len(f.exits) == ball_size(len(g), d, 4)


@settings(max_examples=40, deadline=None)
@given(random_db)
def test_orientation_duality(case):
    m, d, db = case
    cfg = SearchConfig(m, d, 1)
    literal = build_forest(db, cfg, PAPER_LITERAL)
    mirrored = build_forest(db[::-1], cfg, MOTIF_REVERSED)
    strip = lambda f: [(n.id, n.level, n.symbol, n.parent) for n in f.nodes.values()]
    assert strip(literal) == strip(mirrored)
    for eid, ex in literal.exits.items():
        assert mirrored.exits[eid].leaf == ex.leaf
        assert mirrored.exits[eid].motif == ex.motif[::-1]


def test_exit_bits_preset():
    f = build_forest(Sequence("db", "TGACTCGACC"), SearchConfig(5, 1, 4))
    assert all(ex.string_bits == 1 and ex.d == 1 for ex in f.exits.values())


# --- CAF1 serialization ---------------------------------------------------

def test_golden_round_trip():
    text = (DATA / "act_m3_d1_literal.caf").read_text()
    f = deserialize(text)
    assert node_counts(f) == (21, 10)
    assert serialize(f) == text
    assert serialize(build_forest("ACT", SearchConfig(3, 1, 4), PAPER_LITERAL)) == text


@settings(max_examples=30, deadline=None)
@given(random_db, st.sampled_from([MOTIF_REVERSED, PAPER_LITERAL]), st.integers(1, 31))
def test_round_trip_random(case, orientation, bits):
    m, d, db = case
    f = build_forest(db, SearchConfig(m, d, 5), orientation)
    for ex in f.exits.values():
        ex.string_bits = bits | 1
    g = deserialize(serialize(f))
    assert g == f


def test_d_zero_file_shape():
    f = build_forest("GATTACA", SearchConfig(7, 0, 1))
    lines = serialize(f).splitlines()
    assert lines[0].startswith("CAF1 ")
    assert sum(line.startswith("N ") for line in lines) == 7
    assert sum(line.startswith("X ") for line in lines) == 1


def test_comments_and_renumbered_ids():
    text = """# a forest
CAF1 m=2 d=0 n=1 alphabet=ACGT orientation=paper-literal
N 7 2 C 3
N 3 1 A -
X 9 7 AC 1
"""
    f = deserialize(text)
    assert node_counts(f) == (2, 1)
    assert f.exits[9].motif == "AC"


def test_empty_forest():
    f = deserialize("CAF1 m=3 d=1 n=2 alphabet=ACGT orientation=motif-reversed\n")
    assert node_counts(f) == (0, 0)


HEADER = "CAF1 m=2 d=0 n=1 alphabet=ACGT orientation=paper-literal"


@pytest.mark.parametrize(
    "body,lineno,message",
    [
        ("CAF2 m=2 d=0 n=1 alphabet=ACGT orientation=paper-literal\n", 1, "CAF1"),
        (HEADER + "\nN 0 1 A -\nQ what\n", 3, "malformed"),
        (HEADER + "\nN 0 1 A -\nN 1 2 C 5\nX 0 1 AC 1\n", 3, "missing parent id 5"),
        (HEADER + "\nN 0 1 A -\nN 1 2 C 0\nN 2 2 C 0\nX 0 1 AC 1\nX 1 2 AC 1\n", 4, "duplicate sibling"),
        (HEADER + "\nN 0 1 A -\nN 1 2 C 0\nX 0 4 AC 1\n", 4, "missing leaf id 4"),
        (HEADER + "\nN 0 1 A -\nN 1 2 C 0\nX 0 1 AG 1\n", 4, "does not match"),
        (HEADER + "\nN 0 1 A -\nN 1 2 C 0\n", 3, "no exit"),
        (HEADER + "\nN 0 1 N -\n", 2, "not in alphabet"),
        (HEADER + "\nN 0 1 A -\nN 1 2 C 0\nX 0 1 AC zz\n", 4, "hex"),
    ],
)
def test_format_errors(body, lineno, message):
    with pytest.raises(ForestFormatError, match=message) as err:
        deserialize(body)
    assert err.value.lineno == lineno
    assert f"line {lineno}" in str(err.value)
