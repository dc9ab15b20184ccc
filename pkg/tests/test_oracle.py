import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_union, instances, unrestricted_cas
from systolic_cas.oracle import CasInstance, oracle_cas, oracle_potential
from systolic_cas.sequence import SearchConfig, Sequence

FIG1 = ["TGACTCGACC", "TACTGCCTCG", "CTGGCTAATA", "ATTCTGACT"]


def inst(strings, m, d):
    return CasInstance([Sequence(f"s{i}", s) for i, s in enumerate(strings)],
                       SearchConfig(m, d, len(strings)))


def test_potential_examples():
    assert oracle_potential("TCT", "ACT", 1)
    assert not oracle_potential("TCT", "ACT", 0)
    assert oracle_potential("TGACTCGACC", "TGACT", 0)


def test_single_string_is_union():
    assert set(oracle_cas(inst(["TGACTCGA"], 4, 1))) == brute_union("TGACTCGA", 4, 1)


def test_d_equals_m_keeps_union():
    strings = ["ACG", "TTTT", "GAGA"]
    assert set(oracle_cas(inst(strings, 3, 3))) == brute_union("ACG", 3, 3)


def test_fig1_contains_tgact():
    result = oracle_cas(inst(FIG1, 5, 1))
    assert "TGACT" in result
    assert result == sorted(result)
    assert result == unrestricted_cas(FIG1, 5, 1)


def test_instance_validation():
    with pytest.raises(ValueError):
        CasInstance([Sequence("a", "ACGT")], SearchConfig(3, 1, 2))
    with pytest.raises(ValueError):
        CasInstance([Sequence("a", "AC")], SearchConfig(3, 1, 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_restriction_soundness(seed):
    (strings, cfg), = instances(1, seed=seed, max_m=4, max_l=12)
    texts = [s.symbols for s in strings]
    assert oracle_cas(CasInstance(strings, cfg)) == unrestricted_cas(texts, cfg.m, cfg.d)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_monotone_in_d_and_strings(seed):
    (strings, cfg), = instances(1, seed=seed, max_l=15)
    base = set(oracle_cas(CasInstance(strings, cfg)))
    if cfg.d < cfg.m:
        looser = SearchConfig(cfg.m, cfg.d + 1, cfg.n)
        assert base <= set(oracle_cas(CasInstance(strings, looser)))
    more = strings + [Sequence("extra", strings[-1].symbols[::-1])]
    assert set(oracle_cas(CasInstance(more, SearchConfig(cfg.m, cfg.d, cfg.n + 1)))) <= base
