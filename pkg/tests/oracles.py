"""Test-only brute-force helpers, independent of the package's generators."""
import random
from itertools import product

from systolic_cas import SearchConfig, Sequence


def dist(a, b):
    return sum(x != y for x, y in zip(a, b))


def all_motifs(m, symbols="ACGT"):
    return ["".join(p) for p in product(symbols, repeat=m)]


def brute_ball(g, d, symbols="ACGT"):
    return {x for x in all_motifs(len(g), symbols) if dist(x, g) <= d}


def brute_union(db, m, d, symbols="ACGT"):
    wins = {db[i:i + m] for i in range(len(db) - m + 1)}
    return {x for x in all_motifs(m, symbols) if any(dist(x, w) <= d for w in wins)}


def prefix_count(paths):
    """Nodes in a prefix-shared trie = number of distinct non-empty prefixes."""
    return len({p[:i] for p in paths for i in range(1, len(p) + 1)})


def unrestricted_cas(strings, m, d, symbols="ACGT"):
    def near(s, x):
        return any(dist(s[i:i + m], x) <= d for i in range(len(s) - m + 1))
    return sorted(x for x in all_motifs(m, symbols) if all(near(s, x) for s in strings))


def random_dna(rng, length):
    return "".join(rng.choice("ACGT") for _ in range(length))


def random_instance(rng, max_n=5, max_l=30, max_m=6, max_d=2):
    m = rng.randint(1, max_m)
    d = rng.randint(0, min(max_d, m))
    n = rng.randint(1, max_n)
    strings = [Sequence(f"s{i + 1}", random_dna(rng, rng.randint(m, max(m, max_l))))
               for i in range(n)]
    return strings, SearchConfig(m=m, d=d, n=n)


def instances(count, seed=0, **kw):
    rng = random.Random(seed)
    return [random_instance(rng, **kw) for _ in range(count)]
