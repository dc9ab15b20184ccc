"""Pure-Python tick kernel; the Cython ``_kernel`` mirrors it line for line.

State lives in flat parallel arrays indexed so that every parent precedes its
children. Sweeping indices high to low lets each node read its parent's slot
before the parent overwrites it, which gives a synchronous update in place.

Bit vectors are integers whose bit 0 is the rightmost (newest) position and
bit ``level - 1`` the leftmost (oldest).
"""

BLANK = 0
CHAR = 1
NUM = 2
MAX_SUM = 255


def step(parent, level, sym, bv, kind, val, leaf, ekind, evalue, hit, in_kind, in_val, d):
    for e in range(len(leaf)):
        p = leaf[e]
        k = kind[p]
        v = val[p]
        ekind[e] = k
        evalue[e] = v
        if k == NUM and v <= d:
            hit[e] = 1
    for i in range(len(parent) - 1, -1, -1):
        p = parent[i]
        if p < 0:
            k = in_kind
            v = in_val
        else:
            k = kind[p]
            v = val[p]
        if k == CHAR:
            lv = level[i]
            bv[i] = ((bv[i] << 1) | (v != sym[i])) & ((1 << lv) - 1)
        elif k == NUM:
            v += (bv[i] >> (level[i] - 1)) & 1
            if v > MAX_SUM:
                v = MAX_SUM
        kind[i] = k
        val[i] = v


def _plain(arr):
    return [int(x) for x in arr]


def run(parent, level, sym, bv, kind, val, leaf, ekind, evalue, hit, tok_kind, tok_val, d):
    """Feed every token in order; arrays are updated in place."""
    parent_l, level_l, sym_l, leaf_l = (_plain(a) for a in (parent, level, sym, leaf))
    bv_l, kind_l, val_l, ekind_l, evalue_l, hit_l = (
        _plain(a) for a in (bv, kind, val, ekind, evalue, hit)
    )
    for t in range(len(tok_kind)):
        step(parent_l, level_l, sym_l, bv_l, kind_l, val_l, leaf_l, ekind_l, evalue_l,
             hit_l, tok_kind[t], tok_val[t], d)
    bv[:] = bv_l
    kind[:] = kind_l
    val[:] = val_l
    ekind[:] = ekind_l
    evalue[:] = evalue_l
    hit[:] = hit_l
