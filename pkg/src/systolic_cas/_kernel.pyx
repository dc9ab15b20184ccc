# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled tick kernel. Same contract as ``_kernel_py``; levels up to 63."""

from libc.stdint cimport int64_t, uint64_t, uint8_t

DEF BLANK = 0
DEF CHAR = 1
DEF NUM = 2
DEF MAX_SUM = 255

MAX_LEVEL = 63


cdef inline void _step(const int64_t[:] parent, const int64_t[:] level, const int64_t[:] sym,
                       uint64_t[:] bv, int64_t[:] kind, int64_t[:] val,
                       const int64_t[:] leaf, int64_t[:] ekind, int64_t[:] evalue,
                       uint8_t[:] hit, int64_t in_kind, int64_t in_val, int64_t d) noexcept nogil:
    cdef Py_ssize_t i, e, p
    cdef int64_t k, v, lv
    for e in range(leaf.shape[0]):
        p = leaf[e]
        k = kind[p]
        v = val[p]
        ekind[e] = k
        evalue[e] = v
        if k == NUM and v <= d:
            hit[e] = 1
    for i in range(parent.shape[0] - 1, -1, -1):
        p = parent[i]
        if p < 0:
            k = in_kind
            v = in_val
        else:
            k = kind[p]
            v = val[p]
        if k == CHAR:
            lv = level[i]
            bv[i] = ((bv[i] << 1) | (v != sym[i])) & ((<uint64_t>1 << lv) - 1)
        elif k == NUM:
            v += (bv[i] >> (level[i] - 1)) & 1
            if v > MAX_SUM:
                v = MAX_SUM
        kind[i] = k
        val[i] = v


def step(const int64_t[:] parent, const int64_t[:] level, const int64_t[:] sym,
         uint64_t[:] bv, int64_t[:] kind, int64_t[:] val,
         const int64_t[:] leaf, int64_t[:] ekind, int64_t[:] evalue,
         uint8_t[:] hit, int64_t in_kind, int64_t in_val, int64_t d):
    with nogil:
        _step(parent, level, sym, bv, kind, val, leaf, ekind, evalue, hit, in_kind, in_val, d)


def run(const int64_t[:] parent, const int64_t[:] level, const int64_t[:] sym,
        uint64_t[:] bv, int64_t[:] kind, int64_t[:] val,
        const int64_t[:] leaf, int64_t[:] ekind, int64_t[:] evalue,
        uint8_t[:] hit, const int64_t[:] tok_kind, const int64_t[:] tok_val, int64_t d):
    cdef Py_ssize_t t
    with nogil:
        for t in range(tok_kind.shape[0]):
            _step(parent, level, sym, bv, kind, val, leaf, ekind, evalue, hit,
                  tok_kind[t], tok_val[t], d)
