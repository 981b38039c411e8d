# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row-sum kernels for coboundary bitmasks (4t <= 60 bits)."""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport uint64_t

cnp.import_array()

cdef extern from *:
    """
    static inline int hz_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    """
    int hz_popcount(unsigned long long x) nogil


cdef struct RowTable:
    int t
    int nrows
    uint64_t a
    uint64_t b
    uint64_t full
    int q[64]
    int c[64]
    uint64_t rneg[64]


cdef RowTable _table(int t, object rneg_nibbles):
    cdef RowTable tab
    cdef int i, n, k
    cdef uint64_t pat
    tab.t = t
    tab.nrows = 0
    tab.a = 0
    tab.b = 0
    for k in range(t):
        tab.a |= (<uint64_t>0x5) << (4 * k)
        tab.b |= (<uint64_t>0x3) << (4 * k)
    tab.full = ((<uint64_t>1) << (4 * t)) - 1
    for n in range(5, 2 * t + 3):
        i = tab.nrows
        tab.q[i] = (n - 1) // 4
        tab.c[i] = (n - 1) % 4
        pat = 0
        for k in range(t):
            pat |= (<uint64_t>rneg_nibbles[tab.c[i]]) << (4 * k)
        tab.rneg[i] = pat
        tab.nrows += 1
    return tab


cdef inline bint _passes(uint64_t s, RowTable* tab) noexcept nogil:
    cdef int i, q, c
    cdef int two_t = 2 * tab.t
    cdef uint64_t p
    for i in range(tab.nrows):
        q = tab.q[i]
        c = tab.c[i]
        p = ((s >> (4 * q)) | (s << (4 * (tab.t - q)))) & tab.full
        if c & 1:
            p = ((p & tab.a) << 1) | ((p >> 1) & tab.a)
        if c & 2:
            p = ((p & tab.b) << 2) | ((p >> 2) & tab.b)
        if hz_popcount(s ^ p ^ tab.rneg[i]) != two_t:
            return False
    return True


def test_masks(int t, masks, rneg_nibbles):
    """Boolean array: does each mask pass the cocyclic row test."""
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] arr = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef Py_ssize_t i, n = arr.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out = np.zeros(n, dtype=np.uint8)
    cdef RowTable tab = _table(t, rneg_nibbles)
    with nogil:
        for i in range(n):
            out[i] = _passes(arr[i], &tab)
    return out.astype(bool)


def scan_product(int t, lo, hi, rneg_nibbles):
    """Masks ``lo[i] | hi[j]`` that pass the row test, in (j, i) order."""
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] lo_a = np.ascontiguousarray(lo, dtype=np.uint64)
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] hi_a = np.ascontiguousarray(hi, dtype=np.uint64)
    cdef Py_ssize_t i, j, nlo = lo_a.shape[0], nhi = hi_a.shape[0]
    cdef RowTable tab = _table(t, rneg_nibbles)
    cdef uint64_t h, s
    hits = []
    for j in range(nhi):
        h = hi_a[j]
        for i in range(nlo):
            s = lo_a[i] | h
            if _passes(s, &tab):
                hits.append(s)
    return np.array(hits, dtype=np.uint64)
