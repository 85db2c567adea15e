# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels.

Contract identical to `_pure`: assignments are integers with bit i set
meaning variable i = -1; a constraint (mask, parity) holds when
popcount(x & mask) is congruent to parity mod 2.
"""

from libc.stdint cimport uint32_t, int64_t

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil

BACKEND = "cython"

DEF MAX_CONSTRAINTS = 64


def satisfaction_histogram(masks, parities, int n_vars):
    """Histogram of assignments by number of satisfied parity constraints."""
    cdef int k = len(masks)
    if k > MAX_CONSTRAINTS:
        raise ValueError("too many constraints")
    if n_vars > 30:
        raise ValueError("too many variables")
    cdef uint32_t[MAX_CONSTRAINTS] cmask
    cdef int[MAX_CONSTRAINTS] cpar
    cdef int i
    for i in range(k):
        cmask[i] = masks[i]
        cpar[i] = parities[i]
    cdef int64_t[MAX_CONSTRAINTS + 1] hist
    for i in range(k + 1):
        hist[i] = 0
    cdef uint32_t x, limit = (<uint32_t>1) << n_vars
    cdef int sat
    with nogil:
        for x in range(limit):
            sat = 0
            for i in range(k):
                if (__builtin_popcount(x & cmask[i]) & 1) == cpar[i]:
                    sat += 1
            hist[sat] += 1
    return [hist[i] for i in range(k + 1)]


def max_weighted_parity(masks, signs, int n_vars):
    """Max of sum_k signs[k] * (±1 parity product); smallest-witness argmax."""
    cdef int k = len(masks)
    if k > MAX_CONSTRAINTS:
        raise ValueError("too many terms")
    if n_vars > 30:
        raise ValueError("too many variables")
    cdef uint32_t[MAX_CONSTRAINTS] cmask
    cdef int[MAX_CONSTRAINTS] csign
    cdef int i
    for i in range(k):
        cmask[i] = masks[i]
        csign[i] = signs[i]
    cdef uint32_t x, limit = (<uint32_t>1) << n_vars
    cdef uint32_t witness = 0
    cdef int value, best = -2147483647
    with nogil:
        for x in range(limit):
            value = 0
            for i in range(k):
                if __builtin_popcount(x & cmask[i]) & 1:
                    value -= csign[i]
                else:
                    value += csign[i]
            if value > best:
                best = value
                witness = x
    return best, int(witness)
