# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the alternating composition sum.

The composition enumeration is the one exponential inner loop in the
package (2^(m-1) terms per cell), so it is worth doing in C.  Products are
accumulated in 128-bit integers; the Python-side dispatcher only routes a
call here after proving (with an exact bound) that no intermediate value
can overflow.  Everything else stays in Python.
"""

from libc.stdlib cimport free, malloc

ctypedef long long i64

cdef extern from *:
    ctypedef long long i128 "__int128"


cdef object _i128_to_pyint(i128 value):
    cdef bint negative = value < 0
    if negative:
        value = -value
    cdef unsigned long long lo = <unsigned long long> (value & <i128> 0xFFFFFFFFFFFFFFFF)
    cdef unsigned long long hi = <unsigned long long> (value >> 64)
    result = ((<object> hi) << 64) | (<object> lo)
    return -result if negative else result


cdef i128 _tail(int remaining, i128 prefix, int sign, i64 *rest) noexcept nogil:
    if remaining == 0:
        return prefix if sign > 0 else -prefix
    cdef i128 total = 0
    cdef int p
    for p in range(1, remaining + 1):
        if rest[p] != 0:
            total += _tail(remaining - p, prefix * rest[p], -sign, rest)
    return total


def signed_composition_sum(int l, int m, first_table, rest_table):
    """Signed sum over all compositions of m with precomputed coefficient
    tables (index = part size).  Caller guarantees 128-bit safety."""
    cdef int n = m + 1
    cdef i64 *first = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *rest = <i64 *> malloc(n * sizeof(i64))
    if first == NULL or rest == NULL:
        free(first)
        free(rest)
        raise MemoryError()
    cdef int i
    try:
        for i in range(n):
            first[i] = first_table[i]
            rest[i] = rest_table[i]
        total = _total(m, first, rest)
    finally:
        free(first)
        free(rest)
    return total


cdef object _total(int m, i64 *first, i64 *rest):
    cdef i128 acc = 0
    cdef int p
    with nogil:
        for p in range(1, m + 1):
            if first[p] != 0:
                acc += _tail(m - p, <i128> first[p], -1, rest)
    return _i128_to_pyint(acc)
