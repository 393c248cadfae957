# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact integer matrix rank (fraction-free Bareiss elimination).

Works in 64-bit machine integers with an explicit magnitude guard: if any
intermediate value could overflow, OverflowError is raised and the caller
retries with the arbitrary-precision pure-Python fallback.
"""

from libc.stdint cimport int64_t

# products of two values below this bound fit in int64 with room to spare
cdef int64_t GUARD = 2147483647  # 2**31 - 1


def rank_int64(long long[:, ::1] m):
    cdef Py_ssize_t nr = m.shape[0]
    cdef Py_ssize_t nc = m.shape[1]
    if nr == 0 or nc == 0:
        return 0
    cdef Py_ssize_t pr = 0, col, r, c, piv
    cdef int64_t prev = 1, pivot, factor, val, top, tmp
    for col in range(nc):
        piv = -1
        for r in range(pr, nr):
            if m[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != pr:
            for c in range(nc):
                tmp = m[pr, c]
                m[pr, c] = m[piv, c]
                m[piv, c] = tmp
        pivot = m[pr, col]
        if pivot > GUARD or pivot < -GUARD:
            raise OverflowError("pivot exceeds the 64-bit guard")
        for r in range(pr + 1, nr):
            factor = m[r, col]
            if factor > GUARD or factor < -GUARD:
                raise OverflowError("entry exceeds the 64-bit guard")
            for c in range(col + 1, nc):
                val = m[r, c]
                top = m[pr, c]
                if val > GUARD or val < -GUARD or top > GUARD or top < -GUARD:
                    raise OverflowError("entry exceeds the 64-bit guard")
                m[r, c] = (pivot * val - factor * top) // prev
            m[r, col] = 0
        prev = pivot
        pr += 1
        if pr == nr:
            break
    return pr
