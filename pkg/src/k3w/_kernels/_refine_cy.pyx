# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled color refinement; same output as _refine_py.refine."""

from libc.stdlib cimport malloc, free


cdef inline int _cmp(long *rows, Py_ssize_t w, int a, int b) nogil:
    cdef Py_ssize_t i
    cdef long *ra = rows + a * w
    cdef long *rb = rows + b * w
    for i in range(w):
        if ra[i] < rb[i]:
            return -1
        if ra[i] > rb[i]:
            return 1
    return 0


cdef void _msort(long *rows, Py_ssize_t w, int *order, int *tmp, Py_ssize_t n) nogil:
    # bottom-up merge sort, stable
    cdef Py_ssize_t width = 1, lo, mid, hi, i, j, k
    cdef int *src = order
    cdef int *dst = tmp
    cdef int *sw
    while width < n:
        lo = 0
        while lo < n:
            mid = lo + width if lo + width < n else n
            hi = lo + 2 * width if lo + 2 * width < n else n
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if _cmp(rows, w, src[j], src[i]) < 0:
                    dst[k] = src[j]
                    j += 1
                else:
                    dst[k] = src[i]
                    i += 1
                k += 1
            while i < mid:
                dst[k] = src[i]
                i += 1
                k += 1
            while j < hi:
                dst[k] = src[j]
                j += 1
                k += 1
            lo += 2 * width
        sw = src
        src = dst
        dst = sw
        width *= 2
    if src != order:
        for i in range(n):
            order[i] = src[i]


def refine(const int[:] indptr, const int[:] indices, colors):
    """Refine ``colors`` to the coarsest equitable partition below it.

    Returns (colors, number of cells) with colors 0..k-1.
    """
    cdef Py_ssize_t n = len(colors)
    cdef Py_ssize_t v, i, j, d, maxdeg = 0, w
    cdef long x
    cdef int k, r
    if n == 0:
        return [], 0
    for v in range(n):
        d = indptr[v + 1] - indptr[v]
        if d > maxdeg:
            maxdeg = d
    w = 2 + maxdeg
    cdef long *col = <long *> malloc(n * sizeof(long))
    cdef long *rows = <long *> malloc(n * w * sizeof(long))
    cdef int *order = <int *> malloc(n * sizeof(int))
    cdef int *tmp = <int *> malloc(n * sizeof(int))
    if col == NULL or rows == NULL or order == NULL or tmp == NULL:
        free(col); free(rows); free(order); free(tmp)
        raise MemoryError()
    try:
        for v in range(n):
            col[v] = colors[v]
        k = len(set(colors))
        while True:
            with nogil:
                for v in range(n):
                    d = indptr[v + 1] - indptr[v]
                    rows[v * w] = col[v]
                    rows[v * w + 1] = d
                    for i in range(d):
                        # insertion sort of neighbour colors
                        x = col[indices[indptr[v] + i]]
                        j = i
                        while j > 0 and rows[v * w + 1 + j] > x:
                            rows[v * w + 2 + j] = rows[v * w + 1 + j]
                            j -= 1
                        rows[v * w + 2 + j] = x
                    for i in range(d, maxdeg):
                        rows[v * w + 2 + i] = -1
                    order[v] = <int> v
                _msort(rows, w, order, tmp, n)
                r = 0
                col[order[0]] = 0
                for i in range(1, n):
                    if _cmp(rows, w, order[i - 1], order[i]) != 0:
                        r += 1
                    col[order[i]] = r
            if r + 1 == k:
                return [col[v] for v in range(n)], r + 1
            k = r + 1
    finally:
        free(col)
        free(rows)
        free(order)
        free(tmp)
