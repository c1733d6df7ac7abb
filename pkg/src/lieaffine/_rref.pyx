# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free Gauss-Jordan elimination.

Runs on int64 storage while no intermediate overflows, and restarts on
Python integers otherwise.
"""
from libc.stdlib cimport malloc, free
from math import gcd as _pygcd

cdef extern from *:
    """
    static inline int lf_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int lf_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int lf_mul(long long a, long long b, long long *r) nogil
    int lf_sub(long long a, long long b, long long *r) nogil

cdef long long LIMIT = 1LL << 62


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef void _make_primitive(long long *row, Py_ssize_t n) nogil:
    cdef long long g = 0
    cdef Py_ssize_t j
    for j in range(n):
        if row[j] != 0:
            g = _gcd(g, row[j])
            if g == 1:
                return
    if g > 1:
        for j in range(n):
            row[j] = row[j] // g


cdef int _rref_c(long long *a, Py_ssize_t m, Py_ssize_t n, Py_ssize_t *piv, Py_ssize_t *rank) nogil:
    """Returns 0 on success, 1 on overflow."""
    cdef Py_ssize_t r = 0, c, i, k, j
    cdef long long p, e, g, fp, fe, x, y, t
    cdef long long *prow
    cdef long long *row
    for c in range(n):
        if r == m:
            break
        i = r
        while i < m and a[i * n + c] == 0:
            i += 1
        if i == m:
            continue
        if i != r:
            for j in range(n):
                t = a[r * n + j]
                a[r * n + j] = a[i * n + j]
                a[i * n + j] = t
        prow = a + r * n
        if prow[c] < 0:
            for j in range(n):
                prow[j] = -prow[j]
        _make_primitive(prow, n)
        p = prow[c]
        for k in range(m):
            if k == r:
                continue
            row = a + k * n
            e = row[c]
            if e == 0:
                continue
            g = _gcd(p, e)
            fp = p // g
            fe = e // g
            for j in range(n):
                if lf_mul(fp, row[j], &x):
                    return 1
                if lf_mul(fe, prow[j], &y):
                    return 1
                if lf_sub(x, y, &row[j]):
                    return 1
                if row[j] >= LIMIT or row[j] <= -LIMIT:
                    return 1
            _make_primitive(row, n)
        piv[r] = c
        r += 1
    rank[0] = r
    return 0


def _rref_object(list rows, Py_ssize_t ncols):
    cdef list work = [list(src) for src in rows]
    cdef Py_ssize_t nrows = len(work)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, k
    cdef list prow, row
    for c in range(ncols):
        if r == nrows:
            break
        i = r
        while i < nrows and (<list>work[i])[c] == 0:
            i += 1
        if i == nrows:
            continue
        if i != r:
            work[r], work[i] = work[i], work[r]
        prow = work[r]
        if prow[c] < 0:
            prow = [-x for x in prow]
        g = _pygcd(*prow)
        if g > 1:
            prow = [x // g for x in prow]
        work[r] = prow
        p = prow[c]
        for k in range(nrows):
            if k == r:
                continue
            row = work[k]
            e = row[c]
            if e == 0:
                continue
            g = _pygcd(p, e)
            fp = p // g
            fe = e // g
            row = [fp * x - fe * y for x, y in zip(row, prow)]
            g = _pygcd(*row)
            if g > 1:
                row = [x // g for x in row]
            work[k] = row
        pivots.append(c)
        r += 1
    return work[:r], pivots


def rref_int(list rows, Py_ssize_t ncols):
    """Same contract as the pure-Python ``rref_int``."""
    cdef Py_ssize_t m = len(rows), n = ncols, i, j
    cdef long long *a
    cdef Py_ssize_t *piv
    cdef Py_ssize_t rank = 0
    cdef int status
    cdef list row
    if m == 0 or n == 0:
        return _rref_object(rows, ncols)
    for row in rows:
        for x in row:
            if x >= LIMIT or x <= -LIMIT:
                return _rref_object(rows, ncols)
    a = <long long *>malloc(m * n * sizeof(long long))
    piv = <Py_ssize_t *>malloc(n * sizeof(Py_ssize_t))
    if a == NULL or piv == NULL:
        free(a)
        free(piv)
        raise MemoryError()
    try:
        for i in range(m):
            row = rows[i]
            for j in range(n):
                a[i * n + j] = row[j]
        with nogil:
            status = _rref_c(a, m, n, piv, &rank)
        if status:
            return _rref_object(rows, ncols)
        return ([[a[i * n + j] for j in range(n)] for i in range(rank)],
                [piv[i] for i in range(rank)])
    finally:
        free(a)
        free(piv)
