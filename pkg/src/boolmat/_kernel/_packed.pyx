# cython: language_level=3, boundscheck=False, wraparound=False
"""Single-word join-meet kernels: masks must fit one 64-bit word."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

name = "packed64"


cdef uint64_t *_load(object seq, Py_ssize_t size) except NULL:
    cdef uint64_t *buf = <uint64_t *> malloc(size * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    try:
        for i in range(size):
            buf[i] = seq[i]
    except BaseException:
        free(buf)
        raise
    return buf


def matmul(Py_ssize_t n, Py_ssize_t m, Py_ssize_t p, a, b):
    """Row-major product: out[i*p+j] = OR_t (a[i*m+t] & b[t*p+j])."""
    cdef uint64_t *wa = _load(a, n * m)
    cdef uint64_t *wb
    cdef uint64_t *wc
    cdef Py_ssize_t i, j, t
    cdef uint64_t at
    try:
        wb = _load(b, m * p)
    except BaseException:
        free(wa)
        raise
    wc = <uint64_t *> malloc(n * p * sizeof(uint64_t))
    if wc == NULL:
        free(wa)
        free(wb)
        raise MemoryError()
    for i in range(n * p):
        wc[i] = 0
    for i in range(n):
        for t in range(m):
            at = wa[i * m + t]
            if at == 0:
                continue
            for j in range(p):
                wc[i * p + j] |= at & wb[t * p + j]
    out = [0] * (n * p)
    for i in range(n * p):
        out[i] = wc[i]
    free(wa)
    free(wb)
    free(wc)
    return out


def matvec(Py_ssize_t n, Py_ssize_t m, a, v):
    """out[i] = OR_t (a[i*m+t] & v[t])."""
    cdef uint64_t *wa = _load(a, n * m)
    cdef uint64_t *wv
    cdef Py_ssize_t i, t
    cdef uint64_t acc
    try:
        wv = _load(v, m)
    except BaseException:
        free(wa)
        raise
    out = [0] * n
    for i in range(n):
        acc = 0
        for t in range(m):
            acc |= wa[i * m + t] & wv[t]
        out[i] = acc
    free(wa)
    free(wv)
    return out
