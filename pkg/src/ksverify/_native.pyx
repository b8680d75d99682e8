# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled truncated-series kernels (the hot loops of the campaigns).

Same contract as ksverify._reference; see that module for documentation.
Coefficient buffers may be read-only, results are fresh numpy arrays.
"""

import numpy as np

BACKEND = "cython"


def mul(a, b):
    cdef const double complex[::1] av = a
    cdef const double complex[::1] bv = b
    cdef Py_ssize_t n = av.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t k, j
    cdef double complex acc
    for k in range(n):
        acc = 0
        for j in range(k + 1):
            acc = acc + av[j] * bv[k - j]
        ov[k] = acc
    return out


def reciprocal(a):
    cdef const double complex[::1] av = a
    cdef Py_ssize_t n = av.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] rv = out
    cdef Py_ssize_t k, j
    cdef double complex acc
    cdef double complex c0 = av[0]
    rv[0] = 1.0 / c0
    for k in range(1, n):
        acc = 0
        for j in range(1, k + 1):
            acc = acc + av[j] * rv[k - j]
        rv[k] = -acc / c0
    return out


def compose(outer, inner):
    cdef const double complex[::1] ov = outer
    cdef const double complex[::1] iv = inner
    cdef Py_ssize_t n = ov.shape[0]
    cur = np.zeros(n, dtype=np.complex128)
    nxt = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] cv = cur
    cdef double complex[::1] tv = nxt
    cdef Py_ssize_t k, i, j
    cdef double complex ci
    cv[0] = ov[n - 1]
    for k in range(n - 2, -1, -1):
        # next = (cur * inner) truncated; inner[0] == 0 so j starts at 1
        for i in range(n):
            tv[i] = 0
        for i in range(n):
            ci = cv[i]
            if ci != 0:
                for j in range(1, n - i):
                    tv[i + j] = tv[i + j] + ci * iv[j]
        cur, nxt = nxt, cur
        cv, tv = tv, cv
        cv[0] = cv[0] + ov[k]
    return cur


def eval_many(c, zs):
    cdef const double complex[::1] cv = c
    cdef const double complex[::1] zv = zs
    cdef Py_ssize_t n = cv.shape[0]
    cdef Py_ssize_t m = zv.shape[0]
    out = np.empty(m, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, k
    cdef double complex acc, z
    for i in range(m):
        z = zv[i]
        acc = cv[n - 1]
        for k in range(n - 2, -1, -1):
            acc = acc * z + cv[k]
        ov[i] = acc
    return out
