# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled batched kernels; see _kernels_py.py for the reference semantics."""

import numpy as np
cimport numpy as cnp

from libc.math cimport fabs, INFINITY

cnp.import_array()

ADD = 0
SUB = 1
MUL = 2
DIV = 3


cdef inline double _min2(double x, double y) noexcept nogil:
    return y if y < x else x


cdef inline double _max2(double x, double y) noexcept nogil:
    return y if y > x else x


cdef inline void _t1(int op, double al, double au, double bl, double bu,
                     double* lo, double* hi) noexcept nogil:
    cdef double p1, p2, p3, p4, t
    if op == 0:
        lo[0] = al + bl
        hi[0] = au + bu
        return
    if op == 1:
        lo[0] = al - bu
        hi[0] = au - bl
        return
    if op == 3:
        t = 1.0 / bu
        bu = 1.0 / bl
        bl = t
    p1 = al * bl
    p2 = al * bu
    p3 = au * bl
    p4 = au * bu
    lo[0] = _min2(_min2(p1, p2), _min2(p3, p4))
    hi[0] = _max2(_max2(p1, p2), _max2(p3, p4))


def _as2d(x):
    x = np.ascontiguousarray(x, dtype=np.float64)
    if x.ndim != 2 or x.shape[1] != 4:
        raise ValueError(f"expected an (N, 4) array, got shape {x.shape}")
    return x


def _check_op(int op):
    if op < 0 or op > 3:
        raise ValueError(f"unknown op code {op}")


def type1_batch(int op, al, au, bl, bu):
    _check_op(op)
    cdef double[::1] a1 = np.ascontiguousarray(al, dtype=np.float64)
    cdef double[::1] a2 = np.ascontiguousarray(au, dtype=np.float64)
    cdef double[::1] b1 = np.ascontiguousarray(bl, dtype=np.float64)
    cdef double[::1] b2 = np.ascontiguousarray(bu, dtype=np.float64)
    cdef Py_ssize_t i, n = a1.shape[0]
    lo = np.empty(n)
    hi = np.empty(n)
    cdef double[::1] lv = lo
    cdef double[::1] hv = hi
    with nogil:
        for i in range(n):
            _t1(op, a1[i], a2[i], b1[i], b2[i], &lv[i], &hv[i])
    return lo, hi


def formula_batch(int op, A, B):
    _check_op(op)
    cdef double[:, ::1] a = _as2d(A)
    cdef double[:, ::1] b = _as2d(B)
    cdef Py_ssize_t i, n = a.shape[0]
    out = np.empty((n, 4))
    cdef double[:, ::1] o = out
    cdef double b1, b2, b3, b4, c1, c2, c3, c4, d1, d2, d3, d4
    with nogil:
        for i in range(n):
            if op == 0:
                o[i, 0] = a[i, 0] + b[i, 0]
                o[i, 1] = a[i, 1] + b[i, 1]
                o[i, 2] = a[i, 2] + b[i, 2]
                o[i, 3] = a[i, 3] + b[i, 3]
                continue
            if op == 1:
                o[i, 0] = a[i, 0] - b[i, 3]
                o[i, 1] = a[i, 1] - b[i, 2]
                o[i, 2] = a[i, 2] - b[i, 1]
                o[i, 3] = a[i, 3] - b[i, 0]
                continue
            if op == 3:
                b1 = 1.0 / b[i, 3]
                b2 = 1.0 / b[i, 2]
                b3 = 1.0 / b[i, 1]
                b4 = 1.0 / b[i, 0]
            else:
                b1 = b[i, 0]
                b2 = b[i, 1]
                b3 = b[i, 2]
                b4 = b[i, 3]
            c1 = a[i, 0] * b1
            c2 = a[i, 0] * b4
            c3 = a[i, 3] * b4
            c4 = a[i, 3] * b1
            d1 = a[i, 1] * b2
            d2 = a[i, 1] * b3
            d3 = a[i, 2] * b2
            d4 = a[i, 2] * b3
            o[i, 0] = _min2(_min2(c1, c2), _min2(c3, c4))
            o[i, 1] = _min2(_min2(d1, d2), _min2(d3, d4))
            o[i, 2] = _max2(_max2(d1, d2), _max2(d3, d4))
            o[i, 3] = _max2(_max2(c1, c2), _max2(c3, c4))
    return out


def corner_batch(int op, A, B):
    _check_op(op)
    cdef double[:, ::1] a = _as2d(A)
    cdef double[:, ::1] b = _as2d(B)
    cdef Py_ssize_t r, n = a.shape[0]
    cdef int i, j, k, m
    cdef double lo, hi, lmin, lmax, hmin, hmax
    out = np.empty((n, 4))
    cdef double[:, ::1] o = out
    with nogil:
        for r in range(n):
            lmin = INFINITY
            lmax = -INFINITY
            hmin = INFINITY
            hmax = -INFINITY
            for i in range(2):
                for j in range(2, 4):
                    for k in range(2):
                        for m in range(2, 4):
                            _t1(op, a[r, i], a[r, j], b[r, k], b[r, m], &lo, &hi)
                            lmin = _min2(lmin, lo)
                            lmax = _max2(lmax, lo)
                            hmin = _min2(hmin, hi)
                            hmax = _max2(hmax, hi)
            o[r, 0] = lmin
            o[r, 1] = lmax
            o[r, 2] = hmin
            o[r, 3] = hmax
    return out


def membership_scan(int op, al, au, bl, bu, claimed):
    _check_op(op)
    cdef double[::1] a1 = np.ascontiguousarray(al, dtype=np.float64)
    cdef double[::1] a2 = np.ascontiguousarray(au, dtype=np.float64)
    cdef double[::1] b1 = np.ascontiguousarray(bl, dtype=np.float64)
    cdef double[::1] b2 = np.ascontiguousarray(bu, dtype=np.float64)
    cdef double q1 = claimed[0], q2 = claimed[1], q3 = claimed[2], q4 = claimed[3]
    cdef Py_ssize_t i, n = a1.shape[0]
    cdef Py_ssize_t i0 = 0, i1 = 0, i2 = 0, i3 = 0
    cdef Py_ssize_t bad = 0
    cdef double lo, hi
    cdef double e0 = INFINITY, e1 = -INFINITY, e2 = INFINITY, e3 = -INFINITY
    with nogil:
        for i in range(n):
            _t1(op, a1[i], a2[i], b1[i], b2[i], &lo, &hi)
            if lo < q1 or lo > q2 or hi < q3 or hi > q4:
                bad += 1
            if lo < e0:
                e0 = lo
                i0 = i
            if lo > e1:
                e1 = lo
                i1 = i
            if hi < e2:
                e2 = hi
                i2 = i
            if hi > e3:
                e3 = hi
                i3 = i
    return int(bad), np.array([e0, e1, e2, e3]), np.array([i0, i1, i2, i3], dtype=np.intp)


cdef inline double _dist(double[:, ::1] t, Py_ssize_t p, Py_ssize_t q) noexcept nogil:
    cdef double d = fabs(t[p, 0] - t[q, 0])
    d = _max2(d, fabs(t[p, 1] - t[q, 1]))
    d = _max2(d, fabs(t[p, 2] - t[q, 2]))
    return _max2(d, fabs(t[p, 3] - t[q, 3]))


def distances_to(T, x):
    cdef double[:, ::1] t = _as2d(T)
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef Py_ssize_t i, n = t.shape[0]
    out = np.empty(n)
    cdef double[::1] o = out
    cdef double d
    with nogil:
        for i in range(n):
            d = fabs(t[i, 0] - xv[0])
            d = _max2(d, fabs(t[i, 1] - xv[1]))
            d = _max2(d, fabs(t[i, 2] - xv[2]))
            o[i] = _max2(d, fabs(t[i, 3] - xv[3]))
    return out


def pair_distances(T, I, J):
    cdef double[:, ::1] t = _as2d(T)
    cdef Py_ssize_t[::1] iv = np.ascontiguousarray(I, dtype=np.intp)
    cdef Py_ssize_t[::1] jv = np.ascontiguousarray(J, dtype=np.intp)
    cdef Py_ssize_t k, n = iv.shape[0], rows = t.shape[0]
    for k in range(n):
        if iv[k] < 0 or iv[k] >= rows or jv[k] < 0 or jv[k] >= rows:
            raise IndexError("pair index out of range")
    out = np.empty(n)
    cdef double[::1] o = out
    with nogil:
        for k in range(n):
            o[k] = _dist(t, iv[k], jv[k])
    return out


def cauchy_scan(T, double eps):
    cdef double[:, ::1] t = _as2d(T)
    cdef Py_ssize_t n, m, rows = t.shape[0]
    cdef Py_ssize_t checked = 0
    cdef double d, dmax = 0.0
    with nogil:
        for m in range(1, rows):
            for n in range(m):
                d = _dist(t, n, m)
                checked += 1
                if d >= eps:
                    with gil:
                        return int(n), int(m), d, int(checked)
                dmax = _max2(dmax, d)
    return -1, -1, dmax, int(checked)
