# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled single-level pyramid kernels (circular convolution + dyadic
resampling). Must stay operation-for-operation identical to _fbkernels_py
so both backends produce bit-identical floats."""

import numpy as np


def analysis_step(const double[::1] c_next, const double[::1] h, const double[::1] g):
    cdef Py_ssize_t n_in = c_next.shape[0]
    cdef Py_ssize_t half = n_in // 2
    cdef Py_ssize_t taps = h.shape[0]
    out_c = np.empty(half, dtype=np.float64)
    out_x = np.empty(half, dtype=np.float64)
    cdef double[::1] oc = out_c
    cdef double[::1] ox = out_x
    cdef Py_ssize_t n, i, m
    cdef double acc_c, acc_x, v
    for n in range(half):
        acc_c = 0.0
        acc_x = 0.0
        for i in range(taps):
            m = (2 * n + i) % n_in
            v = c_next[m]
            acc_c = acc_c + h[i] * v
            acc_x = acc_x + g[i] * v
        oc[n] = acc_c
        ox[n] = acc_x
    return out_c, out_x


def synthesis_step(const double[::1] c, const double[::1] x, const double[::1] h, const double[::1] g):
    cdef Py_ssize_t n_low = c.shape[0]
    cdef Py_ssize_t n_out = 2 * n_low
    cdef Py_ssize_t taps = h.shape[0]
    out = np.empty(n_out, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t m, i, n
    cdef double acc, th, tg
    for m in range(n_out):
        acc = 0.0
        for i in range(m % 2, taps, 2):
            # m - i is even, so the halving is exact; fold C's negative
            # remainder back into [0, n_low).
            n = ((m - i) // 2) % n_low
            if n < 0:
                n += n_low
            th = h[i] * c[n]
            tg = g[i] * x[n]
            acc = acc + (th + tg)
        o[m] = acc
    return out
