# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled message-passing core.

Same contracts, layout and arithmetic structure as ``_kernels_py``; see that
module for the message-grid conventions.  Selected by ``_backend`` when the
extension has been built.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, fabs, log1p

cnp.import_array()


cdef inline double _clamp(double x, double m) noexcept nogil:
    if x > m:
        return m
    if x < -m:
        return -m
    return x


cdef inline double _combine(double a, double b, bint min_sum) noexcept nogil:
    cdef double sa = 1.0 if a > 0.0 else (-1.0 if a < 0.0 else 0.0)
    cdef double sb = 1.0 if b > 0.0 else (-1.0 if b < 0.0 else 0.0)
    cdef double fa = fabs(a)
    cdef double fb = fabs(b)
    cdef double core = sa * sb * (fa if fa < fb else fb)
    if min_sum:
        return core
    return (core + log1p(exp(-fabs(a + b)))) - log1p(exp(-fabs(a - b)))


def l_sweep(double[:, ::1] l, double[:, ::1] r, bint min_sum, double llr_max):
    """One full right-to-left pass updating stages log_n-1 .. 0 of ``l``."""
    cdef Py_ssize_t n = l.shape[0] - 1
    cdef Py_ssize_t n_bits = l.shape[1]
    cdef Py_ssize_t s, h, base, k, i, j
    cdef double l_up, l_lo, r_up, r_lo, t
    with nogil:
        for s in range(n - 1, -1, -1):
            h = 1 << s
            base = 0
            while base < n_bits:
                for k in range(h):
                    i = base + k
                    j = i + h
                    l_up = l[s + 1, i]
                    l_lo = l[s + 1, j]
                    r_up = r[s, i]
                    r_lo = r[s, j]
                    t = _clamp(l_lo + r_lo, llr_max)
                    l[s, i] = _clamp(_combine(l_up, t, min_sum), llr_max)
                    l[s, j] = _clamp(_combine(r_up, l_up, min_sum) + l_lo, llr_max)
                base += 2 * h


def r_sweep(double[:, ::1] l, double[:, ::1] r, bint min_sum, double llr_max):
    """One full left-to-right pass updating stages 1 .. log_n of ``r``."""
    cdef Py_ssize_t n = l.shape[0] - 1
    cdef Py_ssize_t n_bits = l.shape[1]
    cdef Py_ssize_t s, h, base, k, i, j
    cdef double l_up, l_lo, r_up, r_lo, t
    with nogil:
        for s in range(n):
            h = 1 << s
            base = 0
            while base < n_bits:
                for k in range(h):
                    i = base + k
                    j = i + h
                    l_up = l[s + 1, i]
                    l_lo = l[s + 1, j]
                    r_up = r[s, i]
                    r_lo = r[s, j]
                    t = _clamp(l_lo + r_lo, llr_max)
                    r[s + 1, i] = _clamp(_combine(r_up, t, min_sum), llr_max)
                    r[s + 1, j] = _clamp(_combine(r_up, l_up, min_sum) + r_lo, llr_max)
                base += 2 * h


def transform_bits_inplace(cnp.uint8_t[::1] bits):
    """GF(2) butterfly network applied in place to a uint8 vector."""
    cdef Py_ssize_t n_bits = bits.shape[0]
    cdef Py_ssize_t h = 1
    cdef Py_ssize_t base, k, i
    with nogil:
        while h < n_bits:
            base = 0
            while base < n_bits:
                for k in range(h):
                    i = base + k
                    bits[i] ^= bits[i + h]
                base += 2 * h
            h <<= 1


def systematic_solve(cnp.uint8_t[::1] x_vals, cnp.uint8_t[::1] sys_mask):
    """Solve the encoding graph given codeword values on the systematic rows.

    Same row-descending schedule as the fallback; returns ``(u, x)``.
    """
    cdef Py_ssize_t n_bits = x_vals.shape[0]
    cdef Py_ssize_t n = 0
    while (1 << n) < n_bits:
        n += 1
    table_arr = np.zeros((n_bits, n + 1), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] table = table_arr
    cdef Py_ssize_t i, s, h
    with nogil:
        for i in range(n_bits - 1, -1, -1):
            if sys_mask[i]:
                table[i, n] = x_vals[i]
                for s in range(n - 1, -1, -1):
                    h = 1 << s
                    if i & h:
                        table[i, s] = table[i, s + 1]
                    else:
                        table[i, s] = table[i, s + 1] ^ table[i + h, s]
            else:
                for s in range(n):
                    h = 1 << s
                    if i & h:
                        table[i, s + 1] = table[i, s]
                    else:
                        table[i, s + 1] = table[i, s] ^ table[i + h, s]
    return np.asarray(table_arr[:, 0]).copy(), np.asarray(table_arr[:, n]).copy()
