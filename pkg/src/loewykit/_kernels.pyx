# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction over F_p.

Entries are int64 residues in [0, p) with p < 2**31, so every product fits.
"""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


cdef inline int64_t _modinv(int64_t a, int64_t p) nogil:
    cdef int64_t t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_modp(a, int64_t p):
    """Reduced row echelon form of ``a`` over F_p; returns (R, pivots)."""
    out = np.array(a, dtype=np.int64, order="C", copy=True)
    if out.ndim != 2:
        raise ValueError("rref_modp expects a 2-d array")
    cdef int64_t[:, ::1] m = out
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t inv, f, t
    pivots = []
    for c in range(cols):
        if r >= rows:
            break
        piv = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                t = m[piv, j]
                m[piv, j] = m[r, j]
                m[r, j] = t
        inv = _modinv(m[r, c], p)
        if inv != 1:
            for j in range(c, cols):
                m[r, j] = (m[r, j] * inv) % p
        for i in range(rows):
            if i == r:
                continue
            f = m[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                if m[r, j] != 0:
                    t = (m[i, j] - f * m[r, j]) % p
                    if t < 0:
                        t += p
                    m[i, j] = t
        pivots.append(c)
        r += 1
    return out, pivots
