# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: mod-p Gaussian elimination and polynomial division.

Semantics match ``pure.py`` exactly (same pivoting, same reduction
strategy) so the two backends are interchangeable and testable against
each other.
"""

import numpy as np

cimport numpy as cnp
from libc.string cimport memcpy

cnp.import_array()

BACKEND_NAME = "cython"

ctypedef cnp.int64_t i64
ctypedef cnp.int32_t i32


cdef inline i64 mod_inv(i64 a, i64 p):
    # Fermat inverse by binary exponentiation; p prime, 0 < a < p.
    cdef i64 result = 1
    cdef i64 base = a % p
    cdef i64 e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rank_mod_p(a, long long p):
    """Rank of an integer matrix over F_p."""
    cdef cnp.ndarray[i64, ndim=2] A = np.array(a, dtype=np.int64, copy=True)
    if A.size == 0:
        return 0
    cdef Py_ssize_t m = A.shape[0], n = A.shape[1]
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef i64 inv, f, v
    cdef i64[:, ::1] M = np.ascontiguousarray(A)
    for i in range(m):
        for j in range(n):
            v = M[i, j] % p
            if v < 0:
                v += p
            M[i, j] = v
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for i in range(rank, m):
            if M[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(n):
                v = M[rank, j]
                M[rank, j] = M[piv, j]
                M[piv, j] = v
        inv = mod_inv(M[rank, col], p)
        for j in range(n):
            M[rank, j] = (M[rank, j] * inv) % p
        for i in range(rank + 1, m):
            f = M[i, col]
            if f != 0:
                for j in range(n):
                    M[i, j] = (M[i, j] - f * M[rank, j]) % p
                    if M[i, j] < 0:
                        M[i, j] += p
        rank += 1
    return rank


def rref_mod_p(a, long long p):
    """Reduced row echelon form over F_p; returns (rank, pivot columns, R)."""
    cdef cnp.ndarray[i64, ndim=2] A = np.ascontiguousarray(
        np.array(a, dtype=np.int64, copy=True) % p)
    cdef Py_ssize_t m = A.shape[0], n = A.shape[1]
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef i64 inv, f, v
    cdef i64[:, ::1] M = A
    pivots = []
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for i in range(rank, m):
            if M[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(n):
                v = M[rank, j]
                M[rank, j] = M[piv, j]
                M[piv, j] = v
        inv = mod_inv(M[rank, col], p)
        for j in range(n):
            M[rank, j] = (M[rank, j] * inv) % p
        for i in range(m):
            if i == rank:
                continue
            f = M[i, col]
            if f != 0:
                for j in range(n):
                    M[i, j] = (M[i, j] - f * M[rank, j]) % p
                    if M[i, j] < 0:
                        M[i, j] += p
        pivots.append(col)
        rank += 1
    return rank, pivots, A


cdef inline int cmp_drl(const i32 *ea, const i32 *eb, Py_ssize_t n):
    cdef long da = 0, db = 0
    cdef Py_ssize_t j
    for j in range(n):
        da += ea[j]
        db += eb[j]
    if da != db:
        return 1 if da > db else -1
    for j in range(n - 1, -1, -1):
        if ea[j] != eb[j]:
            return 1 if ea[j] < eb[j] else -1
    return 0


def pack_basis(basis, long long p):
    """Convert term lists into contiguous arrays for fast reduction."""
    packed_exps = []
    packed_coefs = []
    inv_lc = np.empty(len(basis), dtype=np.int64)
    nvars = len(basis[0][0][0]) if basis else 0
    cdef Py_ssize_t gi
    for gi, g in enumerate(basis):
        e = np.array([t[0] for t in g], dtype=np.int32)
        c = np.array([t[1] % p for t in g], dtype=np.int64)
        packed_exps.append(np.ascontiguousarray(e))
        packed_coefs.append(np.ascontiguousarray(c))
        inv_lc[gi] = mod_inv(c[0], p)
    lead = np.array([g[0][0] for g in basis], dtype=np.int32) if basis \
        else np.zeros((0, nvars), dtype=np.int32)
    return (packed_exps, packed_coefs, np.ascontiguousarray(lead), inv_lc, nvars)


def poly_reduce(f_terms, packed, long long p):
    """Full normal form of f modulo the packed basis (first-divisor strategy)."""
    packed_exps, packed_coefs, lead_arr, inv_lc_arr, nv = packed
    cdef Py_ssize_t n = nv
    cdef Py_ssize_t nb = len(packed_exps)
    if n == 0:
        # constants only
        tot = 0
        for e, c in f_terms:
            tot = (tot + c) % p
        if nb:
            return []
        return [((), tot)] if tot else []

    cdef cnp.ndarray[i32, ndim=2] lead = lead_arr
    cdef i64[:] inv_lc = inv_lc_arr

    cdef Py_ssize_t wlen = len(f_terms)
    cdef Py_ssize_t cap = wlen + 16
    cdef cnp.ndarray[i32, ndim=2] we = np.zeros((cap, n), dtype=np.int32)
    cdef cnp.ndarray[i64, ndim=1] wc = np.zeros(cap, dtype=np.int64)
    cdef Py_ssize_t i, j, k, gi, glen
    for i, (e, c) in enumerate(f_terms):
        for j in range(n):
            we[i, j] = e[j]
        wc[i] = c % p

    out_terms = []
    cdef cnp.ndarray[i32, ndim=2] ge
    cdef cnp.ndarray[i64, ndim=1] gc
    cdef cnp.ndarray[i32, ndim=2] ne
    cdef cnp.ndarray[i64, ndim=1] nc
    cdef cnp.ndarray[i32, ndim=1] cmp_buf = np.zeros(n, dtype=np.int32)
    cdef i32 *shift = <i32 *> cnp.PyArray_DATA(cmp_buf)
    cdef cnp.ndarray[i32, ndim=1] shift_arr = np.zeros(n, dtype=np.int32)
    cdef Py_ssize_t head = 0, tail = wlen, w, g, o
    cdef i64 mult, val
    cdef int c_res
    cdef bint found

    while head < tail:
        if wc[head] % p == 0:
            head += 1
            continue
        # find first reducer
        gi = -1
        for k in range(nb):
            found = True
            for j in range(n):
                if lead[k, j] > we[head, j]:
                    found = False
                    break
            if found:
                gi = k
                break
        if gi < 0:
            key = []
            for j in range(n):
                key.append(int(we[head, j]))
            out_terms.append((tuple(key), int(wc[head])))
            head += 1
            continue
        ge = packed_exps[gi]
        gc = packed_coefs[gi]
        glen = ge.shape[0]
        mult = (wc[head] * inv_lc[gi]) % p
        for j in range(n):
            shift_arr[j] = we[head, j] - ge[0, j]
        # merge work[head+1:tail] with -mult * x^shift * g[1:]
        ne = np.zeros((tail - head - 1 + glen - 1, n), dtype=np.int32)
        nc = np.zeros(tail - head - 1 + glen - 1, dtype=np.int64)
        w = head + 1
        g = 1
        o = 0
        while w < tail and g < glen:
            c_res = 0
            # compare we[w] with ge[g]+shift
            for j in range(n):
                shift[j] = ge[g, j] + shift_arr[j]
            c_res = cmp_drl(&we[w, 0], shift, n)
            if c_res > 0:
                for j in range(n):
                    ne[o, j] = we[w, j]
                nc[o] = wc[w]
                o += 1
                w += 1
            elif c_res < 0:
                for j in range(n):
                    ne[o, j] = shift[j]
                val = (-mult * gc[g]) % p
                if val < 0:
                    val += p
                nc[o] = val
                o += 1
                g += 1
            else:
                val = (wc[w] - mult * gc[g]) % p
                if val < 0:
                    val += p
                if val != 0:
                    for j in range(n):
                        ne[o, j] = we[w, j]
                    nc[o] = val
                    o += 1
                w += 1
                g += 1
        while w < tail:
            for j in range(n):
                ne[o, j] = we[w, j]
            nc[o] = wc[w]
            o += 1
            w += 1
        while g < glen:
            for j in range(n):
                ne[o, j] = ge[g, j] + shift_arr[j]
            val = (-mult * gc[g]) % p
            if val < 0:
                val += p
            nc[o] = val
            o += 1
            g += 1
        we = ne
        wc = nc
        head = 0
        tail = o
    return out_terms
