# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: int64 arithmetic with the GIL released in hot loops.

Callers must guarantee p < 2**31 so that products and the lazily
reduced accumulators stay inside int64 range; the dispatch layer in
``anumber._kernels`` enforces this and falls back to the pure-Python
kernels for larger moduli.
"""
from cpython cimport array
from libc.limits cimport LLONG_MAX

import array

BACKEND = "cython"


cdef void _convolve(const long long[::1] a, const long long[::1] b,
                    long long[::1] out, long long p) noexcept nogil:
    cdef Py_ssize_t i, j, la = a.shape[0], lb = b.shape[0]
    cdef long long ai, v
    # Accumulate lazily; reduce a slot only when the next product could
    # overflow.  guard + (p-1)^2 <= LLONG_MAX by construction.
    cdef long long guard = LLONG_MAX - (p - 1) * (p - 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            if b[j] != 0:
                v = out[i + j] + ai * b[j]
                if v >= guard:
                    v = v % p
                out[i + j] = v
    for i in range(la + lb - 1):
        out[i] = out[i] % p


def convolve_mod(a, b, long long p):
    """Coefficient convolution of two dense coefficient lists mod p."""
    if len(a) == 0 or len(b) == 0:
        return []
    cdef array.array aa = array.array('q', a)
    cdef array.array bb = array.array('q', b)
    cdef Py_ssize_t n = len(a) + len(b) - 1
    cdef array.array res = array.array('q', bytes(8 * n))
    cdef const long long[::1] av = aa
    cdef const long long[::1] bv = bb
    cdef long long[::1] ov = res
    with nogil:
        _convolve(av, bv, ov, p)
    return res.tolist()


cdef long long _inv_mod(long long a, long long p) noexcept nogil:
    # Extended Euclid; a in (0, p), p prime.
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef Py_ssize_t _row_reduce(long long[::1] m, Py_ssize_t nrows, Py_ssize_t ncols,
                            long long p, long long[::1] pivots) noexcept nogil:
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef long long inv, f, x, tmp
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                pr = i
                break
        if pr == -1:
            continue
        if pr != r:
            for j in range(ncols):
                tmp = m[r * ncols + j]
                m[r * ncols + j] = m[pr * ncols + j]
                m[pr * ncols + j] = tmp
        inv = _inv_mod(m[r * ncols + c], p)
        # Columns left of c are already zero in rows >= r.
        for j in range(c, ncols):
            m[r * ncols + j] = (m[r * ncols + j] * inv) % p
        for i in range(nrows):
            if i == r:
                continue
            f = m[i * ncols + c]
            if f != 0:
                for j in range(c, ncols):
                    x = (m[i * ncols + j] - f * m[r * ncols + j]) % p
                    if x < 0:
                        x += p
                    m[i * ncols + j] = x
        pivots[r] = c
        r += 1
    return r


def row_reduce_mod(rows, long long p):
    """Gauss-Jordan elimination over F_p; returns (rref, pivot_columns)."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return [], []
    cdef Py_ssize_t ncols = len(rows[0])
    if ncols == 0:
        return [[] for _ in range(nrows)], []
    cdef array.array flat = array.array('q')
    for row in rows:
        flat.extend(row)
    cdef array.array piv = array.array('q', bytes(8 * nrows))
    cdef long long[::1] mv = flat
    cdef long long[::1] pv = piv
    cdef Py_ssize_t rank
    with nogil:
        rank = _row_reduce(mv, nrows, ncols, p, pv)
    out = flat.tolist()
    rref = [out[i * ncols:(i + 1) * ncols] for i in range(nrows)]
    return rref, piv.tolist()[:rank]
