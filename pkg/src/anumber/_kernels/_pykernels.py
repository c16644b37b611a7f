"""Pure-Python kernels: exact big-integer arithmetic, no size limits.

Reference implementations for the compiled kernels in ``_cykernels``.
Both backends must produce identical output on identical input; the
compiled ones are only usable for moduli below 2**31 (int64 products),
while these work for any modulus.
"""

BACKEND = "python"


def convolve_mod(a, b, p):
    """Coefficient convolution of two dense coefficient lists mod p.

    ``a`` and ``b`` are sequences of residues in [0, p); the result has
    length len(a) + len(b) - 1 (empty if either input is empty).
    """
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def row_reduce_mod(rows, p):
    """Gauss-Jordan elimination over F_p.

    Returns ``(rref, pivot_columns)`` where ``rref`` is the reduced row
    echelon form as lists of residues and ``pivot_columns`` lists the
    pivot column index of each nonzero row.  Pivot choice is the first
    nonzero entry in column order (exact arithmetic, no pivoting
    heuristics needed).
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        pivot_row = m[r]
        for i in range(nrows):
            f = m[i][c]
            if i != r and f:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return m, pivots
