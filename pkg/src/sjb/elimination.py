"""Exact integer matrix rank via fraction-free (Bareiss) elimination.

The update rule a[i][j] <- (a[i][j]*pivot - a[i][c]*a[r][j]) / prev keeps
every intermediate entry an exact minor of the input, so the division is
always exact and nothing is ever rounded.  Row swaps and column skipping
only permute which minors appear.

A vectorized int64 path handles the common case; every step is guarded
by an a-priori bound proving that no intermediate product can overflow,
and on guard failure the remaining submatrix is handed off to a
big-integer path.  Results are bit-exact either way.
"""

from __future__ import annotations

import numpy as np

_INT64_GUARD = 1 << 62


def exact_rank(matrix) -> int:
    """Rank of an integer matrix (sequence of rows) over the rationals."""
    rows = [[int(x) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    if ncols == 0:
        return 0
    bound = max((abs(x) for row in rows for x in row), default=0)
    if bound < _INT64_GUARD:
        return _rank_int64(np.array(rows, dtype=np.int64))
    return _rank_bigint(rows, prev=1)


def _rank_int64(a: np.ndarray) -> int:
    m, n = a.shape
    r = 0
    c = 0
    prev = 1
    while c < n and r < m:
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            c += 1
            continue
        # Smallest-magnitude pivot curbs entry growth.
        pick = int(nz[np.argmin(np.abs(col[nz]))]) + r
        if pick != r:
            a[[r, pick]] = a[[pick, r]]
        pv = int(a[r, c])
        if r + 1 < m:
            sub = a[r + 1:, c:]
            piv_row = a[r, c:]
            mx = int(np.abs(sub).max())
            pr = int(np.abs(piv_row).max())
            if mx * abs(pv) + mx * pr >= _INT64_GUARD:
                # Prove-safe bound failed: finish exactly with big ints.
                return r + _rank_bigint(a[r:, c:].tolist(), prev=prev)
            f = sub[:, 0].copy()
            np.multiply(sub, pv, out=sub)
            sub -= np.outer(f, piv_row)
            sub //= prev
        prev = pv
        r += 1
        c += 1
    return r


def _rank_bigint(rows: list[list[int]], prev: int) -> int:
    m = len(rows)
    n = len(rows[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        best = -1
        best_abs = 0
        for i in range(r, m):
            v = rows[i][c]
            if v and (best < 0 or abs(v) < best_abs):
                best = i
                best_abs = abs(v)
        if best < 0:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
        piv_row = rows[r]
        pv = piv_row[c]
        for i in range(r + 1, m):
            ri = rows[i]
            f = ri[c]
            if f:
                for j in range(c + 1, n):
                    ri[j] = (ri[j] * pv - f * piv_row[j]) // prev
            elif pv != prev:
                # Bareiss rescales untouched rows too; division stays exact.
                for j in range(c + 1, n):
                    ri[j] = ri[j] * pv // prev
            ri[c] = 0
        prev = pv
        r += 1
    return r
