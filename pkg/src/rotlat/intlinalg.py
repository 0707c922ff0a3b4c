"""Exact integer linear algebra kernels.

Everything here works on plain Python ints (arbitrary precision) arranged as
lists of row lists.  numpy int64 fast paths are used only where an a-priori
bound proves no overflow is possible; otherwise the code falls back to the
exact big-int path.
"""

from __future__ import annotations

import numpy as np

Rows = list[list[int]]

_INT64_SAFE = 2**62


def copy_rows(rows) -> Rows:
    return [list(r) for r in rows]


def identity_rows(n: int) -> Rows:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose_rows(rows) -> Rows:
    return [list(col) for col in zip(*rows)]


def max_abs(rows) -> int:
    return max((abs(x) for r in rows for x in r), default=0)


def matmul_int(a, b) -> Rows:
    """Exact product of two integer matrices."""
    n, k = len(a), len(a[0])
    assert len(b) == k
    m = len(b[0])
    if max_abs(a) * max_abs(b) * k < _INT64_SAFE:
        out = np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64)
        return [[int(x) for x in row] for row in out]
    bt = transpose_rows(b)
    return [[sum(x * y for x, y in zip(ra, cb)) for cb in bt] for ra in a]


def bareiss_determinant(rows) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = copy_rows(rows)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            ri = a[i]
            rk = a[k]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - aik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def leading_principal_minors(rows) -> list[int] | None:
    """Leading principal minors M_1..M_n via pivot-free Bareiss.

    Returns None if a zero pivot is hit (the matrix then has a singular
    leading block and cannot be certified positive definite this way).
    """
    a = copy_rows(rows)
    n = len(a)
    minors: list[int] = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        if pivot == 0:
            return None
        minors.append(pivot)
        if k == n - 1:
            break
        for i in range(k + 1, n):
            ri = a[i]
            rk = a[k]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - aik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return minors


def hermite_normal_form(rows) -> Rows:
    """Canonical row-style Hermite normal form of a full-rank square matrix.

    Result is upper triangular with positive pivots H[i][i] and reduced
    entries above each pivot: 0 <= H[k][i] < H[i][i] for k < i.

    Raises ValueError on rank deficiency.
    """
    a = copy_rows(rows)
    n = len(a)
    for col in range(n):
        while True:
            nz = [i for i in range(col, n) if a[i][col] != 0]
            if not nz:
                raise ValueError("rank-deficient matrix has no HNF pivot")
            piv = min(nz, key=lambda i: abs(a[i][col]))
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
            p = a[col][col]
            clean = True
            for i in range(col + 1, n):
                if a[i][col] != 0:
                    q = a[i][col] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[col])]
                    if a[i][col] != 0:
                        clean = False
            if clean:
                break
        if a[col][col] < 0:
            a[col] = [-x for x in a[col]]
        p = a[col][col]
        for i in range(col):
            q = a[i][col] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[col])]
    return a


def solve_against_hnf(hnf: Rows, vector) -> list[int] | None:
    """Integer coordinates of `vector` over the rows of an HNF matrix.

    Returns None when the vector is not an integer combination.
    """
    n = len(hnf)
    w = list(vector)
    coeffs = [0] * n
    for i in range(n):
        q, r = divmod(w[i], hnf[i][i])
        if r:
            return None
        if q:
            row = hnf[i]
            for j in range(i, n):
                w[j] -= q * row[j]
        coeffs[i] = q
    if any(w):
        return None
    return coeffs


def membership_mask(hnf: Rows, vectors) -> list[bool]:
    """Batched membership of many integer vectors in the row span of an HNF.

    Uses an int64 numpy sweep when every intermediate provably fits, with a
    per-step growth guard; falls back to the exact per-vector solve.
    """
    n = len(hnf)
    vecs = [list(v) for v in vectors]
    if not vecs:
        return []
    h_arr = np.array(hnf, dtype=object)
    hmax = int(np.abs(h_arr.astype(np.int64)).max()) if max_abs(hnf) < _INT64_SAFE else None
    vmax = max(max_abs([v]) for v in vecs)
    if hmax is not None and (hmax + vmax) < 2**30:
        H = np.array(hnf, dtype=np.int64)
        W = np.array(vecs, dtype=np.int64)
        ok = np.ones(len(vecs), dtype=bool)
        safe = True
        for i in range(n):
            d = int(H[i, i])
            q, r = np.divmod(W[:, i], d)
            ok &= r == 0
            W[:, i:] -= q[:, None] * H[i, i:][None, :]
            if np.abs(W).max() > 2**55:
                safe = False
                break
        if safe:
            ok &= (W == 0).all(axis=1)
            return [bool(b) for b in ok]
    return [solve_against_hnf(hnf, v) is not None for v in vecs]


def is_unimodular(rows) -> bool:
    return abs(bareiss_determinant(rows)) == 1


def rows_equal(a, b) -> bool:
    return [list(r) for r in a] == [list(r) for r in b]
