"""Exact linear algebra over GF(2^n) on numpy arrays.

Matrices are 2-d arrays of field elements (int64, or object for n > 62).
Row operations are vectorised over whole blocks of rows, so the Python-level
loop runs once per pivot.
"""

from __future__ import annotations

import numpy as np

from .field import Field
from . import upoly


def asmat(F: Field, A) -> np.ndarray:
    return np.array(A, dtype=F.dtype).reshape(np.shape(A)) if not isinstance(A, np.ndarray) \
        else A.astype(F.dtype, copy=False)


def zeros(F: Field, rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=F.dtype)


def identity(F: Field, k: int) -> np.ndarray:
    I = zeros(F, k, k)
    for i in range(k):
        I[i, i] = 1
    return I


def _eliminate(F: Field, A: np.ndarray, full: bool, stop_rank: int | None = None):
    """In-place Gauss-Jordan (full) or forward elimination; returns pivot columns."""
    rows, cols = A.shape
    r = 0
    piv = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r, c:] = F.vmul(A[r, c:], F.inv(lead))
        if full:
            colv = A[:, c].copy()
            colv[r] = 0
            idx = np.flatnonzero(colv)
        else:
            idx = r + 1 + np.flatnonzero(A[r + 1:, c])
        if idx.size:
            A[idx, c:] ^= F.vmul(A[idx, c][:, None], A[r, c:][None, :])
        piv.append(c)
        r += 1
        if stop_rank is not None and r >= stop_rank:
            break
    return piv


def rref(F: Field, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    A = asmat(F, A).copy()
    if A.size == 0:
        return A[:0], []
    piv = _eliminate(F, A, True)
    return A[:len(piv)], piv


def rank(F: Field, A) -> int:
    A = asmat(F, A).copy()
    if A.size == 0:
        return 0
    return len(_eliminate(F, A, False))


def nullspace(F: Field, A) -> np.ndarray:
    """Basis of {v : A v = 0} as columns of the returned matrix."""
    A = asmat(F, A)
    cols = A.shape[1]
    R, piv = rref(F, A)
    free = [c for c in range(cols) if c not in set(piv)]
    N = zeros(F, cols, len(free))
    for j, f in enumerate(free):
        N[f, j] = 1
        for i, p in enumerate(piv):
            N[p, j] = R[i, f]
    return N


def matmul(F: Field, A, B) -> np.ndarray:
    A = asmat(F, A)
    B = asmat(F, B)
    if A.shape[1] == 0:
        return zeros(F, A.shape[0], B.shape[1])
    prod = F.vmul(A[:, :, None], B[None, :, :])
    return np.bitwise_xor.reduce(prod, axis=1).astype(F.dtype)


def matvec(F: Field, A, v) -> np.ndarray:
    return matmul(F, A, asmat(F, v).reshape(-1, 1)).reshape(-1)


def solve(F: Field, A, B) -> np.ndarray | None:
    """X with A X = B, or None when inconsistent (A need not be square)."""
    A = asmat(F, A)
    B = asmat(F, B)
    if B.ndim == 1:
        B = B.reshape(-1, 1)
    k = A.shape[1]
    aug = np.concatenate([A, B], axis=1)
    R, piv = rref(F, aug)
    if any(p >= k for p in piv):
        return None
    X = zeros(F, k, B.shape[1])
    for i, p in enumerate(piv):
        X[p] = R[i, k:]
    return X


def inverse(F: Field, A) -> np.ndarray | None:
    A = asmat(F, A)
    k = A.shape[0]
    if A.shape != (k, k):
        raise ValueError("inverse of a non-square matrix")
    aug = np.concatenate([A, identity(F, k)], axis=1)
    R, piv = rref(F, aug)
    if piv[:k] != list(range(k)) or len(piv) < k or piv[k - 1] >= k:
        return None
    return R[:, k:]


def det(F: Field, A) -> int:
    A = asmat(F, A).copy()
    k = A.shape[0]
    d = 1
    for c in range(k):
        nz = np.flatnonzero(A[c:, c])
        if nz.size == 0:
            return 0
        p = c + int(nz[0])
        if p != c:
            A[[c, p]] = A[[p, c]]
        lead = int(A[c, c])
        d = F.mul(d, lead)
        il = F.inv(lead)
        idx = c + 1 + np.flatnonzero(A[c + 1:, c])
        if idx.size:
            fac = F.vmul(A[idx, c], il)
            A[idx, c:] ^= F.vmul(fac[:, None], A[c, c:][None, :])
    return d


def charpoly(F: Field, A) -> list[int]:
    """Characteristic polynomial det(tI - A), low-to-high coefficients.

    Reduces to upper Hessenberg form by similarity and runs the usual
    three-term recurrence; no division by integers is involved.
    """
    H = [[int(x) for x in row] for row in asmat(F, A)]
    k = len(H)
    mul, inv = F.mul, F.inv
    for c in range(k - 2):
        p = next((r for r in range(c + 1, k) if H[r][c]), None)
        if p is None:
            continue
        if p != c + 1:
            H[p], H[c + 1] = H[c + 1], H[p]
            for row in H:
                row[p], row[c + 1] = row[c + 1], row[p]
        piv_inv = inv(H[c + 1][c])
        for i in range(c + 2, k):
            if not H[i][c]:
                continue
            f = mul(H[i][c], piv_inv)
            # row_i -= f row_{c+1};  col_{c+1} += f col_i
            ri, rp = H[i], H[c + 1]
            for j in range(k):
                if rp[j]:
                    ri[j] ^= mul(f, rp[j])
            for row in H:
                if row[i]:
                    row[c + 1] ^= mul(f, row[i])
    polys = [[1]]
    for m in range(1, k + 1):
        p = upoly.mul(F, [H[m - 1][m - 1], 1], polys[m - 1])
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = mul(prod, H[i][i - 1])
            if not prod:
                break
            coef = mul(H[i - 1][m - 1], prod)
            if coef:
                p = upoly.add(p, upoly.scale(F, polys[i - 1], coef))
        polys.append(p)
    return polys[k]


def matpow(F: Field, A, e: int) -> np.ndarray:
    A = asmat(F, A)
    R = identity(F, A.shape[0])
    while e:
        if e & 1:
            R = matmul(F, R, A)
        A = matmul(F, A, A)
        e >>= 1
    return R


def lift(A, a: int, b: int) -> np.ndarray:
    """Embed every entry of a matrix over GF(2^a) into GF(2^b)."""
    from .field import embed, gf
    if a == b:
        return A
    out = np.array([embed(int(x), a, b) for x in np.asarray(A).reshape(-1)], dtype=gf(b).dtype)
    return out.reshape(np.shape(A))
