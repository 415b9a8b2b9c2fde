"""Exact dense linear algebra over the fields of field.py.

Everything is plain Gaussian elimination; over F2 large systems take a
bit-packed path (rows packed into uint64 words) because the mutation
machinery solves chain-map systems with a few thousand unknowns.
"""

from __future__ import annotations

import numpy as np

from .field import Field

_GF2_PACK_THRESHOLD = 4096  # m*n above which F2 systems get packed


# ---------------------------------------------------------------------------
# packed GF(2) elimination


def _pack_gf2(a: np.ndarray) -> np.ndarray:
    m, n = a.shape
    words = (n + 63) // 64
    out = np.zeros((m, words), dtype=np.uint64)
    bits = np.asarray(a, dtype=np.uint64) & np.uint64(1)
    for w in range(words):
        chunk = bits[:, 64 * w : 64 * (w + 1)]
        shifts = np.arange(chunk.shape[1], dtype=np.uint64)
        out[:, w] = (chunk << shifts).sum(axis=1, dtype=np.uint64)
    return out


def _gf2_col(packed: np.ndarray, j: int) -> np.ndarray:
    return (packed[:, j >> 6] >> np.uint64(j & 63)) & np.uint64(1)


def _rref_gf2_packed(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    m, n = a.shape
    w = _pack_gf2(a)
    pivots: list[int] = []
    r = 0
    for j in range(n):
        if r >= m:
            break
        col = _gf2_col(w, j)
        hits = np.nonzero(col[r:])[0]
        if hits.size == 0:
            continue
        piv = r + int(hits[0])
        if piv != r:
            w[[r, piv]] = w[[piv, r]]
            col = _gf2_col(w, j)
        rows = np.nonzero(col)[0]
        rows = rows[rows != r]
        if rows.size:
            w[rows] ^= w[r]
        pivots.append(j)
        r += 1
    out = np.zeros((m, n), dtype=np.int64)
    for wj in range((n + 63) // 64):
        width = min(64, n - 64 * wj)
        shifts = np.arange(width, dtype=np.uint64)
        out[:, 64 * wj : 64 * wj + width] = (
            (w[:, wj : wj + 1] >> shifts) & np.uint64(1)
        ).astype(np.int64)
    return out, pivots


# ---------------------------------------------------------------------------
# generic elimination


def rref(a: np.ndarray, field: Field) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot column list."""
    m, n = a.shape
    if m == 0 or n == 0:
        return a.copy(), []
    if field.p == 2 and a.size >= _GF2_PACK_THRESHOLD:
        return _rref_gf2_packed(a)
    a = a.copy() if field.p == 0 else (np.asarray(a, dtype=np.int64) % field.p)
    pivots: list[int] = []
    r = 0
    for j in range(n):
        if r >= m:
            break
        col = a[r:, j]
        nz = np.nonzero(col)[0] if field.p else np.nonzero(col != 0)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = field.inv_scalar(a[r, j])
        if field.p:
            a[r] = (a[r] * inv) % field.p
        else:
            a[r] = a[r] * inv
        colvals = a[:, j].copy()
        colvals[r] = 0
        rows = np.nonzero(colvals)[0] if field.p else np.nonzero(colvals != 0)[0]
        if rows.size:
            if field.p:
                a[rows] = (a[rows] - np.outer(colvals[rows], a[r])) % field.p
            else:
                a[rows] = a[rows] - np.outer(colvals[rows], a[r])
        pivots.append(j)
        r += 1
    return a, pivots


def rank(a: np.ndarray, field: Field) -> int:
    return len(rref(a, field)[1])


def nullspace(a: np.ndarray, field: Field) -> np.ndarray:
    """Basis of the right kernel, one solution per row.

    Each basis row has a 1 in "its" free column and 0 in the other free
    columns, so coordinates of any kernel vector v in this basis are just
    v[free_columns].
    """
    m, n = a.shape
    r, pivots = rref(a, field)
    free = [j for j in range(n) if j not in set(pivots)]
    out = field.zeros((len(free), n))
    for k, j in enumerate(free):
        out[k, j] = field.one
        for i, pj in enumerate(pivots):
            val = r[i, j]
            if field.p:
                out[k, pj] = (-int(val)) % field.p
            else:
                out[k, pj] = -val
    return out


def nullity(a: np.ndarray, field: Field) -> int:
    return a.shape[1] - rank(a, field)


def solve(a: np.ndarray, b: np.ndarray, field: Field) -> np.ndarray | None:
    """One solution x of a @ x = b, or None if inconsistent."""
    m, n = a.shape
    b = b.reshape(m, -1)
    aug = np.concatenate([a, b], axis=1)
    r, pivots = rref(aug, field)
    k = b.shape[1]
    for i, pj in enumerate(pivots):
        if pj >= n:
            return None
    x = field.zeros((n, k))
    for i, pj in enumerate(pivots):
        x[pj] = r[i, n:]
    return x


def inv(a: np.ndarray, field: Field) -> np.ndarray | None:
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        return None
    aug = np.concatenate([a, field.eye(n)], axis=1)
    r, pivots = rref(aug, field)
    if pivots != list(range(n)):
        return None
    return r[:, n:]


def is_invertible(a: np.ndarray, field: Field) -> bool:
    return a.shape[0] == a.shape[1] and rank(a, field) == a.shape[0]


def row_space_reduce(vectors: np.ndarray, field: Field) -> np.ndarray:
    """Canonical (rref, zero rows dropped) basis matrix of the row span."""
    r, pivots = rref(vectors, field)
    return r[: len(pivots)]


def in_row_space(basis_rref: np.ndarray, pivots: list[int], v: np.ndarray, field: Field):
    """Reduce v against an rref basis; returns the remainder."""
    v = v.copy()
    for i, j in enumerate(pivots):
        c = v[j]
        if c != 0:
            if field.p:
                v = (v - c * basis_rref[i]) % field.p
            else:
                v = v - c * basis_rref[i]
    return v


class SpanTracker:
    """Incrementally maintained row space with rref rows, for FGLM-style loops."""

    def __init__(self, dim: int, field: Field):
        self.field = field
        self.dim = dim
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def reduce(self, v: np.ndarray) -> np.ndarray:
        f = self.field
        v = v.copy()
        for row, j in zip(self.rows, self.pivots):
            c = v[j]
            if c != 0:
                v = (v - c * row) % f.p if f.p else v - c * row
        return v

    def add(self, v: np.ndarray) -> bool:
        """Add v to the span; True if it was independent."""
        f = self.field
        red = self.reduce(v)
        nz = np.nonzero(red)[0]
        if nz.size == 0:
            return False
        j = int(nz[0])
        red = (red * f.inv_scalar(red[j])) % f.p if f.p else red * f.inv_scalar(red[j])
        for i in range(len(self.rows)):
            c = self.rows[i][j]
            if c != 0:
                self.rows[i] = (
                    (self.rows[i] - c * red) % f.p if f.p else self.rows[i] - c * red
                )
        self.rows.append(red)
        self.pivots.append(j)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)
