"""Exact linear algebra over the rationals on numpy object arrays.

Matrices are dense numpy arrays with dtype=object holding Fractions, so
``@`` composes them exactly.  Rank, kernel, and solving go through fraction
Gaussian elimination; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

__all__ = [
    "fmat",
    "fvec",
    "identity",
    "zeros",
    "rank",
    "nullspace",
    "rref",
    "solve",
    "inverse",
    "is_zero_matrix",
    "matrices_equal",
]


def fmat(rows) -> np.ndarray:
    """Build an exact matrix from nested iterables of rationals/ints."""
    rows = [[Fraction(x) for x in r] for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = np.empty((m, n), dtype=object)
    for i, r in enumerate(rows):
        a[i, :] = r
    return a


def fvec(entries) -> np.ndarray:
    entries = [Fraction(x) for x in entries]
    v = np.empty(len(entries), dtype=object)
    v[:] = entries
    return v


def identity(n: int) -> np.ndarray:
    a = zeros(n, n)
    for i in range(n):
        a[i, i] = Fraction(1)
    return a


def zeros(m: int, n: int) -> np.ndarray:
    a = np.empty((m, n), dtype=object)
    a[:] = Fraction(0)
    return a


def is_zero_matrix(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def rref(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (copy) and pivot column indices."""
    a = a.copy()
    m, n = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if a[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot], :] = a[[pivot, r], :]
        a[r, :] = [x / a[r, c] for x in a[r, :]]
        for i in range(m):
            if i != r and a[i, c] != 0:
                a[i, :] = [x - a[i, c] * y for x, y in zip(a[i, :], a[r, :])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a, pivots


def rank(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return len(rref(a)[1])


def nullspace(a: np.ndarray) -> list[np.ndarray]:
    """Basis of the right kernel as exact vectors."""
    m, n = a.shape
    if n == 0:
        return []
    if m == 0:
        return [fvec([1 if j == i else 0 for j in range(n)]) for i in range(n)]
    r, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        basis.append(fvec(v))
    return basis


def solve(a: np.ndarray, b: np.ndarray):
    """One exact solution of a x = b, or None when inconsistent."""
    m, n = a.shape
    aug = np.empty((m, n + 1), dtype=object)
    aug[:, :n] = a
    aug[:, n] = b
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = r[i, n]
    return fvec(x)


def inverse(a: np.ndarray) -> np.ndarray:
    m, n = a.shape
    if m != n:
        raise ValueError("inverse of a non-square matrix")
    aug = np.empty((n, 2 * n), dtype=object)
    aug[:, :n] = a
    aug[:, n:] = identity(n)
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return r[:, n:]
