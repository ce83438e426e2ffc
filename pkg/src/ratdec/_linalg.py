"""Dense linear algebra over a Field, on numpy arrays of encodings.

Row reduction here is plain Gauss-Jordan; rows/columns stay small at the
scales this package targets, the numpy kernels just keep the constant
factors down.
"""

from __future__ import annotations

import numpy as np

from .galois import Field


def rref(field: Field, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    a = mat.astype(np.int64 if field.m == 1 else np.int32).copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        rows = np.nonzero(a[r:, c])[0]
        if rows.size == 0:
            continue
        pr = r + int(rows[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        if a[r, c] != 1:
            a[r] = field.vec_mul_scalar(a[r], field.inv(int(a[r, c])))
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            factors = a[others, c]
            a[others] = field.vec_sub(
                a[others], field.vec_mul(factors[:, None], a[r][None, :])
            )
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace_basis(field: Field, mat: np.ndarray) -> list[np.ndarray]:
    """Basis of the right nullspace of mat (one vector per free column)."""
    nrows, ncols = mat.shape
    if nrows == 0:
        return [np.eye(ncols, dtype=np.int32)[i] for i in range(ncols)]
    a, pivots = rref(field, mat)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = np.zeros(ncols, dtype=np.int32)
        v[free] = 1
        for r, c in enumerate(pivots):
            v[c] = field.neg(int(a[r, free]))
        basis.append(v)
    return basis


def nullspace_vector(field: Field, mat: np.ndarray) -> np.ndarray | None:
    """Some nonzero nullspace vector, or None if the kernel is trivial."""
    basis = nullspace_basis(field, mat)
    return basis[0] if basis else None
