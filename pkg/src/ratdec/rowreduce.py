"""Row reduction of square F[x] matrices to weak Popov form under a
weighted degree metric.

The weight of a row is max_j (deg e_j + w_j) over its nonzero entries,
for fixed non-negative column weights w_j with denominator at most 2;
a row's pivot is the rightmost column attaining the max.  The matrix is
in weak Popov form when all pivots sit in distinct columns, and then a
row of minimal weight is a shortest vector of the row space: in any
combination sum a_i * row_i the leading contributions of the maximal
rows sit in distinct pivot columns and cannot cancel.

Reduction is by simple transformations: two rows sharing a pivot column
j differ there by an integer degree gap, so subtracting c * x^gap times
the lower row from the higher strictly decreases the higher row's
(weight, pivot) pair.  Weights only ever enter comparisons, scaled by 2
to stay integral; the polynomial arithmetic is untouched by them, which
keeps half-integer weights exact.

Matrices are manipulated as (nu, nu, D) numpy coefficient tensors so a
simple transformation is a handful of vector operations regardless of
degree.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InternalCheckError
from .galois import Field
from .polyring import NEG_INF, Poly


def _doubled_weights(weights: Sequence[Fraction | int]) -> list[int]:
    fr = [Fraction(w) for w in weights]
    if any(w < 0 for w in fr):
        raise ValueError("column weights must be non-negative")
    if any(w.denominator not in (1, 2) for w in fr):
        raise ValueError("column weights must have denominator 1 or 2")
    return [int(2 * w) for w in fr]


def row_reduce(
    rows: Sequence[Sequence[Poly]],
    weights: Sequence[Fraction | int] | None = None,
    *,
    return_transform: bool = False,
):
    """Reduce a nonsingular square polynomial matrix to weak Popov form
    under the weighted degree metric.

    Returns the reduced matrix as a list of rows of Poly, or the pair
    (reduced, transform) when return_transform is set, where transform
    is the unimodular U with reduced = U * input.  Raises ValueError on
    a singular input.
    """
    nu = len(rows)
    if nu == 0 or any(len(r) != nu for r in rows):
        raise ValueError("row_reduce expects a square matrix")
    field = rows[0][0].field
    if weights is None:
        weights = [0] * nu
    if len(weights) != nu:
        raise ValueError("one weight per column required")
    w2 = _doubled_weights(weights)

    # Weighted row degrees never increase, so every intermediate entry in
    # column j keeps 2*deg + w2_j <= R0; size the buffer off that bound.
    r0 = 0
    for r in rows:
        for j, e in enumerate(r):
            if not e.is_zero():
                r0 = max(r0, 2 * int(e.degree) + w2[j])
    d = r0 // 2 + 2
    dtype = np.int64 if field.m == 1 else np.int32
    a = np.zeros((nu, nu, d), dtype=dtype)
    for i, r in enumerate(rows):
        for j, e in enumerate(r):
            if not e.is_zero():
                a[i, j, : len(e.coeffs)] = e.coeffs

    ops = _weak_popov(field, a, np.array(w2, dtype=np.int64))

    out = [
        [Poly(field, [int(c) for c in a[i, j, :]]) for j in range(nu)]
        for i in range(nu)
    ]
    if not return_transform:
        return out
    transform = _replay_transform(field, nu, ops)
    return out, transform


def _replay_transform(field: Field, nu: int, ops) -> list[list[Poly]]:
    u = [
        [Poly.one(field) if i == j else Poly.zero(field) for j in range(nu)]
        for i in range(nu)
    ]
    for i, k, c, gap in ops:
        mono = Poly(field, (0,) * gap + (field.neg(c),))
        u[i] = [ui + mono * uk for ui, uk in zip(u[i], u[k])]
    return u


def _entry_degs(a: np.ndarray, i: int) -> np.ndarray:
    """Degrees of the entries of row i (-1 marks a zero entry)."""
    d = a.shape[2]
    nz = a[i, :, ::-1] != 0
    has = nz.any(axis=1)
    return np.where(has, d - 1 - nz.argmax(axis=1), -1)


def _row_info(degs: np.ndarray, w2: np.ndarray) -> tuple[int, int]:
    """(doubled weighted row degree, pivot column) for one row."""
    weighted = np.where(degs >= 0, 2 * degs + w2, np.int64(-1))
    top = int(weighted.max())
    piv = int(np.nonzero(weighted == top)[0][-1])
    return top, piv


def _weak_popov(field: Field, a: np.ndarray, w2: np.ndarray):
    nu, d = a.shape[0], a.shape[2]
    degs = [_entry_degs(a, i) for i in range(nu)]
    info = []
    for i in range(nu):
        if degs[i].max() < 0:
            raise ValueError("row_reduce requires a nonsingular matrix")
        info.append(_row_info(degs[i], w2))

    ops = []
    # Each transformation lexicographically decreases one (weight, pivot)
    # pair, so this terminates; the cap only guards against bugs.
    budget = 2 * nu * nu * (2 * d + int(w2.max()) + 2) + 1000
    while True:
        seen: dict[int, int] = {}
        clash = None
        for i in range(nu):
            piv = info[i][1]
            if piv in seen:
                clash = (seen[piv], i)
                break
            seen[piv] = i
        if clash is None:
            return ops
        i, k = clash
        if info[i][0] < info[k][0]:
            i, k = k, i
        piv = info[i][1]
        gap = int(degs[i][piv] - degs[k][piv])
        lc_i = int(a[i, piv, degs[i][piv]])
        lc_k = int(a[k, piv, degs[k][piv]])
        c = field.div(lc_i, lc_k)
        shifted = np.zeros_like(a[k])
        if gap:
            shifted[:, gap:] = a[k][:, : d - gap]
        else:
            shifted[:, :] = a[k]
        a[i] = field.vec_sub(a[i], field.vec_mul_scalar(shifted, c))
        ops.append((i, k, c, gap))
        degs[i] = _entry_degs(a, i)
        if degs[i].max() < 0:
            raise ValueError("row_reduce requires a nonsingular matrix")
        info[i] = _row_info(degs[i], w2)
        budget -= 1
        if budget <= 0:
            raise InternalCheckError("weak Popov reduction exceeded its budget")


def weighted_row_degree(row: Sequence[Poly], weights: Sequence[Fraction | int]):
    """max_j (deg row[j] + weight_j) over nonzero entries, NEG_INF for a
    zero row."""
    best = NEG_INF
    for e, w in zip(row, weights):
        if not e.is_zero():
            v = e.degree + Fraction(w)
            if best == NEG_INF or v > best:
                best = v
    return best


def minimal_row(reduced: Sequence[Sequence[Poly]], weights: Sequence[Fraction | int]) -> int:
    """Index of the row with smallest weighted degree."""
    degs = [weighted_row_degree(r, weights) for r in reduced]
    return min(range(len(degs)), key=lambda i: degs[i])
