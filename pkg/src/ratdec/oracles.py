"""Brute-force references for the decoders and the factor finder.

Deliberately simple and slow: full codebook enumeration and exhaustive
factor trials.  Hard caps raise instead of truncating; an oracle must
never approximate.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import floor

import numpy as np

from .galois import Field
from .goppa import GoppaCode
from .grs import GrsCode, encode
from .polyring import Poly, poly_gcd
from .ratinterp import HomogPoly

DEFAULT_CAP = 1 << 20


class CodebookOracle:
    """A fully enumerated codebook with exact metric-ball queries."""

    def __init__(self, codebook: np.ndarray):
        self.codebook = codebook

    @classmethod
    def for_grs(cls, code: GrsCode, cap: int = DEFAULT_CAP) -> "CodebookOracle":
        size = code.field.order**code.k
        if size > cap:
            raise ValueError(f"codebook of {size} words exceeds the cap {cap}")
        f = code.field
        # vandermonde-with-multipliers: column j holds v_i * alpha_i^j
        cols = np.zeros((code.k, code.n), dtype=np.int64)
        for i, (a, v) in enumerate(zip(code.alphas, code.mults)):
            acc = v
            for j in range(code.k):
                cols[j, i] = acc
                acc = f.mul(acc, a)
        words = np.zeros((size, code.n), dtype=np.int64)
        msgs = np.array(list(product(range(f.order), repeat=code.k)), dtype=np.int64)
        for j in range(code.k):
            term = f.vec_mul(msgs[:, j : j + 1], cols[j][None, :])
            words = f.vec_add(words, term)
        return cls(words)

    @classmethod
    def for_goppa(cls, code: GoppaCode, cap: int = DEFAULT_CAP) -> "CodebookOracle":
        size = 1 << code.k
        if size > cap:
            raise ValueError(f"codebook of {size} words exceeds the cap {cap}")
        gen = code.generator.astype(np.int64)
        words = np.zeros((size, code.n), dtype=np.int64)
        # Gray-code walk: word index differs from the previous in one row
        current = np.zeros(code.n, dtype=np.int64)
        prev_gray = 0
        for idx in range(size):
            gray = idx ^ (idx >> 1)
            diff = gray ^ prev_gray
            if diff:
                current = current ^ gen[diff.bit_length() - 1]
            words[idx] = current
            prev_gray = gray
        return cls(words)

    @property
    def size(self) -> int:
        return self.codebook.shape[0]

    def list_within(self, word, tau: int) -> set[tuple[int, ...]]:
        """Exactly the codewords at Hamming distance <= tau from word."""
        r = np.asarray(list(word), dtype=np.int64)
        dists = np.count_nonzero(self.codebook != r[None, :], axis=1)
        hits = self.codebook[dists <= tau]
        return {tuple(int(v) for v in row) for row in hits}

    def contains(self, word) -> bool:
        return bool(self.list_within(word, 0))


def exhaustive_factor_search(
    Q: HomogPoly, w1, w2, cap: int = DEFAULT_CAP
) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All normalised coprime (f1, f2) with (y*f1 + z*f2) | Q and
    deg f1 <= w1, deg f2 <= w2, by trial of every coefficient vector.
    Returned as pairs of coefficient tuples."""
    field = Q.field
    w1, w2 = Fraction(w1), Fraction(w2)
    d1, d2 = floor(w1), floor(w2)
    q = field.order
    trials = q ** (d1 + d2 + 2)
    if trials > cap:
        raise ValueError(f"{trials} candidate pairs exceed the cap {cap}")

    out: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()

    def divides(f1: Poly, f2: Poly) -> bool:
        return Q.eval_form(-f2, f1).is_zero()

    # degenerate z factor
    f1 = Poly.zero(field)
    f2 = Poly.one(field)
    if divides(f1, f2):
        out.add((f1.coeffs, f2.coeffs))
    # monic f1 of every degree up to d1, any f2 up to degree d2
    for deg1 in range(d1 + 1):
        for low in product(range(q), repeat=deg1):
            f1 = Poly(field, list(low) + [1])
            for c2 in product(range(q), repeat=d2 + 1):
                f2 = Poly(field, c2)
                # gcd(f1, 0) = f1, so (f1, 0) survives only as (1, 0)
                if poly_gcd(f1, f2).degree != 0:
                    continue
                if divides(f1, f2):
                    out.add((f1.coeffs, f2.coeffs))
    return out
