"""Irreducible binary Goppa codes and their list decoder.

Gamma(g, L) is the set of binary words c with sum_i c_i/(x - alpha_i) = 0
mod g, for an irreducible g over GF(2^m) of degree t and a support L of
distinct field elements; the design distance is 2t + 1.

Decoding halves the key equation first: with Lambda = a^2 + x*b^2 the
congruence Lambda*S = Lambda' mod g becomes b*T = a mod g where
T^2 = x + S^(-1) mod g, so the Euclidean algorithm on (g, T) under the
mu = 1 order bounds a and b at half the error weight.  Up to t errors
one of the two squared-and-spread basis combinations is already the
locator; beyond that the decoder interpolates through the points
(alpha_i, sqrt(h1^(alpha_i)), sqrt(h2^(alpha_i))) and reassembles
locators from the linear factors, reaching any radius below
n/2 - sqrt(n(n-4t-2))/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from ._linalg import nullspace_basis
from .decoding import Candidate, ChosenParams, DecodeOutput
from .errors import InternalCheckError, ParameterError
from .galois import Field
from .keyeq import GrobnerPair, solve_key_equation
from .polyring import Poly, is_irreducible, mod_inverse, mod_sqrt_char2
from .ratinterp import (
    RatParams,
    choose_params,
    feasible_raw,
    find_linear_factors,
    interpolate,
    normalize_points,
)

_GF2 = Field(2)


class GoppaCode:
    """Gamma(g, L) for irreducible g over GF(2^m) and support L."""

    def __init__(self, field: Field, g: Poly, support: Sequence[int]):
        if field.p != 2:
            raise ValueError("binary Goppa codes need characteristic 2")
        if g.field != field:
            raise ValueError("Goppa polynomial over the wrong field")
        if g.degree < 1:
            raise ValueError("Goppa polynomial must have degree >= 1")
        g = g.monic()
        if not is_irreducible(g):
            raise ValueError("Goppa polynomial is reducible")
        support = [field.validate(a) for a in support]
        if len(set(support)) != len(support):
            raise ValueError("support elements must be distinct")
        for a in support:
            if g.eval(a) == 0:
                raise ValueError("Goppa polynomial vanishes on the support")
        self.field = field
        self.g = g
        self.support = tuple(support)

    @property
    def n(self) -> int:
        return len(self.support)

    @property
    def t(self) -> int:
        return int(self.g.degree)

    @property
    def design_distance(self) -> int:
        return 2 * self.t + 1

    @cached_property
    def _inv_terms(self) -> tuple[Poly, ...]:
        """(x - alpha_i)^(-1) mod g per support position."""
        f = self.field
        return tuple(
            mod_inverse(Poly(f, (f.neg(a), 1)), self.g) for a in self.support
        )

    @cached_property
    def parity_bits(self) -> np.ndarray:
        """m*t x n parity-check matrix over GF(2): column i expands the
        coefficients of (x - alpha_i)^(-1) mod g bitwise."""
        m, t, n = self.field.m, self.t, self.n
        h = np.zeros((m * t, n), dtype=np.int32)
        for i, term in enumerate(self._inv_terms):
            for c_idx in range(t):
                enc = term.coeff(c_idx)
                for bit in range(m):
                    h[c_idx * m + bit, i] = (enc >> bit) & 1
        return h

    @cached_property
    def generator(self) -> np.ndarray:
        """k x n binary generator matrix (a nullspace basis of the parity
        check matrix)."""
        basis = nullspace_basis(_GF2, self.parity_bits)
        if not basis:
            return np.zeros((0, self.n), dtype=np.int32)
        return np.array(basis, dtype=np.int32)

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    def encode(self, bits: Sequence[int]) -> tuple[int, ...]:
        if len(bits) != self.k:
            raise ValueError("message length must be k")
        word = np.zeros(self.n, dtype=np.int32)
        for b, row in zip(bits, self.generator):
            if b:
                word ^= row
        return tuple(int(v) for v in word)

    def contains(self, word: Sequence[int]) -> bool:
        return goppa_syndrome(self, word).is_zero()

    def __repr__(self):
        return f"GoppaCode(n={self.n}, t={self.t}, field={self.field!r})"


def goppa_syndrome(code: GoppaCode, word: Sequence[int]) -> Poly:
    """S = sum_{r_i = 1} (x - alpha_i)^(-1) mod g; zero exactly on
    codewords."""
    if len(word) != code.n:
        raise ValueError("word length must be n")
    acc = Poly.zero(code.field)
    for bit, term in zip(word, code._inv_terms):
        if bit not in (0, 1):
            raise ValueError("Goppa words are binary")
        if bit:
            acc = acc + term
    return acc


def split_even_odd(lam: Poly) -> tuple[Poly, Poly]:
    """(a, b) with lam = a^2 + x*b^2, valid in characteristic 2."""
    f = lam.field
    if f.p != 2:
        raise ValueError("even/odd split requires characteristic 2")
    even = [f.sqrt(c) for c in lam.coeffs[0::2]]
    odd = [f.sqrt(c) for c in lam.coeffs[1::2]]
    return Poly(f, even), Poly(f, odd)


# ---------------------------------------------------------------------------
# Patterson reduction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SingleFlip:
    """Outcome of the S^(-1) = x special case: flip the bit at the
    support position of 0, or fail when 0 is not in the support."""

    position: int | None


@dataclass(frozen=True)
class PattersonState:
    S: Poly
    S_inv: Poly
    S_tilde: Poly
    pair: GrobnerPair
    hat_h1: Poly
    hat_h2: Poly


def patterson_reduce(code: GoppaCode, synd: Poly) -> PattersonState | SingleFlip:
    """Halve the key equation.  Requires a nonzero syndrome."""
    if synd.is_zero():
        raise ValueError("patterson_reduce needs a nonzero syndrome")
    f = code.field
    g = code.g
    s_inv = mod_inverse(synd, g)
    if s_inv == Poly.x(f) % g:
        # a = 0 is forced, so Lambda = x is the only admissible locator
        try:
            pos = code.support.index(0)
        except ValueError:
            return SingleFlip(None)
        return SingleFlip(pos)
    s_tilde = mod_sqrt_char2((Poly.x(f) + s_inv) % g, g)
    pair = solve_key_equation(g, s_tilde, 1)
    x = Poly.x(f)
    h1, h2 = pair.h1, pair.h2
    hat_h1 = h1.c0 * h1.c0 + x * (h1.c1 * h1.c1)
    hat_h2 = h2.c0 * h2.c0 + x * (h2.c1 * h2.c1)
    return PattersonState(synd, s_inv, s_tilde, pair, hat_h1, hat_h2)


# ---------------------------------------------------------------------------
# radius and parameters
# ---------------------------------------------------------------------------

def binary_johnson_radius(n: int, t: int) -> float:
    """n/2 - sqrt(n(n-4t-2))/2; reporting only."""
    return n / 2 - math.sqrt(n * (n - 4 * t - 2)) / 2


def radius_ok(n: int, t: int, tau: int) -> bool:
    """tau < n/2 - sqrt(n(n-4t-2))/2 in exact integers:
    n - 2*tau > 0 and (n - 2*tau)^2 > n(n-4t-2)."""
    if n - 2 * tau <= 0:
        return False
    return (n - 2 * tau) ** 2 > n * (n - 4 * t - 2)


def tau_max(n: int, t: int) -> int:
    """Largest admissible radius below the binary Johnson bound."""
    prod = n * (n - 4 * t - 2)
    if prod < 0:
        return (n - 1) // 2
    return (n - math.isqrt(prod) - 1) // 2


def goppa_params(code: GoppaCode, tau: int, ell_max: int = 64) -> ChosenParams | None:
    """Feasible (s, ell) with minimal ell under ell > 2s, for t < tau
    inside the binary Johnson radius; the degree-cap sum is the
    half-integer tau - t - 1/2."""
    if tau <= code.t or not radius_ok(code.n, code.t, tau):
        return None
    w_total = Fraction(2 * tau - 2 * code.t - 1, 2)
    picked = choose_params(code.n, tau, w_total, ell_max, "ell_gt_2s")
    if picked is None:
        return None
    s, ell = picked
    return ChosenParams(s=s, ell=ell, w_total=w_total)


# ---------------------------------------------------------------------------
# the decoder
# ---------------------------------------------------------------------------

def _locator_flips(code: GoppaCode, lam: Poly, max_deg: int) -> list[int] | None:
    """Support positions flipped by a valid locator: monic-normalisable,
    degree in 1..max_deg, splitting over the support with exactly
    deg distinct roots."""
    if lam.is_zero():
        return None
    deg = int(lam.degree)
    if not 1 <= deg <= max_deg:
        return None
    lam = lam.monic()
    positions = [i for i, a in enumerate(code.support) if lam.eval(a) == 0]
    if len(positions) != deg:
        return None
    return positions


def _flip(word: Sequence[int], positions: Sequence[int]) -> tuple[int, ...]:
    out = list(word)
    for i in positions:
        out[i] ^= 1
    return tuple(out)


def wu_decode_goppa(
    code: GoppaCode,
    word: Sequence[int],
    tau: int,
    *,
    ell: int | None = None,
    s: int | None = None,
    ell_max: int = 64,
) -> DecodeOutput:
    """All codewords within Hamming distance tau of the word.

    Stage 1 is the halved key equation: when either squared basis
    combination is a locator of degree <= 2t - tau the single corrected
    word already settles the whole ball (the design distance 2t + 1
    exceeds (2t - tau) + tau).  Stage 2, needed only for tau > t, runs
    the rational interpolation on the square-rooted evaluations and
    reassembles locators f1^2*h1^ + f2^2*h2^ from the factors.
    """
    f = code.field
    n, t = code.n, code.t
    if len(word) != n:
        raise ValueError("word length must be n")
    word = [int(b) for b in word]
    if any(b not in (0, 1) for b in word):
        raise ValueError("Goppa words are binary")
    if tau < 0 or not radius_ok(n, t, tau):
        raise ParameterError(f"tau={tau} is outside the decoding radius")
    if (ell is None) != (s is None):
        raise ParameterError("give both ell and s or neither")
    if ell is not None and not (1 <= s and 2 * s < ell):
        raise ParameterError("need ell > 2s >= 2")

    synd = goppa_syndrome(code, word)
    if synd.is_zero():
        cand = Candidate(tuple(word), (), (), "unique")
        return DecodeOutput((cand,), tau, None, None, "unique")

    reduced = patterson_reduce(code, synd)
    if isinstance(reduced, SingleFlip):
        if reduced.position is None:
            return DecodeOutput((), tau, None, None, "unique")
        corrected = _flip(word, [reduced.position])
        if not code.contains(corrected) or tau < 1:
            return DecodeOutput((), tau, None, None, "unique")
        cand = Candidate(corrected, (reduced.position,), (1,), "unique")
        return DecodeOutput((cand,), tau, None, None, "unique")

    # stage 1: either squared combination may already be the locator
    step_cap = max(2 * t - tau, 0)
    for lam in (reduced.hat_h1, reduced.hat_h2):
        flips = _locator_flips(code, lam, step_cap)
        if flips is None:
            continue
        corrected = _flip(word, flips)
        if not code.contains(corrected):
            continue
        if len(flips) > tau:
            # a codeword within 2t - tau leaves no room for any other
            # codeword inside the radius: the ball is provably empty
            return DecodeOutput((), tau, None, None, "unique")
        cand = Candidate(corrected, tuple(flips), (1,) * len(flips), "unique")
        return DecodeOutput((cand,), tau, None, None, "unique")

    if tau <= t:
        # every pattern of weight <= tau <= t is caught by stage 1
        return DecodeOutput((), tau, None, None, "unique")

    deg_x2 = reduced.pair.deg_x2
    w1 = Fraction(tau, 2) - t + deg_x2
    w2 = Fraction(tau - 1, 2) - deg_x2
    if w1 < 0 or w2 < 0:
        # one cofactor is forced to zero, so stage 1 was already complete
        return DecodeOutput((), tau, None, None, "unique")

    if ell is None:
        picked = goppa_params(code, tau, ell_max)
        if picked is None:
            raise ParameterError(f"no feasible (s, ell) with ell <= {ell_max} at tau={tau}")
        s, ell = picked.s, picked.ell
    elif not (2 * s < ell and feasible_raw(n, tau, s, ell, Fraction(2 * tau - 2 * t - 1, 2))):
        raise ParameterError(f"(s={s}, ell={ell}) infeasible at tau={tau}")

    triples = []
    for a in code.support:
        y = f.sqrt(reduced.hat_h1.eval(a))
        z = f.sqrt(reduced.hat_h2.eval(a))
        if y == 0 and z == 0:
            raise InternalCheckError("halved key-equation outputs share a root")
        triples.append((a, y, z))
    points = normalize_points(f, triples)
    params = RatParams(n=n, tau=tau, s=s, ell=ell, w1=w1, w2=w2)
    q = interpolate(f, points, params)

    candidates: dict[tuple[int, ...], Candidate] = {}
    for f1, f2 in find_linear_factors(q, params.w1, params.w2):
        lam = (f1 * f1) * reduced.hat_h1 + (f2 * f2) * reduced.hat_h2
        flips = _locator_flips(code, lam, tau)
        if flips is None:
            continue
        corrected = _flip(word, flips)
        if not code.contains(corrected) or corrected in candidates:
            continue
        candidates[corrected] = Candidate(corrected, tuple(flips), (1,) * len(flips), "list")

    ordered = tuple(sorted(candidates.values(), key=lambda c: c.word))
    return DecodeOutput(ordered, tau, ell, s, "list")


def random_irreducible(field: Field, t: int, next_word: Callable[[], int]) -> Poly:
    """Monic degree-t irreducible over the field, drawn from the given
    64-bit word source (deterministic per source)."""
    if t < 1:
        raise ValueError("degree must be >= 1")
    while True:
        coeffs = [next_word() % field.order for _ in range(t)] + [1]
        g = Poly(field, coeffs)
        if is_irreducible(g):
            return g
