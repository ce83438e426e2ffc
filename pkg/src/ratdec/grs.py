"""Generalised Reed-Solomon codes and their list decoder.

The code is the image of polynomials of degree < k under evaluation at n
distinct nonzero points, scaled per coordinate; d = n - k + 1.  Decoding
runs the key-equation machinery on (x^(d-1), S) under the mu = 0 order:
when few errors occurred the second basis element is already the error
locator (minimum-distance decoding); otherwise its two y-components feed
a rational interpolation problem whose linear factors enumerate every
locator within the radius.

Radius decisions are made in exact integer arithmetic; the float radius
value is reporting-only.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .decoding import Candidate, ChosenParams, DecodeOutput
from .errors import InternalCheckError, ParameterError
from .galois import Field
from .keyeq import GrobnerPair, solve_key_equation
from .polyring import Poly
from .ratinterp import RatParams, choose_params, find_linear_factors, interpolate, normalize_points


class GrsCode:
    """An [n, k, n-k+1] code over GF(q) with evaluation points alphas and
    column multipliers mults (all nonzero, alphas distinct)."""

    def __init__(
        self,
        field: Field,
        n: int,
        k: int,
        alphas: Sequence[int] | None = None,
        mults: Sequence[int] | None = None,
    ):
        if not 1 <= k < n <= field.order - 1:
            raise ValueError("need 1 <= k < n <= q - 1")
        if alphas is None:
            alphas = list(range(1, n + 1))
        alphas = [field.validate(a) for a in alphas]
        if mults is None:
            mults = [1] * n
        mults = [field.validate(v) for v in mults]
        if len(alphas) != n or len(mults) != n:
            raise ValueError("alphas and mults must have length n")
        if 0 in alphas or len(set(alphas)) != n:
            raise ValueError("evaluation points must be distinct and nonzero")
        if 0 in mults:
            raise ValueError("column multipliers must be nonzero")
        self.field = field
        self.n = n
        self.k = k
        self.alphas = tuple(alphas)
        self.mults = tuple(mults)

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @cached_property
    def hat_v(self) -> tuple[int, ...]:
        """hat_v[j] = (v_j * prod_{h != j} (alpha_j - alpha_h))^(-1)."""
        f = self.field
        out = []
        for j in range(self.n):
            prod = self.mults[j]
            for h in range(self.n):
                if h != j:
                    prod = f.mul(prod, f.sub(self.alphas[j], self.alphas[h]))
            out.append(f.inv(prod))
        return tuple(out)

    @cached_property
    def _syndrome_matrix(self) -> list[list[int]]:
        """Row i holds hat_v_j * alpha_j^(d-2-i) for the syndrome sum."""
        f = self.field
        rows = []
        for i in range(self.d - 1):
            rows.append(
                [f.mul(self.hat_v[j], f.pow(self.alphas[j], self.d - 2 - i)) for j in range(self.n)]
            )
        return rows

    def __repr__(self):
        return f"GrsCode(n={self.n}, k={self.k}, field={self.field!r})"


def encode(code: GrsCode, message: Poly | Sequence[int]) -> tuple[int, ...]:
    """(v_i * message(alpha_i))_i; message degree must stay below k."""
    if not isinstance(message, Poly):
        message = Poly(code.field, message)
    if message.field != code.field:
        raise ValueError("message over the wrong field")
    if not message.degree < code.k:
        raise ValueError("message degree must be < k")
    f = code.field
    return tuple(f.mul(v, message.eval(a)) for a, v in zip(code.alphas, code.mults))


def syndrome(code: GrsCode, word: Sequence[int]) -> Poly:
    """S(x) = sum_i x^i sum_j r_j hat_v_j alpha_j^(d-2-i); zero exactly on
    codewords, degree < d - 1."""
    if len(word) != code.n:
        raise ValueError("word length must be n")
    f = code.field
    coeffs = []
    for row in code._syndrome_matrix:
        acc = 0
        for rj, m in zip(word, row):
            if rj:
                acc = f.add(acc, f.mul(rj, m))
        coeffs.append(acc)
    return Poly(f, coeffs)


def error_locator(code: GrsCode, positions: Sequence[int]) -> Poly:
    """Reference construction: product of (x - alpha_i) over the given
    positions."""
    f = code.field
    out = Poly.one(f)
    for i in positions:
        out = out * Poly(f, (f.neg(code.alphas[i]), 1))
    return out


def error_evaluator(code: GrsCode, error: dict[int, int]) -> Poly:
    """Reference construction matching error_locator:
    -sum_i e_i alpha_i^(d-1) hat_v_i prod_{j != i} (x - alpha_j)."""
    f = code.field
    out = Poly.zero(f)
    for i, e_i in error.items():
        term = Poly.one(f)
        for j in error:
            if j != i:
                term = term * Poly(f, (f.neg(code.alphas[j]), 1))
        scale = f.mul(e_i, f.mul(f.pow(code.alphas[i], code.d - 1), code.hat_v[i]))
        out = out - term.scale(scale)
    return out


def error_values(code: GrsCode, locator: Poly, evaluator: Poly) -> dict[int, int]:
    """Error magnitudes at the locator's roots:
    e_i = -evaluator(alpha_i) / (alpha_i^(d-1) hat_v_i locator'(alpha_i))."""
    f = code.field
    deriv = locator.derivative()
    out = {}
    for i, a in enumerate(code.alphas):
        if locator.eval(a) == 0:
            dv = deriv.eval(a)
            if dv == 0:
                raise ArithmeticError("locator is not square-free at a root")
            denom = f.mul(f.pow(a, code.d - 1), f.mul(code.hat_v[i], dv))
            out[i] = f.neg(f.div(evaluator.eval(a), denom))
    return out


# ---------------------------------------------------------------------------
# radius and parameter selection
# ---------------------------------------------------------------------------

def johnson_radius(n: int, d: int) -> float:
    """n - sqrt(n(n-d)); reporting only, never used for decisions."""
    return n - math.sqrt(n * (n - d))


def radius_ok(n: int, d: int, tau: int) -> bool:
    """tau < n - sqrt(n(n-d)), decided in integers: (n-tau)^2 > n(n-d)."""
    return n - tau > 0 and (n - tau) ** 2 > n * (n - d)


def tau_max(n: int, d: int) -> int:
    """Largest admissible radius: n - isqrt(n(n-d)) - 1."""
    return n - math.isqrt(n * (n - d)) - 1


def wu_param_ok(n: int, d: int, tau: int, ell: int, s: int) -> bool:
    """Feasibility of (s, ell) at radius tau with w1+w2 = 2*tau - d,
    all-integer form: n*s*(s+1) < 2*s*tau*(ell+1) - ell*(ell+1)*(2*tau-d)."""
    return n * s * (s + 1) < 2 * s * tau * (ell + 1) - ell * (ell + 1) * (2 * tau - d)


def gsa_param_ok(n: int, d: int, tau: int, ell: int, s_g: int) -> bool:
    """The Guruswami-Sudan feasibility for multiplicity s_g and list size
    ell at radius tau: n*s_g*(s_g+1) < 2*s_g*(n-tau)*(ell+1) - ell*(ell+1)*(n-d)."""
    return n * s_g * (s_g + 1) < 2 * s_g * (n - tau) * (ell + 1) - ell * (ell + 1) * (n - d)


def minimal_wu_s(n: int, d: int, tau: int, ell: int) -> int | None:
    for s in range(1, ell + 1):
        if wu_param_ok(n, d, tau, ell, s):
            return s
    return None


def minimal_gsa_s(n: int, d: int, tau: int, ell: int) -> int | None:
    for s_g in range(1, ell + 1):
        if gsa_param_ok(n, d, tau, ell, s_g):
            return s_g
    return None


def grs_params(code: GrsCode, tau: int, ell_max: int = 64) -> ChosenParams | None:
    """Feasible (s, ell) with minimal ell for decoding radius tau, or None
    when tau is outside the radius or nothing fits below ell_max."""
    if not radius_ok(code.n, code.d, tau):
        return None
    w_total = Fraction(2 * tau - code.d)
    if w_total < 0:
        return None
    picked = choose_params(code.n, tau, w_total, ell_max, "ell_ge_s")
    if picked is None:
        return None
    s, ell = picked
    return ChosenParams(s=s, ell=ell, w_total=w_total)


# ---------------------------------------------------------------------------
# the decoder
# ---------------------------------------------------------------------------

def _locator_candidate(
    code: GrsCode, word: Sequence[int], synd: Poly, lam: Poly, tau: int, max_deg: int, via: str
) -> Candidate | None:
    """Validate lam as an error locator and correct the word by it.

    Valid means: monic-normalisable of degree in 1..max_deg, splitting
    over the evaluation points with as many distinct roots as its degree
    (which forces square-freeness), and such that the corrected word lies
    back in the code within distance tau."""
    f = code.field
    if lam.is_zero():
        return None
    deg = int(lam.degree)
    if not 1 <= deg <= max_deg:
        return None
    lam = lam.monic()
    positions = [i for i, a in enumerate(code.alphas) if lam.eval(a) == 0]
    if len(positions) != deg:
        return None
    omega = (lam * synd) % Poly.x_pow(f, code.d - 1)
    try:
        values = error_values(code, lam, omega)
    except ArithmeticError:
        return None
    corrected = list(word)
    for i in positions:
        corrected[i] = f.sub(corrected[i], values[i])
    changed = [i for i in positions if values[i] != 0]
    if len(changed) > tau:
        return None
    if not syndrome(code, corrected).is_zero():
        return None
    return Candidate(
        word=tuple(corrected),
        error_positions=tuple(i for i in changed),
        error_values=tuple(values[i] for i in changed),
        found_by=via,
    )


def wu_decode(
    code: GrsCode,
    word: Sequence[int],
    tau: int,
    *,
    ell: int | None = None,
    s: int | None = None,
    ell_max: int = 64,
) -> DecodeOutput:
    """All codewords within Hamming distance tau of the word.

    Stage 1 solves the key equation and tries the second basis element as
    a locator of degree <= d - tau; if that succeeds and tau is small
    enough that the remaining ball is provably empty, the answer is that
    single word.  Otherwise stage 2 interpolates through the n points
    (alpha_i, h1_y(alpha_i), h2_y(alpha_i)) and turns every linear factor
    of the result into a locator candidate.  Every candidate is verified
    for membership and distance before it is returned.
    """
    f = code.field
    n, d = code.n, code.d
    if len(word) != n:
        raise ValueError("word length must be n")
    word = [f.validate(c) for c in word]
    if tau < 0 or not radius_ok(n, d, tau):
        raise ParameterError(f"tau={tau} is outside the decoding radius")
    if (ell is None) != (s is None):
        raise ParameterError("give both ell and s or neither")
    if ell is not None:
        if not (1 <= s <= ell):
            raise ParameterError("need 1 <= s <= ell")
        if not wu_param_ok(n, d, tau, ell, s):
            raise ParameterError(f"(s={s}, ell={ell}) infeasible at tau={tau}")

    synd = syndrome(code, word)
    if synd.is_zero():
        cand = Candidate(tuple(word), (), (), "unique")
        return DecodeOutput((cand,), tau, None, None, "unique")

    pair = solve_key_equation(Poly.x_pow(f, d - 1), synd, 0)
    h1y, h2y = pair.h1.c1, pair.h2.c1
    deg_x2 = pair.deg_x2

    candidates: dict[tuple[int, ...], Candidate] = {}
    step3 = _locator_candidate(code, word, synd, h2y, tau, max(d - tau, 0), "unique")
    if step3 is not None:
        candidates[step3.word] = step3
        if len(step3.error_positions) + tau < d:
            # any second codeword in the ball would sit within d of this one
            return DecodeOutput((step3,), tau, None, None, "unique")

    # degree caps for the factor pair at epsilon = tau
    w1 = tau - d + deg_x2
    w2 = tau - deg_x2
    if w2 < 0:
        # deg f2 = eps - deg_x2 exactly, so every solution needs eps > tau
        return DecodeOutput(tuple(candidates.values()), tau, None, None, "unique")
    if w1 < 0:
        # f1 = 0 forced: the only locator is h2y, already tried above
        return DecodeOutput(tuple(candidates.values()), tau, None, None, "unique")

    if ell is None:
        picked = grs_params(code, tau, ell_max)
        if picked is None:
            raise ParameterError(f"no feasible (s, ell) with ell <= {ell_max} at tau={tau}")
        s, ell = picked.s, picked.ell

    triples = []
    for a in code.alphas:
        y, z = h1y.eval(a), h2y.eval(a)
        if y == 0 and z == 0:
            raise InternalCheckError("key-equation outputs share a root")
        triples.append((a, y, z))
    points = normalize_points(f, triples)
    params = RatParams(n=n, tau=tau, s=s, ell=ell, w1=Fraction(w1), w2=Fraction(w2))
    q = interpolate(f, points, params)
    for f1, f2 in find_linear_factors(q, params.w1, params.w2):
        lam = f1 * h1y + f2 * h2y
        cand = _locator_candidate(code, word, synd, lam, tau, tau, "list")
        if cand is not None and cand.word not in candidates:
            candidates[cand.word] = cand

    ordered = tuple(sorted(candidates.values(), key=lambda c: c.word))
    return DecodeOutput(ordered, tau, ell, s, "list")
