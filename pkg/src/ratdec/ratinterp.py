"""Rational interpolation through partially projective points.

Given n points (x_i, y_i : z_i) with distinct x_i and (y_i, z_i) != (0,0),
the task is to find all coprime pairs (f1, f2) with deg f1 <= w1,
deg f2 <= w2 and y_i f1(x_i) + z_i f2(x_i) = 0 for at least tau of the
points.  The route: build a trivariate Q(x,y,z), homogeneous of degree
ell in (y, z), vanishing to order s at every point, with
(1, w2, w1)-weighted degree below s*tau; every sought pair then shows up
as a linear factor y*f1 + z*f2 of Q.

Q is found without linear algebra on the full constraint system: the
module of all qualifying forms has an explicit basis whose (ell+1)^2
coefficient matrix is row reduced under a weighted degree metric; the
shortest row is a minimal-weight Q.  The naive linear-system solver is
kept alongside as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Literal, Sequence

import numpy as np

from ._linalg import nullspace_vector
from .errors import InternalCheckError, ParameterError
from .galois import Field
from .polyring import NEG_INF, Poly, ea_full, lagrange, poly_gcd, poly_xgcd
from .rowreduce import minimal_row, row_reduce, weighted_row_degree

_RRR_NODE_CAP = 200_000


# ---------------------------------------------------------------------------
# points and parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class InterpPoint:
    """Normalised projective point: z in {0, 1}; y = 1 whenever z = 0."""

    x: int
    y: int
    z: int


def normalize_point(field: Field, x: int, y: int, z: int) -> InterpPoint:
    if z != 0:
        return InterpPoint(x, field.div(y, z), 1)
    if y == 0:
        raise ValueError("projective point needs y or z nonzero")
    return InterpPoint(x, 1, 0)


def normalize_points(field: Field, triples: Sequence[tuple[int, int, int]]) -> tuple[InterpPoint, ...]:
    pts = tuple(normalize_point(field, *t) for t in triples)
    xs = [p.x for p in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation x-coordinates must be distinct")
    return pts


@dataclass(frozen=True)
class RatParams:
    """Instance sizes for one interpolation problem.

    w1 and w2 are the degree caps on f1 and f2; they may be half-integers
    (Goppa decoding) but never negative.  Feasibility of (s, ell) is a
    separate question answered by ``feasible``.
    """

    n: int
    tau: int
    s: int
    ell: int
    w1: Fraction
    w2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "w1", Fraction(self.w1))
        object.__setattr__(self, "w2", Fraction(self.w2))
        if self.n < 1:
            raise ValueError("need at least one point")
        if not 1 <= self.tau <= self.n:
            raise ValueError("tau must be in 1..n")
        if self.s < 1:
            raise ValueError("multiplicity must be >= 1")
        if self.ell < self.s:
            raise ValueError("designed list size must be >= multiplicity")
        for w in (self.w1, self.w2):
            if w < 0:
                raise ValueError("weight bounds must be non-negative")
            if w.denominator not in (1, 2):
                raise ValueError("weight bounds must have denominator 1 or 2")

    @property
    def w_total(self) -> Fraction:
        return self.w1 + self.w2


def feasible_raw(n: int, tau: int, s: int, ell: int, w_total: Fraction | int) -> bool:
    """The strict population-count inequality guaranteeing a nonzero Q:
    n*s*(s+1)/2 < s*tau*(ell+1) - ell*(ell+1)/2 * (w1+w2)."""
    lhs = Fraction(n * s * (s + 1), 2)
    rhs = s * tau * (ell + 1) - Fraction(ell * (ell + 1), 2) * Fraction(w_total)
    return lhs < rhs


def feasible(params: RatParams) -> bool:
    return feasible_raw(params.n, params.tau, params.s, params.ell, params.w_total)


def choose_params(
    n: int,
    tau: int,
    w_total: Fraction | int,
    ell_max: int,
    constraint: Literal["ell_ge_s", "ell_gt_2s"] = "ell_ge_s",
) -> tuple[int, int] | None:
    """Smallest feasible (s, ell), minimising ell first and s on ties;
    ell bounds both the list size and the matrix dimension, which is the
    dominant cost.  None when nothing works with ell <= ell_max."""
    if constraint not in ("ell_ge_s", "ell_gt_2s"):
        raise ValueError("unknown structural constraint")
    w_total = Fraction(w_total)
    for ell in range(1, ell_max + 1):
        s_top = ell if constraint == "ell_ge_s" else (ell - 1) // 2
        for s in range(1, s_top + 1):
            if feasible_raw(n, tau, s, ell, w_total):
                return s, ell
    return None


# ---------------------------------------------------------------------------
# homogeneous forms in (y, z) with F[x] coefficients
# ---------------------------------------------------------------------------

class HomogPoly:
    """sum_i comps[i](x) * y^i * z^(ell-i), homogeneous of degree ell."""

    __slots__ = ("field", "ell", "comps")

    def __init__(self, field: Field, comps: Sequence[Poly]):
        if not comps:
            raise ValueError("a form needs at least one component")
        for c in comps:
            if c.field != field:
                raise ValueError("component over the wrong field")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ell", len(comps) - 1)
        object.__setattr__(self, "comps", tuple(comps))

    def __setattr__(self, *_):
        raise AttributeError("HomogPoly is immutable")

    @classmethod
    def zero(cls, field: Field, ell: int) -> "HomogPoly":
        return cls(field, [Poly.zero(field)] * (ell + 1))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HomogPoly)
            and self.field == other.field
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash((self.field, self.comps))

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        if other.ell != self.ell:
            raise ValueError("cannot add forms of different degree")
        return HomogPoly(self.field, [a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        if other.ell != self.ell:
            raise ValueError("cannot subtract forms of different degree")
        return HomogPoly(self.field, [a - b for a, b in zip(self.comps, other.comps)])

    def scale(self, c: int) -> "HomogPoly":
        return HomogPoly(self.field, [p.scale(c) for p in self.comps])

    def scale_poly(self, f: Poly) -> "HomogPoly":
        return HomogPoly(self.field, [p * f for p in self.comps])

    def __mul__(self, other: "HomogPoly") -> "HomogPoly":
        out = [Poly.zero(self.field)] * (self.ell + other.ell + 1)
        for i, a in enumerate(self.comps):
            if a.is_zero():
                continue
            for j, b in enumerate(other.comps):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return HomogPoly(self.field, out)

    def __pow__(self, e: int) -> "HomogPoly":
        if e < 0:
            raise ValueError("negative powers are undefined")
        acc = HomogPoly(self.field, [Poly.one(self.field)])
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def wdeg(self, w1: Fraction | int, w2: Fraction | int):
        """max_i (deg comps[i] + i*w2 + (ell-i)*w1), NEG_INF when zero."""
        w1, w2 = Fraction(w1), Fraction(w2)
        best = NEG_INF
        for i, c in enumerate(self.comps):
            if not c.is_zero():
                v = c.degree + i * w2 + (self.ell - i) * w1
                if best == NEG_INF or v > best:
                    best = v
        return best

    def eval_form(self, fy: Poly, fz: Poly) -> Poly:
        """Substitute y = fy(x), z = fz(x); the result vanishes identically
        iff (z*fy - y*fz)-style linear forms... concretely used with
        (fy, fz) = (-f2, f1) to decide (y*f1 + z*f2) | Q."""
        f = self.field
        out = Poly.zero(f)
        ypow = Poly.one(f)
        # accumulate comps[i] * fy^i * fz^(ell-i) with running powers
        zpows = [Poly.one(f)]
        for _ in range(self.ell):
            zpows.append(zpows[-1] * fz)
        for i, c in enumerate(self.comps):
            if not c.is_zero():
                out = out + c * ypow * zpows[self.ell - i]
            ypow = ypow * fy
        return out

    def eval_at(self, x: int, y: int, z: int) -> int:
        f = self.field
        acc = 0
        for i, c in enumerate(self.comps):
            term = f.mul(c.eval(x), f.mul(f.pow(y, i), f.pow(z, self.ell - i)))
            acc = f.add(acc, term)
        return acc

    def __repr__(self):
        return f"HomogPoly(ell={self.ell}, comps={list(self.comps)!r})"


# ---------------------------------------------------------------------------
# the explicit basis of the interpolation module
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BasisContext:
    """Shared polynomials behind the basis construction.

    G     product of (x - x_i) over all points
    R_y   Lagrange polynomial through (x_i, y_i)
    R_z   Lagrange polynomial through (x_i, z_i)
    g_z   gcd(G, R_z) = product of (x - x_i) over the z_i = 0 points
    lam1, lam2   Bezout cofactors: g_z = lam1*G + lam2*R_z
    upsilon      lam2*R_y mod G, so upsilon(x_i) = lam2(x_i)*y_i
    """

    G: Poly
    R_y: Poly
    R_z: Poly
    g_z: Poly
    lam1: Poly
    lam2: Poly
    upsilon: Poly


def _pos(v: int) -> int:
    return v if v > 0 else 0


def build_basis(
    field: Field, points: Sequence[InterpPoint], s: int, ell: int
) -> tuple[BasisContext, list[HomogPoly]]:
    """The ell+1 generators of the module of degree-ell forms vanishing to
    order s at every point.  Generator j has y-degree exactly ell - j."""
    if s < 1 or ell < s:
        raise ValueError("need ell >= s >= 1")
    if not points:
        raise ValueError("need at least one point")
    xs = [p.x for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation x-coordinates must be distinct")

    G = Poly.one(field)
    for x in xs:
        G = G * Poly(field, (field.neg(x), 1))
    R_y = lagrange(field, xs, [p.y for p in points])
    R_z = lagrange(field, xs, [p.z for p in points])
    g_z, lam1, lam2 = poly_xgcd(G, R_z)
    upsilon = (lam2 * R_y) % G
    for p in points:
        if upsilon.eval(p.x) != field.mul(lam2.eval(p.x), p.y):
            raise InternalCheckError("upsilon does not match lam2*y at a point")
    ctx = BasisContext(G, R_y, R_z, g_z, lam1, lam2, upsilon)

    one = Poly.one(field)
    zero = Poly.zero(field)
    f_zero = HomogPoly(field, [-upsilon, g_z])         # g_z*y - upsilon*z
    f_diag = HomogPoly(field, [-R_y, one, zero])       # y*z - R_y*z^2
    f_quot = HomogPoly(field, [G // g_z, zero])        # z*(G/g_z)
    f_y = HomogPoly(field, [zero, one])
    f_z = HomogPoly(field, [one, zero])

    basis = []
    for j in range(ell + 1):
        e1 = _pos(s - j)
        e3 = _pos(j - (ell - s))
        e5 = _pos(j - s)
        e2 = j - e3 - e5
        e4 = _pos(ell - s - j)
        b = (f_zero**e1) * (f_diag**e2) * (f_quot**e3) * (f_y**e4) * (f_z**e5)
        if b.ell != ell:
            raise InternalCheckError("basis element has wrong homogeneous degree")
        basis.append(b)
    return ctx, basis


# ---------------------------------------------------------------------------
# multiplicity checking
# ---------------------------------------------------------------------------

def _int_scalar(field: Field, n: int) -> int:
    """The field element n*1 (binomial coefficients live in the prime field)."""
    return n % field.p


def check_multiplicity(Q: HomogPoly, pt: InterpPoint, s: int) -> bool:
    """True iff Q vanishes to order >= s at the point: after
    dehomogenising (at z = 1 for finite points, y = 1 at infinity) and
    shifting the point to the origin, no monomial of total degree < s
    survives."""
    field = Q.field
    ell = Q.ell
    if pt.z == 1:
        shifted_x = [c.compose_shift(pt.x) for c in Q.comps]
        # shift y -> y + y0:  new_j = sum_{i>=j} C(i,j) y0^(i-j) old_i
        y0_pows = [1]
        for _ in range(ell):
            y0_pows.append(field.mul(y0_pows[-1], pt.y))
        for j in range(min(s, ell + 1)):
            acc = Poly.zero(field)
            for i in range(j, ell + 1):
                c = _int_scalar(field, _binom(i, j))
                if c and not shifted_x[i].is_zero():
                    acc = acc + shifted_x[i].scale(field.mul(c, y0_pows[i - j]))
            for a in range(s - j):
                if acc.coeff(a) != 0:
                    return False
        return True
    # point at infinity: substitute y = 1, collect by z-degree k = ell - i
    for k in range(min(s, ell + 1)):
        comp = Q.comps[ell - k].compose_shift(pt.x)
        for a in range(s - k):
            if comp.coeff(a) != 0:
                return False
    return True


_BINOM_CACHE: dict[int, list[list[int]]] = {}


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    rows = _BINOM_CACHE.setdefault(0, [[1]])
    while len(rows) <= n:
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return rows[n][k]


# ---------------------------------------------------------------------------
# interpolation: fast path (basis + weighted row reduction)
# ---------------------------------------------------------------------------

def interpolate(field: Field, points: Sequence[InterpPoint], params: RatParams) -> HomogPoly:
    """A nonzero form of minimal (1, w2, w1)-weighted degree vanishing to
    order s at every point.  Feasible parameters guarantee the minimum is
    below s*tau; that and the multiplicity postcondition are asserted
    before returning."""
    if len(points) != params.n:
        raise ValueError("params.n does not match the number of points")
    if not feasible(params):
        raise ParameterError("parameters do not satisfy the feasibility inequality")
    _, basis = build_basis(field, points, params.s, params.ell)
    ell = params.ell
    rows = [list(b.comps) for b in basis]
    col_weights = [i * params.w2 + (ell - i) * params.w1 for i in range(ell + 1)]
    reduced = row_reduce(rows, col_weights)
    idx = minimal_row(reduced, col_weights)
    q = HomogPoly(field, reduced[idx])
    if q.is_zero():
        raise InternalCheckError("row reduction returned a zero row")
    if not q.wdeg(params.w1, params.w2) < params.s * params.tau:
        raise InternalCheckError("minimal form misses the weighted degree bound")
    for pt in points:
        if not check_multiplicity(q, pt, params.s):
            raise InternalCheckError("interpolation output misses a multiplicity")
    return q


# ---------------------------------------------------------------------------
# interpolation: naive oracle (linear system over the field)
# ---------------------------------------------------------------------------

def multiplicity_constraints(
    field: Field,
    points: Sequence[InterpPoint],
    s: int,
    budgets: Sequence[int],
) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """The linear system forcing multiplicity s at every point on the
    coefficient lattice {x^a y^i z^(ell-i) : a <= budgets[i]}.  Returns
    (matrix, unknowns) with one row per (point, monomial below s) and
    unknowns listing (i, a) per column.  Each point contributes exactly
    s(s+1)/2 rows."""
    ell = len(budgets) - 1
    unknowns = [(i, a) for i in range(ell + 1) for a in range(budgets[i] + 1)]
    col_of = {ia: c for c, ia in enumerate(unknowns)}
    rows: list[np.ndarray] = []
    for pt in points:
        x_pows = [1]
        y_pows = [1]
        for _ in range(max(max(budgets, default=0), ell) + 1):
            x_pows.append(field.mul(x_pows[-1], pt.x))
            y_pows.append(field.mul(y_pows[-1], pt.y))
        for total in range(s):
            for alpha in range(total + 1):
                beta = total - alpha  # y-degree (finite) or z-degree (infinite)
                row = np.zeros(len(unknowns), dtype=np.int32)
                for (i, a), c in col_of.items():
                    if a < alpha:
                        continue
                    xm = field.mul(_int_scalar(field, _binom(a, alpha)), x_pows[a - alpha])
                    if xm == 0:
                        continue
                    if pt.z == 1:
                        if i < beta:
                            continue
                        ym = field.mul(_int_scalar(field, _binom(i, beta)), y_pows[i - beta])
                        row[c] = field.mul(xm, ym)
                    else:
                        if ell - i != beta:
                            continue
                        row[c] = xm
                rows.append(row)
    mat = np.array(rows, dtype=np.int32) if rows else np.zeros((0, len(unknowns)), dtype=np.int32)
    return mat, unknowns


def _budgets_for(params: RatParams, wdeg2: int) -> list[int]:
    """Coefficient budgets so that wdeg <= wdeg2/2 (doubled-domain W)."""
    out = []
    for i in range(params.ell + 1):
        off2 = 2 * (i * params.w2 + (params.ell - i) * params.w1)
        out.append(floor(Fraction(wdeg2 - off2, 2)))
    return out


def _solve_at(field, points, params, wdeg2) -> HomogPoly | None:
    budgets = _budgets_for(params, wdeg2)
    if all(b < 0 for b in budgets):
        return None
    mat, unknowns = multiplicity_constraints(field, points, params.s, [max(b, -1) for b in budgets])
    if not unknowns:
        return None
    vec = nullspace_vector(field, mat)
    if vec is None:
        return None
    comps = []
    for i in range(params.ell + 1):
        coeffs = [0] * (budgets[i] + 1 if budgets[i] >= 0 else 0)
        for c, (j, a) in enumerate(unknowns):
            if j == i:
                coeffs[a] = int(vec[c])
        comps.append(Poly(field, coeffs))
    return HomogPoly(field, comps)


def naive_interpolate(
    field: Field,
    points: Sequence[InterpPoint],
    params: RatParams,
    *,
    minimal: bool = True,
) -> HomogPoly:
    """Oracle interpolation by brute nullspace computation.

    With minimal=True (default) the weighted degree is globally minimal,
    found by binary search over the half-integer degree grid; otherwise
    any solution below s*tau is returned."""
    if len(points) != params.n:
        raise ValueError("params.n does not match the number of points")
    if not feasible(params):
        raise ParameterError("parameters do not satisfy the feasibility inequality")
    hi = 2 * params.s * params.tau - 1
    if not minimal:
        q = _solve_at(field, points, params, hi)
        if q is None:
            raise InternalCheckError("feasible parameters admit no solution")
        return q
    offs = [2 * (i * params.w2 + (params.ell - i) * params.w1) for i in range(params.ell + 1)]
    lo = int(ceil(min(offs)))
    if _solve_at(field, points, params, hi) is None:
        raise InternalCheckError("feasible parameters admit no solution")
    while lo < hi:
        mid = (lo + hi) // 2
        if _solve_at(field, points, params, mid) is not None:
            hi = mid
        else:
            lo = mid + 1
    q = _solve_at(field, points, params, lo)
    assert q is not None
    return q


# ---------------------------------------------------------------------------
# linear factor extraction
# ---------------------------------------------------------------------------

def find_linear_factors(
    Q: HomogPoly, w1: Fraction | int, w2: Fraction | int
) -> list[tuple[Poly, Poly]]:
    """All coprime (f1, f2) with deg f1 <= w1, deg f2 <= w2 and
    (y*f1 + z*f2) dividing Q; f1 is monic, the degenerate factors y and z
    appear as (1, 0) and (0, 1).

    Series roots of Q(x, y, 1) are expanded to K = floor(w1)+floor(w2)+1
    coefficients and compressed back to a fraction -f2/f1 by the
    Euclidean-algorithm Pade step; roots whose denominator vanishes at the
    expansion origin are caught by rerunning at shifted origins (any
    floor(w1)+1 distinct origins cover every denominator).  Every
    candidate is verified by exact divisibility before being reported.
    """
    if Q.is_zero():
        raise ValueError("the zero form has no factor decomposition")
    field = Q.field
    w1, w2 = Fraction(w1), Fraction(w2)
    if w1 < 0 or w2 < 0:
        raise ValueError("degree caps must be non-negative")
    d1, d2 = floor(w1), floor(w2)
    prec = d1 + d2 + 1

    found: dict[tuple, tuple[Poly, Poly]] = {}

    def consider(f1: Poly, f2: Poly) -> None:
        if f1.is_zero() and f2.is_zero():
            return
        g = poly_gcd(f1, f2)
        if g.degree > 0:
            f1, f2 = f1 // g, f2 // g
        if f1.is_zero():
            f2 = Poly.one(field)
        else:
            c = field.inv(f1.lead())
            f1, f2 = f1.scale(c), f2.scale(c)
        if f1.degree > d1 or f2.degree > d2:
            return
        key = (f1.coeffs, f2.coeffs)
        if key in found:
            return
        if Q.eval_form(-f2, f1).is_zero():
            found[key] = (f1, f2)

    if Q.comps[0].is_zero():
        consider(Poly.one(field), Poly.zero(field))  # y | Q
    if Q.comps[Q.ell].is_zero():
        consider(Poly.zero(field), Poly.one(field))  # z | Q

    shifts = list(field.elements())[: d1 + 1]
    x_to_prec = Poly.x_pow(field, prec)
    for a in shifts:
        shifted = [c.compose_shift(a) for c in Q.comps]
        for prefix in _series_prefixes(field, shifted, prec):
            series = Poly(field, prefix)
            if series.is_zero():
                continue
            cand = _pade(series, x_to_prec, d1, d2)
            if cand is None:
                continue
            f1s, f2s = cand
            neg_a = field.neg(a)
            consider(f1s.compose_shift(neg_a), f2s.compose_shift(neg_a))

    return [found[k] for k in sorted(found)]


def _pade(series: Poly, x_to_prec: Poly, d1: int, d2: int) -> tuple[Poly, Poly] | None:
    """Bounded-degree fraction matching the series: f1*series = -f2 mod
    x^prec with deg f1 <= d1, deg f2 <= d2, via the EA remainder at the
    first index with deg s_i <= d2."""
    tr = ea_full(x_to_prec, series)
    for i in range(1, tr.last + 1):
        if tr.s[i].degree <= d2:
            if tr.v[i].degree > d1:
                return None
            return tr.v[i], -tr.s[i]
    return None


def _series_prefixes(field: Field, comps: Sequence[Poly], prec: int) -> list[tuple[int, ...]]:
    """All length-prec coefficient prefixes of power series y(x) that are
    exact series roots of the bivariate Q(x, y) given by comps.

    Depth-first: at each level divide out the common x-valuation, branch
    on the roots of the x=0 slice, and substitute y -> c + x*y.  Exact
    roots always survive to full depth; spurious prefixes are weeded out
    later by the divisibility check."""
    out: list[tuple[int, ...]] = []
    stack: list[tuple[list[Poly], tuple[int, ...]]] = [(list(comps), ())]
    nodes = 0
    max_i = len(comps) - 1
    while stack:
        cur, prefix = stack.pop()
        nodes += 1
        if nodes > _RRR_NODE_CAP:
            raise InternalCheckError("series root search exceeded its node budget")
        val = min(
            (_valuation(c) for c in cur if not c.is_zero()), default=None
        )
        if val is None:
            raise InternalCheckError("series root search reached a zero form")
        if val:
            cur = [Poly(field, c.coeffs[val:]) if not c.is_zero() else c for c in cur]
        slice0 = Poly(field, [c.coeff(0) for c in cur])
        if slice0.is_zero():
            raise InternalCheckError("zero slice after valuation division")
        if slice0.degree == 0:
            continue  # no roots on this branch
        for c0 in field.elements():
            if slice0.eval(c0) != 0:
                continue
            nxt = prefix + (c0,)
            if len(nxt) == prec:
                out.append(nxt)
                continue
            child = _substitute_shift(field, cur, c0, max_i)
            stack.append((child, nxt))
    return out


def _valuation(p: Poly) -> int:
    for i, c in enumerate(p.coeffs):
        if c:
            return i
    return len(p.coeffs)


def _substitute_shift(field: Field, comps: Sequence[Poly], c0: int, max_i: int) -> list[Poly]:
    """comps of Q(x, c0 + x*y):  new_j = x^j * sum_{i>=j} C(i,j) c0^(i-j) comps_i."""
    pows = [1]
    for _ in range(max_i):
        pows.append(field.mul(pows[-1], c0))
    out = []
    for j in range(max_i + 1):
        acc = Poly.zero(field)
        for i in range(j, max_i + 1):
            b = _int_scalar(field, _binom(i, j))
            if b and not comps[i].is_zero():
                acc = acc + comps[i].scale(field.mul(b, pows[i - j]))
        out.append(acc.shift(j))
    return out


# ---------------------------------------------------------------------------
# multivariate reduction by the basis (test support)
# ---------------------------------------------------------------------------

def reduce_by_basis(P: HomogPoly, basis: Sequence[HomogPoly]) -> HomogPoly:
    """Divide P by the basis elements in order of descending y-degree;
    members of the spanned module reduce to zero."""
    rem = P
    ell = P.ell
    for j, b in enumerate(basis):
        ydeg = ell - j
        comp = rem.comps[ydeg]
        if comp.is_zero():
            continue
        lead = b.comps[ydeg]
        quo, _ = divmod(comp, lead)
        if not quo.is_zero():
            rem = rem - b.scale_poly(quo)
    return rem

