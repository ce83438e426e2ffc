"""Key-equation solving over the module M = [p(x), y - q(x)].

Works in the ring R of bivariate polynomials with y-degree at most 1,
viewed as a rank-2 module over F[x].  A weighted term order <_mu compares
monomials x^i y^j (j in {0,1}) by i + mu*j, ties resolved with x above y,
so x^mu > y > x^(mu-1).

Halting the extended Euclidean algorithm on (p, q) at the first iteration
i with deg s_i < deg v_i + mu yields a two-element Groebner basis
{s_(i-1) - v_(i-1) y, s_i - v_i y} of M under <_mu; the degree bounds of
the cofactors of any delta - y*gamma in M follow from that basis.  Both
decoders are built on exactly this reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .polyring import NEG_INF, EATrace, Poly, ea_full


@dataclass(frozen=True, slots=True)
class TermOrder:
    """The (1, mu) weighted-degree order on monomials x^i y^j, j <= 1."""

    mu: int

    def __post_init__(self):
        if self.mu < 0:
            raise ValueError("mu must be >= 0")

    def key(self, xdeg: int, ydeg: int) -> tuple[int, int]:
        """Sort key: weighted degree first, then x-before-y on ties."""
        return (xdeg + self.mu * ydeg, -ydeg)

    def less(self, a: tuple[int, int], b: tuple[int, int]) -> bool:
        return self.key(*a) < self.key(*b)


@dataclass(frozen=True, slots=True)
class PairPoly:
    """c0(x) + y*c1(x); either or both components may be zero."""

    c0: Poly
    c1: Poly

    def __post_init__(self):
        if self.c0.field != self.c1.field:
            raise ValueError("components over different fields")

    @property
    def field(self):
        return self.c0.field

    def is_zero(self) -> bool:
        return self.c0.is_zero() and self.c1.is_zero()

    def __add__(self, other: "PairPoly") -> "PairPoly":
        return PairPoly(self.c0 + other.c0, self.c1 + other.c1)

    def __sub__(self, other: "PairPoly") -> "PairPoly":
        return PairPoly(self.c0 - other.c0, self.c1 - other.c1)

    def mul_poly(self, f: Poly) -> "PairPoly":
        return PairPoly(self.c0 * f, self.c1 * f)

    def __repr__(self) -> str:
        return f"PairPoly({self.c0!r} + y*{self.c1!r})"


def leading_term(h: PairPoly, order: TermOrder) -> tuple[int, int]:
    """(xdeg, ydeg) of the monomial of h maximal under the order."""
    if h.is_zero():
        raise ValueError("the zero element has no leading term")
    best = None
    if not h.c0.is_zero():
        best = (int(h.c0.degree), 0)
    if not h.c1.is_zero():
        cand = (int(h.c1.degree), 1)
        if best is None or order.less(best, cand):
            best = cand
    return best


def leading_coeff(h: PairPoly, order: TermOrder) -> int:
    xd, yd = leading_term(h, order)
    return (h.c1 if yd else h.c0).coeff(xd)


def in_module(h: PairPoly, p: Poly, q: Poly) -> bool:
    """Membership in M = [p, y - q]: h = c0 + y*c1 lies in M iff
    p divides c0 + c1*q."""
    return ((h.c0 + h.c1 * q) % p).is_zero()


def module_coordinates(h: PairPoly, p: Poly, q: Poly) -> tuple[Poly, Poly] | None:
    """(a, b) with h = a*p + b*(y - q), or None if h is not in M."""
    num = h.c0 + h.c1 * q
    a, rem = divmod(num, p)
    if not rem.is_zero():
        return None
    return a, h.c1


def is_groebner_pair(h1: PairPoly, h2: PairPoly, p: Poly, q: Poly, order: TermOrder) -> bool:
    """True iff {h1, h2} generates M = [p, y - q] and the two leading
    terms have distinct y-degree.  Generation is checked through the 2x2
    coordinate matrix over F[x]: it must have unit determinant."""
    if p.is_zero():
        raise ValueError("p must be nonzero")
    if h1.is_zero() or h2.is_zero():
        return False
    co1 = module_coordinates(h1, p, q)
    co2 = module_coordinates(h2, p, q)
    if co1 is None or co2 is None:
        return False
    det = co1[0] * co2[1] - co1[1] * co2[0]
    if det.degree != 0:
        return False
    return leading_term(h1, order)[1] != leading_term(h2, order)[1]


@dataclass(frozen=True)
class GrobnerPair:
    """EA-produced Groebner basis of M = [p, y - q] under <_mu, with h1
    carrying leading y-degree 0 and h2 leading y-degree 1."""

    h1: PairPoly
    h2: PairPoly
    order: TermOrder
    p: Poly
    q: Poly
    stop_index: int
    trace: EATrace

    @property
    def deg_x1(self) -> int:
        return leading_term(self.h1, self.order)[0]

    @property
    def deg_x2(self) -> int:
        return leading_term(self.h2, self.order)[0]


def solve_key_equation(p: Poly, q: Poly, mu: int) -> GrobnerPair:
    """Halt the EA on (p, q) at the first i >= 1 with
    deg s_i < deg v_i + mu and assemble the Groebner pair
    h1 = s_(i-1) - v_(i-1)*y, h2 = s_i - v_i*y."""
    order = TermOrder(mu)
    if not p.degree > q.degree:
        raise ValueError("solve_key_equation requires deg p > deg q")
    trace = ea_full(p, q)
    stop = None
    for i in range(1, trace.last + 1):
        if trace.s[i].degree < trace.v[i].degree + mu:
            stop = i
            break
    if stop is None:  # cannot happen: s_(N+1) = 0 always qualifies
        raise AssertionError("EA halting condition never met")
    h1 = PairPoly(trace.s[stop - 1], -trace.v[stop - 1])
    h2 = PairPoly(trace.s[stop], -trace.v[stop])
    pair = GrobnerPair(h1, h2, order, p, q, stop, trace)
    assert leading_term(h1, order)[1] == 0 and leading_term(h2, order)[1] == 1
    return pair


@dataclass(frozen=True, slots=True)
class CofactorBounds:
    """Degree bounds on f1, f2 in delta - y*gamma = f1*h1 + f2*h2.
    Exactly one bound is an equality in each case."""

    f1_bound: int
    f2_bound: int
    f1_exact: bool
    f2_exact: bool


def cofactor_bounds(
    pair: GrobnerPair,
    gamma_deg: int,
    delta_deg: int,
    which_larger: Literal["gamma", "delta"],
) -> CofactorBounds:
    """Bounds for the expansion of delta - y*gamma in {h1, h2}.

    which_larger = "gamma" covers delta <_mu y*gamma (f2 bound exact);
    which_larger = "delta" covers delta >_mu y*gamma (f1 bound exact).
    """
    mu = pair.order.mu
    d1, d2 = pair.deg_x1, pair.deg_x2
    if which_larger == "gamma":
        return CofactorBounds(
            f1_bound=gamma_deg + mu - d1 - 1,
            f2_bound=gamma_deg - d2,
            f1_exact=False,
            f2_exact=True,
        )
    if which_larger == "delta":
        return CofactorBounds(
            f1_bound=delta_deg - d1,
            f2_bound=delta_deg - mu - d2,
            f1_exact=True,
            f2_exact=False,
        )
    raise ValueError("which_larger must be 'gamma' or 'delta'")


def pair_divmod(target: PairPoly, pair: GrobnerPair) -> tuple[Poly, Poly, PairPoly]:
    """Multivariate division of target by {h1, h2} under the pair's order:
    target = f1*h1 + f2*h2 + rem, no monomial of rem divisible by a
    leading term.  For target in M the remainder is zero."""
    f = pair.p.field
    order = pair.order
    lt1 = leading_term(pair.h1, order)
    lt2 = leading_term(pair.h2, order)
    lc1 = leading_coeff(pair.h1, order)
    lc2 = leading_coeff(pair.h2, order)
    f1 = Poly.zero(f)
    f2 = Poly.zero(f)
    rem = PairPoly(Poly.zero(f), Poly.zero(f))
    work = target
    while not work.is_zero():
        xd, yd = leading_term(work, order)
        lc = (work.c1 if yd else work.c0).coeff(xd)
        if yd == lt1[1] and xd >= lt1[0]:
            c = f.div(lc, lc1)
            t = Poly(f, (0,) * (xd - lt1[0]) + (c,))
            f1 = f1 + t
            work = work - pair.h1.mul_poly(t)
        elif yd == lt2[1] and xd >= lt2[0]:
            c = f.div(lc, lc2)
            t = Poly(f, (0,) * (xd - lt2[0]) + (c,))
            f2 = f2 + t
            work = work - pair.h2.mul_poly(t)
        else:
            mono_c0 = Poly.zero(f) if yd else Poly(f, (0,) * xd + (lc,))
            mono_c1 = Poly(f, (0,) * xd + (lc,)) if yd else Poly.zero(f)
            mono = PairPoly(mono_c0, mono_c1)
            rem = rem + mono
            work = work - mono
    return f1, f2, rem


def check_pair_invariants(pair: GrobnerPair) -> None:
    """Raise AssertionError unless the pair satisfies all of its defining
    conditions (used by tests and the self-test command)."""
    order = pair.order
    assert leading_term(pair.h1, order)[1] == 0
    assert leading_term(pair.h2, order)[1] == 1
    assert pair.deg_x1 + pair.deg_x2 == pair.p.degree
    assert is_groebner_pair(pair.h1, pair.h2, pair.p, pair.q, order)
    # h_k = u_k*p + (-v_k)*(y - q) with (u, v) straight from the trace
    i = pair.stop_index
    tr = pair.trace
    for h, idx in ((pair.h1, i - 1), (pair.h2, i)):
        coords = module_coordinates(h, pair.p, pair.q)
        assert coords is not None
        assert coords[0] == tr.u[idx] and coords[1] == -tr.v[idx]
    # halting-rule minimality
    mu = order.mu
    for j in range(1, i):
        assert not (tr.s[j].degree < tr.v[j].degree + mu)
    assert tr.s[i].degree < tr.v[i].degree + mu
