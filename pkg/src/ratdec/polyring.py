"""Dense univariate polynomials over a Field.

Coefficients are stored constant-term first as a tuple of int encodings,
with no trailing zeros, so the zero polynomial is the empty tuple and
``deg 0 = NEG_INF`` (a value strictly below every integer; degree sums
stay mathematically correct because NEG_INF + k = NEG_INF).

Besides the ring operations this module provides the extended Euclidean
algorithm with its full remainder/cofactor trace, Lagrange interpolation,
and modular inverse / square root in F[x]/(g).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .galois import Field, FieldElem

NEG_INF = float("-inf")

# Schoolbook multiplication below this length, Karatsuba above (pure
# Python path; fields with vector support use numpy row convolution).
_KARATSUBA_AT = 32
_VECTOR_AT = 16


def _as_int(field: Field, x) -> int:
    if isinstance(x, FieldElem):
        if x.field != field:
            raise ValueError("field mismatch")
        return x.val
    return field.validate(x)


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        vals = [_as_int(field, c) for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(vals))

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def x_pow(cls, field: Field, k: int) -> "Poly":
        return cls(field, (0,) * k + (1,))

    # -- basics ---------------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                if i == 0:
                    terms.append(f"{c}")
                elif i == 1:
                    terms.append(f"{c}*x" if c != 1 else "x")
                else:
                    terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly) or other.field != self.field:
            raise ValueError("polynomials over different fields")

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = [f.sub(self.coeff(i), other.coeff(i)) for i in range(n)]
        return Poly(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def scale(self, c) -> "Poly":
        c = _as_int(self.field, c)
        f = self.field
        if c == 0:
            return Poly.zero(f)
        return Poly(f, [f.mul(a, c) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(f)
        if self is other and f.p == 2:
            # Frobenius: (sum a_i x^i)^2 = sum a_i^2 x^(2i) in char 2.
            out = [0] * (2 * len(a) - 1)
            for i, c in enumerate(a):
                out[2 * i] = f.mul(c, c)
            return Poly(f, out)
        if min(len(a), len(b)) >= _VECTOR_AT and (f.m == 1 or f._np_exp is not None):
            return Poly(f, _vec_mul_coeffs(f, a, b))
        if min(len(a), len(b)) >= _KARATSUBA_AT:
            return Poly(f, _karatsuba(f, a, b))
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        return Poly(f, out)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        db = len(other.coeffs) - 1
        inv_lead = f.inv(other.coeffs[-1])
        rem = list(self.coeffs)
        if len(rem) <= db:
            return Poly.zero(f), self
        quo = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                q = f.mul(c, inv_lead)
                quo[i - db] = q
                for j, bc in enumerate(other.coeffs):
                    rem[i - db + j] = f.sub(rem[i - db + j], f.mul(q, bc))
        return Poly(f, quo), Poly(f, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("cannot normalise the zero polynomial")
        lead = self.coeffs[-1]
        return self if lead == 1 else self.scale(self.field.inv(lead))

    # -- evaluation and calculus ---------------------------------------------

    def eval(self, x) -> int:
        x = _as_int(self.field, x)
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def __call__(self, x) -> int:
        return self.eval(x)

    def derivative(self) -> "Poly":
        f = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            c = self.coeffs[i]
            # multiply by the integer i, i.e. add i times (reduces mod p)
            k = i % f.p
            acc = 0
            for _ in range(k):
                acc = f.add(acc, c)
            out.append(acc)
        return Poly(f, out)

    def compose_shift(self, c) -> "Poly":
        """Return self(x + c), by Horner over (x + c)."""
        c = _as_int(self.field, c)
        f = self.field
        if c == 0 or self.is_zero():
            return self
        acc = Poly.zero(f)
        xc = Poly(f, (c, 1))
        for coeff in reversed(self.coeffs):
            acc = acc * xc + Poly.constant(f, coeff)
        return acc


def _vec_mul_coeffs(f: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Row-convolution product using the field's vector kernels."""
    if len(a) > len(b):
        a, b = b, a
    bv = np.array(b, dtype=np.int32)
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64 if f.m == 1 else np.int32)
    for i, ai in enumerate(a):
        if ai:
            out[i : i + len(b)] = f.vec_add(out[i : i + len(b)], f.vec_mul_scalar(bv, ai))
    return [int(v) for v in out]


def _karatsuba(f: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    if min(len(a), len(b)) < _KARATSUBA_AT:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        return out
    h = n // 2
    a0, a1 = list(a[:h]), list(a[h:])
    b0, b1 = list(b[:h]), list(b[h:])
    z0 = _karatsuba(f, a0, b0) if a0 and b0 else []
    z2 = _karatsuba(f, a1, b1) if a1 and b1 else []
    sa = [f.add(a0[i] if i < len(a0) else 0, a1[i] if i < len(a1) else 0) for i in range(max(len(a0), len(a1)))]
    sb = [f.add(b0[i] if i < len(b0) else 0, b1[i] if i < len(b1) else 0) for i in range(max(len(b0), len(b1)))]
    z1 = _karatsuba(f, sa, sb) if sa and sb else []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] = f.add(out[i], c)
    for i, c in enumerate(z1):
        out[i + h] = f.add(out[i + h], c)
    for i, c in enumerate(z0):
        out[i + h] = f.sub(out[i + h], c)
    for i, c in enumerate(z2):
        out[i + h] = f.sub(out[i + h], c)
    for i, c in enumerate(z2):
        out[i + 2 * h] = f.add(out[i + 2 * h], c)
    return out


# ---------------------------------------------------------------------------
# gcd family
# ---------------------------------------------------------------------------

def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (or zero when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended gcd: returns monic (g, u, v) with u*a + v*b = g."""
    f = a.field
    r0, r1 = a, b
    u0, u1 = Poly.one(f), Poly.zero(f)
    v0, v1 = Poly.zero(f), Poly.one(f)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    c = f.inv(r0.lead())
    return r0.scale(c), u0.scale(c), v0.scale(c)


# ---------------------------------------------------------------------------
# Extended Euclidean algorithm with the full iteration trace
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EATrace:
    """Remainders s_i with cofactors u_i, v_i satisfying
    s_i = u_i*p + v_i*q, for i = 0 .. N+1 where s_N = gcd(p, q) and
    s_{N+1} = 0.  quotients[i] is the quotient used at step i (i >= 2)."""

    p: Poly
    q: Poly
    s: tuple[Poly, ...]
    u: tuple[Poly, ...]
    v: tuple[Poly, ...]
    quotients: tuple[Poly | None, ...]

    @property
    def last(self) -> int:
        """Index N+1 of the zero remainder."""
        return len(self.s) - 1


def ea_full(p: Poly, q: Poly) -> EATrace:
    """Run the extended Euclidean algorithm on (p, q), deg p > deg q,
    recording every iteration."""
    if p.field != q.field:
        raise ValueError("polynomials over different fields")
    if not p.degree > q.degree:
        raise ValueError("ea_full requires deg p > deg q")
    f = p.field
    s = [p, q]
    u = [Poly.one(f), Poly.zero(f)]
    v = [Poly.zero(f), Poly.one(f)]
    qs: list[Poly | None] = [None, None]
    while not s[-1].is_zero():
        quo, rem = divmod(s[-2], s[-1])
        s.append(rem)
        u.append(u[-2] - quo * u[-1])
        v.append(v[-2] - quo * v[-1])
        qs.append(quo)
    return EATrace(p, q, tuple(s), tuple(u), tuple(v), tuple(qs))


# ---------------------------------------------------------------------------
# interpolation and modular operations
# ---------------------------------------------------------------------------

def lagrange(field: Field, xs: Sequence[int], ys: Sequence[int]) -> Poly:
    """The unique polynomial of degree < n through (xs[i], ys[i])."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys must have the same length")
    xs = [_as_int(field, x) for x in xs]
    ys = [_as_int(field, y) for y in ys]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must be distinct")
    if not xs:
        return Poly.zero(field)
    full = Poly.one(field)
    for x in xs:
        full = full * Poly(field, (field.neg(x), 1))
    acc = Poly.zero(field)
    for x, y in zip(xs, ys):
        if y == 0:
            continue
        num = full // Poly(field, (field.neg(x), 1))
        denom = num.eval(x)
        acc = acc + num.scale(field.mul(y, field.inv(denom)))
    return acc


def mod_inverse(a: Poly, g: Poly) -> Poly:
    """Inverse of a modulo g; requires gcd(a, g) = 1."""
    gcd, u, _ = poly_xgcd(a, g)
    if gcd.degree != 0:
        raise ArithmeticError("element is not invertible modulo g")
    return u % g


def mod_sqrt_char2(a: Poly, g: Poly) -> Poly:
    """Square root in F[x]/(g) for char-2 F and irreducible g: the residue
    field has order 2^(m * deg g), so T = a^(2^(m*deg g - 1))."""
    f = a.field
    if f.p != 2:
        raise ValueError("modular square roots require characteristic 2")
    t = a % g
    for _ in range(f.m * int(g.degree) - 1):
        t = (t * t) % g
    if (t * t) % g != a % g:
        raise ArithmeticError("no square root; modulus is not irreducible")
    return t


def is_irreducible(g: Poly) -> bool:
    """Irreducibility over the coefficient field GF(q): g of degree t has
    no factor of degree <= t/2 iff gcd(x^(q^i) - x mod g, g) = 1 for
    i = 1 .. t//2."""
    if g.is_zero() or g.degree < 1:
        return False
    t = int(g.degree)
    if t == 1:
        return True
    f = g.field
    q = f.order
    x = Poly.x(f)
    xi = x
    for _ in range(t // 2):
        xi = _pow_mod(xi, q, g)
        if poly_gcd(xi - x, g).degree != 0:
            return False
    return True


def _pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def poly_roots(p: Poly) -> list[int]:
    """All roots of p in its field, by exhaustive evaluation; each distinct
    root listed once."""
    if p.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    return [x for x in p.field.elements() if p.eval(x) == 0]
