"""Exact arithmetic in finite fields GF(p^m).

Field elements are plain Python ints in ``range(p**m)``: the base-p digits
of the int are the coefficients of the residue polynomial, least
significant digit = constant term.  For p = 2 this is ordinary bit
packing, e.g. in GF(8) with modulus x^3 + x + 1, ``0b011`` stands for
``x + 1``.  All arithmetic is exact; 0 and 1 always denote the additive
and multiplicative identities.

``Field`` methods operate directly on the int encoding.  ``FieldElem``
wraps an int together with its field and overloads the operators; it
refuses to mix elements of distinct fields.  The two views interoperate
freely (``FieldElem.val`` is the encoding).

Vectorised companions (``vec_add``, ``vec_mul`` ...) act on numpy int
arrays of encodings and back the matrix kernels elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

# Largest field order for which log/exp tables are built.
_TABLE_LIMIT = 1 << 16

# Standard primitive polynomials over GF(2), constant term first,
# indexed by extension degree.
_BINARY_MODULI: dict[int, tuple[int, ...]] = {
    2: (1, 1, 1),
    3: (1, 1, 0, 1),
    4: (1, 1, 0, 0, 1),
    5: (1, 0, 1, 0, 0, 1),
    6: (1, 1, 0, 0, 0, 0, 1),
    7: (1, 0, 0, 1, 0, 0, 0, 1),
    8: (1, 0, 1, 1, 1, 0, 0, 0, 1),
    9: (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    10: (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    11: (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    12: (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Small helpers for polynomials over the prime field GF(p), represented as
# tuples of ints (constant term first).  Only used for modulus validation
# and as the table-free fallback for extension-field arithmetic.
# ---------------------------------------------------------------------------

def _tp_trim(a: Sequence[int]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _tp_mulmod(a, b, mod, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _tp_rem(out, mod, p)


def _tp_rem(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            f = (c * inv_lead) % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * mod[j]) % p
    return _tp_trim(a)


def _tp_pow(base, e, mod, p):
    result = (1,)
    base = _tp_rem(base, mod, p)
    while e:
        if e & 1:
            result = _tp_mulmod(result, base, mod, p)
        base = _tp_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _tp_gcd(a, b, p):
    a, b = _tp_trim(a), _tp_trim(b)
    while b:
        # a mod b
        a = _tp_rem(a, b, p)
        a, b = b, a
    return a


def _tp_xgcd(a, b, p):
    """Extended gcd over GF(p)[x]; returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = _tp_trim(a), _tp_trim(b)
    u0, u1 = (1,), ()
    v0, v1 = (), (1,)
    while r1:
        q, r = _tp_divmod(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, _tp_sub(u0, _tp_mul(q, u1, p), p)
        v0, v1 = v1, _tp_sub(v0, _tp_mul(q, v1, p), p)
    return r0, u0, v0


def _tp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _tp_trim(out)


def _tp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return _tp_trim(out)


def _tp_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = (c * inv_lead) % p
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    return _tp_trim(q), _tp_trim(a)


def _tp_irreducible(mod: Sequence[int], p: int) -> bool:
    """Rabin-style check: GF(p)[x] poly of degree m has no factor of
    degree <= m/2 iff gcd(x^(p^i) - x, f) = 1 for i = 1 .. m//2."""
    m = len(mod) - 1
    if m <= 0:
        return False
    xi = (0, 1)
    for _ in range(m // 2):
        xi = _tp_pow(xi, p, mod, p)
        diff = _tp_sub(xi, (0, 1), p)
        g = _tp_gcd(diff, mod, p)
        if len(g) != 1:
            return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Deterministic default modulus for odd p: the monic degree-m poly of
    smallest encoding that is irreducible over GF(p)."""
    for enc in range(p**m):
        coeffs = []
        v = enc
        for _ in range(m):
            coeffs.append(v % p)
            v //= p
        coeffs.append(1)
        if _tp_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """GF(p^m) under a fixed irreducible modulus.

    Immutable after construction; all operations are pure, so instances
    may be shared freely between threads.  Two Field objects compare equal
    iff they have the same (p, m, modulus).
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.m = m
        self.order = p**m
        if m == 1:
            if modulus is not None:
                raise ValueError("modulus is only meaningful for m > 1")
            self.modulus: tuple[int, ...] | None = None
        else:
            if modulus is None:
                if p == 2 and m in _BINARY_MODULI:
                    modulus = _BINARY_MODULI[m]
                else:
                    modulus = _smallest_irreducible(p, m)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1:
                raise ValueError(f"modulus must have {m + 1} coefficients")
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if not _tp_irreducible(modulus, p):
                raise ValueError("modulus is reducible over the prime field")
            self.modulus = modulus
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._np_exp: np.ndarray | None = None
        self._np_log: np.ndarray | None = None
        if m > 1 and self.order <= _TABLE_LIMIT:
            self._build_tables()

    # -- identity / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    # -- encoding ----------------------------------------------------------

    def validate(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not an element encoding of {self!r}")
        return a

    def to_coeffs(self, a: int) -> tuple[int, ...]:
        """Base-p digits of ``a``, constant term first, length m."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        a = 0
        for c in reversed(coeffs):
            a = a * self.p + c % self.p
        return a

    def elements(self) -> range:
        """All p^m elements exactly once, 0 first, in encoding order
        (lexicographic on coefficient vectors, most significant first)."""
        return range(self.order)

    def elem(self, a: int) -> "FieldElem":
        return FieldElem(self, self.validate(a))

    # -- scalar arithmetic on encodings -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.m):
            out += ((a % p + b % p) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a - b) % self.p
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.m):
            out += ((a % p - b % p) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return (a * b) % self.p
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self.from_coeffs(
            _tp_mulmod(self.to_coeffs(a), self.to_coeffs(b), self.modulus, self.p)
        )

    def inv(self, a: int) -> int:
        """Multiplicative inverse by extended Euclid on the representation."""
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        if self.m == 1:
            return pow(a, -1, self.p)
        g, u, _ = _tp_xgcd(self.to_coeffs(a), self.modulus, self.p)
        # g is a nonzero constant; normalise u by it.
        c = pow(g[0], -1, self.p)
        return self.from_coeffs(tuple((x * c) % self.p for x in u))

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def sqrt(self, a: int) -> int:
        """Unique square root in characteristic 2: a^(2^(m-1))."""
        if self.p != 2:
            raise ValueError("square roots via Frobenius require characteristic 2")
        b = a
        for _ in range(self.m - 1):
            b = self.mul(b, b)
        return b

    # -- log/exp tables ------------------------------------------------------

    def _build_tables(self) -> None:
        q = self.order
        gen = self._find_generator()
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        v = 1
        for i in range(q - 1):
            exp[i] = v
            exp[i + q - 1] = v
            log[v] = i
            v = self.from_coeffs(
                _tp_mulmod(self.to_coeffs(v), self.to_coeffs(gen), self.modulus, self.p)
            )
        self._exp, self._log = exp, log
        self._np_exp = np.array(exp, dtype=np.int32)
        self._np_log = np.array(log, dtype=np.int32)

    def _find_generator(self) -> int:
        q = self.order
        factors = []
        n = q - 1
        d = 2
        while d * d <= n:
            if n % d == 0:
                factors.append(d)
                while n % d == 0:
                    n //= d
            d += 1
        if n > 1:
            factors.append(n)
        for g in range(2, q):
            if all(self._slow_pow(g, (q - 1) // f) != 1 for f in factors):
                return g
        raise AssertionError("multiplicative group has no generator")  # unreachable

    def _slow_pow(self, a: int, e: int) -> int:
        x = self.to_coeffs(a)
        acc = (1,)
        while e:
            if e & 1:
                acc = _tp_mulmod(acc, x, self.modulus, self.p)
            x = _tp_mulmod(x, x, self.modulus, self.p)
            e >>= 1
        return self.from_coeffs(acc)

    # -- vectorised arithmetic on numpy arrays of encodings ------------------

    def vec_add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=a.dtype)
        shift = 1
        for _ in range(self.m):
            out += ((a // shift % self.p + b // shift % self.p) % self.p) * shift
            shift *= self.p
        return out

    def vec_sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a - b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=a.dtype)
        shift = 1
        for _ in range(self.m):
            out += ((a // shift % self.p - b // shift % self.p) % self.p) * shift
            shift *= self.p
        return out

    def vec_mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (a.astype(np.int64) * b) % self.p
        if self._np_exp is None:
            raise ValueError(f"field order {self.order} exceeds the table limit")
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int32)
        mask = (a != 0) & (b != 0)
        out[mask] = self._np_exp[self._np_log[a[mask]] + self._np_log[b[mask]]]
        return out

    def vec_mul_scalar(self, a: np.ndarray, c: int) -> np.ndarray:
        if c == 0:
            return np.zeros_like(a)
        if c == 1:
            return a.copy()
        if self.m == 1:
            return (a.astype(np.int64) * c) % self.p
        if self._np_exp is None:
            raise ValueError(f"field order {self.order} exceeds the table limit")
        out = np.zeros(a.shape, dtype=np.int32)
        mask = a != 0
        out[mask] = self._np_exp[self._np_log[a[mask]] + self._log[c]]
        return out


@dataclass(frozen=True, slots=True)
class FieldElem:
    """A field element bound to its Field, with operator arithmetic.

    Mixing elements of different fields raises ValueError.
    """

    field: Field
    val: int

    def _other(self, other: "FieldElem") -> int:
        if not isinstance(other, FieldElem):
            raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")
        return other.val

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.val, self._other(other)))

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.val, self._other(other)))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.val, self._other(other)))

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.val, self._other(other)))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.val))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.val, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.val))

    def sqrt(self) -> "FieldElem":
        return FieldElem(self.field, self.field.sqrt(self.val))

    def __bool__(self) -> bool:
        return self.val != 0

    def __int__(self) -> int:
        return self.val

    def __repr__(self) -> str:
        return f"{self.field!r}:{self.val}"
