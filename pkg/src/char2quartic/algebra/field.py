"""Binary finite fields GF(2^n) and the towers GF(2^m) < GF(2^{2m}) < ...

Elements are plain ints holding coordinates in the polynomial basis of the
field's defining polynomial (bit i = coefficient of alpha^i).  Every field
GF(2^n) is defined by the lexicographically smallest irreducible polynomial of
degree n over GF(2), so the representation is reproducible without tables.

Embeddings GF(2^a) -> GF(2^b) (a | b) are chosen once, globally, and form a
compatible system: embedding a -> b -> c equals embedding a -> c.
"""

from __future__ import annotations

from functools import lru_cache
import math
import random

import numpy as np

from ..errors import FieldError

MAX_TOWER_BASE = 32
_TABLE_BITS = 16
_FULL_TABLE_BITS = 8


# ---------------------------------------------------------------------------
# GF(2)[x] on ints
# ---------------------------------------------------------------------------

def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def gf2_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2_mod(a, b)
    return a


def gf2_mulmod(a: int, b: int, m: int) -> int:
    return gf2_mod(clmul(a, b), m)


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def gf2_is_irreducible(f: int) -> bool:
    """Rabin's test for f in GF(2)[x]."""
    n = f.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False

    def frob_power(k: int) -> int:
        # x^(2^k) mod f
        r = 2
        for _ in range(k):
            r = gf2_mulmod(r, r, f)
        return r

    if frob_power(n) != gf2_mod(2, f):
        return False
    for p in _prime_factors(n):
        h = frob_power(n // p) ^ 2
        if gf2_gcd(f, h) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(n: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree n over GF(2)."""
    if n < 1:
        raise FieldError(f"degree must be positive, got {n}")
    if n == 1:
        return 0b10  # x
    lead = 1 << n
    for low in range(1, lead, 2):
        f = lead | low
        if gf2_is_irreducible(f):
            return f
    raise FieldError(f"no irreducible of degree {n}")  # pragma: no cover


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class Field:
    """GF(2^n) with int elements.

    Scalar and numpy-vectorised arithmetic is provided; addition is xor.
    Fields are singletons per n, obtain them through :func:`gf`.
    """

    def __init__(self, n: int):
        self.n = n
        self.modulus = smallest_irreducible(n)
        self.order = 1 << n
        self.mask = self.order - 1
        self._low_bits = [i for i in range(n) if self.modulus >> i & 1]
        self._log = self._exp = None
        self._full = None
        self.dtype = np.int64 if n <= 62 else object
        if n <= _TABLE_BITS:
            self._build_tables()

    def __repr__(self):
        return f"GF(2^{self.n})"

    def __reduce__(self):
        return (gf, (self.n,))

    # -- construction -----------------------------------------------------
    def _xtime_mul(self, a: int, b: int) -> int:
        n, mod = self.n, self.modulus
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> n:
                a ^= mod
        return r

    def _fold_mul(self, a: int, b: int) -> int:
        # 4-bit windows of a, then fold the high part through the sparse modulus
        t = [0] * 16
        for k in range(1, 16):
            t[k] = t[k & (k - 1)] ^ (a << ((k & -k).bit_length() - 1))
        r, sh = 0, 0
        while b:
            r ^= t[b & 15] << sh
            b >>= 4
            sh += 4
        n, mask = self.n, self.mask
        h = r >> n
        while h:
            r &= mask
            for i in self._low_bits:
                r ^= h << i
            h = r >> n
        return r

    def _build_tables(self):
        q1 = self.order - 1
        if q1 == 1:
            log = np.array([2 * self.order, 0], dtype=np.int64)
            exp = np.zeros(4 * self.order + 1, dtype=np.int64)
            exp[0] = 1
            self._log, self._exp = log, exp
        else:
            factors = _prime_factors(q1)
            g = 2 if self.n > 1 else 1
            while True:
                if all(self._pow_slow(g, q1 // p) != 1 for p in factors):
                    break
                g += 1
            exp = np.zeros(4 * self.order + 1, dtype=np.int64)
            log = np.zeros(self.order, dtype=np.int64)
            x = 1
            for i in range(q1):
                exp[i] = x
                log[x] = i
                x = self._xtime_mul(x, g)
            exp[q1:2 * q1] = exp[:q1]
            log[0] = 2 * self.order
            self._log, self._exp = log, exp
        self._log_list = self._log.tolist()
        self._exp_list = self._exp.tolist()
        if self.n <= _FULL_TABLE_BITS:
            a = np.arange(self.order, dtype=np.int64)
            self._full = self._exp[self._log[a][:, None] + self._log[a][None, :]].reshape(-1)

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._xtime_mul(r, a)
            a = self._xtime_mul(a, a)
            e >>= 1
        return r

    # -- scalar arithmetic ------------------------------------------------
    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self._log is not None:
            return self._exp_list[self._log_list[a] + self._log_list[b]]
        return self._fold_mul(a, b)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if not a:
            return 0 if e else 1
        if self._log is not None:
            return self._exp_list[(self._log_list[a] * e) % (self.order - 1)]
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self._log is not None:
            q1 = self.order - 1
            return self._exp_list[(q1 - self._log_list[a]) % q1]
        # extended Euclid on binary polynomials
        r0, r1, s0, s1 = self.modulus, a, 0, 1
        while r1 != 1:
            shift = r0.bit_length() - r1.bit_length()
            if shift < 0:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            r0 ^= r1 << shift
            s0 ^= s1 << shift
            if r0 == 0:  # pragma: no cover
                raise ZeroDivisionError("modulus is reducible")
            if r0.bit_length() < r1.bit_length():
                r0, r1, s0, s1 = r1, r0, s1, s0
        return self._reduce(s1)

    def _reduce(self, a: int) -> int:
        n, mod = self.n, self.modulus
        while a.bit_length() > n:
            a ^= mod << (a.bit_length() - n - 1)
        return a

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def sqrt(self, a: int) -> int:
        # inverse Frobenius: a^(2^(n-1))
        for _ in range(self.n - 1):
            a = self.mul(a, a)
        return a

    def frobenius(self, a: int, k: int = 1) -> int:
        for _ in range(k % self.n if self.n else 0):
            a = self.mul(a, a)
        return a

    def trace(self, a: int) -> int:
        t, x = 0, a
        for _ in range(self.n):
            t ^= x
            x = self.mul(x, x)
        return t

    def random(self, rng: random.Random, nonzero: bool = False) -> int:
        if nonzero:
            return rng.randrange(1, self.order)
        return rng.randrange(self.order)

    # -- vectorised arithmetic ---------------------------------------------
    def vmul(self, a, b):
        """Elementwise product of int arrays (broadcasting) or array by scalar."""
        if self.dtype is object:
            return _obj_mul(self)(np.asarray(a, dtype=object), np.asarray(b, dtype=object))
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._full is not None:
            return self._full[(a << self.n) | b]
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        a, b = np.broadcast_arrays(a, b)
        a = a.copy()
        b = b.copy()
        r = np.zeros(a.shape, dtype=np.int64)
        top = 1 << self.n
        mod = self.modulus
        for _ in range(self.n):
            r ^= np.where(b & 1, a, 0)
            b >>= 1
            a <<= 1
            a ^= np.where(a & top, mod, 0)
        return r

    def vinv(self, a):
        if self.dtype is object:
            return np.frompyfunc(self.inv, 1, 1)(np.asarray(a, dtype=object))
        a = np.asarray(a, dtype=np.int64)
        if self._log is not None:
            q1 = self.order - 1
            return self._exp[(q1 - self._log[a]) % q1]
        return np.array([self.inv(int(x)) for x in a.reshape(-1)], dtype=np.int64).reshape(a.shape)


@lru_cache(maxsize=None)
def _obj_mul(field: Field):
    return np.frompyfunc(field.mul, 2, 1)


@lru_cache(maxsize=None)
def gf(n: int) -> Field:
    """The field GF(2^n) (cached)."""
    if n < 1:
        raise FieldError(f"field degree must be positive, got {n}")
    return Field(n)


# ---------------------------------------------------------------------------
# compatible embeddings
# ---------------------------------------------------------------------------

def _eval_in(field: Field, value: int, gen: int) -> int:
    """Evaluate a polynomial-basis element of a subfield at the image `gen`."""
    r, p = 0, 1
    while value:
        if value & 1:
            r ^= p
        p = field.mul(p, gen)
        value >>= 1
    return r


@lru_cache(maxsize=None)
def _generator_image(a: int, b: int) -> int:
    """Image of the generator of GF(2^a) in GF(2^b) under the canonical embedding."""
    if b % a:
        raise FieldError(f"GF(2^{a}) does not embed in GF(2^{b})")
    big = gf(b)
    if a == b:
        return 2 if b > 1 else 1
    if a == 1:
        return 1
    from .upoly import one_root

    small_mod = smallest_irreducible(a)
    coeffs = [(small_mod >> i) & 1 for i in range(a + 1)]
    # the roots are the Frobenius conjugates of any one of them
    r0 = one_root(big, coeffs)
    roots = [r0]
    for _ in range(a - 1):
        roots.append(big.mul(roots[-1], roots[-1]))
    roots.sort()
    maximal = [a // p for p in _prime_factors(a)]
    for r in roots:
        ok = True
        for c in maximal:
            if c == 1:
                continue
            sub_in_a = _generator_image(c, a)  # element of GF(2^a)
            if _eval_in(big, sub_in_a, r) != _generator_image(c, b):
                ok = False
                break
        if ok:
            return r
    raise FieldError(f"no compatible embedding GF(2^{a}) -> GF(2^{b})")  # pragma: no cover


@lru_cache(maxsize=None)
def _embedding_basis(a: int, b: int) -> tuple[int, ...]:
    big = gf(b)
    g = _generator_image(a, b)
    out, p = [], 1
    for _ in range(a):
        out.append(p)
        p = big.mul(p, g)
    return tuple(out)


def embed(value: int, a: int, b: int) -> int:
    """Map an element of GF(2^a) into GF(2^b) with the canonical embedding."""
    if a == b:
        return value
    basis = _embedding_basis(a, b)
    r, i = 0, 0
    while value:
        if value & 1:
            r ^= basis[i]
        value >>= 1
        i += 1
    return r


def embed_many(values, a: int, b: int):
    if a == b:
        return list(values)
    return [embed(v, a, b) for v in values]


@lru_cache(maxsize=None)
def _restriction_solver(a: int, b: int):
    """Echelon data for inverting the GF(2)-linear embedding a -> b."""
    basis = _embedding_basis(a, b)
    rows = []  # (pivot_bit, vector, combination)
    for i, v in enumerate(basis):
        comb = 1 << i
        for pb, pv, pc in rows:
            if v >> pb & 1:
                v ^= pv
                comb ^= pc
        if v:
            pb = v.bit_length() - 1
            # keep fully reduced
            new_rows = []
            for qb, qv, qc in rows:
                if qv >> pb & 1:
                    qv ^= v
                    qc ^= comb
                new_rows.append((qb, qv, qc))
            rows = new_rows + [(pb, v, comb)]
    return rows


def restrict(value: int, a: int, b: int) -> int | None:
    """Preimage of an element of GF(2^b) in GF(2^a), or None if it is not there."""
    if a == b:
        return value
    r = 0
    for pb, pv, pc in _restriction_solver(a, b):
        if value >> pb & 1:
            value ^= pv
            r ^= pc
    return r if value == 0 else None


def minimal_subfield(value: int, n: int, base: int = 1) -> int:
    """Smallest d (multiple of base, dividing n) with value in GF(2^d)."""
    F = gf(n)
    for d in range(base, n + 1, base):
        if n % d:
            continue
        if F.frobenius(value, d) == value:
            return d
    return n


# ---------------------------------------------------------------------------
# user facing element and tower
# ---------------------------------------------------------------------------

class FieldElem:
    """An element of GF(2^n); arithmetic lifts mixed operands to the common field."""

    __slots__ = ("n", "value")

    def __init__(self, n: int, value: int):
        self.n = n
        self.value = value

    @property
    def field(self) -> Field:
        return gf(self.n)

    def lift(self, n: int) -> "FieldElem":
        return FieldElem(n, embed(self.value, self.n, n))

    def _common(self, other):
        if isinstance(other, int):
            other = FieldElem(self.n, other & 1) if other in (0, 1) else FieldElem(self.n, other)
        if other.n == self.n:
            return self.n, self.value, other.value
        n = math.lcm(self.n, other.n)
        return n, embed(self.value, self.n, n), embed(other.value, other.n, n)

    def __add__(self, other):
        n, a, b = self._common(other)
        return FieldElem(n, a ^ b)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        n, a, b = self._common(other)
        return FieldElem(n, gf(n).mul(a, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        n, a, b = self._common(other)
        return FieldElem(n, gf(n).div(a, b))

    def __pow__(self, e: int):
        return FieldElem(self.n, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.n, self.field.inv(self.value))

    def sqrt(self) -> "FieldElem":
        return FieldElem(self.n, self.field.sqrt(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, int):
            return other in (0, 1) and self.value == other
        if not isinstance(other, FieldElem):
            return NotImplemented
        _, a, b = self._common(other)
        return a == b

    def __hash__(self):
        # hash the value in the minimal field so that equal lifts agree
        d = minimal_subfield(self.value, self.n)
        return hash((d, restrict(self.value, d, self.n)))

    def __repr__(self):
        return f"FieldElem(2^{self.n}, {self.value:#x})"

    def hex(self) -> str:
        return format(self.value, "x")


class FieldTower:
    """GF(2^m) together with its extensions GF(2^{m d}), d = 1, 2, ...

    `level(d)` returns the field of degree d over the base.  The defining
    polynomial of every level is the smallest irreducible of degree m*d.
    """

    def __init__(self, m: int):
        if not isinstance(m, int) or not 1 <= m <= MAX_TOWER_BASE:
            raise FieldError(f"tower base exponent must be in 1..{MAX_TOWER_BASE}, got {m!r}")
        self.m = m

    def __repr__(self):
        return f"FieldTower(m={self.m})"

    def __eq__(self, other):
        return isinstance(other, FieldTower) and other.m == self.m

    def __hash__(self):
        return hash(("tower", self.m))

    @property
    def base(self) -> Field:
        return gf(self.m)

    def level(self, d: int) -> Field:
        return gf(self.m * d)

    def irreducible(self, d: int) -> int:
        return smallest_irreducible(self.m * d)

    def elem(self, value: int, d: int = 1) -> FieldElem:
        return FieldElem(self.m * d, value)

    def level_of(self, x: FieldElem) -> int:
        """Smallest tower level containing x."""
        return minimal_subfield(x.value, x.n, self.m) // self.m if x.n % self.m == 0 else \
            minimal_subfield(embed(x.value, x.n, math.lcm(x.n, self.m)), math.lcm(x.n, self.m), self.m) // self.m

    def embed(self, x: FieldElem, d: int) -> FieldElem:
        return x.lift(self.m * d)


@lru_cache(maxsize=None)
def field_make(m: int) -> FieldTower:
    """The tower over GF(2^m); idempotent."""
    return FieldTower(m)


def field_sqrt(a: FieldElem) -> FieldElem:
    """The unique square root (Frobenius is bijective in characteristic 2)."""
    return a.sqrt()
