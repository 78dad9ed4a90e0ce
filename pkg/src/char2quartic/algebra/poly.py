"""Sparse multivariate polynomials over GF(2^n).

Terms are stored as {exponent tuple: int coefficient} with the field degree
`n` kept on the polynomial; zero coefficients are never stored.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
import math
import random

from ..errors import PolyError
from .field import FieldElem, embed, gf


def monomials(nvars: int, d: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total degree d, in descending grevlex order."""
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=lambda e: e[::-1])
    return out


def monomials_upto(nvars: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(d, -1, -1):
        out.extend(monomials(nvars, k))
    return out


class MultiPoly:
    __slots__ = ("nvars", "n", "terms", "hdeg")

    def __init__(self, nvars: int, terms=None, n: int = 1, hdeg: int | None = None, check: bool = True):
        self.nvars = nvars
        self.n = n
        t = {}
        for e, c in (terms or {}).items():
            if isinstance(c, FieldElem):
                c = embed(c.value, c.n, n) if c.n != n else c.value
            if c:
                e = tuple(e)
                if check and len(e) != nvars:
                    raise PolyError(f"exponent {e} has wrong length for {nvars} variables")
                t[e] = t.get(e, 0) ^ c
        self.terms = {e: c for e, c in t.items() if c}
        self.hdeg = hdeg
        if hdeg is not None and check and any(sum(e) != hdeg for e in self.terms):
            raise PolyError(f"polynomial is not homogeneous of degree {hdeg}")

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, n: int = 1, hdeg=None):
        return cls(nvars, {}, n, hdeg)

    @classmethod
    def const(cls, nvars: int, c: int, n: int = 1):
        return cls(nvars, {(0,) * nvars: c}, n)

    @classmethod
    def var(cls, nvars: int, i: int, n: int = 1):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, n)

    @classmethod
    def linear(cls, coeffs, n: int = 1):
        k = len(coeffs)
        return cls(k, {tuple(int(i == j) for j in range(k)): c for i, c in enumerate(coeffs)}, n)

    @classmethod
    def random_form(cls, nvars: int, d: int, n: int, rng: random.Random, density: float = 1.0):
        F = gf(n)
        terms = {}
        for e in monomials(nvars, d):
            if density >= 1.0 or rng.random() < density:
                terms[e] = F.random(rng)
        return cls(nvars, terms, n, d)

    # -- basic structure --------------------------------------------------
    @property
    def field(self):
        return gf(self.n)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term (the order at the origin)."""
        return min((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_degree(self) -> int | None:
        if self.hdeg is not None:
            return self.hdeg
        ds = {sum(e) for e in self.terms}
        return ds.pop() if len(ds) == 1 else None

    def coeff(self, e) -> FieldElem:
        return FieldElem(self.n, self.terms.get(tuple(e), 0))

    def part(self, d: int) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d}, self.n, d, check=False)

    def lift(self, n: int) -> "MultiPoly":
        if n == self.n:
            return self
        if n % self.n:
            raise PolyError(f"cannot lift GF(2^{self.n}) coefficients into GF(2^{n})")
        return MultiPoly(self.nvars, {e: embed(c, self.n, n) for e, c in self.terms.items()}, n, self.hdeg, check=False)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise PolyError("variable count mismatch")
            n = math.lcm(self.n, other.n)
            return self.lift(n), other.lift(n)
        if isinstance(other, FieldElem):
            n = math.lcm(self.n, other.n)
            return self.lift(n), MultiPoly.const(self.nvars, embed(other.value, other.n, n), n)
        if isinstance(other, int):
            return self, MultiPoly.const(self.nvars, other, self.n)
        return NotImplemented, NotImplemented

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        t = dict(a.terms)
        for e, c in b.terms.items():
            v = t.get(e, 0) ^ c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        hd = a.hdeg if a.hdeg is not None and a.hdeg == b.hdeg else None
        return MultiPoly(a.nvars, t, a.n, hd, check=False)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        F = gf(a.n)
        m = F.mul
        t = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                t[e] = t.get(e, 0) ^ m(c1, c2)
        hd = a.hdeg + b.hdeg if a.hdeg is not None and b.hdeg is not None else None
        return MultiPoly(a.nvars, {e: c for e, c in t.items() if c}, a.n, hd, check=False)

    __rmul__ = __mul__

    def scale(self, c: int) -> "MultiPoly":
        F = gf(self.n)
        return MultiPoly(self.nvars, {e: F.mul(v, c) for e, v in self.terms.items()}, self.n, self.hdeg, check=False)

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative power")
        if k == 2:
            return self.square()
        r = MultiPoly.const(self.nvars, 1, self.n)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b.square()
            k >>= 1
        return r

    def square(self) -> "MultiPoly":
        # Frobenius is additive in characteristic 2
        F = gf(self.n)
        hd = 2 * self.hdeg if self.hdeg is not None else None
        return MultiPoly(self.nvars, {tuple(2 * x for x in e): F.mul(c, c) for e, c in self.terms.items()},
                         self.n, hd, check=False)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.nvars != self.nvars:
            return False
        a, b = self._coerce(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.nvars, self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e[::-1]), reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            if c == 1 and mono:
                parts.append(mono)
            else:
                parts.append(f"{c:#x}" + ("*" + mono if mono else ""))
        return " + ".join(parts)

    # -- calculus and substitution ----------------------------------------
    def partial(self, var: int) -> "MultiPoly":
        if not 0 <= var < self.nvars:
            raise PolyError(f"variable index {var} out of range")
        t = {}
        for e, c in self.terms.items():
            if e[var] % 2:
                e2 = list(e)
                e2[var] -= 1
                t[tuple(e2)] = c
        hd = self.hdeg - 1 if self.hdeg else None
        return MultiPoly(self.nvars, t, self.n, hd, check=False)

    def gradient(self) -> list["MultiPoly"]:
        return [self.partial(i) for i in range(self.nvars)]

    def evaluate(self, point, n: int | None = None) -> int:
        """Value at a point given as ints in GF(2^n) (default: the poly's field)."""
        if n is None:
            n = self.n
        if n % self.n:
            raise PolyError("evaluation field must contain the coefficient field")
        F = gf(n)
        pts = [int(p.value if isinstance(p, FieldElem) else p) for p in point]
        powers = [[1] for _ in pts]
        total = 0
        for e, c in self.terms.items():
            v = embed(c, self.n, n)
            for i, k in enumerate(e):
                if k:
                    pw = powers[i]
                    while len(pw) <= k:
                        pw.append(F.mul(pw[-1], pts[i]))
                    v = F.mul(v, pw[k])
                    if not v:
                        break
            total ^= v
        return total

    def compose(self, subs: list["MultiPoly"]) -> "MultiPoly":
        """Substitute x_i -> subs[i] (all subs share nvars)."""
        if len(subs) != self.nvars:
            raise PolyError("need one substitution per variable")
        n = math.lcm(self.n, *(s.n for s in subs))
        subs = [s.lift(n) for s in subs]
        nv = subs[0].nvars
        cache = [{0: MultiPoly.const(nv, 1, n), 1: s} for s in subs]

        def pw(i, k):
            c = cache[i]
            if k not in c:
                c[k] = pw(i, k // 2).square() if k % 2 == 0 else pw(i, k - 1) * subs[i]
            return c[k]

        acc = {}
        for e, c in self.terms.items():
            term = MultiPoly.const(nv, embed(c, self.n, n), n)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            for e2, c2 in term.terms.items():
                acc[e2] = acc.get(e2, 0) ^ c2
        out = MultiPoly(nv, {e: c for e, c in acc.items() if c}, n, check=False)
        if out.is_homogeneous() and out.terms:
            out.hdeg = out.degree()
        return out

    def chart(self, point, n: int | None = None) -> tuple["MultiPoly", int]:
        """Local equation at a projective point: dehomogenise at the first
        nonzero coordinate k and translate the point to the origin.

        Returns (f, k) with f in nvars-1 variables over GF(2^n).
        """
        if n is None:
            n = self.n
        pts = [int(p.value if isinstance(p, FieldElem) else p) for p in point]
        k = next(i for i, v in enumerate(pts) if v)
        F = gf(n)
        inv = F.inv(pts[k])
        pts = [F.mul(v, inv) for v in pts]
        nv = self.nvars - 1
        subs = []
        j = 0
        for i in range(self.nvars):
            if i == k:
                subs.append(MultiPoly.const(nv, 1, n))
            else:
                e = [0] * nv
                e[j] = 1
                subs.append(MultiPoly(nv, {tuple(e): 1, (0,) * nv: pts[i]}, n, check=False))
                j += 1
        return self.lift(n).compose(subs), k

    def substitute_var(self, var: int, value: "MultiPoly") -> "MultiPoly":
        subs = [value if i == var else MultiPoly.var(self.nvars, i, self.n) for i in range(self.nvars)]
        return self.compose(subs)

    def drop_var(self, var: int) -> "MultiPoly":
        """Remove a variable that does not occur."""
        if any(e[var] for e in self.terms):
            raise PolyError(f"variable {var} occurs")
        return MultiPoly(self.nvars - 1, {e[:var] + e[var + 1:]: c for e, c in self.terms.items()},
                         self.n, self.hdeg, check=False)

    def add_vars(self, positions) -> "MultiPoly":
        """Insert unused variables so the result lives in a larger ring."""
        nv = self.nvars + len(positions)
        t = {}
        for e, c in self.terms.items():
            it = iter(e)
            t[tuple(0 if i in positions else next(it) for i in range(nv))] = c
        return MultiPoly(nv, t, self.n, self.hdeg, check=False)

    def is_square(self) -> bool:
        return all(all(x % 2 == 0 for x in e) for e in self.terms)

    def sqrt(self) -> "MultiPoly":
        if not self.is_square():
            raise PolyError("polynomial is not a square")
        F = gf(self.n)
        hd = self.hdeg // 2 if self.hdeg is not None else None
        return MultiPoly(self.nvars, {tuple(x // 2 for x in e): F.sqrt(c) for e, c in self.terms.items()},
                         self.n, hd, check=False)


def linear_substitution(p: MultiPoly, A, n: int | None = None) -> MultiPoly:
    """p(A x): x_i -> sum_j A[i][j] x_j, A given as ints in GF(2^n)."""
    if n is None:
        n = p.n
    subs = [MultiPoly(p.nvars, {tuple(int(i == j) for i in range(p.nvars)): int(a) for j, a in enumerate(row)},
                      n, 1, check=False) for row in A]
    return p.lift(n).compose(subs)


def euler_check(F: MultiPoly) -> bool:
    """Whether sum_i x_i dF/dx_i vanishes identically."""
    acc = MultiPoly.zero(F.nvars, F.n)
    for i in range(F.nvars):
        acc = acc + MultiPoly.var(F.nvars, i, F.n) * F.partial(i)
    return acc.is_zero()


def poly_partial(p: MultiPoly, var: int) -> MultiPoly:
    return p.partial(var)
