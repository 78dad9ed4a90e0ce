"""Dense univariate polynomials over GF(2^n) and root finding in extensions.

A polynomial is a list of ints (field elements), lowest degree first.  The
zero polynomial is the empty list.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
import math

from ..errors import PolyError
from .field import Field, FieldElem, embed, gf


def trim(f):
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def deg(f) -> int:
    return len(f) - 1


def add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] ^= c
    return trim(out)


def scale(F: Field, f, c: int):
    if not c:
        return []
    return [F.mul(a, c) for a in f]


def mul(F: Field, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    m = F.mul
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] ^= m(a, b)
    return trim(out)


def square(F: Field, f):
    # Frobenius is additive: (sum a_i t^i)^2 = sum a_i^2 t^(2i)
    out = [0] * (2 * len(f) - 1) if f else []
    for i, a in enumerate(f):
        out[2 * i] = F.mul(a, a)
    return out


def monic(F: Field, f):
    f = trim(f)
    if not f:
        return []
    lc = f[-1]
    return f if lc == 1 else scale(F, f, F.inv(lc))


def divmod_(F: Field, f, g):
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv = F.inv(g[-1])
    if len(f) - 1 < dg:
        return [], trim(f)
    qt = [0] * (len(f) - dg)
    m = F.mul
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if not c:
            continue
        c = m(c, inv)
        qt[k - dg] = c
        for j in range(dg + 1):
            if g[j]:
                f[k - dg + j] ^= m(c, g[j])
    return trim(qt), trim(f[:dg])


def rem(F: Field, f, g):
    return divmod_(F, f, g)[1]


def quo(F: Field, f, g):
    q, r = divmod_(F, f, g)
    if r:
        raise PolyError("inexact polynomial division")
    return q


def gcd(F: Field, f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, rem(F, f, g)
    return monic(F, f)


def derivative(f):
    # char 2: i*a_i survives only for odd i
    return trim([f[i] if i % 2 else 0 for i in range(1, len(f))])


def evaluate(F: Field, f, x: int) -> int:
    r = 0
    for c in reversed(f):
        r = F.mul(r, x) ^ c
    return r


def powmod_frobenius(F: Field, h, g, k: int):
    """h^(2^k) mod g."""
    for _ in range(k):
        h = rem(F, square(F, h), g)
    return h


def sqrt_poly(F: Field, f):
    """The polynomial whose square is f (requires f' = 0)."""
    if any(f[i] for i in range(1, len(f), 2)):
        raise PolyError("not a square")
    return [F.sqrt(f[i]) for i in range(0, len(f), 2)]


def squarefree_factorization(F: Field, f):
    """List of (g, i) with f = lc * prod g^i, g squarefree and coprime."""
    f = monic(F, trim(f))
    if len(f) <= 1:
        return []
    out = []
    i = 1
    c = gcd(F, f, derivative(f))
    w = quo(F, f, c)
    while len(w) > 1:
        y = gcd(F, w, c)
        fac = quo(F, w, y)
        if len(fac) > 1:
            out.append((fac, i))
        w, c = y, quo(F, c, y)
        i += 1
    if len(c) > 1:
        for g, j in squarefree_factorization(F, sqrt_poly(F, c)):
            out.append((g, 2 * j))
    return sorted(out, key=lambda gi: gi[1])


def distinct_degree(F: Field, f, max_k: int | None = None):
    """Split squarefree monic f into products of irreducibles of equal degree.

    Returns [(g_k, k)].  With max_k set, factors of degree > max_k are
    returned lumped together with k = None.
    """
    f = monic(F, f)
    out = []
    h = [0, 1]
    k = 0
    while len(f) - 1 >= 2 * (k + 1):
        k += 1
        if max_k is not None and k > max_k:
            break
        h = powmod_frobenius(F, rem(F, h, f), f, F.n)
        g = gcd(F, f, add(h, [0, 1]))
        if len(g) > 1:
            out.append((g, k))
            f = quo(F, f, g)
    if len(f) > 1:
        d = len(f) - 1
        if max_k is None or d <= max_k and d > k:
            out.append((f, d))
        else:
            out.append((f, None))
    return out


def _trace_poly(F: Field, beta: int, g):
    s = rem(F, [0, beta], g)
    acc = list(s)
    for _ in range(F.n - 1):
        s = rem(F, square(F, s), g)
        acc = add(acc, s)
    return acc


def _split_squarefree(F: Field, g, out):
    if len(g) == 2:
        out.append(F.div(g[0], g[1]))
        return
    for j in range(F.n):
        d = gcd(F, g, _trace_poly(F, 1 << j, g))
        if 1 < len(d) < len(g):
            _split_squarefree(F, d, out)
            _split_squarefree(F, quo(F, g, d), out)
            return
    raise PolyError("trace splitting failed; input not squarefree and split")  # pragma: no cover


def one_root(F: Field, f):
    """Some root of f in F, or None; only the smaller factor of each split is followed."""
    f = monic(F, trim(f))
    if len(f) <= 1:
        return None
    h = powmod_frobenius(F, rem(F, [0, 1], f), f, F.n)
    g = gcd(F, f, add(h, [0, 1]))
    while len(g) > 2:
        for j in range(F.n):
            d = gcd(F, g, _trace_poly(F, 1 << j, g))
            if 1 < len(d) < len(g):
                e = quo(F, g, d)
                g = d if len(d) <= len(e) else e
                break
        else:
            raise PolyError("trace splitting failed")  # pragma: no cover
    return F.div(g[0], g[1]) if len(g) == 2 else None


def split_roots(F: Field, f):
    """Distinct roots of f lying in F itself."""
    f = monic(F, trim(f))
    if len(f) <= 1:
        return []
    # gcd with t^q - t keeps exactly the distinct linear factors
    h = powmod_frobenius(F, rem(F, [0, 1], f), f, F.n)
    g = gcd(F, f, add(h, [0, 1]))
    out = []
    if len(g) > 1:
        _split_squarefree(F, g, out)
    return sorted(out)


@dataclass
class RootInfo:
    root: FieldElem
    multiplicity: int
    ext_degree: int
    orbit: list = dc_field(default_factory=list)


def _as_coeffs(p, n):
    if n is None:
        if not p or not all(isinstance(c, FieldElem) for c in p):
            raise PolyError("give FieldElem coefficients or the field degree n")
        n = math.lcm(*(c.n for c in p))
        return [embed(c.value, c.n, n) for c in p], n
    return [c.value if isinstance(c, FieldElem) else int(c) for c in p], n


def uni_roots(p, max_ext_degree: int, n: int | None = None, expand: bool = False):
    """Roots of p in extensions of degree <= max_ext_degree of its coefficient field.

    `p` is a low-to-high list of coefficients (FieldElem, or ints with `n`
    giving the field GF(2^n)).  One RootInfo per Galois orbit, the
    representative being the smallest int of the orbit in GF(2^(n*k)); with
    expand=True the whole orbit is attached.
    """
    coeffs, n = _as_coeffs(p, n)
    coeffs = trim(coeffs)
    if not coeffs:
        raise PolyError("uni_roots of the zero polynomial")
    F = gf(n)
    out = []
    for g, mult in squarefree_factorization(F, coeffs):
        for h, k in distinct_degree(F, g, max_ext_degree):
            if k is None:
                continue
            nk = n * k
            E = gf(nk)
            lifted = [embed(c, n, nk) for c in h]
            roots = split_roots(E, lifted)
            seen = set()
            for r in roots:
                if r in seen:
                    continue
                orb = [r]
                x = E.frobenius(r, n) if nk > n else r
                while x != r:
                    orb.append(x)
                    x = E.frobenius(x, n)
                seen.update(orb)
                rep = min(orb)
                out.append(RootInfo(FieldElem(nk, rep), mult, k,
                                    [FieldElem(nk, v) for v in sorted(orb)] if expand else []))
    out.sort(key=lambda r: (r.ext_degree, r.root.value, r.multiplicity))
    return out


def from_roots(F: Field, roots):
    f = [1]
    for r in roots:
        f = mul(F, f, [r, 1])
    return f
