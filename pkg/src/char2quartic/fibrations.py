"""Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over GF(2^m)[t].

Coefficients are low-to-high int lists over GF(2^n) with deg a_i <= 2i, so a
model with nonzero discriminant is an elliptic K3 surface (or a rational one
when it is not minimal somewhere).  Fibers are classified by Tate's
algorithm in its characteristic 2 form.  Places of degree k > 1 are handled
by moving to GF(2^(nk)); the reported data are those of each of the k
geometric fibers.

Nothing here decides supersingularity.  The parameter counts of the
square-discriminant families are recorded in ``MODULI_DIMENSIONS`` for
reference only.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
import random

from . import kodaira
from .algebra import upoly as up
from .algebra.field import FieldElem, embed, gf, restrict
from .algebra.poly import MultiPoly
from .errors import INCONSISTENT, CertificationError, Char2Error, HypothesisError, QuasiEllipticError

DEGREE_BOUNDS = (2, 4, 6, 8, 12)
WEIGHTS = (1, 2, 3, 4, 6)
NAMES = ("a1", "a2", "a3", "a4", "a6")
MAX_MINIMALIZATIONS = 10

# families with 12 disjoint (-2)-curves in the fibers, by the special fiber
MODULI_DIMENSIONS = {"I0*": 7, "I1*": 6, "IV*": 5, "semistable": 8}


class DegenerateModelError(Char2Error, ValueError):
    pass


def _pad(f, k):
    f = list(f)
    return f + [0] * (k - len(f)) if len(f) < k else f


def _coef(f, j):
    return f[j] if 0 <= j < len(f) else 0


def _val(f):
    for i, c in enumerate(f):
        if c:
            return i
    return None


def _shift(f, k):
    return [0] * k + list(f) if f else []


def _divt(f, k):
    if any(f[:k]):
        raise ArithmeticError("not divisible")
    return up.trim(f[k:])


@dataclass(frozen=True)
class WeierstrassModel:
    a1: tuple
    a2: tuple
    a3: tuple
    a4: tuple
    a6: tuple
    n: int = 1

    def __post_init__(self):
        F = gf(self.n)
        for name, bound in zip(NAMES, DEGREE_BOUNDS):
            f = tuple(up.trim(int(c) for c in getattr(self, name)))
            if any(c < 0 or c >= F.order for c in f):
                raise ValueError(f"{name} has coefficients outside GF(2^{self.n})")
            if len(f) - 1 > bound:
                raise ValueError(f"deg {name} = {len(f) - 1} exceeds {bound}")
            object.__setattr__(self, name, f)

    @classmethod
    def from_lists(cls, coeffs, n: int = 1):
        return cls(*(tuple(c) for c in coeffs), n=n)

    @property
    def coeffs(self):
        return [list(self.a1), list(self.a2), list(self.a3), list(self.a4), list(self.a6)]

    @property
    def field(self):
        return gf(self.n)

    def lift(self, n: int) -> "WeierstrassModel":
        return WeierstrassModel.from_lists([[embed(c, self.n, n) for c in f] for f in self.coeffs], n)

    def to_json(self) -> dict:
        return {"field": {"m": self.n}, "a": [[format(c, "x") for c in f] for f in self.coeffs]}


def discriminant(W: WeierstrassModel):
    return _disc_raw(W.field, W.coeffs)


def _prod(F, fs):
    out = [1]
    for f in fs:
        out = up.mul(F, out, f)
        if not out:
            return []
    return out


def b_invariants(W: WeierstrassModel):
    """b2, b4, b6, b8 reduced mod 2."""
    F = W.field
    a1, a2, a3, a4, a6 = W.coeffs
    b2 = up.mul(F, a1, a1)
    b4 = up.mul(F, a1, a3)
    b6 = up.mul(F, a3, a3)
    b8 = up.add(up.add(_prod(F, [a1, a1, a6]), _prod(F, [a1, a3, a4])),
                up.add(_prod(F, [a2, a3, a3]), up.mul(F, a4, a4)))
    return b2, b4, b6, b8


def discriminant_from_b(W: WeierstrassModel):
    """-b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6, read mod 2."""
    F = W.field
    b2, b4, b6, b8 = b_invariants(W)
    return up.add(up.add(_prod(F, [b2, b2, b8]), up.mul(F, b6, b6)), _prod(F, [b2, b4, b6]))


def is_quasi_elliptic(W: WeierstrassModel) -> bool:
    q = not W.a1 and not W.a3
    if q:
        assert not discriminant(W)
    return q


def is_square_poly(f) -> bool:
    return not any(c for c in f[1::2])


def transform(W: WeierstrassModel, r=(), s=(), t=(), u: int = 1) -> WeierstrassModel:
    """x = u^2 x' + r, y = u^3 y' + s u^2 x' + t, with u a nonzero scalar."""
    F = W.field
    a1, a2, a3, a4, a6 = W.coeffs
    r, s, t = list(r), list(s), list(t)
    n1, n2, n3, n4, n6 = _change(F, (a1, a2, a3, a4, a6), r, s, t)
    if u != 1:
        if not u:
            raise ValueError("u must be nonzero")
        ui = F.inv(u)
        n1, n2, n3, n4, n6 = (up.scale(F, f, F.pow(ui, w)) for f, w in zip((n1, n2, n3, n4, n6), WEIGHTS))
    return WeierstrassModel.from_lists([n1, n2, n3, n4, n6], W.n)


def _change(F, a, r, s, t):
    a1, a2, a3, a4, a6 = a
    mul = lambda *fs: _prod(F, fs)
    add = lambda *fs: _sum(fs)
    n1 = a1
    n2 = add(a2, mul(s, a1), r, mul(s, s))
    n3 = add(a3, mul(r, a1))
    n4 = add(a4, mul(s, a3), mul(t, a1), mul(r, s, a1), mul(r, r))
    n6 = add(a6, mul(r, a4), mul(r, r, a2), mul(r, r, r), mul(t, a3), mul(t, t), mul(r, t, a1))
    return [up.trim(f) for f in (n1, n2, n3, n4, n6)]


def _sum(fs):
    out = []
    for f in fs:
        out = up.add(out, f)
    return out


# -- places -------------------------------------------------------------

@dataclass(frozen=True)
class Place:
    """A closed point of P^1: a monic irreducible poly over GF(2^n), or infinity (poly None)."""
    poly: tuple | None
    n: int

    def __post_init__(self):
        if self.poly is None:
            return
        p = tuple(up.trim(self.poly))
        F = gf(self.n)
        if len(p) < 2 or p[-1] != 1:
            raise ValueError("place polynomial must be monic of positive degree")
        parts = up.squarefree_factorization(F, list(p))
        if len(parts) != 1 or parts[0][1] != 1 or up.distinct_degree(F, list(p))[0][1] != len(p) - 1:
            raise ValueError("place polynomial is not irreducible")
        object.__setattr__(self, "poly", p)

    @classmethod
    def infinity(cls, n: int = 1) -> "Place":
        return cls(None, n)

    @classmethod
    def rational(cls, c: int, n: int = 1) -> "Place":
        return cls((c, 1), n)

    @property
    def is_infinity(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else len(self.poly) - 1

    def label(self) -> str:
        if self.poly is None:
            return "inf"
        return "[" + ",".join(format(c, "x") for c in self.poly) + "]"


INFINITY = None


def _taylor_shift(F, f, c):
    """f(t + c)."""
    out = []
    for a in reversed(f):
        out = up.add(up.mul(F, out, [c, 1]), [a])
    return out


def localize(W: WeierstrassModel, place: Place):
    """(N, coefficient lists over GF(2^N)) with the place moved to t = 0."""
    if place.n != W.n:
        raise ValueError("place and model over different fields")
    if place.is_infinity:
        coeffs = [list(reversed(_pad(f, b + 1))) for f, b in zip(W.coeffs, DEGREE_BOUNDS)]
        return W.n, [up.trim(f) for f in coeffs]
    k = place.degree
    N = W.n * k
    E = gf(N)
    roots = up.split_roots(E, [embed(c, W.n, N) for c in place.poly])
    c = min(roots)
    return N, [_taylor_shift(E, [embed(x, W.n, N) for x in f], c) for f in W.coeffs]


# -- Tate's algorithm -----------------------------------------------------

@dataclass
class FiberReport:
    kodaira_type: str
    m_v: int
    e_v: int
    vDelta: int
    delta_v: int
    N_v: int
    place: Place | None = None
    orbit_size: int = 1
    minimalizations: int = 0
    support: tuple | None = None
    place_degree: int | None = None

    @property
    def delta_min(self) -> int:
        return kodaira.fiber_table(self.kodaira_type).delta_min

    @property
    def delta_ok(self) -> bool:
        return self.delta_v >= self.delta_min

    @property
    def delta_minimal(self) -> bool:
        return self.delta_v == self.delta_min

    def to_json(self) -> dict:
        return {
            "place": self.place.label() if self.place is not None else None,
            "support": [format(c, "x") for c in self.support] if self.support else None,
            "place_degree": self.place.degree if self.place is not None else self.place_degree,
            "orbit_size": self.orbit_size,
            "type": self.kodaira_type,
            "m": self.m_v,
            "e": self.e_v,
            "v_delta": self.vDelta,
            "delta": self.delta_v,
            "N": self.N_v,
            "minimalizations": self.minimalizations,
        }


def _report(kind, vD, place=None, orbit=1, mins=0):
    d = kodaira.fiber_table(kind)
    return FiberReport(kind, d.m, d.e, vD, vD - d.e, d.N, place, orbit, mins)


def _tate_local(F, a):
    """Kodaira type and number of minimalizations for a model localized at t = 0."""
    a = [list(f) for f in a]
    mins = 0
    while True:
        vD = _val(_disc_raw(F, a))
        if vD == 0:
            return "I0", mins
        a1, a2, a3, a4, a6 = a
        if _coef(a1, 0):
            return f"I{vD}", mins
        # move the singular point of the reduction to (0, 0)
        x0 = F.sqrt(_coef(a4, 0))
        fx = F.mul(F.mul(x0, x0), x0) ^ F.mul(_coef(a2, 0), F.mul(x0, x0)) ^ F.mul(_coef(a4, 0), x0) ^ _coef(a6, 0)
        y0 = F.sqrt(fx)
        a = _change(F, a, [x0], [], [y0])
        a1, a2, a3, a4, a6 = a
        assert _coef(a3, 0) == 0 and _coef(a4, 0) == 0 and _coef(a6, 0) == 0
        if _coef(a6, 1):
            return "II", mins
        b8 = _sum([_prod(F, [a1, a1, a6]), _prod(F, [a1, a3, a4]), _prod(F, [a2, a3, a3]), up.mul(F, a4, a4)])
        if any(b8[:3]):
            return "III", mins
        if any(a3[:2]):
            return "IV", mins
        # now t | a1, t^2 | a3, a4, a6; make t | a2 and t^3 | a6
        s = [F.sqrt(_coef(a2, 0))]
        tt = [0, F.sqrt(_coef(a6, 2))]
        a = _change(F, a, [], s, tt)
        a1, a2, a3, a4, a6 = a
        assert not any(a2[:1]) and not any(a4[:2]) and not any(a6[:3]) and not any(a3[:2])
        P = [_coef(a6, 3), _coef(a4, 2), _coef(a2, 1), 1]
        parts = up.squarefree_factorization(F, P)
        mult = max(m for _, m in parts)
        if mult == 1:
            return "I0*", mins
        root = next(g[0] for g, m in parts if m == mult and len(g) == 2)
        a = _change(F, a, [0, root], [], [])
        a1, a2, a3, a4, a6 = a
        if mult == 2:
            return _istar_chain(F, a), mins
        # triple root at T = 0
        assert not any(a2[:2]) and not any(a4[:3]) and not any(a6[:4])
        if _coef(a3, 2):
            return "IV*", mins
        a = _change(F, a, [], [], [0, 0, F.sqrt(_coef(a6, 4))])
        a1, a2, a3, a4, a6 = a
        if _coef(a4, 3):
            return "III*", mins
        if _coef(a6, 5):
            return "II*", mins
        # not minimal
        a = [_divt(f, w) for f, w in zip(a, WEIGHTS)]
        mins += 1
        if mins > MAX_MINIMALIZATIONS:
            raise CertificationError("minimalization did not terminate")


def _istar_chain(F, a):
    n = 1
    while True:
        a1, a2, a3, a4, a6 = a
        if n % 2:
            j = (n + 3) // 2
            if _coef(a3, j):
                return f"I{n}*"
            a = _change(F, a, [], [], _shift([F.sqrt(_coef(a6, n + 3))], j))
        else:
            j = (n + 4) // 2
            if _coef(a4, j):
                return f"I{n}*"
            beta = F.sqrt(F.div(_coef(a6, n + 3), _coef(a2, 1)))
            a = _change(F, a, _shift([beta], (n + 2) // 2), [], [])
        n += 1
        if n > 60:
            raise CertificationError("I*_n chain did not terminate")


def _disc_raw(F, a):
    a1, a2, a3, a4, a6 = a
    m = lambda *fs: _prod(F, fs)
    return _sum([m(a3, a3, a3, a3), m(a1, a1, a1, a3, a3, a3), m(a1, a1, a1, a1, a4, a4),
                 m(a1, a1, a1, a1, a2, a3, a3), m(a1, a1, a1, a1, a1, a3, a4), m(a1, a1, a1, a1, a1, a1, a6)])


def tate_fiber(W: WeierstrassModel, place: Place, max_ext_degree: int = 24) -> FiberReport:
    if is_quasi_elliptic(W):
        raise QuasiEllipticError("a1 = a3 = 0: the fibration is quasi-elliptic")
    if not discriminant(W):
        raise DegenerateModelError("discriminant vanishes identically")
    if place.degree > max_ext_degree:
        raise CertificationError(f"place of degree {place.degree} exceeds max_ext_degree")
    N, a = localize(W, place)
    F = gf(N)
    vD0 = _val(_disc_raw(F, a))
    kind, mins = _tate_local(F, a)
    return _report(kind, vD0 - 12 * mins, place, place.degree, mins)


def _minimal_poly(root: FieldElem, n: int):
    N = root.n
    E = gf(N)
    orb = [root.value]
    x = E.frobenius(root.value, n)
    while x != root.value:
        orb.append(x)
        x = E.frobenius(x, n)
    p = up.from_roots(E, orb)
    out = []
    for c in p:
        v = restrict(c, n, N)
        if v is None:
            raise ArithmeticError("minimal polynomial not defined over the base field")
        out.append(v)
    return tuple(out)


def _additive_support(W: WeierstrassModel):
    """Squarefree poly whose roots are the finite places of additive reduction."""
    F = W.field
    D = discriminant(W)
    base = list(W.a1) if W.a1 else list(W.a3)
    g = up.gcd(F, D, base)
    parts = up.squarefree_factorization(F, g)
    out = [1]
    for h, _ in parts:
        out = up.mul(F, out, h)
    return out


def bad_places(W: WeierstrassModel, max_ext_degree: int = 24) -> list[Place]:
    """Places of additive reduction, plus infinity when the fiber there is singular.

    Multiplicative places are not listed; see ``multiplicative_fibers``.
    """
    D = discriminant(W)
    if not D:
        raise DegenerateModelError("discriminant vanishes identically")
    places = []
    g = _additive_support(W)
    if len(g) > 1:
        roots = up.uni_roots(g, max_ext_degree, W.n)
        if sum(r.ext_degree for r in roots) != len(g) - 1:
            raise CertificationError("some bad place has degree above max_ext_degree")
        places = [Place(_minimal_poly(r.root, W.n), W.n) for r in roots]
    if len(D) - 1 < 24:
        places.append(Place.infinity(W.n))
    return places


def multiplicative_fibers(W: WeierstrassModel) -> list[FiberReport]:
    """Finite multiplicative fibers, grouped by type and by degree of the place.

    Each report stands for ``orbit_size`` geometric fibers; ``support`` is the
    product of the corresponding place polynomials.
    """
    F = W.field
    D = discriminant(W)
    out = []
    if not W.a1:
        return out
    for g, i in up.squarefree_factorization(F, D):
        common = up.gcd(F, g, list(W.a1))
        h = up.quo(F, g, common) if len(common) > 1 else g
        if len(h) < 2:
            continue
        for part, k in up.distinct_degree(F, h):
            r = _report(f"I{i}", i, None, len(part) - 1)
            r.support = tuple(part)
            r.place_degree = k
            out.append(r)
    return out


@dataclass
class EulerLedger:
    places: list
    total: int
    square_discriminant: bool
    minimalizations: int = 0

    @property
    def minimal(self) -> bool:
        return self.minimalizations == 0

    @property
    def sum_N(self) -> int:
        return sum(r.orbit_size * r.N_v for r in self.places)

    def census(self) -> dict:
        out = {}
        for r in self.places:
            out[r.kodaira_type] = out.get(r.kodaira_type, 0) + r.orbit_size
        return dict(sorted(out.items(), key=lambda kv: _type_order(kv[0])))

    def to_json(self) -> dict:
        return {
            "fibers": [r.to_json() for r in self.places],
            "census": self.census(),
            "euler_total": self.total,
            "sum_N": self.sum_N,
            "square_discriminant": self.square_discriminant,
            "minimalizations": self.minimalizations,
        }


def _type_order(kind):
    fam, n = kodaira.parse(kind)
    order = {"In": 0, "II": 1, "III": 2, "IV": 3, "In*": 4, "IV*": 5, "III*": 6, "II*": 7}
    return (order[fam], n or 0)


def euler_ledger(W: WeierstrassModel, max_ext_degree: int = 24) -> EulerLedger:
    if is_quasi_elliptic(W):
        raise QuasiEllipticError("a1 = a3 = 0: the fibration is quasi-elliptic")
    reports = multiplicative_fibers(W)
    reports += [tate_fiber(W, p, max_ext_degree) for p in bad_places(W, max_ext_degree)]
    mins = sum(r.orbit_size * r.minimalizations for r in reports)
    reports = [r for r in reports if r.kodaira_type != "I0"]
    total = sum(r.orbit_size * (r.e_v + r.delta_v) for r in reports)
    return EulerLedger(reports, total, is_square_poly(discriminant(W)), mins)


@dataclass
class DisjointSum:
    sum: int
    bound_ok: bool
    cor12_ok: bool

    def to_json(self) -> dict:
        return {"sum": self.sum, "bound_ok": self.bound_ok, "cor12_ok": self.cor12_ok}


def max_disjoint_sum(reports) -> DisjointSum:
    """Sum of N_v; when it reaches 12, every singular fiber must be of an allowed
    type with minimal wild ramification."""
    s = sum(r.orbit_size * r.N_v for r in reports)
    sing = [r for r in reports if r.kodaira_type != "I0"]
    cor = True
    if s == 12:
        cor = all(kodaira.allows_twelve_curves(r.kodaira_type) and r.delta_minimal for r in sing)
    return DisjointSum(s, s <= 12, cor)


def rank_lower_bound(reports, has_section: bool = True) -> int:
    from .pic_lattice import shioda_tate_lower
    kinds = []
    for r in reports:
        kinds += [r.kodaira_type] * r.orbit_size
    return shioda_tate_lower(kinds, has_section)


# -- normal forms -----------------------------------------------------------

def _check_deg(name, f, bound):
    f = up.trim(f)
    if len(f) - 1 > bound:
        raise HypothesisError(f"deg {name} = {len(f) - 1} exceeds {bound}")
    return f


def normal_form_Istar(n: int, a2p, a3p, a4p, a6p, m: int = 1) -> WeierstrassModel:
    """y^2 + t^2 xy + t^(n+2) a3' y = x^3 + t a2' x^2 + t^(n+2) a4' x + t^(2n+4) a6',
    with t not dividing a2' a4'.  Gives a fiber of type I*_2n at t = 0."""
    if n < 0:
        raise HypothesisError("n must be nonnegative")
    a2p = _check_deg("a2'", a2p, 3)
    a3p = _check_deg("a3'", a3p, 4 - n)
    a4p = _check_deg("a4'", a4p, 6 - n)
    a6p = _check_deg("a6'", a6p, 8 - 2 * n)
    if not _coef(a2p, 0) or not _coef(a4p, 0):
        raise HypothesisError("t must not divide a2' a4'")
    return WeierstrassModel.from_lists(
        [[0, 0, 1], _shift(a2p, 1), _shift(a3p, n + 2), _shift(a4p, n + 2), _shift(a6p, 2 * n + 4)], m)


def normal_form_IIIstar(a2p, a3p, a4p, a6p, m: int = 1) -> WeierstrassModel:
    """a1 = t^2, t^2 | a2, t^3 | a3, t^3 || a4, t^5 | a6."""
    a2p = _check_deg("a2'", a2p, 2)
    a3p = _check_deg("a3'", a3p, 3)
    a4p = _check_deg("a4'", a4p, 5)
    a6p = _check_deg("a6'", a6p, 7)
    if not _coef(a4p, 0):
        raise HypothesisError("t^4 must not divide a4")
    return WeierstrassModel.from_lists(
        [[0, 0, 1], _shift(a2p, 2), _shift(a3p, 3), _shift(a4p, 3), _shift(a6p, 5)], m)


def _upmul_generic(f, g, zero):
    if not f or not g:
        return []
    out = [zero] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] = out[i + j] + x * y
    return out


def _upadd_generic(f, g, zero):
    k = max(len(f), len(g))
    return [(f[i] if i < len(f) else zero) + (g[i] if i < len(g) else zero) for i in range(k)]


def _reduced_disc_Istar0(a2p, a3p, a4p, a6p, zero):
    """Delta / t^8 for the I*_0 normal form, over any ring with + and *."""
    mul = lambda f, g: _upmul_generic(f, g, zero)
    add = lambda f, g: _upadd_generic(f, g, zero)
    sh = lambda f, k: [zero] * k + list(f)
    a3sq = mul(a3p, a3p)
    out = mul(a3sq, a3sq)
    out = add(out, sh(mul(a3sq, a3p), 4))
    out = add(out, sh(mul(a4p, a4p), 4))
    out = add(out, sh(mul(a2p, a3sq), 5))
    out = add(out, sh(mul(a3p, a4p), 6))
    out = add(out, sh(a6p, 8))
    return out


@dataclass
class SquareDiscSolution:
    a2p: list
    a3p: list
    a4p: list
    a6p: list
    model: WeierstrassModel
    eliminated: dict = dc_field(default_factory=dict)


def square_disc_constraints_Istar0(a2p, a3p, a4p, a6p, m: int = 1):
    """Overwrite a'_{2,0}, a'_{4,1} and the odd coefficients of a6' so that the
    I*_0 normal form has square discriminant.

    Returns a SquareDiscSolution, or INCONSISTENT when the forced values break
    the side condition t not dividing a2' a4'.
    """
    F = gf(m)
    a2p, a3p, a4p, a6p = (_pad(_check_deg(nm, f, b), b + 1)
                          for nm, f, b in (("a2'", a2p, 3), ("a3'", a3p, 4), ("a4'", a4p, 6), ("a6'", a6p, 8)))
    a30 = a3p[0]
    if not a30:
        raise HypothesisError("t must not divide a3'")
    a2p[0] = a3p[1]
    a4p[1] = F.div(F.mul(a2p[2], F.sqr(a30)) ^ F.mul(F.sqr(a30), a3p[3]) ^ F.mul(a3p[1], a4p[0]), a30)
    for j in (1, 3, 5, 7):
        a6p[j] = 0

    D = _reduced_disc_Istar0(*(_GF(F, f) for f in (a2p, a3p, a4p, a6p)), zero=_GF(F, [0])[0])
    D = [int(c) for c in D]
    for j in (9, 11, 13, 15):
        a6p[j - 8] = D[j] if j < len(D) else 0
    elim = {"a2_0": a2p[0], "a4_1": a4p[1], **{f"a6_{j}": a6p[j] for j in (1, 3, 5, 7)}}
    if not a2p[0] or not a4p[0]:
        return INCONSISTENT
    W = normal_form_Istar(0, a2p, a3p, a4p, a6p, m)
    return SquareDiscSolution(up.trim(a2p), up.trim(a3p), up.trim(a4p), up.trim(a6p), W, elim)


class _Elt:
    __slots__ = ("F", "v")

    def __init__(self, F, v):
        self.F, self.v = F, v

    def __add__(self, o):
        return _Elt(self.F, self.v ^ o.v)

    def __mul__(self, o):
        return _Elt(self.F, self.F.mul(self.v, o.v))

    def __int__(self):
        return self.v


def _GF(F, f):
    return [_Elt(F, c) for c in f]


SYMBOLIC_VARS = [f"a2_{j}" for j in range(4)] + [f"a3_{j}" for j in range(5)] + \
    [f"a4_{j}" for j in range(7)] + [f"a6_{j}" for j in range(9)]


def square_disc_symbolic():
    """Coefficients of Delta/t^8 for the I*_0 normal form with indeterminate a'_{i,j}.

    Returns (coefficient list of MultiPoly over GF(2), variable name -> MultiPoly).
    """
    nv = len(SYMBOLIC_VARS)
    v = {nm: MultiPoly.var(nv, i) for i, nm in enumerate(SYMBOLIC_VARS)}
    pick = lambda p, k: [v[f"{p}_{j}"] for j in range(k)]
    zero = MultiPoly.zero(nv)
    D = _reduced_disc_Istar0(pick("a2", 4), pick("a3", 5), pick("a4", 7), pick("a6", 9), zero)
    return D, v


# -- explicit configurations --------------------------------------------------

def _random_poly(F, rng, deg, nonzero_const=False):
    f = [F.random(rng) for _ in range(deg + 1)]
    if nonzero_const and not f[0]:
        f[0] = F.random(rng, nonzero=True)
    return f


def istar0_square_family(m: int = 2, seed: int = 0, tries: int = 200):
    """A member of the square-discriminant I*_0 family with fibers I0* + 8 I2."""
    rng = random.Random(seed)
    F = gf(m)
    for _ in range(tries):
        a2p = _random_poly(F, rng, 3)
        a3p = _random_poly(F, rng, 4, True)
        a4p = _random_poly(F, rng, 6, True)
        a6p = _random_poly(F, rng, 8)
        sol = square_disc_constraints_Istar0(a2p, a3p, a4p, a6p, m)
        if sol is INCONSISTENT:
            continue
        led = euler_ledger(sol.model)
        if led.census() == {"I2": 8, "I0*": 1}:
            return sol.model
    raise CertificationError("no generic member found")


def two_istar4_model(m: int = 2, seed: int = 0, tries: int = 500):
    """y^2 + t xy = x^3 + a2 x^2 + c t^6 with palindromic a2: Delta = c t^12,
    aiming for I4* fibers at t = 0 and t = infinity."""
    rng = random.Random(seed)
    F = gf(m)
    for _ in range(tries):
        h = [F.random(rng) for _ in range(3)]
        a2 = [h[0], h[1], h[2], h[1], h[0]]
        c = F.random(rng, nonzero=True)
        W = WeierstrassModel.from_lists([[0, 1], a2, [], [], [0] * 6 + [c]], m)
        led = euler_ledger(W)
        if led.census() == {"I4*": 2}:
            return W
    raise CertificationError("no two-I4* model found")
