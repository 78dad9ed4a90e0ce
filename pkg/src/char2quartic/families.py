"""Explicit surfaces whose dual variety is a plane, built from a plane form B.

Plane forms live in x1, x2, x3 (indices 0..2).  Surfaces live in
x1, x2, x3, z with z last, so the surfaces are

    a3           z^4 + B
    special      z^4 + z^2 x1^2 + B
    insep        z^2 (x1 x2 + x3^2) + B
    dual plane   z^4 + z^2 (x1 x2 + lambda x3^2) + B

"General" B is made concrete as the Klein form plus q^2 for a seeded random
quadric q; the verifiers check their conclusions instead of assuming
genericity.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
import math
import random

from .algebra import linalg as la
from .algebra.field import FieldElem, embed, gf, field_make
from .algebra.ideals import AFFINE, ideal, local_colength, scheme_length, solve_zero_dim
from .algebra.poly import MultiPoly, linear_substitution
from .errors import NOT_ZERO_DIM, CertificationError, NonNormalError, PolyError
from .gauss_dual import degree_ledger, dual_plane_kernel
from .singularities import Kind, QuarticSurface, find_singular_points

Z = 3


class PlaneCurve:
    """A nonzero form of even degree in x1, x2, x3."""

    def __init__(self, B: MultiPoly):
        if B.nvars != 3:
            raise PolyError("plane curves use 3 variables")
        if B.is_zero():
            raise PolyError("B is zero")
        d = B.homogeneous_degree()
        if d is None or d % 2:
            raise PolyError("B must be a form of even degree")
        self.B = MultiPoly(3, B.terms, B.n, d, check=False)
        self.d = d

    @property
    def n(self) -> int:
        return self.B.n

    def gradient(self):
        return self.B.gradient()

    def __add__(self, other):
        other = other.B if isinstance(other, PlaneCurve) else other
        return PlaneCurve(self.B + other)

    def __repr__(self):
        return f"PlaneCurve({self.B!r})"


def _var(nv, i, n=1):
    return MultiPoly.var(nv, i, n)


def klein_form(m: int, n: int = 1) -> PlaneCurve:
    """x1^(2m-1) x2 + x2^(2m-1) x3 + x3^(2m-1) x1."""
    if m < 1:
        raise PolyError("klein_form needs m >= 1")
    k = 2 * m - 1
    terms = {}
    for i in range(3):
        e = [0, 0, 0]
        e[i] += k
        e[(i + 1) % 3] += 1
        terms[tuple(e)] = 1
    return PlaneCurve(MultiPoly(3, terms, n, 2 * m))


def random_quadric(n: int, rng: random.Random) -> MultiPoly:
    return MultiPoly.random_form(3, 2, n, rng)


def general_quartic(m: int, seed: int) -> PlaneCurve:
    """Klein quartic plus the square of a seeded random quadric over GF(2^m)."""
    rng = random.Random(seed)
    q = random_quadric(m, rng)
    return PlaneCurve(klein_form(2).B.lift(m) + q.square())


# ---------------------------------------------------------------------------
# strange points
# ---------------------------------------------------------------------------

@dataclass
class StrangeLocus:
    points: list
    length: object
    finite: bool
    certificate: dict = dc_field(default_factory=dict)

    @property
    def reduced(self) -> bool:
        return self.finite and all(mult == 1 for _, mult, _, _ in self.points)

    @property
    def geometric_count(self) -> int:
        return sum(orb for _, _, _, orb in self.points) if self.finite else 0

    def geometric_points(self):
        out = []
        for pt, mult, ext, orb in self.points:
            n = pt[0].n
            F = gf(n)
            cur = [c.value for c in pt]
            step = n // orb
            for _ in range(orb):
                out.append(tuple(FieldElem(n, v) for v in cur))
                cur = [F.frobenius(v, step) for v in cur]
        return out

    def to_json(self) -> dict:
        return {
            "points": [{"point": [format(c.value, "x") for c in pt], "field_n": pt[0].n,
                        "multiplicity": mult, "ext_degree": ext, "orbit_size": orb}
                       for pt, mult, ext, orb in self.points],
            "length": self.length if isinstance(self.length, int) else str(self.length),
            "finite": self.finite,
            "reduced": self.reduced,
            "certificate": self.certificate,
        }


def expected_strange_count(d: int) -> int:
    return (d - 1) * (d - 2) + 1


def _random_gl3(F, rng):
    while True:
        A = [[F.random(rng) for _ in range(3)] for _ in range(3)]
        if la.rank(F, A) == 3:
            return A


def strange_certificate(B: PlaneCurve, seed: int = 0) -> dict:
    """Split of the complete intersection (B1, B2) in random coordinates.

    In coordinates where x3 = 0 misses the critical locus, (B1, B2) is a
    complete intersection of length (d-1)^2 made of the critical scheme and a
    piece of length d-2 on the line x3 = 0.
    """
    rng = random.Random(seed)
    n = B.n
    while n < 8:
        n += B.n
    F = gf(n)
    A = _random_gl3(F, rng)
    Bc = linear_substitution(B.B, A, n)
    g = Bc.gradient()
    d = B.d
    ci = scheme_length(ideal([g[0], g[1]]))
    sigma = scheme_length(ideal(g))
    x3 = _var(3, 2, n)
    on_line = scheme_length(ideal(g + [x3]))
    ok = (isinstance(ci, int) and isinstance(sigma, int) and ci == (d - 1) ** 2
          and on_line == 0 and ci - sigma == d - 2)
    return {
        "ci_length": ci if isinstance(ci, int) else str(ci),
        "sigma_length": sigma if isinstance(sigma, int) else str(sigma),
        "sigma_on_line": on_line if isinstance(on_line, int) else str(on_line),
        "line_piece": ci - sigma if ok or (isinstance(ci, int) and isinstance(sigma, int)) else None,
        "expected": expected_strange_count(d),
        "ok": ok,
    }


def strange_points(B: PlaneCurve, max_ext_degree: int = 12, seed: int = 0, certify: bool = True) -> StrangeLocus:
    """The critical scheme {grad B = 0} in P^2 with its points and multiplicities."""
    I = ideal(B.gradient())
    L = scheme_length(I)
    if L is NOT_ZERO_DIM:
        return StrangeLocus([], NOT_ZERO_DIM, False)
    pts = solve_zero_dim(I, seed=seed) if L else []
    out = []
    for sp in pts:
        ext = sp.field_n // B.n
        if ext > max_ext_degree:
            continue
        out.append((tuple(FieldElem(sp.field_n, v) for v in sp.coords), sp.multiplicity, ext, sp.orbit_size))
    cert = strange_certificate(B, seed) if certify else {}
    return StrangeLocus(out, L, True, cert)


# ---------------------------------------------------------------------------
# square decomposition
# ---------------------------------------------------------------------------

def decompose_square(B: PlaneCurve | MultiPoly):
    """B = q^2 + B' with B' spanned by x_i^3 x_j (i != j) and x_i x1 x2 x3."""
    P = B.B if isinstance(B, PlaneCurve) else B
    if P.nvars != 3 or (P.terms and P.homogeneous_degree() != 4):
        raise PolyError("decompose_square expects a plane quartic")
    even = {e: c for e, c in P.terms.items() if all(x % 2 == 0 for x in e)}
    rest = {e: c for e, c in P.terms.items() if e not in even}
    q = MultiPoly(3, even, P.n, 4, check=False).sqrt()
    q.hdeg = 2
    return q, MultiPoly(3, rest, P.n, 4, check=False)


# ---------------------------------------------------------------------------
# surfaces
# ---------------------------------------------------------------------------

def _lift_plane(B: MultiPoly) -> MultiPoly:
    return B.add_vars([Z])


def _plane_part(X: QuarticSurface) -> MultiPoly:
    """B(x): the z-free part of the equation."""
    t = {e[:3]: c for e, c in X.F.terms.items() if e[Z] == 0}
    return MultiPoly(3, t, X.F.n, 4, check=False)


def _z_part(X: QuarticSurface) -> MultiPoly:
    return MultiPoly(4, {e: c for e, c in X.F.terms.items() if e[Z]}, X.F.n, check=False)


def _surface(F: MultiPoly, tower_m: int | None) -> QuarticSurface:
    return QuarticSurface(F, field_make(tower_m) if tower_m else None)


def _B(B) -> MultiPoly:
    B = B.B if isinstance(B, PlaneCurve) else B
    if B.homogeneous_degree() != 4:
        raise PolyError("B must be a plane quartic")
    return B


def family_a3(B, m: int | None = None) -> QuarticSurface:
    B = _B(B)
    z = _var(4, Z, B.n)
    return _surface(z ** 4 + _lift_plane(B), m)


def family_special(B, m: int | None = None) -> QuarticSurface:
    B = _B(B)
    z = _var(4, Z, B.n)
    x1 = _var(4, 0, B.n)
    return _surface(z ** 4 + z.square() * x1.square() + _lift_plane(B), m)


def insep_conic(n: int = 1) -> MultiPoly:
    x1, x2, x3 = (_var(3, i, n) for i in range(3))
    return x1 * x2 + x3.square()


def family_insep(B, m: int | None = None) -> QuarticSurface:
    B = _B(B)
    z = _var(4, Z, B.n)
    return _surface(z.square() * _lift_plane(insep_conic(B.n)) + _lift_plane(B), m)


def dual_plane_conic(lam: FieldElem, n: int) -> MultiPoly:
    x1, x2, x3 = (_var(3, i, n) for i in range(3))
    return x1 * x2 + x3.square() * lam


def family_dual_plane(lam, B, m: int | None = None) -> QuarticSurface:
    B = _B(B)
    if not isinstance(lam, FieldElem):
        lam = FieldElem(B.n, int(lam))
    n = math.lcm(B.n, lam.n)
    B = B.lift(n)
    z = _var(4, Z, n)
    Q = dual_plane_conic(lam, n)
    return _surface(z ** 4 + z.square() * _lift_plane(Q) + _lift_plane(B), m)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass
class Verification:
    ok: bool
    diagnostics: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "diagnostics": self.diagnostics, "details": self.details}


def _normalize(pt):
    n = math.lcm(*(c.n for c in pt))
    vals = [embed(c.value, c.n, n) for c in pt]
    F = gf(n)
    k = next(i for i, v in enumerate(vals) if v)
    inv = F.inv(vals[k])
    return tuple(FieldElem(n, F.mul(v, inv)) for v in vals)


def _key(pt, n):
    return tuple(embed(c.value, c.n, n) for c in _normalize(pt))


def _safe_report(X, seed, diag):
    try:
        return find_singular_points(X, seed=seed)
    except NonNormalError as exc:
        diag.append(f"surface is not normal: {exc}")
    except CertificationError as exc:
        diag.append(f"certification failed: {exc}")
    return None


def _census(report) -> dict:
    kinds = {}
    for r in report.points:
        kinds[r.kind.value] = kinds.get(r.kind.value, 0) + r.orbit_size
    return {"points": report.geometric_count, "kinds": kinds, "total_length": report.total_length,
            "complete": report.complete}


def verify_a3(X: QuarticSurface, seed: int = 0) -> Verification:
    """Singular points biject with the strange points of B, each an A3 point."""
    diag = []
    B = PlaneCurve(_plane_part(X))
    sigma = strange_points(B, seed=seed)
    if not sigma.finite:
        return Verification(False, ["strange locus of B is not finite"])
    if not sigma.reduced:
        diag.append("strange locus of B is not reduced")
    rep = _safe_report(X, seed, diag)
    if rep is None:
        return Verification(False, diag)
    geo = rep.geometric_points()
    sig = sigma.geometric_points()
    n = math.lcm(*(c.n for p in sig for c in p), *(c.n for p, _ in geo for c in p)) if sig and geo else 1
    sig_keys = {_key(p, n) for p in sig}
    sing_keys = [_key(p[:3], n) for p, _ in geo]
    if len(set(sing_keys)) != len(sing_keys) or set(sing_keys) != sig_keys:
        diag.append("singular points do not project bijectively onto the strange points")
    for r in rep.points:
        if r.kind != Kind.BIPLANAR or r.defect != 4:
            diag.append(f"point {r.coords} is {r.kind.value} with defect {r.defect}, expected A3")
    if rep.geometric_count != 7:
        diag.append(f"{rep.geometric_count} singular points, expected 7")
    details = _census(rep)
    details["strange_points"] = sigma.geometric_count
    details["product"] = degree_ledger(rep).product if rep.complete else None
    return Verification(not diag, diag, details)


def verify_special(X: QuarticSurface, seed: int = 0) -> Verification:
    """Fourteen nodes, two above each of seven reduced strange points."""
    diag = []
    B = PlaneCurve(_plane_part(X))
    sigma = strange_points(B, seed=seed)
    if not sigma.finite:
        return Verification(False, ["strange locus of B is not finite"])
    if not sigma.reduced or sigma.geometric_count != 7:
        diag.append("strange locus is not 7 reduced points")
    sig = sigma.geometric_points()
    on_line = [p for p in sig if p[0].value == 0]
    if on_line:
        diag.append(f"the line x1 = 0 meets the strange locus in {len(on_line)} point(s)")
    rep = _safe_report(X, seed, diag)
    if rep is None:
        return Verification(False, diag)
    geo = rep.geometric_points()
    n = math.lcm(*(c.n for p in sig for c in p), *(c.n for p, _ in geo for c in p)) if sig and geo else 1
    above = {}
    for p, _ in geo:
        above.setdefault(_key(p[:3], n), []).append(p)
    for s in sig:
        k = _key(s, n)
        want = 1 if s[0].value == 0 else 2
        got = len(above.get(k, []))
        if got != want:
            diag.append(f"{got} singular points above strange point {[c.value for c in s]}, expected {want}")
    if rep.geometric_count != 14:
        diag.append(f"{rep.geometric_count} singular points, expected 14")
    if any(r.kind != Kind.NODE for r in rep.points):
        diag.append("not all singular points are nodes")
    details = _census(rep)
    if rep.complete:
        led = degree_ledger(rep)
        details["defect_sum"] = led.defect_sum
        details["product"] = led.product
        if led.defect_sum != 28:
            diag.append(f"defect sum {led.defect_sum}, expected 28")
    else:
        diag.append("singular locus report incomplete")
    return Verification(not diag, diag, details)


@dataclass
class InsepReport:
    base_locus: object
    L_length: object
    HB_length: object
    S_length: object
    S_residual: object
    disjoint: bool
    census: dict
    node_at_origin: bool
    product: object
    formula_product: object
    ok: bool
    diagnostics: list = dc_field(default_factory=list)

    def __bool__(self):
        return self.ok

    @property
    def lengths(self):
        return (self.base_locus, self.L_length, self.HB_length, self.S_length)

    def to_json(self) -> dict:
        def j(v):
            return v if isinstance(v, (int, bool)) or v is None else str(v)
        return {
            "lengths": {"base_locus": j(self.base_locus), "L": j(self.L_length), "HB": j(self.HB_length),
                        "S": j(self.S_length), "S_residual": j(self.S_residual)},
            "disjoint": self.disjoint,
            "census": self.census,
            "node_at_origin": self.node_at_origin,
            "product": j(self.product),
            "formula_product": j(self.formula_product),
            "ok": self.ok,
            "diagnostics": self.diagnostics,
        }


def insep_schemes(B: MultiPoly) -> dict:
    """The four plane schemes attached to z^2 Q + B with Q = x1 x2 + x3^2."""
    n = B.n
    Q = insep_conic(n)
    x1, x2, x3 = (_var(3, i, n) for i in range(3))
    B1, B2, B3 = B.gradient()
    g1 = B * x2 + B1 * Q
    g2 = B * x1 + B2 * Q
    return {
        "base_locus": ideal([Q, B]),
        "L": ideal([x3, g1, g2]),
        "HB": ideal([g1, g2, x3 * B3]),
        "S": ideal([g1, g2, B3]),
    }


def verify_insep(X: QuarticSurface, seed: int = 0) -> InsepReport:
    diag = []
    B = _plane_part(X)
    sch = insep_schemes(B)
    lens = {k: scheme_length(I) for k, I in sch.items()}
    both = scheme_length(sch["S"] + sch["L"])
    disjoint = both == 0
    residual = lens["HB"] - lens["L"] if all(isinstance(lens[k], int) for k in ("HB", "L")) else None
    if not disjoint:
        diag.append("the schemes L and S meet")
    if residual != lens["S"]:
        diag.append(f"residual length {residual} differs from the length of S ({lens['S']})")
    rep = _safe_report(X, seed, diag)
    census = {}
    node0 = False
    product = None
    if rep is not None:
        census = _census(rep)
        origin = (0, 0, 0, 1)
        for r in rep.points:
            if r.coords == origin or (r.field_n and tuple(c.value for c in _normalize(r.point)) == origin):
                node0 = r.kind == Kind.NODE
        if rep.complete:
            product = degree_ledger(rep).product
        if rep.geometric_count > 14:
            diag.append(f"{rep.geometric_count} singular points, more than 14")
        if rep.geometric_count == 14 and any(r.kind != Kind.NODE for r in rep.points):
            diag.append("14 singular points but not all nodes")
    if not node0:
        diag.append("x = 0 is not a node")
    formula = None
    if isinstance(lens["base_locus"], int) and isinstance(lens["S"], int):
        formula = 2 * (25 - lens["base_locus"] - lens["S"])
        if product is not None and formula != product:
            diag.append(f"degree-formula product {product} differs from 2(25 - base - S) = {formula}")
    return InsepReport(lens["base_locus"], lens["L"], lens["HB"], lens["S"], residual, disjoint,
                       census, node0, product, formula, not diag, diag)


def dual_plane_special_multiplicity(X: QuarticSurface, P=None):
    """Local intersection number of B3 and B1^2 + B1 x2 Q + B x2^2 at P' (default (1:0:0))."""
    B = _plane_part(X)
    n = X.F.n
    zq = _z_part(X)
    # Q(x) is the coefficient of z^2
    Q = MultiPoly(3, {e[:3]: c for e, c in zq.terms.items() if e[Z] == 2}, n, 2, check=False)
    B1, _, B3 = B.gradient()
    x2 = _var(3, 1, n)
    G = B1.square() + B1 * x2 * Q + B * x2.square()
    if P is None:
        P = (1, 0, 0)
    pts = [p.value if isinstance(p, FieldElem) else int(p) for p in P]
    if B3.evaluate(pts) or G.evaluate(pts):
        return 0
    f1, _ = B3.chart(pts, n)
    f2, _ = G.chart(pts, n)
    return local_colength(ideal([f1, f2], AFFINE), bound=18)


def verify_dual_plane(X: QuarticSurface, seed: int = 0, special: bool = False) -> Verification:
    """At most 14 singular points obeying the main-theorem predicates; dual is a plane.

    With special=True (lambda = 0, B = Klein + q^2) also demand exactly 14
    nodes and intersection number 4 at P' = (1:0:0).
    """
    diag = []
    kdim = len(dual_plane_kernel(X))
    if kdim != 1:
        diag.append(f"dual-plane kernel has dimension {kdim}")
    rep = _safe_report(X, seed, diag)
    details = {"kernel_dim": kdim}
    if rep is not None:
        details.update(_census(rep))
        cnt = rep.geometric_count
        if cnt > 14:
            diag.append(f"{cnt} singular points, more than 14")
        if cnt == 14 and any(r.kind != Kind.NODE for r in rep.points):
            diag.append("14 singular points but not all nodes")
        if rep.complete:
            led = degree_ledger(rep)
            details["product"] = led.product
            if not led.bound_ok:
                diag.append("degree bound violated")
        if special:
            mult = dual_plane_special_multiplicity(X)
            details["p_prime_multiplicity"] = mult if isinstance(mult, int) else str(mult)
            if mult != 4:
                diag.append(f"intersection multiplicity at P' is {mult}, expected 4")
            elif cnt != 18 - mult:
                diag.append(f"{cnt} singular points, expected 18 - {mult}")
            if cnt != 14 or any(r.kind != Kind.NODE for r in rep.points):
                diag.append("special instance does not have 14 nodes")
    return Verification(not diag, diag, details)


def map_degree_check(B: PlaneCurve, samples: int = 4, seed: int = 0):
    """Generic fibre size of x -> grad B(x), sampled at random image points.

    Returns the list of fibre sizes (points off the base locus).  This is an
    optional numerical check, not a certificate.
    """
    rng = random.Random(seed)
    n = B.n
    while n < 8:
        n += B.n
    F = gf(n)
    g = [p.lift(n) for p in B.gradient()]
    sizes = []
    for _ in range(samples):
        x0 = [F.random(rng) for _ in range(3)]
        y = [p.evaluate(x0, n) for p in g]
        if not any(y):
            continue
        # fibre: g_i * y_j - g_j * y_i = 0, minus the base locus
        eqs = []
        for i in range(3):
            for j in range(i + 1, 3):
                eqs.append(g[i].scale(y[j]) + g[j].scale(y[i]))
        I = ideal(eqs)
        L = scheme_length(I)
        base = scheme_length(ideal(g))
        if isinstance(L, int) and isinstance(base, int):
            sizes.append(L - base)
    return sizes
