"""Singular points of quartic surfaces in characteristic 2.

A surface is F = 0 with F a quartic form in x0..x3 over a field tower.  The
singular scheme is cut out by (F, dF/dx0, ..., dF/dx3); its points are found
exactly (see ``algebra.ideals.solve_zero_dim``) and every point is then
studied in the affine chart of its first nonzero coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
import math
import random

from .algebra.field import FieldElem, FieldTower, embed, field_make, gf
from .algebra.ideals import AFFINE, ideal, local_colength, scheme_length, solve_zero_dim
from .algebra.poly import MultiPoly
from .errors import (
    INFINITE, NOT_ZERO_DIM, CertificationError, NonNormalError, NotSingularError, PolyError,
)

DEFAULT_CAP = 40
BEZOUT_MASS = 36
# random coordinate changes are drawn from a field with at least this many bits
_GENERIC_BITS = 6


class Kind(str, Enum):
    NODE = "Node"
    BIPLANAR = "Biplanar"
    UNIPLANAR = "Uniplanar"
    TRIPLE_OR_WORSE = "TripleOrWorse"


class RDPStatus(str, Enum):
    RDP = "RDP"
    RDP_BY_DEFECT = "RDP_BY_DEFECT"
    UNKNOWN = "UNKNOWN"


class QuarticSurface:
    """X = {F = 0} in P^3 with F a quartic form over GF(2^m)-tower coefficients."""

    def __init__(self, F: MultiPoly, tower: FieldTower | None = None):
        if F.nvars != 4:
            raise PolyError("a quartic surface needs 4 variables")
        if F.is_zero():
            raise PolyError("F is zero")
        if not F.is_homogeneous() or F.degree() != 4:
            raise PolyError("F must be a quartic form")
        if F.is_square():
            raise PolyError("F is the square of a quadric; the surface is not reduced")
        if tower is None:
            tower = field_make(F.n)
        if F.n % tower.m:
            raise PolyError(f"coefficients in GF(2^{F.n}) do not lie in the tower over GF(2^{tower.m})")
        self.F = MultiPoly(4, F.terms, F.n, 4, check=False)
        self.tower = tower

    @property
    def gradient(self):
        return self.F.gradient()

    def singular_ideal(self):
        return ideal([self.F] + self.gradient)

    def __repr__(self):
        return f"QuarticSurface({self.F!r})"


@dataclass
class SingularPointRecord:
    point: tuple
    ext_degree: int
    orbit_size: int
    kind: Kind
    defect: object
    local_length: object
    rdp_status: RDPStatus
    an_index: int | None = None
    defect_trials: list = dc_field(default_factory=list)
    defect_stable: bool = True

    @property
    def coords(self) -> tuple:
        return tuple(c.value for c in self.point)

    @property
    def field_n(self) -> int:
        return self.point[0].n

    def to_json(self) -> dict:
        return {
            "point": [format(c.value, "x") for c in self.point],
            "field_n": self.field_n,
            "ext_degree": self.ext_degree,
            "orbit_size": self.orbit_size,
            "kind": self.kind.value,
            "an_index": self.an_index,
            "defect": _num(self.defect),
            "defect_trials": [_num(d) for d in self.defect_trials],
            "defect_stable": self.defect_stable,
            "local_length": _num(self.local_length),
            "rdp_status": self.rdp_status.value,
        }


def _num(v):
    return v if isinstance(v, int) else str(v)


@dataclass
class SingularLocusReport:
    points: list
    total_length: int
    complete: bool
    nu: int
    b: int
    u: int
    missing_length: int = 0

    @property
    def geometric_count(self) -> int:
        return sum(p.orbit_size for p in self.points)

    def geometric_points(self):
        """Every geometric point (expanding Galois orbits) with its record."""
        out = []
        for rec in self.points:
            n = rec.field_n
            F = gf(n)
            cur = [c.value for c in rec.point]
            base = n // rec.orbit_size
            for _ in range(rec.orbit_size):
                out.append((tuple(FieldElem(n, v) for v in cur), rec))
                cur = [F.frobenius(v, base) for v in cur]
        return out

    def to_json(self) -> dict:
        return {
            "points": [p.to_json() for p in self.points],
            "geometric_count": self.geometric_count,
            "total_length": self.total_length,
            "complete": self.complete,
            "nu": self.nu,
            "b": self.b,
            "u": self.u,
        }


# ---------------------------------------------------------------------------
# local analysis
# ---------------------------------------------------------------------------

def classify_quadratic_form(q: MultiPoly) -> Kind:
    """Type of a double point from the quadratic part q(u0,u1,u2) of its local equation."""
    if q.is_zero():
        return Kind.TRIPLE_OR_WORSE
    c = q.terms
    a = c.get((1, 1, 0), 0)
    b = c.get((1, 0, 1), 0)
    cc = c.get((0, 1, 1), 0)
    if not (a or b or cc):
        return Kind.UNIPLANAR
    # kernel of the alternating matrix [[0,a,b],[a,0,c],[b,c,0]]
    s = (cc, b, a)
    return Kind.NODE if q.evaluate(s, q.n) else Kind.BIPLANAR


def _local_equation(X: QuarticSurface, point, n: int):
    pts = [p.value if isinstance(p, FieldElem) else int(p) for p in point]
    f, k = X.F.chart(pts, n)
    return f, k


def _check_singular(X: QuarticSurface, pts, n: int):
    for g in [X.F] + X.gradient:
        if g.evaluate(pts, n):
            raise NotSingularError("point is not a singular point of the surface")


def _point_field(point):
    if all(isinstance(p, FieldElem) for p in point):
        n = math.lcm(*(p.n for p in point))
        return [embed(p.value, p.n, n) for p in point], n
    raise PolyError("points are given as FieldElem coordinates")


def classify_quadric_part(X: QuarticSurface, P) -> Kind:
    pts, n = _point_field(P)
    nn = math.lcm(n, X.F.n)
    pts = [embed(v, n, nn) for v in pts]
    _check_singular(X, pts, nn)
    f, _ = _local_equation(X, pts, nn)
    return classify_quadratic_form(f.part(2))


def _generic_field(n: int) -> int:
    k = 1
    while n * k < _GENERIC_BITS:
        k += 1
    return n * k


def local_defect(f: MultiPoly, trials: int = 3, rng: random.Random | None = None,
                 cap: int = DEFAULT_CAP, bound: int | None = None):
    """(min over trials, trial values) of dim O/(f, f_y, f_z) for generic
    affine coordinates (x, y, z) centred at the origin."""
    if rng is None:
        rng = random.Random(0)
    if f.terms.get((0,) * f.nvars):
        raise NotSingularError("local equation does not vanish at the origin")
    n = _generic_field(f.n)
    f = f.lift(n)
    F = gf(n)
    grad = f.gradient()
    values = []
    for _ in range(trials):
        gens = [f]
        while True:
            dirs = [[F.random(rng) for _ in range(f.nvars)] for _ in range(2)]
            if _independent(F, dirs):
                break
        for d in dirs:
            g = MultiPoly.zero(f.nvars, n)
            for c, gi in zip(d, grad):
                if c:
                    g = g + gi.scale(c)
            gens.append(g)
        values.append(local_colength(ideal(gens, AFFINE), cap=cap, bound=bound))
    finite = [v for v in values if v is not INFINITE]
    return (min(finite) if finite else INFINITE), values


def _independent(F, rows) -> bool:
    from .algebra import linalg as la
    return la.rank(F, rows) == len(rows)


def gaussian_defect(X: QuarticSurface, P, trials: int = 3, seed: int = 0, cap: int = DEFAULT_CAP):
    """The Gaussian defect (F, F_1, F_2)_P, minimised over random coordinates."""
    pts, n = _point_field(P)
    nn = math.lcm(n, X.F.n)
    pts = [embed(v, n, nn) for v in pts]
    _check_singular(X, pts, nn)
    f, _ = _local_equation(X, pts, nn)
    d, vals = local_defect(f, trials, random.Random(seed), cap, BEZOUT_MASS)
    if d is INFINITE:
        raise CertificationError("Gaussian defect is infinite for every trial")
    return d


def local_singular_length(X: QuarticSurface, pts, n: int, cap: int = DEFAULT_CAP, bound=None):
    f, k = _local_equation(X, pts, n)
    gens = [f] + f.gradient()
    return local_colength(ideal(gens, AFFINE), cap=cap, bound=bound)


def rdp_status(kind: Kind, defect) -> RDPStatus:
    if kind in (Kind.NODE, Kind.BIPLANAR):
        return RDPStatus.RDP
    if kind == Kind.UNIPLANAR and isinstance(defect, int) and defect <= 9:
        return RDPStatus.RDP_BY_DEFECT
    return RDPStatus.UNKNOWN


def an_index(record: SingularPointRecord) -> int:
    if record.kind not in (Kind.NODE, Kind.BIPLANAR):
        raise ValueError(f"A_n index is defined for nodes and biplanar points, not {record.kind.value}")
    if not isinstance(record.defect, int):
        raise ValueError("defect is not finite")
    return record.defect - 1


# ---------------------------------------------------------------------------
# the global search
# ---------------------------------------------------------------------------

def singular_locus_is_finite(X: QuarticSurface, seed: int = 0, planes: int = 3) -> bool:
    """True when some random plane misses Sing(X) (then Sing(X) is finite).

    A positive-dimensional singular locus meets every plane, so `planes`
    failures in a row are taken as evidence of a curve of singularities.
    """
    rng = random.Random(seed ^ 0x5EED)
    n = X.F.n
    while n < 8:
        n += X.F.n
    F = gf(n)
    gens = [g.lift(n) for g in [X.F] + X.gradient]
    for _ in range(planes):
        h = [F.random(rng) for _ in range(3)]
        # x3 = h0 x0 + h1 x1 + h2 x2
        subs = [MultiPoly.var(4, i, n) for i in range(3)]
        subs.append(MultiPoly(4, {(1, 0, 0, 0): h[0], (0, 1, 0, 0): h[1], (0, 0, 1, 0): h[2]}, n, 1))
        restricted = []
        for g in gens:
            r = g.compose(subs)
            if not r.is_zero():
                restricted.append(r.drop_var(3))
        if not restricted:
            continue
        L = scheme_length(ideal(restricted))
        if L == 0:
            return True
    return False


def find_singular_points(X: QuarticSurface, max_ext_degree: int = 12, seed: int = 0,
                         trials: int = 3, cap: int = DEFAULT_CAP) -> SingularLocusReport:
    """All geometric singular points of X over extensions of degree <= max_ext_degree."""
    if not singular_locus_is_finite(X, seed):
        raise NonNormalError("singular locus is positive dimensional; X is not normal")
    I = X.singular_ideal()
    total = scheme_length(I)
    if total is NOT_ZERO_DIM:
        raise NonNormalError("singular locus is positive dimensional; X is not normal")
    pts = solve_zero_dim(I, seed=seed)
    m = X.tower.m
    rng = random.Random(seed)
    records = []
    missing = 0
    for sp in pts:
        level = sp.field_n // m if sp.field_n % m == 0 else sp.field_n
        if level > max_ext_degree:
            missing += sp.orbit_size * sp.multiplicity
            continue
        n = sp.field_n
        coords = list(sp.coords)
        f, _ = _local_equation(X, coords, n)
        llen = local_colength(ideal([f] + f.gradient(), AFFINE), cap=cap, bound=total)
        kind = classify_quadratic_form(f.part(2))
        defect, vals = local_defect(f, trials, rng, cap, BEZOUT_MASS)
        stable = len(set(map(str, vals))) == 1
        rec = SingularPointRecord(
            point=tuple(FieldElem(n, v) for v in coords),
            ext_degree=level,
            orbit_size=sp.orbit_size,
            kind=kind,
            defect=defect,
            local_length=llen,
            rdp_status=rdp_status(kind, defect),
            defect_trials=vals,
            defect_stable=stable,
        )
        if kind in (Kind.NODE, Kind.BIPLANAR) and isinstance(defect, int):
            rec.an_index = defect - 1
        records.append(rec)
    lengths_ok = all(isinstance(r.local_length, int) for r in records)
    summed = sum(r.orbit_size * r.local_length for r in records) if lengths_ok else None
    complete = missing == 0 and summed == total
    double = [r for r in records if r.kind != Kind.TRIPLE_OR_WORSE]
    return SingularLocusReport(
        points=records,
        total_length=total,
        complete=complete,
        nu=sum(r.orbit_size for r in double),
        b=sum(r.orbit_size for r in records if r.kind == Kind.BIPLANAR),
        u=sum(r.orbit_size for r in records if r.kind == Kind.UNIPLANAR),
        missing_length=missing,
    )


def surface(F: MultiPoly, m: int | None = None) -> QuarticSurface:
    return QuarticSurface(F, field_make(m) if m else None)
