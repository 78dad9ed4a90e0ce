"""Degree bookkeeping for the Gauss map, the dual-plane test and the
incidence combinatorics of singular point sets.

The Gauss map x -> grad F(x) has deg(gamma) * deg(X dual) = 36 minus the sum of
the Gaussian defects.  Only this product is computed; the two factors are
separated only when the dual is a plane (deg = 1).  The formula presumes a
line in the dual space transversal to the Gauss map, which is not certified
here (``transversality_certified`` stays False).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
import math

import numpy as np

from .algebra import linalg as la
from .algebra.field import FieldElem, embed, gf
from .algebra.poly import monomials
from .errors import NOT_APPLICABLE, Char2Error
from .singularities import BEZOUT_MASS, QuarticSurface, SingularLocusReport


class IncompleteReportError(Char2Error):
    pass


@dataclass
class DegreeLedger:
    defect_sum: int
    product: int
    nu: int
    b: int
    u: int
    bound_ok: bool
    transversality_certified: bool = False

    def to_json(self) -> dict:
        return {
            "defect_sum": self.defect_sum,
            "product": self.product,
            "nu": self.nu,
            "b": self.b,
            "u": self.u,
            "bound_ok": self.bound_ok,
            "transversality_certified": self.transversality_certified,
        }


def degree_ledger(report: SingularLocusReport) -> DegreeLedger:
    if not report.complete:
        raise IncompleteReportError("degree ledger needs a complete singular locus report")
    if any(not isinstance(p.defect, int) for p in report.points):
        raise IncompleteReportError("some Gaussian defect is not finite")
    s = sum(p.orbit_size * p.defect for p in report.points)
    product = BEZOUT_MASS - s
    rhs = 2 * report.nu + report.b + 6 * report.u
    return DegreeLedger(s, product, report.nu, report.b, report.u, product <= BEZOUT_MASS - rhs)


def dual_plane_kernel(X: QuarticSurface) -> list[tuple[FieldElem, ...]]:
    """Basis of {c : sum c_i dF/dx_i = 0}."""
    F = gf(X.F.n)
    mons = monomials(4, 3)
    pos = {e: i for i, e in enumerate(mons)}
    A = np.zeros((len(mons), 4), dtype=F.dtype)
    for i, g in enumerate(X.gradient):
        for e, c in g.terms.items():
            A[pos[e], i] = c
    N = la.nullspace(F, A)
    return [tuple(FieldElem(X.F.n, int(v)) for v in N[:, j]) for j in range(N.shape[1])]


def gauss_degree_if_dual_plane(ledger: DegreeLedger, kernel_dim: int):
    """deg(gamma) when the dual variety is a plane, else NOT_APPLICABLE."""
    return ledger.product if kernel_dim == 1 else NOT_APPLICABLE


@dataclass
class ConfigurationReport:
    lines: list
    max_collinear: int
    max_coplanar: int
    companion_pairs: list
    has_point_with_two_companions: bool
    violations: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "lines": [{"points": list(l), "count": len(l)} for l in self.lines],
            "max_collinear": self.max_collinear,
            "max_coplanar": self.max_coplanar,
            "companion_pairs": [list(p) for p in self.companion_pairs],
            "has_point_with_two_companions": self.has_point_with_two_companions,
            "violations": self.violations,
        }


def _common_field(points):
    n = math.lcm(*(c.n for p in points for c in p)) if points else 1
    return n, [[embed(c.value, c.n, n) for c in p] for p in points]


def _det3(F, a, b, c):
    m = F.mul
    return (m(a[0], m(b[1], c[2]) ^ m(b[2], c[1])) ^ m(a[1], m(b[0], c[2]) ^ m(b[2], c[0]))
            ^ m(a[2], m(b[0], c[1]) ^ m(b[1], c[0])))


_TRIPLES = [(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)]


def configuration_report(points) -> ConfigurationReport:
    """Lines and planes spanned by a set of distinct projective points."""
    pts = [tuple(p) for p in points]
    n, rows = _common_field(pts)
    F = gf(n)
    k = len(pts)

    def dot(u, v):
        acc = 0
        for x, y in zip(u, v):
            acc ^= F.mul(x, y)
        return acc

    def collinear(i, j, l):
        # rank < 3 iff every 3x3 minor of the three rows vanishes
        a, b, c = rows[i], rows[j], rows[l]
        return not any(_det3(F, [a[t] for t in T], [b[t] for t in T], [c[t] for t in T]) for T in _TRIPLES)

    for i, j in combinations(range(k), 2):
        a, b = rows[i], rows[j]
        if not any(F.mul(a[s], b[t]) ^ F.mul(a[t], b[s]) for s, t in combinations(range(4), 2)):
            raise ValueError("points must be pairwise distinct")

    lines = {}
    for i, j in combinations(range(k), 2):
        if any(i in l and j in l for l in lines):
            continue
        members = frozenset([i, j] + [l for l in range(k) if l not in (i, j) and collinear(i, j, l)])
        lines[members] = True
    line_list = sorted((tuple(sorted(l)) for l in lines), key=lambda l: (-len(l), l))
    max_col = max((len(l) for l in line_list), default=min(k, 1))
    on_line = {}
    for l in line_list:
        for a, b in combinations(l, 2):
            on_line[a, b] = l
    max_cop = 0
    planes = []
    for a, b, c in combinations(range(k), 3):
        if c in on_line[a, b] or any(a in q and b in q and c in q for q in planes):
            continue
        A, B, C = rows[a], rows[b], rows[c]
        normal = [_det3(F, [A[t] for t in T], [B[t] for t in T], [C[t] for t in T]) for T in _TRIPLES]
        members = frozenset(i for i in range(k) if dot(normal, rows[i]) == 0)
        planes.append(members)
        max_cop = max(max_cop, len(members))
    if not planes:
        max_cop = k
    companions = [l for l in line_list if len(l) == 2]
    counts = {}
    for a, b in companions:
        counts[a] = counts.get(a, 0) + 1
        counts[b] = counts.get(b, 0) + 1
    violations = []
    if max_col >= 4:
        violations.append(f"{max_col} collinear points")
    if max_cop > 6:
        violations.append(f"{max_cop} coplanar points")
    return ConfigurationReport(
        lines=line_list,
        max_collinear=max_col,
        max_coplanar=max_cop,
        companion_pairs=companions,
        has_point_with_two_companions=any(v >= 2 for v in counts.values()),
        violations=violations,
    )


def report_configuration(report: SingularLocusReport) -> ConfigurationReport:
    return configuration_report([p for p, _ in report.geometric_points()])
