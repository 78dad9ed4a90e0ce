"""Integral lattices spanned by a hyperplane class, exceptional ADE curves and lines.

Purely numerical: a class here is an integer vector and nothing tracks
whether it is effective, nef on the surface, or moves in a pencil.
``reflect_reduce`` is the numerical shadow of removing fixed components by
reflections in (-2)-curves.
"""

from __future__ import annotations

from dataclasses import dataclass
import re

import numpy as np

from . import kodaira
from .errors import LatticeError

_ADE = re.compile(r"^([ADE])(\d+)$")


def cartan(kind: str) -> np.ndarray:
    """Cartan matrix, Bourbaki labelling for E (e1 attached to e4)."""
    m = _ADE.match(kind)
    if not m:
        raise LatticeError(f"unknown root system {kind!r}")
    t, n = m.group(1), int(m.group(2))
    if (t == "A" and n < 1) or (t == "D" and n < 4) or (t == "E" and n not in (6, 7, 8)):
        raise LatticeError(f"unknown root system {kind!r}")
    C = 2 * np.eye(n, dtype=np.int64)
    edges = []
    if t == "A":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif t == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    else:
        # e1-e3, e3-e4, e2-e4, e4-e5, ...
        edges = [(0, 2), (2, 3), (1, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    for i, j in edges:
        C[i, j] = C[j, i] = -1
    return C


def leading_minors(M) -> list[int]:
    """Leading principal minors of an integer matrix (fraction-free Bareiss)."""
    A = [[int(x) for x in row] for row in np.asarray(M)]
    n = len(A)
    out = []
    prev = 1
    for k in range(n):
        if A[k][k] == 0:
            # the minor is zero; the remaining ones are not needed for definiteness
            out.append(0)
            out += [None] * (n - k - 1)
            return out
        out.append(A[k][k])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return out


def is_negative_definite(G) -> bool:
    G = np.asarray(G)
    if G.shape[0] == 0:
        return True
    return all(m is not None and m > 0 for m in leading_minors(-G))


@dataclass
class LatticeBasis:
    labels: list
    gram: np.ndarray
    kinds: dict | None = None

    def __post_init__(self):
        self.gram = np.asarray(self.gram, dtype=np.int64)
        k = len(self.labels)
        if self.gram.shape != (k, k):
            raise LatticeError("gram matrix does not match the labels")
        if not np.array_equal(self.gram, self.gram.T):
            raise LatticeError("gram matrix is not symmetric")
        if len(set(self.labels)) != k:
            raise LatticeError("labels must be distinct")
        if self.kinds is None:
            self.kinds = {}

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        return self.labels.index(label)

    def vector(self, coeffs: dict) -> "DivisorClass":
        v = np.zeros(self.rank, dtype=np.int64)
        for lab, c in coeffs.items():
            v[self.index(lab)] += c
        return DivisorClass(self, v)

    def basis_class(self, label) -> "DivisorClass":
        return self.vector({label: 1})

    def is_even(self) -> bool:
        return not np.any(np.diag(self.gram) % 2)

    def labels_of(self, kind: str) -> list:
        return [l for l in self.labels if self.kinds.get(l) == kind]

    def exceptional_negative_definite(self) -> bool:
        idx = [i for i, l in enumerate(self.labels) if self.kinds.get(l) == "exceptional"]
        return is_negative_definite(self.gram[np.ix_(idx, idx)])

    def check(self) -> list[str]:
        """Violated structural invariants (empty when consistent)."""
        bad = []
        G = self.gram
        for i, l in enumerate(self.labels):
            kind = self.kinds.get(l)
            if kind == "hyperplane" and G[i, i] != 4:
                bad.append(f"{l}^2 = {G[i, i]}")
            if kind in ("exceptional", "line") and G[i, i] != -2:
                bad.append(f"{l}^2 = {G[i, i]}")
            for j, l2 in enumerate(self.labels):
                if kind == "hyperplane" and self.kinds.get(l2) == "exceptional" and G[i, j]:
                    bad.append(f"{l}.{l2} = {G[i, j]}")
                if kind == "hyperplane" and self.kinds.get(l2) == "line" and G[i, j] != 1:
                    bad.append(f"{l}.{l2} = {G[i, j]}")
        if not self.is_even():
            bad.append("lattice is not even")
        if not self.exceptional_negative_definite():
            bad.append("exceptional span is not negative definite")
        return bad

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "kinds": [self.kinds.get(l) for l in self.labels],
                "gram": self.gram.tolist()}

    @classmethod
    def from_json(cls, d: dict) -> "LatticeBasis":
        labels = list(d["labels"])
        kinds = dict(zip(labels, d.get("kinds") or [None] * len(labels)))
        return cls(labels, np.array(d["gram"], dtype=np.int64), kinds)


def build_basis(ade=(), lines=0, incidences=None, line_pairs=None, hyperplane=True) -> LatticeBasis:
    """H, exceptional curves C{i}_{j} for the i-th ADE block, and lines L{k}.

    ``incidences`` maps (k, "C{i}_{j}") to L_k . C; ``line_pairs`` maps (k, l)
    to L_k . L_l.
    """
    labels, kinds = [], {}
    if hyperplane:
        labels.append("H")
        kinds["H"] = "hyperplane"
    blocks = []
    for i, kind in enumerate(ade):
        C = cartan(kind)
        names = [f"C{i}_{j}" for j in range(C.shape[0])]
        blocks.append((names, C))
        for nm in names:
            kinds[nm] = "exceptional"
        labels += names
    lnames = [f"L{k}" for k in range(lines)]
    for nm in lnames:
        kinds[nm] = "line"
    labels += lnames
    G = np.zeros((len(labels), len(labels)), dtype=np.int64)
    pos = {l: i for i, l in enumerate(labels)}
    if hyperplane:
        G[0, 0] = 4
        for nm in lnames:
            G[0, pos[nm]] = G[pos[nm], 0] = 1
    for names, C in blocks:
        idx = [pos[n] for n in names]
        G[np.ix_(idx, idx)] = -C
    for nm in lnames:
        G[pos[nm], pos[nm]] = -2
    for (k, c), v in (incidences or {}).items():
        a, b = pos[f"L{k}"], pos[c]
        G[a, b] = G[b, a] = v
    for (k, l), v in (line_pairs or {}).items():
        a, b = pos[f"L{k}"], pos[f"L{l}"]
        G[a, b] = G[b, a] = v
    return LatticeBasis(labels, G, kinds)


@dataclass
class DivisorClass:
    basis: LatticeBasis
    coords: np.ndarray

    def __post_init__(self):
        self.coords = np.asarray(self.coords, dtype=np.int64)
        if self.coords.shape != (self.basis.rank,):
            raise LatticeError("coordinate vector has the wrong length")

    def _same(self, other):
        if other.basis is not self.basis and (other.basis.labels != self.basis.labels
                                              or not np.array_equal(other.basis.gram, self.basis.gram)):
            raise LatticeError("classes live in different lattices")

    def __add__(self, other):
        self._same(other)
        return DivisorClass(self.basis, self.coords + other.coords)

    def __sub__(self, other):
        self._same(other)
        return DivisorClass(self.basis, self.coords - other.coords)

    def __neg__(self):
        return DivisorClass(self.basis, -self.coords)

    def __rmul__(self, k: int):
        return DivisorClass(self.basis, int(k) * self.coords)

    def __eq__(self, other):
        return isinstance(other, DivisorClass) and self.basis.labels == other.basis.labels \
            and np.array_equal(self.coords, other.coords)

    def as_dict(self) -> dict:
        return {l: int(c) for l, c in zip(self.basis.labels, self.coords) if c}

    def __repr__(self):
        return "DivisorClass(" + " + ".join(f"{c}*{l}" for l, c in self.as_dict().items()) + ")"

    def to_json(self) -> dict:
        return {"coords": self.coords.tolist()}


def pair(D: DivisorClass, E: DivisorClass) -> int:
    D._same(E)
    return int(D.coords @ D.basis.gram @ E.coords)


def self_int(D: DivisorClass) -> int:
    return pair(D, D)


def fundamental_cycle(basis: LatticeBasis, curves) -> DivisorClass:
    """Smallest nonzero Z on the given curves with Z.C <= 0 for all of them."""
    Z = basis.vector({c: 1 for c in curves})
    Cs = [basis.basis_class(c) for c in curves]
    for _ in range(10000):
        hit = next((C for C in Cs if pair(Z, C) > 0), None)
        if hit is None:
            return Z
        Z = Z + hit
    raise LatticeError("configuration is not negative definite")


def reflect_reduce(D: DivisorClass, minus_two_classes, cap: int = 10000) -> DivisorClass:
    """Apply D <- D + (D.E) E while some listed E has D.E < 0."""
    if self_int(D) != 0:
        raise LatticeError("reflect_reduce needs D^2 = 0")
    Es = list(minus_two_classes)
    for E in Es:
        if self_int(E) != -2:
            raise LatticeError("reflections need (-2)-classes")
    for _ in range(cap):
        hit = next((E for E in Es if pair(D, E) < 0), None)
        if hit is None:
            return D
        D = D + pair(D, hit) * hit
    raise LatticeError("reflection reduction did not terminate")


def shioda_tate_lower(fiber_list, has_section: bool = True) -> int:
    """2 + sum (m_v - 1) for a fibration with a section, else 0."""
    total = 2
    for kind in fiber_list:
        total += kodaira.fiber_table(kind).m - 1
    return total if has_section else 0


def ade_of_point(kind: str, defect) -> str | None:
    """Root system of a singular point when its kind and defect pin it down."""
    if kind == "Node":
        return "A1"
    if kind == "Biplanar" and isinstance(defect, int) and defect >= 3:
        return f"A{defect - 1}"
    return None


def lattice_from_report(report) -> dict:
    """Lattice spanned by H and the exceptional curves of the geometric singular points."""
    ade, skipped = [], 0
    for _, rec in report.geometric_points():
        t = ade_of_point(rec.kind.value if hasattr(rec.kind, "value") else rec.kind, rec.defect)
        if t is None:
            skipped += 1
        else:
            ade.append(t)
    B = build_basis(ade)
    out = {
        "ade": ade,
        "unresolved_points": skipped,
        "rank": B.rank,
        "even": B.is_even(),
        "exceptional_negative_definite": B.exceptional_negative_definite(),
        "violations": B.check(),
    }
    if len(ade) >= 2:
        blocks = [[l for l in B.labels if l.startswith(f"C{i}_")] for i in range(2)]
        D1, D2 = (fundamental_cycle(B, b) for b in blocks)
        E = B.basis_class("H") - D1 - D2
        out["isotropic_check"] = {"D1^2": self_int(D1), "D2^2": self_int(D2), "(H-D1-D2)^2": self_int(E)}
    return out
