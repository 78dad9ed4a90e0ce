"""Seeded surfaces shared by the acceptance suite and the property tests."""

import random

import numpy as np

from char2quartic import families as fam
from char2quartic.algebra import linalg as la
from char2quartic.algebra.field import FieldElem, gf
from char2quartic.algebra.poly import MultiPoly, monomials
from char2quartic.singularities import QuarticSurface

MONS = monomials(4, 4)


def _conditions(F, P):
    """Rows expressing F(P) = 0 and grad F(P) = 0 for a rational point P."""
    rows = []
    def mono(e, skip=None):
        v = 1
        for i, k in enumerate(e):
            if i == skip:
                k -= 1
            if k < 0:
                return 0
            v = F.mul(v, F.pow(P[i], k)) if k else v
        return v
    rows.append([mono(e) for e in MONS])
    for i in range(4):
        rows.append([mono(e, i) if e[i] % 2 else 0 for e in MONS])
    return rows


def forced_quartic(m: int, k: int, seed: int) -> QuarticSurface:
    """Random quartic over GF(2^m) singular at k random rational points."""
    F = gf(m)
    rng = random.Random(seed)
    while True:
        pts = []
        while len(pts) < k:
            P = [F.random(rng) for _ in range(4)]
            if any(P):
                pts.append(P)
        rows = [r for P in pts for r in _conditions(F, P)]
        A = np.array(rows, dtype=F.dtype).reshape(len(rows), len(MONS)) if rows else np.zeros((0, len(MONS)), dtype=F.dtype)
        N = la.nullspace(F, A) if rows else np.eye(len(MONS), dtype=F.dtype)
        if N.shape[1] == 0:
            continue
        c = np.array([F.random(rng) for _ in range(N.shape[1])], dtype=F.dtype)
        coeffs = la.matvec(F, N, c)
        P = MultiPoly(4, {e: int(v) for e, v in zip(MONS, coeffs)}, m, 4)
        try:
            return QuarticSurface(P)
        except Exception:
            continue


def random_quartic(m: int, seed: int) -> QuarticSurface:
    return QuarticSurface(MultiPoly.random_form(4, 4, m, random.Random(seed)))


def family_members():
    """(label, surface) for the named families over several fields and seeds."""
    out = []
    for m in (1, 2, 3):
        B = fam.klein_form(2, m)
        out.append((f"a3-m{m}", fam.family_a3(B, m)))
        out.append((f"special-m{m}", fam.family_special(B, m)))
    for m in (2, 3, 4):
        for seed in range(6):
            B = fam.general_quartic(m, seed)
            out.append((f"insep-m{m}-s{seed}", fam.family_insep(B, m)))
            for lam in (0, 1, 2):
                if lam < 1 << m:
                    out.append((f"dual-m{m}-s{seed}-l{lam}", fam.family_dual_plane(FieldElem(m, lam), B, m)))
    return out


def corpus(size: int = 200):
    items = family_members()
    seed = 0
    while len(items) < size:
        m = 1 + seed % 3
        k = seed % 9
        if seed % 4 == 3:
            items.append((f"random-m{m}-s{seed}", random_quartic(m, seed)))
        else:
            items.append((f"forced{k}-m{m}-s{seed}", forced_quartic(m, k, seed)))
        seed += 1
    return items
