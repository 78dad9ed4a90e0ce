"""Ideals given by generators: Hilbert functions, scheme lengths, local
colengths and the points of zero-dimensional projective schemes.

Everything is reduced to ranks of Macaulay matrices (rows mu*g written in the
monomial basis of a fixed degree, columns in descending grevlex order).
"""

from __future__ import annotations

from dataclasses import dataclass
import math
import random

import numpy as np

from ..errors import CertificationError, INFINITE, NOT_ZERO_DIM, PolyError
from .field import embed, gf, minimal_subfield, restrict
from . import linalg as la
from .poly import MultiPoly, monomials
from .upoly import uni_roots

PROJECTIVE = "projective"
AFFINE = "affine"


@dataclass(frozen=True)
class IdealPresentation:
    generators: tuple
    chart: str = PROJECTIVE

    def __init__(self, generators, chart: str = PROJECTIVE):
        gens = [g for g in generators]
        if not gens:
            raise PolyError("an ideal needs at least one generator (use the zero polynomial)")
        nv = gens[0].nvars
        if any(g.nvars != nv for g in gens):
            raise PolyError("generators must share the number of variables")
        if chart not in (PROJECTIVE, AFFINE):
            raise PolyError(f"unknown chart {chart!r}")
        n = math.lcm(*(g.n for g in gens))
        gens = tuple(g.lift(n) for g in gens if not g.is_zero())
        if chart == PROJECTIVE and any(not g.is_homogeneous() for g in gens):
            raise PolyError("projective ideals need homogeneous generators")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "chart", chart)
        object.__setattr__(self, "_nvars", nv)
        object.__setattr__(self, "_n", n)

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def n(self) -> int:
        return self._n

    def lift(self, n: int) -> "IdealPresentation":
        return IdealPresentation([g.lift(n) for g in self.generators] or [MultiPoly.zero(self.nvars, n)], self.chart)

    def __add__(self, other: "IdealPresentation") -> "IdealPresentation":
        return IdealPresentation(list(self.generators) + list(other.generators), self.chart)


def ideal(gens, chart: str = PROJECTIVE) -> IdealPresentation:
    return IdealPresentation(gens, chart)


# ---------------------------------------------------------------------------
# Macaulay matrices
# ---------------------------------------------------------------------------

class _Indexer:
    """Maps exponent vectors to column indices through a dense lookup table."""

    def __init__(self, cols, nvars: int, base: int):
        self.base = base
        self.weights = np.array([base ** i for i in range(nvars)], dtype=np.int64)
        self.table = np.full(base ** nvars, -1, dtype=np.int64)
        if cols:
            codes = np.array(cols, dtype=np.int64) @ self.weights
            self.table[codes] = np.arange(len(cols))

    def __call__(self, exps: np.ndarray) -> np.ndarray:
        ok = (exps < self.base).all(axis=-1)
        codes = np.where(ok, (np.minimum(exps, self.base - 1) * self.weights).sum(axis=-1), 0)
        idx = self.table[codes]
        return np.where(ok, idx, -1)


def _fill_rows(F, gens, mults_for, cols, nvars: int, base: int):
    """Dense matrix whose rows are mu*g for g in gens and mu in mults_for(g);
    terms outside `cols` are dropped (truncation)."""
    index = _Indexer(cols, nvars, base)
    blocks = []
    for g in gens:
        mus = mults_for(g)
        if not mus:
            continue
        exps = np.array(list(g.terms.keys()), dtype=np.int64)
        coefs = np.array(list(g.terms.values()), dtype=F.dtype)
        mu = np.array(mus, dtype=np.int64)
        full = mu[:, None, :] + exps[None, :, :]
        idx = index(full)
        block = np.zeros((len(mus), len(cols)), dtype=F.dtype)
        rows = np.broadcast_to(np.arange(len(mus))[:, None], idx.shape)
        vals = np.broadcast_to(coefs[None, :], idx.shape)
        keep = idx >= 0
        block[rows[keep], idx[keep]] = vals[keep]
        blocks.append(block)
    if not blocks:
        return np.zeros((0, len(cols)), dtype=F.dtype)
    return np.concatenate(blocks, axis=0)


def macaulay_matrix(I: IdealPresentation, d: int):
    """(matrix, column monomials) for the degree-d part of a homogeneous ideal."""
    F = gf(I.n)
    cols = monomials(I.nvars, d)
    base = d + 1
    M = _fill_rows(F, I.generators, lambda g: monomials(I.nvars, d - g.degree()), cols, I.nvars, base)
    return M, cols


def graded_hilbert(I: IdealPresentation, d: int) -> int:
    """dim (S/I)_d."""
    if I.chart != PROJECTIVE:
        raise PolyError("graded_hilbert needs a homogeneous ideal")
    if d < 0:
        return 0
    M, cols = macaulay_matrix(I, d)
    if M.shape[0] == 0:
        return len(cols)
    return len(cols) - la.rank(gf(I.n), M)


def _default_dmax(I: IdealPresentation) -> int:
    degs = sorted((g.degree() for g in I.generators), reverse=True)
    top = degs[:max(I.nvars - 1, 1)]
    return max(max(degs, default=1) + 3, sum(d - 1 for d in top) + 4)


def hilbert_values(I: IdealPresentation, d_max: int | None = None):
    """Stream (d, HF(d)) for d from the top generator degree up to d_max."""
    if d_max is None:
        d_max = _default_dmax(I)
    d0 = max((g.degree() for g in I.generators), default=0)
    for d in range(d0, d_max + 1):
        yield d, graded_hilbert(I, d)


def _stable_degree(I: IdealPresentation, d_max: int | None):
    """(d, L): HF(d) = HF(d+1) = HF(d+2) = L with d past every generator degree."""
    if d_max is None:
        d_max = _default_dmax(I)
    vals = []
    for d, h in hilbert_values(I, d_max):
        vals.append((d, h))
        if len(vals) >= 3 and vals[-1][1] == vals[-2][1] == vals[-3][1]:
            return vals[-3][0], h
    if len(vals) >= 2 and vals[-1][1] > vals[-2][1]:
        return None, NOT_ZERO_DIM
    raise CertificationError(f"Hilbert function not stable by degree {d_max}: {vals[-4:]}")


def scheme_length(I: IdealPresentation, d_max: int | None = None):
    """Length of the projective scheme V(I) when it is finite, else NOT_ZERO_DIM."""
    if I.chart != PROJECTIVE:
        raise PolyError("scheme_length needs a homogeneous ideal")
    if not I.generators:
        return NOT_ZERO_DIM if I.nvars > 1 else 1
    _, L = _stable_degree(I, d_max)
    return L


# ---------------------------------------------------------------------------
# local colength at the origin
# ---------------------------------------------------------------------------

def local_colength(I: IdealPresentation, cap: int = 40, bound: int | None = None):
    """dim K[x]_(x) / I, through the truncations c_N = dim K[x]/(I + m^N).

    Stops at the first N with c_{N+1} = c_N: then m^N lies in I + m^{N+1},
    hence in I by Nakayama.  Returns INFINITE if that does not happen by
    N = cap, or as soon as c_N exceeds `bound` (a known upper bound for a
    finite answer).
    """
    if I.chart != AFFINE:
        raise PolyError("local_colength needs an ideal in an affine chart")
    gens = [g for g in I.generators if not g.is_zero()]
    for g in gens:
        if (0,) * g.nvars in g.terms:
            raise PolyError("generator does not vanish at the origin")
    if not gens:
        return INFINITE
    nv = I.nvars
    F = gf(I.n)
    maxdeg = max(g.degree() for g in gens)
    prev = None
    for N in range(1, cap + 2):
        cols = [e for k in range(N - 1, -1, -1) for e in monomials(nv, k)]

        def mults(g, N=N):
            o = g.order()
            return [e for k in range(N - 1 - o, -1, -1) for e in monomials(nv, k)]

        M = _fill_rows(F, gens, mults, cols, nv, N + maxdeg + 1)
        c = len(cols) - (la.rank(F, M) if M.shape[0] else 0)
        if prev is not None and c == prev:
            return c
        if bound is not None and c > bound:
            return INFINITE
        prev = c
    return INFINITE


# ---------------------------------------------------------------------------
# points of a zero-dimensional projective scheme
# ---------------------------------------------------------------------------

@dataclass
class SchemePoint:
    """A Galois orbit of points of V(I).

    `coords` are ints in GF(2^field_n) (first nonzero coordinate 1, the
    orbit's smallest representative); `orbit_size` counts conjugates over
    the coefficient field of the ideal; `multiplicity` is the local length.
    """
    coords: tuple
    field_n: int
    orbit_size: int
    multiplicity: int


def _normal_form_data(I: IdealPresentation, d: int):
    F = gf(I.n)
    M, cols = macaulay_matrix(I, d)
    if M.shape[0]:
        R, piv = la.rref(F, M)
    else:
        R, piv = M, []
    pivset = set(piv)
    std = [j for j in range(len(cols)) if j not in pivset]
    pos = {c: i for i, c in enumerate(std)}
    colidx = {e: j for j, e in enumerate(cols)}
    prow = {c: i for i, c in enumerate(piv)}
    return cols, std, pos, colidx, prow, R


def multiplication_matrices(I: IdealPresentation, D: int):
    """Matrices of x_j : (S/I)_{D-1} -> (S/I)_D in the standard-monomial bases."""
    F = gf(I.n)
    cols0, std0, _, _, _, _ = _normal_form_data(I, D - 1)
    cols1, std1, pos1, colidx1, prow1, R1 = _normal_form_data(I, D)
    L0, L1 = len(std0), len(std1)
    std1_arr = np.array(std1, dtype=np.int64)
    mats = []
    for j in range(I.nvars):
        X = np.zeros((L1, L0), dtype=F.dtype)
        for s_i, c in enumerate(std0):
            e = list(cols0[c])
            e[j] += 1
            col = colidx1[tuple(e)]
            if col in pos1:
                X[pos1[col], s_i] = 1
            else:
                # the pivot row expresses this monomial through standard ones
                X[:, s_i] = R1[prow1[col], std1_arr] if L1 else X[:, s_i]
        mats.append(X)
    return mats


def _joint_split(n: int, mats, i: int, eig: list, out: list):
    """Decompose commuting matrices into joint generalised eigenspaces."""
    r = mats[0].shape[0]
    if i == len(mats):
        out.append((n, [embed(v, vn, n) for vn, v in eig], r))
        return
    F = gf(n)
    A = mats[i]
    cp = la.charpoly(F, A)
    roots = uni_roots(cp, r, n=n)
    if len(roots) == 1 and roots[0].ext_degree == 1:
        lam = roots[0].root.value
        _joint_split(n, mats, i + 1, eig + [(n, lam)], out)
        return
    for info in roots:
        n2 = info.root.n
        F2 = gf(n2)
        lifted = [la.lift(M, n, n2) for M in mats]
        B = lifted[i].copy()
        for k in range(r):
            B[k, k] ^= info.root.value
        K = la.nullspace(F2, la.matpow(F2, B, info.multiplicity))
        if K.shape[1] != info.multiplicity:
            raise CertificationError("generalised eigenspace has unexpected dimension")
        restricted = [la.solve(F2, K, la.matmul(F2, M, K)) for M in lifted]
        if any(x is None for x in restricted):
            raise CertificationError("eigenspace is not invariant; matrices do not commute")
        _joint_split(n2, restricted, i + 1, eig + [(n2, info.root.value)], out)


def _canonical_point(coords, n: int, base_n: int):
    """Normalise, move to the smallest field and pick the orbit minimum."""
    F = gf(n)
    k = next(i for i, c in enumerate(coords) if c)
    inv = F.inv(coords[k])
    coords = [F.mul(c, inv) for c in coords]
    level = 1
    for c in coords:
        level = math.lcm(level, minimal_subfield(c, n, base_n) // base_n)
    nn = base_n * level
    small = [restrict(c, nn, n) for c in coords]
    if any(v is None for v in small):
        raise CertificationError("point coordinates failed to descend")  # pragma: no cover
    G = gf(nn)
    orbit = [tuple(small)]
    cur = small
    for _ in range(level - 1):
        cur = [G.frobenius(c, base_n) for c in cur]
        orbit.append(tuple(cur))
    return min(orbit), nn, level


_EXTRA_DEGREES = 8


def _invertible_combination(X, n0: int, rng):
    """(n, h, inverse of sum h_j X_j) for a random h, or None when none is found
    over fields of up to 2^16 or so elements."""
    w = 1
    while True:
        n = n0 * w
        F = gf(n)
        Xl = [la.lift(M, n0, n) for M in X]
        for _ in range(4 if n < 16 else 2):
            h = [F.random(rng) for _ in range(len(X))]
            Xh = np.zeros(X[0].shape, dtype=F.dtype)
            for hj, M in zip(h, Xl):
                if hj:
                    Xh ^= F.vmul(M, hj)
            Minv = la.inverse(F, Xh)
            if Minv is not None:
                return n, h, Minv, Xl
        if n >= 16:
            return None
        w += 1


def solve_zero_dim(I: IdealPresentation, d_max: int | None = None, seed: int = 0, validate: bool = True):
    """All points of the finite scheme V(I) with their local lengths.

    Works with the multiplication operators of S/I in a degree where the
    Hilbert function has settled, divided by a linear form h that avoids
    every point; their joint eigenvalues are the coordinates x_i/h.
    """
    if I.chart != PROJECTIVE:
        raise PolyError("solve_zero_dim needs a homogeneous ideal")
    d, L = _stable_degree(I, d_max)
    if L is NOT_ZERO_DIM:
        raise CertificationError("scheme is not zero-dimensional")
    if L == 0:
        return []
    n0 = I.n
    rng = random.Random(seed)
    found = None
    # low-degree torsion of S/I can make every x_j-combination singular; go up
    for D in range(d + 1, d + 1 + _EXTRA_DEGREES):
        X = multiplication_matrices(I, D)
        if X[0].shape != (L, L):
            raise CertificationError("standard monomial count does not match the length")
        found = _invertible_combination(X, n0, rng)
        if found is not None:
            break
    if found is None:
        raise CertificationError("no linear form avoids the scheme")
    n, _, Minv, Xl = found
    F = gf(n)
    mats = [la.matmul(F, Minv, M) for M in Xl]
    leaves = []
    _joint_split(n, mats, 0, [], leaves)
    found = {}
    for nl, vals, mult in leaves:
        key, nn, level = _canonical_point(vals, nl, n0)
        if key in found:
            if found[key].multiplicity != mult:
                raise CertificationError("conjugate points with different multiplicities")
            continue
        found[key] = SchemePoint(key, nn, level, mult)
    pts = sorted(found.values(), key=lambda p: (p.orbit_size, p.coords))
    if validate:
        total = sum(p.orbit_size * p.multiplicity for p in pts)
        if total != L:
            raise CertificationError(f"point multiplicities sum to {total}, expected {L}")
        for p in pts:
            for g in I.generators:
                if g.evaluate(p.coords, p.field_n):
                    raise CertificationError("computed point does not lie on the scheme")
    return pts
