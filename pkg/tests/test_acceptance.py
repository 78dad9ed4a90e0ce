"""Acceptance criteria 1-13.

Each test records one PASS/FAIL line; pytest prints them in the terminal
summary, and ``python3 tests/test_acceptance.py`` prints them directly.
"""

import functools
import os
import random
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from conftest import ACCEPTANCE_LINES, record
from corpus import corpus

from char2quartic import fibrations as fib
from char2quartic.algebra.field import gf
from char2quartic.algebra.poly import MultiPoly
from char2quartic.errors import INCONSISTENT, NonNormalError
from char2quartic.families import (PlaneCurve, dual_plane_special_multiplicity, expected_strange_count,
                                   family_a3, family_dual_plane, family_insep, family_special, general_quartic,
                                   klein_form, strange_points, verify_dual_plane, verify_insep)
from char2quartic.fibrations import Place
from char2quartic.gauss_dual import degree_ledger, dual_plane_kernel, report_configuration
from char2quartic.pic_lattice import build_basis, pair, reflect_reduce, self_int, shioda_tate_lower
from char2quartic.singularities import Kind, RDPStatus, find_singular_points

CORPUS_SIZE = 200


def check(number, ok, detail=""):
    record(number, bool(ok), detail)
    assert ok, detail


@functools.lru_cache(maxsize=None)
def analyzed_corpus():
    """(label, report) for at least CORPUS_SIZE normal surfaces; also the non-normal labels."""
    out, skipped = [], []
    size = CORPUS_SIZE
    while len(out) < CORPUS_SIZE:
        done = {lab for lab, _ in out} | set(skipped)
        for label, X in corpus(size):
            if label in done:
                continue
            try:
                out.append((label, find_singular_points(X, seed=0)))
            except NonNormalError:
                skipped.append(label)
        size += CORPUS_SIZE - len(out)
    return out, skipped


def test_01_klein_strange_points():
    loc = strange_points(klein_form(2))
    F = gf(3)
    eps = set()
    shape_ok = True
    for pt in loc.geometric_points():
        a, b, c = (x.lift(3).value for x in pt)
        if b == 0:
            shape_ok = False
            continue
        e = F.mul(a, F.inv(b))
        shape_ok &= F.pow(e, 7) == 1 and F.mul(c, F.inv(b)) == F.pow(e, 3)
        shape_ok &= all(x.n <= 3 and 3 % x.n == 0 for x in pt)
        eps.add(e)
    ok = loc.length == 7 and loc.reduced and loc.geometric_count == 7 and shape_ok and len(eps) == 7
    check(1, ok, f"length {loc.length}, reduced {loc.reduced}, distinct eps {len(eps)}")


def test_02_even_degree_counts():
    got = {}
    for d in (2, 4, 6):
        B = PlaneCurve(MultiPoly.random_form(3, d, 3, random.Random(d)))
        loc = strange_points(B, seed=d)
        got[d] = loc.length if loc.certificate["ok"] else None
    ok = all(got[d] == expected_strange_count(d) for d in got) and [expected_strange_count(d) for d in (2, 4, 6)] == [1, 7, 21]
    check(2, ok, f"lengths {got}")


def test_03_a3_family():
    rep = find_singular_points(family_a3(klein_form(2)))
    geo = rep.geometric_points()
    led = degree_ledger(rep)
    ok = len(geo) == 7 and all(r.kind == Kind.BIPLANAR and r.defect == 4 for _, r in geo) and led.product == 8
    check(3, ok, f"{len(geo)} points, product {led.product}")


def test_04_special_family():
    X = family_special(klein_form(2))
    rep = find_singular_points(X)
    geo = rep.geometric_points()
    led = degree_ledger(rep)
    kdim = len(dual_plane_kernel(X))
    ok = (len(geo) == 14 and all(r.kind == Kind.NODE and r.defect == 2 for _, r in geo)
          and led.defect_sum == 28 and led.product == 8 and kdim == 1)
    check(4, ok, f"{len(geo)} points, defect sum {led.defect_sum}, product {led.product}, kernel {kdim}")


def test_05_insep_family():
    rep = verify_insep(family_insep(general_quartic(3, 1), 3))
    lengths = (rep.base_locus, rep.L_length, rep.HB_length, rep.S_length)
    ok = (lengths == (8, 4, 17, 13) and rep.census.get("points") == 14 and rep.census.get("kinds") == {"Node": 14}
          and rep.node_at_origin and rep.product == 8)
    check(5, ok, f"lengths {lengths}, census {rep.census}, product {rep.product}")


def test_06_dual_plane_special():
    m, seed = 3, 0
    X = family_dual_plane(0, general_quartic(m, seed), m)
    rep = find_singular_points(X)
    geo = rep.geometric_points()
    mult = dual_plane_special_multiplicity(X)
    v = verify_dual_plane(X, seed, special=True)
    ok = len(geo) == 14 and all(r.kind == Kind.NODE for _, r in geo) and mult == 4 and v.ok
    check(6, ok, f"{len(geo)} points, multiplicity at P' {mult}")


def test_07_main_theorem_predicates():
    reports, skipped = analyzed_corpus()
    bad, complete = [], 0
    for label, rep in reports:
        geo = rep.geometric_points()
        nu = len(geo)
        if nu > 14:
            bad.append(f"{label}: {nu} points")
        if nu == 14 and any(r.kind != Kind.NODE for _, r in geo):
            bad.append(f"{label}: 14 points not all nodes")
        if nu >= 13 and any(r.rdp_status == RDPStatus.UNKNOWN for _, r in geo):
            bad.append(f"{label}: uncertified singularity")
        if rep.complete and all(isinstance(r.defect, int) for r in rep.points):
            complete += 1
            if not degree_ledger(rep).bound_ok:
                bad.append(f"{label}: degree bound")
    ok = len(reports) >= CORPUS_SIZE and not bad
    check(7, ok, f"{len(reports)} normal surfaces ({len(skipped)} non-normal skipped), "
                 f"{complete} complete ledgers, {len(bad)} violations {bad[:3]}")


def test_08_configuration():
    reports, _ = analyzed_corpus()
    bad = []
    for label, rep in reports:
        if rep.geometric_count < 2:
            continue
        conf = report_configuration(rep)
        if conf.max_collinear >= 4 or conf.max_coplanar > 6:
            bad.append(f"{label}: collinear {conf.max_collinear}, coplanar {conf.max_coplanar}")
        if rep.geometric_count >= 9 and not conf.has_point_with_two_companions:
            bad.append(f"{label}: no point with two companions")
    ok = len(reports) >= CORPUS_SIZE and not bad
    check(8, ok, f"{len(reports)} surfaces, {len(bad)} violations {bad[:3]}")


def _random_model(rng, m):
    F = gf(m)
    return fib.WeierstrassModel.from_lists([[F.random(rng) for _ in range(b + 1)] for b in fib.DEGREE_BOUNDS], m)


def test_09_discriminant_oracle():
    rng = random.Random(9)
    mismatches = 0
    for i in range(1000):
        W = _random_model(rng, 1 + i % 6)
        mismatches += fib.discriminant(W) != fib.discriminant_from_b(W)
    check(9, mismatches == 0, f"1000 models, {mismatches} mismatches")


def test_10_tate_normal_forms():
    rng = random.Random(10)
    F = gf(2)
    o = Place.rational(0, 2)

    def nz():
        return F.random(rng, True)

    def rnd(k):
        return [F.random(rng) for _ in range(k)]

    fails = []
    for _ in range(5):
        r0 = fib.tate_fiber(fib.normal_form_Istar(0, [nz()] + rnd(3), [nz()] + rnd(4), [nz()] + rnd(6), rnd(9), 2), o)
        if (r0.kodaira_type, r0.vDelta, r0.delta_v) != ("I0*", 8, 2):
            fails.append(("n=0", r0.kodaira_type, r0.vDelta, r0.delta_v))
        r1 = fib.tate_fiber(fib.normal_form_Istar(1, [nz()] + rnd(3), [nz()] + rnd(3), [nz()] + rnd(5), rnd(7), 2), o)
        if r1.kodaira_type != "I2*" or r1.delta_v < 4:
            fails.append(("n=1", r1.kodaira_type, r1.delta_v))
        r3 = fib.tate_fiber(fib.normal_form_IIIstar(rnd(3), rnd(4), [nz()] + rnd(5), rnd(8), 2), o)
        if r3.kodaira_type != "III*" or r3.delta_v < 3:
            fails.append(("III*", r3.kodaira_type, r3.delta_v))
    mult = 0
    for i in range(40):
        W = _random_model(rng, 2)
        W = fib.WeierstrassModel.from_lists([[1] + list(W.a1[1:])] + list(W.coeffs[1:]), 2)
        if not fib.discriminant(W):
            continue
        for r in fib.multiplicative_fibers(W):
            mult += 1
            if r.kodaira_type != f"I{r.vDelta}" or r.delta_v != 0:
                fails.append(("mult", r.kodaira_type, r.vDelta, r.delta_v))
    check(10, not fails and mult > 0, f"{mult} multiplicative groups, failures {fails[:3]}")


def test_11_euler_ledger():
    rng = random.Random(11)
    fails, minimal, nonminimal = [], 0, 0
    for i in range(300):
        W = _random_model(rng, 1 + i % 3)
        if fib.is_quasi_elliptic(W) or not fib.discriminant(W):
            continue
        led = fib.euler_ledger(W)
        if led.minimal:
            minimal += 1
            if led.total != 24:
                fails.append(f"model {i}: total {led.total}")
        else:
            nonminimal += 1
        if led.sum_N > 12:
            fails.append(f"model {i}: sum N {led.sum_N}")
    for W, census in ((fib.istar0_square_family(2, 0), {"I2": 8, "I0*": 1}),
                      (fib.two_istar4_model(2, 0), {"I4*": 2})):
        led = fib.euler_ledger(W)
        s = fib.max_disjoint_sum(led.places)
        if led.census() != census or led.total != 24 or s.sum != 12 or not s.cor12_ok:
            fails.append(f"configuration {census}: {led.census()}, total {led.total}, sum {s.sum}")
    check(11, not fails and minimal >= 200, f"{minimal} minimal models sum to 24 "
                                          f"({nonminimal} non-minimal set aside), failures {fails[:3]}")


def test_12_square_discriminant():
    rng = random.Random(12)
    F = gf(3)
    fails, solved = 0, 0
    for _ in range(200):
        sol = fib.square_disc_constraints_Istar0([F.random(rng) for _ in range(4)],
                                                 [F.random(rng, True)] + [F.random(rng) for _ in range(4)],
                                                 [F.random(rng) for _ in range(7)],
                                                 [F.random(rng) for _ in range(9)], m=3)
        if sol is INCONSISTENT:
            continue
        solved += 1
        fails += not fib.is_square_poly(fib.discriminant(sol.model))
    D, a = fib.square_disc_symbolic()
    sym5 = D[5] == a["a3_0"] ** 2 * (a["a2_0"] + a["a3_1"])
    c7 = D[7].substitute_var(fib.SYMBOLIC_VARS.index("a2_0"), a["a3_1"])
    sym7 = c7 == (a["a3_0"] * a["a4_1"] + a["a2_2"] * a["a3_0"] ** 2 + a["a3_0"] ** 2 * a["a3_3"]
                  + a["a3_1"] * a["a4_0"])
    check(12, fails == 0 and solved > 0 and sym5 and sym7,
          f"{solved} solutions, {fails} non-square; symbolic t^5 {sym5}, t^7 {sym7}")


def test_13_lattice():
    B = build_basis(["A1", "A1"], lines=1, incidences={(0, "C0_0"): 1, (0, "C1_0"): 1})
    H, D1, D2, L = (B.basis_class(x) for x in ("H", "C0_0", "C1_0", "L0"))
    E = H - D1 - D2
    classes = [D1, D2, L]
    R = reflect_reduce(E, classes)
    st1 = shioda_tate_lower(["I2"] * 8 + ["I0*"])
    st2 = shioda_tate_lower(["I2"] * 12)
    ok = pair(E, L) == -1 and self_int(R) == 0 and all(pair(R, c) >= 0 for c in classes) and st1 == st2 == 14
    check(13, ok, f"E.L {pair(E, L)}, reduced square {self_int(R)}, Shioda-Tate {st1}, {st2}")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        try:
            t()
        except Exception as exc:  # the line is already recorded unless the test crashed early
            n = int(t.__name__.split("_")[1])
            if n not in ACCEPTANCE_LINES:
                record(n, False, f"{type(exc).__name__}: {exc}")
    for k in sorted(ACCEPTANCE_LINES):
        print(ACCEPTANCE_LINES[k])
    sys.exit(0 if all("PASS" in v for v in ACCEPTANCE_LINES.values()) else 1)
