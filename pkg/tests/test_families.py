import pytest
from hypothesis import given, settings, strategies as st

from char2quartic.algebra.field import FieldElem, gf
from char2quartic.algebra.poly import MultiPoly
from char2quartic.errors import PolyError
from char2quartic.families import (PlaneCurve, decompose_square, expected_strange_count, family_dual_plane,
                                   family_insep, general_quartic, klein_form, map_degree_check, strange_points,
                                   verify_dual_plane, verify_insep)
import random


def test_klein_strange_points():
    loc = strange_points(klein_form(2))
    assert loc.length == 7 and loc.finite and loc.reduced
    assert loc.geometric_count == 7
    F = gf(3)
    eps = set()
    for pt in loc.geometric_points():
        a, b, c = (x.lift(3).value for x in pt)
        inv = F.inv(b)
        e = F.mul(a, inv)
        assert F.pow(e, 7) == 1
        assert F.mul(c, inv) == F.pow(e, 3)
        eps.add(e)
    assert len(eps) == 7


@pytest.mark.parametrize("d,expected", [(2, 1), (4, 7), (6, 21)])
def test_strange_counts(d, expected):
    assert expected_strange_count(d) == expected
    B = PlaneCurve(MultiPoly.random_form(3, d, 3, random.Random(d)))
    loc = strange_points(B, seed=d)
    assert loc.certificate["ok"]
    assert loc.length == expected


def test_plane_curve_validation():
    with pytest.raises(PolyError):
        PlaneCurve(MultiPoly.random_form(3, 3, 1, random.Random(0)))
    with pytest.raises(PolyError):
        PlaneCurve(MultiPoly.var(4, 0) ** 2)


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_decompose_square(seed):
    rng = random.Random(seed)
    q = MultiPoly.random_form(3, 2, 2, rng)
    B = klein_form(2).B.lift(2) + q.square()
    q2, rest = decompose_square(B)
    assert q2.square() + rest == B
    # the remainder has no pure-square monomials left
    assert not any(all(k % 2 == 0 for k in e) for e in rest.terms)


def test_insep_lengths():
    rep = verify_insep(family_insep(general_quartic(3, 1), 3))
    assert rep.lengths == (8, 4, 17, 13)
    assert rep.S_residual == 13 and rep.disjoint and rep.node_at_origin
    assert rep.product == rep.formula_product == 8
    assert rep.ok


def test_dual_plane_generic_lambda():
    X = family_dual_plane(FieldElem(3, 1), general_quartic(3, 0), 3)
    v = verify_dual_plane(X)
    assert v.ok and v.details["kernel_dim"] == 1


def test_map_degree():
    assert map_degree_check(klein_form(2)) == [2, 2, 2, 2]
