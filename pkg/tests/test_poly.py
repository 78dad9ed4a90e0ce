import random

from hypothesis import given, strategies as st

from char2quartic.algebra.field import gf
from char2quartic.algebra.poly import MultiPoly, euler_check, linear_substitution, monomials


def test_monomial_counts_and_order():
    assert len(monomials(4, 4)) == 35
    assert len(monomials(3, 6)) == 28
    m = monomials(3, 2)
    assert m[0] == (2, 0, 0) and m[-1] == (0, 0, 2)


@given(st.integers(0, 10_000), st.integers(1, 4))
def test_ring_laws(seed, n):
    rng = random.Random(seed)
    a = MultiPoly.random_form(3, 2, n, rng)
    b = MultiPoly.random_form(3, 2, n, rng)
    c = MultiPoly.random_form(3, 1, n, rng)
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a + a == MultiPoly.zero(3, n)
    assert (a * b).square() == a.square() * b.square()


@given(st.integers(0, 10_000))
def test_euler_relation(seed):
    rng = random.Random(seed)
    F = MultiPoly.random_form(4, 4, 2, rng)
    # sum x_i dF/dx_i = deg F * F = 0 in characteristic 2
    assert euler_check(F)
    G = MultiPoly.random_form(4, 3, 2, rng)
    assert euler_check(G) == G.is_zero()


@given(st.integers(0, 10_000))
def test_evaluate_matches_compose(seed):
    rng = random.Random(seed)
    f = MultiPoly.random_form(3, 3, 3, rng)
    F = gf(3)
    p = [F.random(rng) for _ in range(3)]
    consts = [MultiPoly.const(3, v, 3) for v in p]
    assert f.compose(consts).coeff((0, 0, 0)).value == f.evaluate(p)


def test_squares_and_sqrt():
    rng = random.Random(1)
    q = MultiPoly.random_form(3, 2, 3, rng)
    assert q.square().is_square()
    assert q.square().sqrt() == q
    assert not (q.square() + MultiPoly.var(3, 0, 3)**3 * MultiPoly.var(3, 1, 3)).is_square()


def test_partials():
    x, y = MultiPoly.var(2, 0), MultiPoly.var(2, 1)
    f = x**3 * y + x * y**2
    assert f.partial(0) == x**2 * y + y**2
    assert f.partial(1) == x**3


def test_linear_substitution_identity():
    rng = random.Random(4)
    f = MultiPoly.random_form(3, 4, 2, rng)
    I = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert linear_substitution(f, I, 2) == f


def test_chart_moves_point_to_origin():
    rng = random.Random(5)
    f = MultiPoly.random_form(3, 2, 2, rng)
    F = gf(2)
    # find a rational zero by search
    pt = next(p for p in ([a, b, 1] for a in range(4) for b in range(4)) if not f.evaluate(p))
    local, k = f.chart(pt, 2)
    assert local.nvars == 2
    assert local.coeff((0, 0)).value == 0
    assert F.n == 2
