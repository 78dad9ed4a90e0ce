from hypothesis import given, strategies as st

from char2quartic.algebra.field import (FieldElem, FieldTower, embed, gf, gf2_is_irreducible, minimal_subfield,
                                        restrict, smallest_irreducible)

# lexicographically smallest irreducibles, degree 1..8
KNOWN = [0b10, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10000011, 0b100011011]


def test_smallest_irreducibles():
    assert [smallest_irreducible(n) for n in range(1, 9)] == KNOWN


def test_irreducibility_by_brute_force():
    def has_factor(f):
        d = f.bit_length() - 1
        for g in range(2, 1 << (d // 2 + 1)):
            if g.bit_length() - 1 >= 1 and g.bit_length() - 1 <= d // 2:
                # long division over GF(2)
                r = f
                while r.bit_length() >= g.bit_length():
                    r ^= g << (r.bit_length() - g.bit_length())
                if r == 0:
                    return True
        return False
    for f in range(4, 512):
        assert gf2_is_irreducible(f) == (not has_factor(f)), f


elems = st.integers(min_value=1, max_value=20).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1),
                        st.integers(0, (1 << n) - 1)))


@given(elems)
def test_field_axioms(t):
    n, a, b, c = t
    F = gf(n)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
    if a:
        assert F.mul(a, F.inv(a)) == 1
    assert F.sqr(F.sqrt(a)) == a
    assert F.frobenius(a, n) == a
    assert F.trace(a) in (0, 1)


@given(st.integers(0, 255), st.integers(0, 255))
def test_embedding_is_a_homomorphism(a, b):
    for big in (16, 24):
        E = gf(big)
        F = gf(8)
        assert embed(F.mul(a, b), 8, big) == E.mul(embed(a, 8, big), embed(b, 8, big))
        assert embed(a ^ b, 8, big) == embed(a, 8, big) ^ embed(b, 8, big)
        assert restrict(embed(a, 8, big), 8, big) == a


def test_embeddings_are_compatible():
    for a in range(4):
        assert embed(embed(a, 2, 4), 4, 12) == embed(a, 2, 12)
        assert embed(embed(a, 2, 6), 6, 12) == embed(a, 2, 12)
    for a in range(8):
        assert embed(embed(a, 3, 6), 6, 12) == embed(a, 3, 12)


def test_minimal_subfield_and_elements():
    E = gf(12)
    x = embed(5, 4, 12)
    assert minimal_subfield(x, 12) == 4
    assert FieldElem(4, 5) == FieldElem(12, x)
    assert hash(FieldElem(4, 5)) == hash(FieldElem(12, x))
    y = FieldElem(2, 2) * FieldElem(3, 2)
    assert y.n == 6
    assert (y / FieldElem(3, 2)) == FieldElem(2, 2)
    assert E.mul(x, E.inv(x)) == 1


def test_large_fields_use_object_arithmetic():
    F = gf(70)
    a = (1 << 69) + 12345
    assert F.mul(a, F.inv(a)) == 1
    T = FieldTower(3)
    assert T.level(2).n == 6
    assert T.level_of(T.elem(embed(3, 3, 6), 2)) == 1
