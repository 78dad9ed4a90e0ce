import pytest

from char2quartic import kodaira as K


@pytest.mark.parametrize("kind,row", [
    ("I0*", (5, 2, 6, 4)), ("II", (1, 2, 2, 0)), ("IV*", (7, 0, 8, 4)), ("III", (2, 1, 3, 1)),
    ("IV", (3, 0, 4, 1)), ("I1*", (6, 1, 7, 4)), ("I4*", (9, 2, 10, 6)), ("III*", (8, 1, 9, 5)),
    ("II*", (9, 1, 10, 5)), ("I1", (1, 0, 1, 0)), ("I2", (2, 0, 2, 1)), ("I7", (7, 0, 7, 3)),
])
def test_table(kind, row):
    assert K.fiber_table(kind).as_tuple() == row


@pytest.mark.parametrize("kind", ["I0*", "I3*", "II", "III", "IV", "IV*", "III*", "II*", "I2", "I9"])
def test_table_relations(kind):
    d = K.fiber_table(kind)
    fam, n = K.parse(kind)
    if fam == "In":
        assert d.e == d.m
    else:
        assert d.e == d.m + 1
    # N_v <= floor((e + delta_min) / 2)
    assert d.N <= (d.e + d.delta_min) // 2


def test_dynkin_labels():
    assert [K.dynkin(k) for k in ("I3", "I2*", "IV*", "III*", "II*", "II")] == ["A2", "D6", "E6", "E7", "E8", None]


def test_unknown_types():
    for bad in ("V", "I*", "Ix", "", "I-1"):
        with pytest.raises(K.FiberTypeError):
            K.fiber_table(bad)


def test_quasi_elliptic_list():
    types = K.quasi_elliptic_types()
    assert "IV" not in types and "I2n*" in types
    assert K.reduced("III") and K.reduced("II")
    assert not K.reduced("I0*") and not K.reduced("II*")
    assert K.is_quasi_elliptic_type("I0*") and not K.is_quasi_elliptic_type("I1*")
    assert K.fiber_table("III").m <= 2
    with pytest.raises(K.FiberTypeError):
        K.reduced("IV")


def test_allows_twelve_curvesship():
    allowed = ["I2", "I4", "I0*", "I2*", "I1*", "IV*", "III*"]
    refused = ["I1", "I3", "II", "III", "IV", "I3*", "II*"]
    assert all(K.allows_twelve_curves(k) for k in allowed)
    assert not any(K.allows_twelve_curves(k) for k in refused)
