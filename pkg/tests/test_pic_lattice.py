import numpy as np
import pytest
from hypothesis import given, strategies as st

from char2quartic.errors import LatticeError
from char2quartic.pic_lattice import (LatticeBasis, build_basis, cartan, fundamental_cycle, is_negative_definite,
                                      pair, reflect_reduce, self_int, shioda_tate_lower)


def test_basic_pairings():
    B = build_basis(["A1"])
    H, C = B.basis_class("H"), B.basis_class("C0_0")
    assert self_int(H) == 4 and self_int(C) == -2 and pair(H, C) == 0


def test_isotropic_class_and_line_reflection():
    B = build_basis(["A1", "A1"], lines=1, incidences={(0, "C0_0"): 1, (0, "C1_0"): 1})
    assert B.check() == []
    H, D1, D2, L = (B.basis_class(l) for l in ("H", "C0_0", "C1_0", "L0"))
    E = H - D1 - D2
    assert self_int(E) == 0 and pair(E, L) == -1
    R = reflect_reduce(E, [D1, D2, L])
    assert R == E - L
    assert self_int(R) == 0
    assert all(pair(R, c) >= 0 for c in (D1, D2, L))


def test_pencil_reflection():
    P = LatticeBasis(["M", "E"], [[2, 0], [0, -2]])
    D = P.vector({"M": 1, "E": 1})
    E = P.basis_class("E")
    assert self_int(D) == 0 and pair(D, E) == -2
    assert reflect_reduce(D, [E]) == P.vector({"M": 1, "E": -1})


def test_nef_class_unchanged():
    B = build_basis(["A2"])
    H = B.basis_class("H")
    F = H - H
    assert reflect_reduce(F, [B.basis_class("C0_0")]) == F


def test_reflect_reduce_preconditions():
    B = build_basis(["A1"])
    with pytest.raises(LatticeError):
        reflect_reduce(B.basis_class("H"), [B.basis_class("C0_0")])


@pytest.mark.parametrize("kind,det", [("A1", 2), ("A4", 5), ("D4", 4), ("D7", 4), ("E6", 3), ("E7", 2), ("E8", 1)])
def test_cartan(kind, det):
    C = cartan(kind)
    assert round(np.linalg.det(C)) == det
    assert is_negative_definite(-C)
    assert not is_negative_definite(C)


def test_fundamental_cycles():
    B = build_basis(["A3", "D4", "E6"])
    for i, expected in enumerate(([1, 1, 1], [1, 2, 1, 1], [1, 1, 2, 2, 3, 2][:0])):
        curves = [l for l in B.labels if l.startswith(f"C{i}_")]
        Z = fundamental_cycle(B, curves)
        assert self_int(Z) == -2
        if expected:
            assert [Z.as_dict()[c] for c in curves] == expected


def test_shioda_tate():
    assert shioda_tate_lower(["I2"] * 8 + ["I0*"], True) == 14
    assert shioda_tate_lower(["I2"] * 12, True) == 14
    assert shioda_tate_lower([], True) == 2
    assert shioda_tate_lower(["I2"], False) == 0


@given(st.lists(st.sampled_from(["A1", "A2", "A3", "D4", "D5", "E6", "E7", "E8"]), max_size=5))
def test_ade_lattices_even_and_negative_definite(kinds):
    B = build_basis(kinds)
    assert B.is_even()
    assert B.exceptional_negative_definite()
    assert np.array_equal(B.gram, B.gram.T)
    assert B.check() == []


@given(st.lists(st.integers(-3, 3), min_size=5, max_size=5), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_reflections_preserve_square_and_parity(u, v):
    B = build_basis(["A2", "A1"], lines=1, incidences={(0, "C0_0"): 1})
    D = B.vector(dict(zip(B.labels, u)))
    if self_int(D) != 0:
        return
    Es = [B.basis_class(l) for l in B.labels[1:]]
    H = B.basis_class("H")
    try:
        R = reflect_reduce(D, Es, cap=200)
    except LatticeError:
        return
    assert self_int(R) == 0
    assert pair(R, H) % 2 == pair(D, H) % 2
    assert all(pair(R, E) >= 0 for E in Es)
    assert v is not None


def test_json_round_trip():
    B = build_basis(["D4"], lines=1)
    B2 = LatticeBasis.from_json(B.to_json())
    assert B2.labels == B.labels and np.array_equal(B2.gram, B.gram) and B2.kinds == B.kinds
