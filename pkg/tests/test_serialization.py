import json
import random

import pytest
from hypothesis import given, strategies as st

from char2quartic.algebra.poly import MultiPoly, monomials
from char2quartic.algebra.serialization import (SerializationError, dumps, load_file, poly_from_json, poly_to_json,
                                                weierstrass_from_json, weierstrass_to_json)
from char2quartic.fibrations import DEGREE_BOUNDS, WeierstrassModel


@given(st.integers(1, 6), st.integers(0, 10 ** 9))
def test_form_round_trip(m, seed):
    rng = random.Random(seed)
    terms = {e: rng.randrange(1 << m) for e in monomials(4, 4)}
    P = MultiPoly(4, {e: c for e, c in terms.items() if c}, m)
    d = poly_to_json(P)
    assert poly_from_json(json.loads(dumps(d))) == P
    assert dumps(poly_to_json(poly_from_json(d))) == dumps(d)


@given(st.integers(1, 6), st.integers(0, 10 ** 9))
def test_model_round_trip(m, seed):
    rng = random.Random(seed)
    W = WeierstrassModel.from_lists([[rng.randrange(1 << m) for _ in range(b + 1)] for b in DEGREE_BOUNDS], m)
    assert weierstrass_from_json(json.loads(dumps(weierstrass_to_json(W)))) == W


def test_hex_coefficients():
    P = MultiPoly(4, {(4, 0, 0, 0): 10}, 4)
    assert poly_to_json(P)["terms"] == [{"exp": [4, 0, 0, 0], "coef": "a"}]


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'


@pytest.mark.parametrize("bad", [
    [],
    {"vars": 4, "terms": []},
    {"vars": 4, "field": {"m": 0}, "terms": []},
    {"vars": 4, "field": {"m": 2}, "terms": [{"exp": [4, 0, 0], "coef": "1"}]},
    {"vars": 4, "field": {"m": 2}, "terms": [{"exp": [4, 0, 0, 0], "coef": "7"}]},
    {"vars": 4, "field": {"m": 2}, "terms": [{"exp": [4, 0, 0, 0], "coef": "zz"}]},
    {"vars": 4, "field": {"m": 2}, "terms": [{"exp": [4, 0, 0, -1], "coef": "1"}]},
    {"vars": 4, "deg": 4, "field": {"m": 2}, "terms": [{"exp": [3, 0, 0, 0], "coef": "1"}]},
    {"vars": 4, "field": {"m": 2}, "terms": "x"},
])
def test_malformed_forms(bad):
    with pytest.raises(SerializationError):
        poly_from_json(bad)


@pytest.mark.parametrize("bad", [
    {"field": {"m": 1}, "a": [[], [], []]},
    {"field": {"m": 1}, "a": [[1, 1, 1, 1], [], [], [], []]},
    {"field": {"m": 1}, "a": [[], [], [], [], ["2"]]},
    {"a": [[], [], [], [], []]},
    "model",
])
def test_malformed_models(bad):
    with pytest.raises(SerializationError):
        weierstrass_from_json(bad)


def test_load_file_errors(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(SerializationError):
        load_file(p)
    with pytest.raises(SerializationError):
        load_file(tmp_path / "missing.json")
