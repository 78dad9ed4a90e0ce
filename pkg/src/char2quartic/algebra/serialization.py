"""JSON encodings of forms and Weierstrass models.

Field elements are lowercase hex strings of their polynomial-basis ints.

    form:  {"vars": 4, "deg": 4, "field": {"m": 3},
            "terms": [{"exp": [4, 0, 0, 0], "coef": "1"}, ...]}
    model: {"field": {"m": 2}, "a": [[...a1], [...a2], [...a3], [...a4], [...a6]]}
"""

from __future__ import annotations

import json

from ..errors import Char2Error
from .poly import MultiPoly, monomials


class SerializationError(Char2Error, ValueError):
    pass


def _hex(c: int) -> str:
    return format(c, "x")


def _parse_hex(s, n: int) -> int:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SerializationError(f"coefficient {s!r} is not a hex string")
    try:
        v = int(s, 16) if isinstance(s, str) else s
    except ValueError:
        raise SerializationError(f"coefficient {s!r} is not a hex string") from None
    if v < 0 or v >= 1 << n:
        raise SerializationError(f"coefficient {s!r} is not in GF(2^{n})")
    return v


def _field_m(d) -> int:
    try:
        m = d["field"]["m"]
    except (KeyError, TypeError):
        raise SerializationError("missing field.m") from None
    if not isinstance(m, int) or isinstance(m, bool) or not 1 <= m <= 64:
        raise SerializationError(f"bad field exponent {m!r}")
    return m


def poly_to_json(P: MultiPoly) -> dict:
    d = P.homogeneous_degree() if P.terms else 0
    order = {e: i for i, e in enumerate(monomials(P.nvars, d))} if d is not None else {}
    terms = sorted(P.terms.items(), key=lambda kv: (order.get(kv[0], len(order)), kv[0]))
    return {
        "vars": P.nvars,
        "deg": d,
        "field": {"m": P.n},
        "terms": [{"exp": list(e), "coef": _hex(c)} for e, c in terms],
    }


def poly_from_json(d) -> MultiPoly:
    if not isinstance(d, dict):
        raise SerializationError("form JSON must be an object")
    n = _field_m(d)
    nv = d.get("vars")
    if not isinstance(nv, int) or nv < 1:
        raise SerializationError("missing or bad 'vars'")
    terms = d.get("terms")
    if not isinstance(terms, list):
        raise SerializationError("missing 'terms' list")
    out = {}
    for t in terms:
        if not isinstance(t, dict) or "exp" not in t or "coef" not in t:
            raise SerializationError(f"bad term {t!r}")
        e = t["exp"]
        if not isinstance(e, list) or len(e) != nv or any(not isinstance(x, int) or x < 0 for x in e):
            raise SerializationError(f"bad exponent {e!r}")
        out[tuple(e)] = out.get(tuple(e), 0) ^ _parse_hex(t["coef"], n)
    P = MultiPoly(nv, out, n)
    deg = d.get("deg")
    if deg is not None and P.terms and P.homogeneous_degree() != deg:
        raise SerializationError(f"terms are not homogeneous of degree {deg}")
    return P


def weierstrass_to_json(W) -> dict:
    return {"field": {"m": W.n}, "a": [[_hex(c) for c in f] for f in W.coeffs]}


def weierstrass_from_json(d):
    from ..fibrations import WeierstrassModel
    if not isinstance(d, dict):
        raise SerializationError("model JSON must be an object")
    n = _field_m(d)
    a = d.get("a")
    if not isinstance(a, list) or len(a) != 5 or any(not isinstance(f, list) for f in a):
        raise SerializationError("'a' must hold five coefficient lists")
    coeffs = [[_parse_hex(c, n) for c in f] for f in a]
    try:
        return WeierstrassModel.from_lists(coeffs, n)
    except ValueError as exc:
        raise SerializationError(str(exc)) from None


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def load_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SerializationError(f"cannot read {path}: {exc}") from None


__all__ = ["SerializationError", "poly_to_json", "poly_from_json", "weierstrass_to_json",
           "weierstrass_from_json", "dumps", "load_file"]
