"""Command line front end.

    char2quartic analyze SURFACE.json [--seed S] [--max-ext K] [--cap C] [--lattice]
    char2quartic family {a3,special,insep,dualplane} [--m M] [--seed S] [--out FILE]
    char2quartic fibration MODEL.json | --example {istar0,two-istar4}

Exit codes: 0 success, 1 malformed input or unknown family, 2 non-normal
surface or quasi-elliptic model, 3 certification or verification failure.
JSON is the primary output; ``--format text`` prints a summary derived from it.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
import os
import sys

from . import families as fam
from . import fibrations as fib
from . import kodaira
from .algebra.field import FieldElem
from .algebra.serialization import (SerializationError, dumps, load_file, poly_from_json, poly_to_json,
                                    weierstrass_from_json)
from .errors import CertificationError, Char2Error, NonNormalError, PolyError, QuasiEllipticError
from .gauss_dual import degree_ledger, dual_plane_kernel, gauss_degree_if_dual_plane, report_configuration
from .singularities import DEFAULT_CAP, find_singular_points, surface

EXIT_OK, EXIT_INPUT, EXIT_NONNORMAL, EXIT_CERT = 0, 1, 2, 3
FAMILIES = ("a3", "special", "insep", "dualplane")


@dataclass
class RunConfig:
    command: str
    source: str | None
    m: int | None
    seed: int
    max_ext_degree: int
    fmt: str
    cap: int
    lattice: bool = False
    threads: int = 1

    def to_json(self) -> dict:
        return {"command": self.command, "source": self.source, "m": self.m, "seed": self.seed,
                "max_ext_degree": self.max_ext_degree, "cap": self.cap, "lattice": self.lattice}


def threads_from_env() -> int:
    raw = os.environ.get("CHAR2_THREADS")
    if raw is None or raw == "":
        return 1
    try:
        k = int(raw)
    except ValueError:
        raise SerializationError(f"CHAR2_THREADS={raw!r} is not an integer") from None
    if k < 1:
        raise SerializationError("CHAR2_THREADS must be positive")
    return k


def _emit(cfg: RunConfig, payload: dict, text_lines, out=None):
    out = out or sys.stdout
    if cfg.fmt == "json":
        out.write(dumps(payload))
    else:
        out.write("\n".join(text_lines) + "\n")


def _err(msg: str, code: int) -> int:
    sys.stderr.write(f"char2quartic: {msg}\n")
    return code


# -- analyze ------------------------------------------------------------------

def analyze_surface(X, cfg: RunConfig) -> dict:
    rep = find_singular_points(X, max_ext_degree=cfg.max_ext_degree, seed=cfg.seed, cap=cfg.cap)
    kernel = dual_plane_kernel(X)
    payload = {
        "config": cfg.to_json(),
        "surface": poly_to_json(X.F),
        "singular_locus": rep.to_json(),
        "kernel_dim": len(kernel),
        "degree_ledger": None,
        "gauss_degree": None,
        "configuration": report_configuration(rep).to_json(),
    }
    if rep.complete and all(isinstance(p.defect, int) for p in rep.points):
        led = degree_ledger(rep)
        payload["degree_ledger"] = led.to_json()
        payload["gauss_degree"] = str(gauss_degree_if_dual_plane(led, len(kernel))) \
            if len(kernel) != 1 else led.product
    if cfg.lattice:
        from .pic_lattice import lattice_from_report
        payload["lattice"] = lattice_from_report(rep)
    return payload


def _analyze_text(p: dict) -> list[str]:
    loc = p["singular_locus"]
    lines = [f"singular points: {loc['geometric_count']} (nu={loc['nu']}, b={loc['b']}, u={loc['u']})",
             f"total length: {loc['total_length']}  complete: {loc['complete']}"]
    for pt in loc["points"]:
        lines.append(f"  [{','.join(pt['point'])}] GF(2^{pt['field_n']}) orbit {pt['orbit_size']}: "
                     f"{pt['kind']} defect {pt['defect']} length {pt['local_length']} {pt['rdp_status']}")
    led = p["degree_ledger"]
    if led:
        lines.append(f"defect sum {led['defect_sum']}  product {led['product']}  bound ok: {led['bound_ok']}")
    lines.append(f"dual-plane kernel dimension: {p['kernel_dim']}")
    conf = p["configuration"]
    lines.append(f"max collinear {conf['max_collinear']}  max coplanar {conf['max_coplanar']}  "
                 f"point with two companions: {conf['has_point_with_two_companions']}")
    if "lattice" in p:
        lat = p["lattice"]
        lines.append(f"lattice rank {lat['rank']}  even {lat['even']}  "
                     f"negative definite {lat['exceptional_negative_definite']}")
    return lines


def cmd_analyze(cfg: RunConfig) -> int:
    try:
        F = poly_from_json(load_file(cfg.source))
        X = surface(F, cfg.m)
    except (SerializationError, PolyError) as exc:
        return _err(str(exc), EXIT_INPUT)
    try:
        payload = analyze_surface(X, cfg)
    except NonNormalError as exc:
        return _err(f"non-normal surface: {exc}", EXIT_NONNORMAL)
    except CertificationError as exc:
        return _err(f"certification failed: {exc}", EXIT_CERT)
    _emit(cfg, payload, _analyze_text(payload))
    return EXIT_OK


# -- family -------------------------------------------------------------------

def build_family(name: str, m: int, seed: int, lam: int = 0):
    if name == "a3":
        return fam.family_a3(fam.klein_form(2, m), m)
    if name == "special":
        return fam.family_special(fam.klein_form(2, m), m)
    if name == "insep":
        return fam.family_insep(fam.general_quartic(m, seed), m)
    if name == "dualplane":
        return fam.family_dual_plane(FieldElem(m, lam), fam.general_quartic(m, seed), m)
    raise KeyError(name)


def verify_family(name: str, X, seed: int, lam: int = 0):
    if name == "a3":
        return fam.verify_a3(X, seed)
    if name == "special":
        return fam.verify_special(X, seed)
    if name == "insep":
        return fam.verify_insep(X, seed)
    return fam.verify_dual_plane(X, seed, special=(lam == 0))


def cmd_family(cfg: RunConfig, name: str, lam: int = 0, out_path: str | None = None) -> int:
    if name not in FAMILIES:
        return _err(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}", EXIT_INPUT)
    m = cfg.m or 3
    if lam < 0 or lam >= 1 << m:
        return _err(f"lambda {lam:x} is not in GF(2^{m})", EXIT_INPUT)
    try:
        X = build_family(name, m, cfg.seed, lam)
    except PolyError as exc:
        return _err(str(exc), EXIT_INPUT)
    ver = verify_family(name, X, cfg.seed, lam)
    payload = {"config": cfg.to_json(), "family": name, "surface": poly_to_json(X.F),
               "verification": ver.to_json()}
    if name == "dualplane":
        payload["lambda"] = format(lam, "x")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(dumps(poly_to_json(X.F)))
    lines = [f"family {name} over GF(2^{m}), seed {cfg.seed}: {'ok' if ver.ok else 'FAILED'}"]
    lines += [f"  {d}" for d in ver.to_json()["diagnostics"]]
    vj = ver.to_json()
    for key in ("lengths", "census", "details"):
        if key in vj:
            lines.append(f"  {key}: {vj[key]}")
    _emit(cfg, payload, lines)
    return EXIT_OK if ver.ok else EXIT_CERT


# -- fibration ----------------------------------------------------------------

def fibration_payload(W, cfg: RunConfig) -> dict:
    led = fib.euler_ledger(W, cfg.max_ext_degree)
    disj = fib.max_disjoint_sum(led.places)
    return {
        "config": cfg.to_json(),
        "model": W.to_json(),
        "ledger": led.to_json(),
        "disjoint": disj.to_json(),
        "rank_lower_bound": fib.rank_lower_bound(led.places),
    }


def _fibration_text(p: dict) -> list[str]:
    led = p["ledger"]
    lines = [f"{'type':<6} {'count':>5} {'e':>3} {'delta':>5} {'N':>3}"]
    for f in led["fibers"]:
        lines.append(f"{f['type']:<6} {f['orbit_size']:>5} {f['e']:>3} {f['delta']:>5} {f['N']:>3}")
    lines.append(f"euler total {led['euler_total']}  sum N {led['sum_N']}  "
                 f"square discriminant {led['square_discriminant']}")
    return lines


EXAMPLES = {
    "istar0": lambda cfg: fib.istar0_square_family(cfg.m or 2, cfg.seed),
    "two-istar4": lambda cfg: fib.two_istar4_model(cfg.m or 2, cfg.seed),
}


def cmd_fibration(cfg: RunConfig, example: str | None = None) -> int:
    try:
        if example is not None:
            if example not in EXAMPLES:
                return _err(f"unknown example {example!r}", EXIT_INPUT)
            W = EXAMPLES[example](cfg)
        else:
            W = weierstrass_from_json(load_file(cfg.source))
    except SerializationError as exc:
        return _err(str(exc), EXIT_INPUT)
    if fib.is_quasi_elliptic(W):
        types = kodaira.quasi_elliptic_types()
        payload = {"config": cfg.to_json(), "model": W.to_json(), "quasi_elliptic": True,
                   "possible_fiber_types": types}
        _emit(cfg, payload, ["quasi-elliptic: a1 = a3 = 0", "possible fiber types: " + ", ".join(types)])
        return EXIT_NONNORMAL
    try:
        payload = fibration_payload(W, cfg)
    except fib.DegenerateModelError as exc:
        return _err(str(exc), EXIT_INPUT)
    except QuasiEllipticError as exc:
        return _err(str(exc), EXIT_NONNORMAL)
    except CertificationError as exc:
        return _err(f"certification failed: {exc}", EXIT_CERT)
    _emit(cfg, payload, _fibration_text(payload))
    return EXIT_OK


# -- entry point ----------------------------------------------------------------

class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2; input errors here exit with 1
    def error(self, message):
        raise _ArgError(message)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=None, help="field exponent of GF(2^m)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-ext", type=int, default=None, dest="max_ext")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="colength truncation cap")
    common.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")
    common.add_argument("--lattice", action="store_true")
    p = _Parser(prog="char2quartic", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="singularities of a quartic surface")
    a.add_argument("input")
    f = sub.add_parser("family", parents=[common], help="build and verify a named family")
    f.add_argument("name")
    f.add_argument("--lambda", dest="lam", default="0", help="hex parameter for dualplane")
    f.add_argument("--out", default=None, help="write the surface JSON here")
    w = sub.add_parser("fibration", parents=[common], help="fiber census of a Weierstrass model")
    w.add_argument("input", nargs="?")
    w.add_argument("--example", default=None)
    return p


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except _ArgError as exc:
        sys.stderr.write(parser.format_usage())
        return _err(str(exc), EXIT_INPUT)
    try:
        threads = threads_from_env()
    except SerializationError as exc:
        return _err(str(exc), EXIT_INPUT)
    if args.m is not None and not 1 <= args.m <= 32:
        return _err("--m must lie in 1..32", EXIT_INPUT)
    default_ext = 24 if args.command == "fibration" else 12
    cfg = RunConfig(args.command, getattr(args, "input", None), args.m, args.seed,
                    args.max_ext or default_ext, args.fmt, args.cap, args.lattice, threads)
    try:
        if args.command == "analyze":
            return cmd_analyze(cfg)
        if args.command == "family":
            try:
                lam = int(args.lam, 16)
            except ValueError:
                return _err(f"bad lambda {args.lam!r}", EXIT_INPUT)
            return cmd_family(cfg, args.name, lam, args.out)
        if args.input is None and args.example is None:
            return _err("fibration needs an input file or --example", EXIT_INPUT)
        return cmd_fibration(cfg, args.example)
    except CertificationError as exc:
        return _err(f"certification failed: {exc}", EXIT_CERT)
    except Char2Error as exc:
        return _err(str(exc), EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
