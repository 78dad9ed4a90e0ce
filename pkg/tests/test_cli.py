import json
import subprocess
import sys

import pytest

from char2quartic.algebra.poly import MultiPoly
from char2quartic.algebra.serialization import dumps, poly_to_json, weierstrass_to_json
from char2quartic.cli import main
from char2quartic.fibrations import WeierstrassModel


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(dumps(obj))
    return str(p)


def test_family_special_ok(capsys):
    code, out, _ = run(["family", "special", "--m", "3", "--seed", "7"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["verification"]["ok"]


def test_family_json_is_byte_identical(capsys):
    a = run(["family", "a3", "--m", "3", "--seed", "2"], capsys)[1]
    b = run(["family", "a3", "--m", "3", "--seed", "2"], capsys)[1]
    assert a == b and a.endswith("\n")


def test_analyze_round_trip(tmp_path, capsys):
    out = tmp_path / "s.json"
    assert run(["family", "special", "--m", "3", "--seed", "7", "--out", str(out)], capsys)[0] == 0
    code, text, _ = run(["analyze", str(out), "--lattice"], capsys)
    assert code == 0
    d = json.loads(text)
    assert {"singular_locus", "degree_ledger", "lattice"} <= d.keys()
    assert run(["analyze", str(out), "--lattice"], capsys)[1] == text


def test_text_format(capsys):
    code, out, _ = run(["fibration", "--example", "two-istar4", "--format", "text"], capsys)
    assert code == 0 and "I4*" in out and "euler total 24" in out


def test_fibration_examples(capsys):
    for ex, census in (("istar0", {"I2": 8, "I0*": 1}), ("two-istar4", {"I4*": 2})):
        code, out, _ = run(["fibration", "--example", ex], capsys)
        assert code == 0
        led = json.loads(out)["ledger"]
        assert led["census"] == census and led["euler_total"] == 24 and led["sum_N"] == 12


def test_quasi_elliptic_exit_2(tmp_path, capsys):
    W = WeierstrassModel.from_lists([[], [1], [], [0, 1], [1, 0, 1]], 1)
    code, out, _ = run(["fibration", write(tmp_path, "q.json", weierstrass_to_json(W))], capsys)
    assert code == 2
    assert json.loads(out)["possible_fiber_types"] == ["II", "III", "I2n*", "III*", "II*"]


def test_vanishing_discriminant_exit_1(tmp_path, capsys):
    W = WeierstrassModel.from_lists([[1], [], [], [], []], 1)
    code, _, err = run(["fibration", write(tmp_path, "d.json", weierstrass_to_json(W))], capsys)
    assert code == 1 and "discriminant" in err


def test_non_normal_exit_2(tmp_path, capsys):
    P = MultiPoly(4, {(2, 2, 0, 0): 1, (2, 0, 1, 1): 1}, 1)
    code, _, err = run(["analyze", write(tmp_path, "n.json", poly_to_json(P))], capsys)
    assert code == 2 and "non-normal" in err


def test_certification_exit_3(tmp_path, capsys):
    W = WeierstrassModel.from_lists([[1, 1, 1], [], [1, 1, 1], [], [1]], 1)
    code, _, err = run(["fibration", write(tmp_path, "w.json", weierstrass_to_json(W)), "--max-ext", "1"], capsys)
    assert code == 3 and "certification" in err


@pytest.mark.parametrize("argv", [
    ["family", "bogus"],
    ["family", "dualplane", "--m", "2", "--lambda", "9"],
    ["family", "dualplane", "--lambda", "xyz"],
    ["fibration"],
    ["fibration", "--example", "nope"],
    ["analyze", "/nonexistent/file.json"],
    ["analyze"],
    ["nosuchcommand"],
    ["family", "a3", "--m", "99"],
    ["fibration", "--example", "istar0", "--format", "yaml"],
])
def test_input_errors_exit_1(argv, capsys):
    assert run(argv, capsys)[0] == 1


def test_malformed_file_exit_1(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"vars": 4, "field": {"m": 2}, "terms": [{"exp": [1, 1], "coef": "1"}]}')
    assert run(["analyze", str(p)], capsys)[0] == 1
    assert run(["fibration", str(p)], capsys)[0] == 1


def test_bad_thread_env(monkeypatch, capsys):
    monkeypatch.setenv("CHAR2_THREADS", "zero")
    assert run(["fibration", "--example", "istar0"], capsys)[0] == 1


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "char2quartic.cli", "fibration", "--example", "istar0"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["ledger"]["euler_total"] == 24
