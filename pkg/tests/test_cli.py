import io
import subprocess
import sys

import pytest

from galhull.cli import main
from galhull.codefile import parse_code_file, serialize_code_file
from galhull.errors import GalHullError, ParseError
from galhull.field import field_new
from galhull.matrix import Matrix

F8_FILE = "field 2 3 1,1,0,1\nrows 2 4\n1 1 3 3\n0 5 1 0\n"
C1_FILE = "# C_1 over F_3\nfield 3 1 0,1\nrows 2 4\n1 0 1 1\n0 1 1 2\n"
C2_FILE = "field 3 1 0,1\nrows 1 4\n1 1 1 1\n"
A_FILE = "field 3 1 0,1\nrows 2 2\n1 1\n2 1\n"
F4_FILE = "field 2 2 1,1,1\nrows 1 2\n1 1\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [("f8", F8_FILE), ("c1", C1_FILE), ("c2", C2_FILE), ("a", A_FILE), ("f4", F4_FILE)]:
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(*argv):
    out = io.StringIO()
    status = main(list(argv), out)
    return status, out.getvalue()


def test_parse_examples():
    F, M = parse_code_file(F8_FILE)
    assert (F.p, F.e, F.modulus) == (2, 3, (1, 1, 0, 1))
    assert M.tolist() == [[1, 1, 3, 3], [0, 5, 1, 0]]
    F, M = parse_code_file(C2_FILE)
    assert F.q == 3 and M.tolist() == [[1, 1, 1, 1]]
    F, M = parse_code_file("field 2 1 0,1\nrows 0 4\n")
    assert M.shape == (0, 4)


def test_comments_anywhere():
    text = "# head\nfield 2 3 1,1,0,1\n\n# dims\nrows 2 4\n1 1 3 3\n# between rows\n0 5 1 0\n"
    assert parse_code_file(text) == parse_code_file(F8_FILE)


@pytest.mark.parametrize("text, line", [
    ("feld 2 3 1,1,0,1\nrows 1 1\n1\n", 1),
    ("field 2 3 1,1,0,1\nrows 1 4\n1 1 3 8\n", 3),           # entry >= q
    ("field 2 3 1,1,0,1\nrows 2 4\n1 1 3 3\n0 5 1\n", 4),     # short row
    ("field 2 3 1,1,0,1\nrows 2 4\n1 1 3 3\n", None),         # missing row
    ("field 2 3 1,1,0,1\ncols 2 4\n", 2),
    ("field 2 3 1,x,0,1\nrows 1 1\n1\n", 1),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_code_file(text)
    assert exc.value.code == "E_PARSE"
    if line is not None:
        assert f"line {line}" in str(exc.value)


def test_parse_rejects_reducible_modulus():
    with pytest.raises(GalHullError):
        parse_code_file("field 2 2 1,0,1\nrows 1 1\n1\n")


def test_round_trip():
    for text in (F8_FILE, C2_FILE, F4_FILE, "field 2 1 0,1\nrows 0 4\n"):
        F, M = parse_code_file(text)
        again = serialize_code_file(F, M)
        assert again == text
        assert parse_code_file(again) == (F, M)
    F = field_new(5, 2)
    M = Matrix(F, [[24, 0, 7], [3, 3, 3]])
    assert parse_code_file(serialize_code_file(F, M)) == (F, M)


def test_hull_command(files):
    status, out = run("hull", "--code", files["f8"], "--ell", "1")
    assert status == 0
    lines = out.splitlines()
    assert "h = 1" in lines
    i = lines.index("gram:")
    assert lines[i + 1:i + 3] == ["0 4", "0 7"]
    assert "hull generator:" in lines and "structured generator:" in lines


def test_check_command(files):
    # C_1 is self-orthogonal and C_2 is LCD; see the notes on the worked example
    status, out = run("check", "--code", files["c1"], "--ell", "0")
    assert status == 0
    assert out.splitlines() == ["lcd: false", "self-orthogonal: true", "self-dual: true"]
    _, out = run("check", "--code", files["c2"], "--ell", "0")
    assert out.splitlines()[0] == "lcd: true"


def test_dual_command(files):
    status, out = run("dual", "--code", files["c2"], "--ell", "0")
    assert status == 0
    assert out.splitlines()[-3:] == ["1 0 0 2", "0 1 0 2", "0 0 1 2"]


def test_lcd_search_command(files):
    status, out = run("lcd-search", "--code", files["f4"], "--ell", "1")
    assert status == 0
    assert out.splitlines() == ["found: false", "exhausted: true", "evaluations: 3"]
    _, out = run("lcd-search", "--code", files["f8"], "--ell", "1")
    assert "found: true" in out and "generator:" in out


def test_mpc_command(files):
    codes = f"{files['c1']},{files['c2']}"
    status, out = run("mpc", "--codes", codes, "--matrix", files["a"], "--ell", "0", "--hull", "--bounds")
    assert status == 0
    lines = out.splitlines()
    assert lines[:4] == ["mpc generator:", "1 0 1 1 1 0 1 1", "0 1 1 2 0 1 1 2", "2 2 2 2 1 1 1 1"]
    assert lines[4:7] == ["hull generator:", "1 0 1 1 1 0 1 1", "0 1 1 2 0 1 1 2"]
    assert "bounds: 2 <= dim hull <= 2" in lines and "triangular: true" in lines


def test_mpc_nondiagonal_is_domain_error(files, tmp_path, capsys):
    p = tmp_path / "tri.txt"
    p.write_text("field 3 1 0,1\nrows 2 2\n1 0\n1 1\n")
    status, _ = run("mpc", "--codes", f"{files['c2']},{files['c2']}", "--matrix", str(p), "--ell", "0", "--hull")
    assert status == 1
    assert "E_NONDIAGONAL_GRAM" in capsys.readouterr().err


def test_verify_examples():
    status, out = run("verify-examples")
    lines = out.splitlines()
    assert status == 0 and lines
    assert all(line.startswith("PASS ") for line in lines)


def test_domain_errors_exit_one(files, tmp_path, capsys):
    assert run("hull", "--code", files["f8"], "--ell", "3")[0] == 1
    assert "E_LEVEL" in capsys.readouterr().err
    assert run("hull", "--code", str(tmp_path / "missing.txt"), "--ell", "0")[0] == 1
    assert "E_IO" in capsys.readouterr().err
    bad = tmp_path / "bad.txt"
    bad.write_text("field 2 3 1,1,0,1\nrows 1 4\n1 1 3 9\n")
    assert run("check", "--code", str(bad), "--ell", "0")[0] == 1
    err = capsys.readouterr().err
    assert err.startswith("error: E_PARSE") and "line 3" in err
    assert run("mpc", "--codes", f"{files['c2']},{files['f8']}", "--matrix", files["a"], "--ell", "0")[0] == 1


def test_usage_error_exits_two(files):
    with pytest.raises(SystemExit) as exc:
        main(["hull", "--code", files["f8"]])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_zero_code_file(tmp_path):
    p = tmp_path / "zero.txt"
    p.write_text("field 2 1 0,1\nrows 0 4\n")
    status, out = run("hull", "--code", str(p), "--ell", "0")
    assert status == 0
    assert "code: [4,0]" in out and "h = 0" in out and "(empty)" in out


def test_output_is_deterministic(files):
    argv = ["lcd-search", "--code", files["f8"], "--ell", "1", "--strategy", "seeded-random", "--seed", "7"]
    assert run(*argv) == run(*argv)
    assert run("hull", "--code", files["f8"], "--ell", "2") == run("hull", "--code", files["f8"], "--ell", "2")


def test_module_entry_point(files):
    args = [sys.executable, "-m", "galhull", "hull", "--code", files["f8"], "--ell", "1"]
    a = subprocess.run(args, capture_output=True, check=True)
    b = subprocess.run(args, capture_output=True, check=True)
    assert a.stdout == b.stdout and b"h = 1" in a.stdout
    bad = subprocess.run([sys.executable, "-m", "galhull", "hull"], capture_output=True)
    assert bad.returncode == 2
