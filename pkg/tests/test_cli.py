import json
import subprocess
import sys

import pytest

from statesum.catdata import load_category, verify_consistency
from statesum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariant_fibonacci(capsys):
    code, out, _ = run(capsys, "invariant", "--manifold", "s3_2tet", "--category", "fibonacci")
    assert code == 0
    assert "value: (5 - 1*g)/10" in out and "approx: 0.276" in out and "labelings:" in out


def test_invariant_json(capsys):
    code, out, _ = run(capsys, "invariant", "--manifold", "t3", "--category", "vec_z2", "--format", "json")
    assert code == 0 and json.loads(out)["value"] == "4"


def test_missing_file_exit_2(capsys, tmp_path):
    missing = tmp_path / "nothing.json"
    code, _, err = run(capsys, "invariant", "--complex", str(missing), "--category", "vec_z2")
    assert code == 2 and str(missing) in err
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    code, _, err = run(capsys, "validate", "--category", str(bad))
    assert code == 2


def test_dimension_mismatch_exit_1(capsys):
    code, _, err = run(capsys, "invariant", "--manifold", "t2", "--category", "vec_z2")
    assert code == 1 and "dimension mismatch" in err


def test_dw_and_oracles(capsys):
    code, out, _ = run(capsys, "dw", "--manifold", "t3", "--group", "z2", "--format", "exact")
    assert code == 0 and "value: 4" in out
    code, out, _ = run(capsys, "oracle", "homcount", "--pi1", "t3", "--group", "z2")
    assert code == 0 and "value: 8" in out
    code, out, _ = run(capsys, "oracle", "brute-labelings", "--manifold", "s3_2tet", "--category", "vec_z2")
    assert code == 0 and "value: 2" in out


def test_unsupported_group(capsys):
    code, _, err = run(capsys, "dw", "--manifold", "t3", "--group", "a5")
    assert code != 0 and "unsupported group" in err


def test_surgery(capsys):
    code, out, _ = run(capsys, "surgery", "--matrix", "[[0]]", "--wrt")
    assert code == 0 and "value: 1" in out
    code, out, _ = run(capsys, "surgery", "--matrix", "[]")
    assert code == 0 and "components: 0" in out
    code, _, _ = run(capsys, "surgery", "--matrix", "[[1, 2], [3, 4]]")
    assert code != 0


def test_n1(capsys):
    code, out, _ = run(capsys, "n1", "--manifold", "rp2", "--category", "onecat_swap", "--unoriented")
    assert code == 0 and "value: 0" in out
    code, out, _ = run(capsys, "n1", "--manifold", "s2", "--category", "onecat_23", "--format", "json")
    assert code == 0 and json.loads(out)["value"] == "13"


def test_flip_test(capsys):
    code, out, _ = run(capsys, "flip-test", "--manifold", "s3_2tet", "--category", "fibonacci", "--flips", "10")
    assert code == 0 and "PASS" in out and "values: 11" in out
    code, out, _ = run(capsys, "flip-test", "--manifold", "rp3", "--group", "z3", "--flips", "5", "--seed", "7")
    assert code == 0 and "PASS" in out


def test_flip_count_usage_error(capsys):
    code, _, err = run(capsys, "flip-test", "--manifold", "s3_2tet", "--category", "vec_z2", "--flips", "0")
    assert code == 2 and "--flips" in err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", "--category", "fibonacci")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "validate", "--manifold", "rp3")
    assert code == 0


def test_gen_roundtrip(capsys, tmp_path):
    out_file = tmp_path / "z3.json"
    assert run(capsys, "gen", "repg", "--group", "s3", "--out", str(out_file))[0] == 0
    d = load_category(out_file)
    assert verify_consistency(d).ok
    first = out_file.read_text()
    run(capsys, "gen", "repg", "--group", "s3", "--out", str(out_file))
    assert out_file.read_text() == first
    code, out, _ = run(capsys, "gen", "pointed", "--n", "3")
    assert code == 0 and json.loads(out)["kind"] == "pointed"


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and "s3_minimal" in out and "fibonacci" in out


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "statesum.cli", "invariant", "--manifold", "s3_1vertex",
                        "--category", "vec_z2", "--format", "exact"], capture_output=True, text=True)
    assert r.returncode == 0 and "value: 1/2" in r.stdout


@pytest.mark.parametrize("fmt", ["exact", "exact+approx"])
def test_formats(capsys, fmt):
    code, out, _ = run(capsys, "invariant", "--manifold", "s3_2tet", "--category", "vec_z2", "--format", fmt)
    assert code == 0 and ("approx" in out) == (fmt == "exact+approx")
