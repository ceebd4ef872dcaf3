import io
import json
import subprocess
import sys

import pytest

from signedperm.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_stats():
    code, out, _ = call("stats", "--perm", "3,-2,-5,1,-4", "--order", "natural")
    data = json.loads(out)
    assert code == 0
    assert (data["des"], data["ides"], data["negatives"]) == (3, 2, 3)
    assert data["descent_set"] == [1, 2, 4]
    code, out, _ = call("stats", "--perm", "3,-2,-5,1,-4", "--format", "text")
    assert "des: 3" in out.splitlines()


def test_triangle_csv():
    code, out, _ = call("triangle", "--n", "1", "--order", "natural", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["i\\j,0,1", "0,1,0", "1,0,1"]


def test_triangle_json_and_text():
    _, out, _ = call("triangle", "--n", "2", "--format", "json", "--order", "r")
    assert sum(map(sum, json.loads(out)["counts"])) == 8
    code, out, _ = call("triangle", "--n", "2", "--format", "text")
    assert code == 0 and out


def test_involutions():
    _, out, _ = call("involutions", "--n", "4", "--family", "fpf", "--order", "r", "--format", "json")
    assert json.loads(out)["counts"] == [0, 1, 5, 5, 1]


def test_figures(tmp_path):
    tri, vec = tmp_path / "tri.png", tmp_path / "vec.png"
    assert call("triangle", "--n", "3", "--figure", str(tri))[0] == 0
    assert call("involutions", "--n", "4", "--figure", str(vec))[0] == 0
    assert tri.read_bytes()[:4] == vec.read_bytes()[:4] == b"\x89PNG"


def test_trace():
    code, out, _ = call("trace", "--perm", "1,2", "--kind", "0h", "--sign", "+")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "# grid of 1,2"
    assert lines[3].startswith("# path 1 kind 0h sign + order natural touch 1,1")
    assert lines[4:] == ["1,1", "2,2", "3,3"]
    code, out, _ = call("trace", "--perm", "1,2", "--kind", "0h", "--start", "1,1")
    assert code == 0
    code, _, err = call("trace", "--perm", "1,2", "--kind", "1h", "--start", "1,1")
    assert code == 2 and "d_h" in err


def test_dtypes():
    code, out, _ = call("dtypes", "--perm", "2,-4,3,-1,5")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "row,col,plus_p,plus_q,minus_p,minus_q"
    assert len(lines) == 1 + 36
    code, out, _ = call("dtypes", "--perm", "2,-4,3,-1,5", "--counts")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert data["brute_force"] == data["closed_form"]


def test_genfun():
    code, out, _ = call("genfun", "--family", "jub", "--max-x", "4", "--max-t", "4")
    assert code == 0 and json.loads(out)["equal"]


@pytest.mark.parametrize("suite", ["rec-b", "rec-i", "rec-j", "pde", "paths", "equidist"])
def test_verify_suites(suite):
    code, out, _ = call("verify", suite, "--max-n", "4")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_is_byte_stable_across_workers():
    one = call("verify", "bijection", "--max-n", "4", "--workers", "1")
    two = call("verify", "bijection", "--max-n", "4", "--workers", "2")
    assert one == two and one[0] == 0
    again = call("verify", "dtypes", "--max-n", "5", "--samples", "20", "--seed", "3")
    assert again == call("verify", "dtypes", "--max-n", "5", "--samples", "20", "--seed", "3")


def test_usage_errors():
    assert call("stats", "--perm", "1,1")[0] == 2
    assert call("stats", "--perm", "1,x")[0] == 2
    assert call("nope")[0] == 2
    assert call("triangle", "--n", "-1")[0] == 2
    assert call("stats", "--perm", "1", "--order", "lex")[0] == 2


def test_resource_cap(monkeypatch):
    # the flag writes the env var; register it so teardown restores it
    monkeypatch.setenv("SIGNEDPERM_MAX_ENUM", "2000000")
    code, _, err = call("triangle", "--n", "5", "--max-enum", "100")
    assert code == 2 and "error" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "signedperm", "stats", "--perm", "2,1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["fpf_involution"] is True
