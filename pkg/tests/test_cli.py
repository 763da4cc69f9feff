import io
import json
import subprocess
import sys

import pytest

from orifrac import data_path
from orifrac.cli import run
from orifrac.formats import read_coloring, read_suborientation

C7 = str(data_path("c7.dg"))
FIG1 = str(data_path("fig1.col"))


def call(*argv):
    buf = io.StringIO()
    status = run([str(a) for a in argv], buf)
    out = {}
    for line in buf.getvalue().splitlines():
        key, _, value = line.partition(": ")
        out[key] = value
    return status, out


def call_json(*argv):
    buf = io.StringIO()
    status = run([str(a) for a in argv] + ["--json"], buf)
    return status, json.loads(buf.getvalue())


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def test_verify_valid():
    status, out = call("verify", "--graph", C7, "--coloring", FIG1)
    assert status == 0 and out["result"] == "valid, ratio 7/2"


def test_verify_invalid(write):
    bad = write("bad.col", "k 7 b 2\n0: 0,1\n1: 2,3\n2: 4,5\n3: 6,0\n4: 0,2\n5: 3,4\n6: 5,6\n")
    status, out = call("verify", "--graph", C7, "--coloring", bad)
    assert status == 1 and out["result"] == "invalid"
    assert "violation" in out


def test_malformed_input_exits_64(write):
    bad = write("bad.dg", "n 3\n0 1\n1 0\n")
    status, out = call("verify", "--graph", bad, "--coloring", FIG1)
    assert status == 64 and "bad.dg:3" in out["error"]
    status, _ = call("verify", "--graph", "/nonexistent.dg", "--coloring", FIG1)
    assert status == 64


def test_usage_error_exits_64():
    with pytest.raises(SystemExit) as err:
        run(["solve", "bfold", "--graph", C7], io.StringIO())
    assert err.value.code == 64


def test_solve_bfold(tmp_path):
    cert = tmp_path / "c.col"
    status, out = call("solve", "bfold", "--graph", C7, "--b", 2, "--k", 7, "--out", cert)
    assert status == 0 and out["outcome"] == "exists" and out["ratio"] == "7/2"
    assert read_coloring(cert).ratio() == 3.5
    status, out = call("solve", "bfold", "--graph", C7, "--b", 2, "--k", 6)
    assert status == 1 and out["outcome"] == "not-exists (exhaustive)"


def test_solve_budget_exhaustion(write):
    c13 = write("c13.dg", "n 13\n" + "".join(f"{i} {(i + 1) % 13}\n" for i in range(13)))
    status, out = call("solve", "bfold", "--graph", c13, "--b", 3, "--k", 11,
                       "--symmetry", "root", "--budget-nodes", 10)
    assert status == 2 and out["outcome"].startswith("inconclusive")


def test_solve_chi_and_backends():
    for backend in ("python", "auto"):
        status, out = call("solve", "chi-o", "--graph", C7, "--backend", backend)
        assert status == 0 and out["chi_o"] == "4"
    status, out = call("solve", "chi-b", "--graph", C7, "--b", 2)
    assert status == 0 and out["chi_2"] == "7" and out["k=6"] == "not-exists"


def test_solve_sweep_and_json():
    status, rep = call_json("solve", "sweep", "--graph", C7, "--bmax", 2)
    assert status == 0
    assert rep["lower"] == "7/2" and rep["upper"] == "7/2" and rep["chi_o"] == 4
    assert rep["tight"] == "yes" and rep["lower_source"] == "counting"


def test_solve_hom(tmp_path):
    t0 = tmp_path / "t0.dg"
    assert call("target", "build", "--l", 0, "--out", t0)[0] == 0
    c10 = tmp_path / "c10.dg"
    c10.write_text("n 10\n" + "".join(f"{i} {(i + 1) % 10}\n" for i in range(10)))
    status, out = call("solve", "hom", "--from", c10, "--to", t0)
    assert status == 0 and out["outcome"] == "exists" and len(out["map"].split()) == 10
    # +1/+2 steps mod 5 close up after 7 arcs; T_0 contains a triangle, which C_7 lacks
    assert call("solve", "hom", "--from", C7, "--to", t0)[1]["outcome"] == "exists"
    status, out = call("solve", "hom", "--from", t0, "--to", C7)
    assert status == 1 and out["outcome"] == "not-exists"


def test_cycle_commands(tmp_path):
    assert call("cycle", "value", "--r", 11)[1]["value"] == "11/3 (case d, p=11)"
    assert call("cycle", "value", "--r", 9)[1]["value"] == "3 (case a)"
    status, out = call("cycle", "beta", "--r", 35)
    assert out["beta"] == "1/2" and out["p"] == "7"
    assert call("cycle", "beta", "--r", 4)[0] == 64
    col = tmp_path / "c11.col"
    status, out = call("cycle", "construct", "--r", 11, "--out", col)
    assert status == 0 and (out["k"], out["b"], out["ratio"]) == ("11", "3", "11/3")
    status, out = call("cycle", "analyze", "--r", 11, "--coloring", col)
    assert status == 0 and out["quads_between_triples"] == "2" and out["triples"] == "1"
    status, out = call("cycle", "analyze", "--r", 7, "--coloring", FIG1)
    assert out["blocks"] == "T Q" and out["t_row_0"] == "1001100"
    assert call("cycle", "construct", "--r", 13)[0] == 64


def test_target_commands(tmp_path):
    g = tmp_path / "t1.dg"
    status, out = call("target", "build", "--l", 1, "--out", g)
    assert status == 0 and (out["n"], out["arcs"]) == ("9", "18")
    status, out = call("target", "nice", "--graph", g, "--k", 9)
    assert status == 0 and out["outcome"] == "nice"
    status, out = call("target", "nice", "--graph", g, "--k", 6)
    assert status == 1 and out["outcome"] == "counterexample" and len(out["signs"]) == 6
    status, out = call("target", "coloring", "--l", 2)
    assert status == 0 and out["ratio"] == "17/4" and out["valid"] == "yes"
    status, out = call("target", "epsilon", "--eps", "1/3")
    assert status == 0 and (out["l"], out["n"], out["girth"], out["bound"]) == ("2", "17", "84", "17/4")
    assert call("target", "epsilon", "--eps", "abc")[0] == 64
    assert call("target", "build", "--l", 9)[0] == 64


def test_kneser_commands(tmp_path):
    sub = tmp_path / "s.sub"
    status, out = call("kneser", "extract", "--graph", C7, "--coloring", FIG1, "--out", sub)
    assert status == 0 and out["consistent"] == "yes" and out["vertices"] == "7"
    assert call("kneser", "check", "--graph", sub)[1]["result"] == "consistent"
    big = tmp_path / "big.sub"
    status, out = call("kneser", "blowup", "--graph", sub, "--c", 3, "--out", big)
    assert status == 0 and (out["a"], out["b"]) == ("21", "6")
    assert read_suborientation(big).b == 6
    bad = tmp_path / "bad.sub"
    bad.write_text("n 4\nkneser 7 2\n0 1\n2 3\nlabel 0 1,2\nlabel 1 3,4\nlabel 2 3,5\nlabel 3 1,6\n")
    assert call("kneser", "check", "--graph", bad)[0] == 1


def test_manifest(tmp_path):
    m = tmp_path / "run.json"
    status, _ = call("verify", "--graph", C7, "--coloring", FIG1, "--manifest", m)
    data = json.loads(m.read_text())
    assert status == 0
    assert set(data) == {"command", "inputs", "outcome", "certificates"}
    assert C7 in data["inputs"] and len(data["inputs"][C7]) == 64
    assert data["outcome"]["exit"] == 0


def test_reproduce_planar():
    status, out = call("reproduce", "planar")
    assert status == 0 and out["suite"].startswith("planar:")
    assert all(v.startswith("PASS") for k, v in out.items() if k.startswith("T_"))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orifrac", "cycle", "value", "--r", "7"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "value: 7/2 (case d, p=7)" in proc.stdout
