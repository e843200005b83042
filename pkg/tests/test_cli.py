import subprocess
import sys

import pytest

from staircase.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dist_linear(capsys):
    code, out, _ = run(capsys, "dist", "--k", "3", "--n", "2", "--kind", "linear",
                       "--format", "csv")
    assert code == 0
    assert out == "n,k,kind,m,count\n2,3,linear,0,2\n2,3,linear,1,7\n"


def test_dist_single_row(capsys):
    code, out, _ = run(capsys, "dist", "--k", "2", "--n", "3", "--format", "csv")
    assert out.splitlines()[1:] == ["3,2,linear,2,8"]


def test_dist_cyclic(capsys):
    code, out, _ = run(capsys, "dist", "--k", "3", "--n", "2", "--kind", "cyclic",
                       "--format", "csv")
    assert out.splitlines()[1:] == ["2,3,cyclic,0,2", "2,3,cyclic,2,7"]


def test_dist_plain_and_dp(capsys):
    code, out, _ = run(capsys, "dist", "--k", "5", "--n", "14", "--method", "dp")
    assert code == 0
    assert out.splitlines()[0].split() == ["n", "k", "kind", "m", "count"]


def test_dist_budget(capsys):
    code, _, err = run(capsys, "dist", "--k", "12", "--n", "12")
    assert code == 3 and "budget" in err


@pytest.mark.parametrize("argv", [
    ["dist", "--k", "1", "--n", "2"],
    ["dist", "--k", "3"],
    ["dist", "--k", "3", "--n", "-1"],
    ["dist", "--k", "3", "--n", "2", "--kind", "spiral"],
    ["gf", "--k", "9"],
    ["gf", "--k", "3", "--order", "-1"],
    ["verify", "--scope", "q", "--k-max", "13"],
    ["verify", "--scope", "matrix", "--k-max", "1"],
    ["nonsense"],
])
def test_bad_arguments(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_gf_table_row(capsys):
    code, out, _ = run(capsys, "gf", "--k", "3", "--which", "cyclic-hertzsprung",
                       "--order", "6")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "closed: (x^2 + 1) / (-x^2 + 1)"
    assert [ln.split()[1] for ln in lines[2:]] == ["1", "0", "2", "0", "2", "0", "2"]


def test_gf_staircase(capsys):
    code, out, _ = run(capsys, "gf", "--k", "3", "--which", "staircase", "--order", "4",
                       "--format", "csv")
    rows = out.splitlines()[2:]
    assert [r.split(",")[2] for r in rows] == ["1", "3", "7", "17", "41"]


def test_gf_F_two_letters(capsys):
    code, out, _ = run(capsys, "gf", "--k", "2", "--which", "F", "--order", "3",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "# closed: (-2*x*t + 2*x + 1) / (-2*x*t + 1)"
    assert out.splitlines()[2:] == ["0,0,1", "1,0,2", "2,1,4", "3,2,8"]


def test_gf_selfcheck_failure(capsys, monkeypatch):
    from staircase import cli
    from staircase.arith import Poly
    monkeypatch.setattr(cli, "_oracle", lambda which, n, k: Poly([n + 99], "t"))
    code, _, err = run(capsys, "gf", "--k", "3", "--which", "staircase", "--order", "3")
    assert code == 4 and "self-check" in err


def test_verify_matrix(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "matrix", "--k-max", "6", "--seed", "7")
    assert code == 0
    assert out.splitlines()[0] == "check,k,point,result,witness"
    assert ",fail," not in out


def test_verify_q_marks_ambiguous(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "q", "--k-max", "10")
    assert code == 0
    row25 = [ln for ln in out.splitlines() if ln.startswith("25,")][0]
    assert ",ambiguous," in row25


def test_verify_exit_on_unexplained_mismatch(capsys, monkeypatch):
    from staircase import qsums
    real = qsums.verify_all

    def broken(*a, **kw):
        entries = real(*a, **kw)
        entries[0].status = "mismatched"
        return entries
    monkeypatch.setattr(qsums, "verify_all", broken)
    code, out, _ = run(capsys, "verify", "--scope", "q", "--k-max", "3")
    assert code == 5 and out.startswith("id,")


def test_verify_all_deterministic(tmp_path):
    outs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        res = subprocess.run([sys.executable, "-m", "staircase", "verify", "--scope", "all",
                              "--seed", "3", "--k-max", "6", "--out", str(path)],
                             capture_output=True)
        assert res.returncode == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    blocks = outs[0].decode().split("\n\n")
    assert blocks[0].startswith("id,") and blocks[1].startswith("check,")


def test_help_lists_columns(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "n,k,kind,m,count" in out and "check,k,point,result,witness" in out
