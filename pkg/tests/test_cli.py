import io
import shutil
import subprocess
import sys

import pytest

from symquandle import formats
from symquandle.cli import main
from symquandle.fixtures import read_data
from symquandle.quandle import antipodal


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_make_dihedral_antipodal(capsys):
    code, out, _ = run(capsys, "quandle", "make-dihedral", "4", "--rho", "antipodal")
    assert code == 0
    s = formats.parse_quandle(out)
    assert s.rho == antipodal(4)


def test_make_dihedral_bad_rho(capsys):
    code, _, err = run(capsys, "quandle", "make-dihedral", "3", "--rho", "1,0,2")
    assert code == 2
    assert "FAIL" in err


def test_quandle_check(capsys):
    assert run(capsys, "quandle", "check", "@r4anti.qnd")[0] == 0
    code, _, err = run(capsys, "quandle", "check", "@bad.qnd")
    assert code == 2
    assert "Q2" in err


def test_involutions(capsys):
    code, out, _ = run(capsys, "quandle", "involutions", "@r8.qnd")
    assert code == 0
    rows = [line for line in out.splitlines() if not line.startswith("#")]
    assert len(rows) == 4
    assert out.splitlines()[-1] == "# 4 good involutions"


def test_make_conj_and_double_cover(capsys, tmp_path):
    code, out, _ = run(capsys, "quandle", "make-conj", "--group", "sym:3")
    assert code == 0 and formats.parse_quandle(out).n == 6
    p = tmp_path / "s3.qnd"
    p.write_text(out)
    code, out, _ = run(capsys, "quandle", "double-cover", str(p))
    assert code == 0 and formats.parse_quandle(out).n == 12
    assert run(capsys, "quandle", "make-conj", "--group", "dihedral:3")[0] == 1


def test_make_trivial(capsys):
    code, out, _ = run(capsys, "quandle", "make-trivial", "2", "--rho", "1,0")
    assert code == 0
    assert formats.parse_quandle(out).rho == (1, 0)


def test_group_abelianize(capsys):
    assert run(capsys, "group", "abelianize", "--sym", "@t2swap.qnd")[1] == "Z\n"
    assert run(capsys, "group", "abelianize", "@t2id.qnd")[1] == "Z^2\n"
    assert run(capsys, "group", "abelianize", "--sym", "@t1.qnd")[1] == "Z/2\n"
    code, out, _ = run(capsys, "group", "present", "--sym", "@t1.qnd")
    assert code == 0 and out.startswith("gen 1")


def test_cocycle_check(capsys, tmp_path):
    code, out, _ = run(capsys, "cocycle", "check", "@mochizuki.cyc", "--quandle", "@r3id.qnd",
                       "--xset", "X")
    assert (code, out) == (0, "OK\n")
    bad = read_data("mochizuki.cyc").rstrip("\n").splitlines()
    bad.append("0 0 1 1")
    p = tmp_path / "bad.cyc"
    p.write_text("\n".join(bad) + "\n")
    code, out, _ = run(capsys, "cocycle", "check", str(p), "--quandle", "@r3id.qnd", "--xset", "X")
    assert code == 2 and out.startswith("FAIL")


@pytest.mark.parametrize("cyc, q", [("ex81.cyc", "@t6pair.qnd"), ("ex82.cyc", "@t2id.qnd"),
                                    ("ex83.cyc", "@r4anti.qnd"), ("ex68.cyc", "@t4pair.qnd")])
def test_bundled_cocycles_check(capsys, cyc, q):
    assert run(capsys, "cocycle", "check", "@" + cyc, "--quandle", q) == (0, "OK\n", "")


def test_homology_line(capsys):
    code, out, _ = run(capsys, "homology", "--variant", "Qrho", "--degree", "1",
                       "--quandle", "@t1.qnd")
    assert code == 0
    assert out == "H_1^Qrho = Z/2\n"
    code, out, _ = run(capsys, "homology", "--variant", "Q", "--degree", "2",
                       "--quandle", "@r3id.qnd", "--xset", "X")
    assert code == 0 and out.startswith("H_2^Q = ")


def test_invariant_trefoil(capsys):
    code, out, _ = run(capsys, "invariant", "--pd", "@trefoil.pd", "--quandle", "@r3id.qnd",
                       "--xset", "X", "--cocycle", "@mochizuki.cyc", "--unbounded-face", "auto",
                       "--base-color", "0")
    assert (code, out) == (0, "0:3 1:6\n")
    code, out, _ = run(capsys, "invariant", "--pd", "@mirror.pd", "--quandle", "@r3id.qnd",
                       "--xset", "X", "--cocycle", "@mochizuki.cyc", "--base-color", "0")
    assert out == "0:3 2:6\n"


def test_invariant_orientation_and_classes(capsys):
    base = ["invariant", "--pd", "@hopf.pd", "--quandle", "@t4pair.qnd", "--cocycle", "@ex68.cyc"]
    outs = {run(capsys, *base, "--orientation", o)[1] for o in ("00", "01", "10", "11")}
    outs.add(run(capsys, *base)[1])
    assert len(outs) == 1
    code, out, _ = run(capsys, "invariant", "--pd", "@trefoil.pd", "--quandle", "@r3id.qnd",
                       "--xset", "X", "--classes")
    assert code == 0 and out.strip()


def test_invariant_needs_cocycle(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["invariant", "--pd", "@trefoil.pd", "--quandle", "@r3id.qnd"])
    assert exc.value.code == 1


def test_color(capsys):
    code, out, _ = run(capsys, "color", "--pd", "@trefoil.pd", "--quandle", "@r3id.qnd",
                       "--xset", "X", "--base-color", "0")
    assert (code, out) == (0, "9 colorings\n")
    code, out, _ = run(capsys, "color", "--pd", "@torus2x4.pd", "--quandle", "@t4pair.qnd", "--list")
    assert out.splitlines()[-1] == "16 colorings"
    assert len(out.splitlines()) == 17


def test_bad_constraint_and_face(capsys):
    args = ["color", "--pd", "@trefoil.pd", "--quandle", "@r3id.qnd", "--xset", "X"]
    assert run(capsys, *args, "--constraint", "zz")[0] == 1
    assert run(capsys, *args, "--unbounded-face", "42")[0] == 2


def test_surface_pipeline(capsys, monkeypatch):
    code, fn3, _ = run(capsys, "surface", "fn", "--n", "3", "--x", "e1", "--y", "e2")
    assert code == 0
    code, out, _ = run(capsys, "surface", "eval", "--cocycle", "@ex83.cyc",
                       stdin=fn3, monkeypatch=monkeypatch)
    assert (code, out) == (0, "6\n")


def test_surface_bound_and_check(capsys):
    assert run(capsys, "surface", "bound", "--cocycle", "@ex83.cyc", "--chain", "@fn3.dat") == \
        (0, "t(F) >= 6\n", "")
    assert run(capsys, "surface", "check", "--chain", "@fn2.dat")[:2] == (0, "OK\n")


def test_surface_errors(capsys, tmp_path):
    p = tmp_path / "big.cyc"
    p.write_text(read_data("ex83.cyc").replace(" 1\n", " 2\n").replace(" -1\n", " -2\n"))
    code, _, err = run(capsys, "surface", "bound", "--cocycle", str(p), "--chain", "@fn1.dat")
    assert code == 2
    code, _, _ = run(capsys, "surface", "check", "--chain", str(tmp_path / "missing.dat"))
    assert code == 1


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 1
    assert run(capsys, "quandle", "check", "/nonexistent/file.qnd")[0] == 1


def test_pd_syntax_error_exit(capsys, tmp_path):
    p = tmp_path / "x.pd"
    p.write_text("X[1,2,3]\n")
    code, _, err = run(capsys, "color", "--pd", str(p), "--quandle", "@r3id.qnd")
    assert code == 1
    assert "line 1" in err


def test_repro(capsys):
    code, out, _ = run(capsys, "repro")
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_size_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("SQK_SIZE_CAP", "10")
    code, _, err = run(capsys, "homology", "--degree", "3", "--quandle", "@r4anti.qnd",
                       "--xset", "X")
    assert code == 2


def test_deterministic_output(capsys):
    args = ["invariant", "--pd", "@figure8.pd", "--quandle", "@r3id.qnd", "--xset", "X",
            "--classes"]
    assert run(capsys, *args) == run(capsys, *args)


@pytest.mark.skipif(shutil.which("symquandle") is None, reason="console script not installed")
def test_console_script_pipe():
    fn = subprocess.run(["symquandle", "surface", "fn", "--n", "2"], capture_output=True,
                        text=True, check=True).stdout
    out = subprocess.run(["symquandle", "surface", "eval", "--cocycle", "@ex83.cyc"], input=fn,
                         capture_output=True, text=True, check=True).stdout
    assert out == "4\n"
