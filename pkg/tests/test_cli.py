import json
import subprocess
import sys

import pytest

from quasihopf import fileio
from quasihopf.cli import main


def run_cli(*argv):
    return main(list(argv))


def test_save_load_roundtrip(tmp_path, h2a):
    p = tmp_path / "h2.qha"
    fileio.save(h2a, str(p))
    B = fileio.load(str(p))
    assert B.dim == h2a.dim
    assert B.phi == h2a.phi
    assert B.comul_mat == h2a.comul_mat
    assert B.S == h2a.S
    assert B.alpha == h2a.alpha and B.beta == h2a.beta
    # byte-stable second save
    p2 = tmp_path / "h2b.qha"
    fileio.save(B, str(p2))
    assert p.read_bytes() == p2.read_bytes()


def test_load_computes_phi_inverse(tmp_path, h2a):
    p = tmp_path / "h2.qha"
    doc = fileio.to_dict(h2a)
    doc.pop("phi_inv")
    p.write_text(json.dumps(doc))
    B = fileio.load(str(p))
    from quasihopf.tensor import tensor_mul, unit_tensor
    assert tensor_mul(B.phi, B.phi_inv, B) == unit_tensor(B, 3)


def test_load_rejects_singular_antipode(tmp_path, kz2):
    p = tmp_path / "bad.qha"
    doc = fileio.to_dict(kz2)
    doc["antipode"] = [["1", "0"], ["1", "0"]]
    p.write_text(json.dumps(doc))
    with pytest.raises(fileio.FileFormatError):
        fileio.load(str(p))


def test_load_locates_bad_scalar(tmp_path, kz2):
    p = tmp_path / "bad.qha"
    doc = fileio.to_dict(kz2)
    doc["alpha"] = ["1", "x"]
    p.write_text(json.dumps(doc))
    with pytest.raises(fileio.FileFormatError) as err:
        fileio.load(str(p))
    assert "alpha[1]" in str(err.value)


def test_gen_verify_exit_zero(tmp_path):
    f = str(tmp_path / "h2.qha")
    assert run_cli("gen", "h2", "-o", f) == 0
    assert run_cli("verify", f) == 0


def test_verify_corrupt_phi_nonzero_exit(tmp_path, capsys):
    f = str(tmp_path / "h2.qha")
    run_cli("gen", "h2", "-o", f)
    doc = json.load(open(f))
    doc["phi"][7] = "9"
    doc.pop("phi_inv")
    json.dump(doc, open(f, "w"))
    assert run_cli("verify", f) == 1
    out = capsys.readouterr().out
    assert "q-Hopf-def-3" in out and "FAIL" in out


def test_verify_corrupt_antipode_names_def5(tmp_path, capsys):
    f = str(tmp_path / "kz2.qha")
    run_cli("gen", "group", "-n", "2", "-o", f)
    doc = json.load(open(f))
    doc["antipode"] = [["1", "0"], ["1", "1"]]
    json.dump(doc, open(f, "w"))
    assert run_cli("verify", f) == 1
    out = capsys.readouterr().out
    assert "q-Hopf-def-5" in out


def test_report_json_deterministic(tmp_path):
    f = str(tmp_path / "h2.qha")
    run_cli("gen", "h2", "-o", f)
    j1 = str(tmp_path / "r1.json")
    j2 = str(tmp_path / "r2.json")
    assert run_cli("report", f, "--json", j1) == 0
    assert run_cli("report", f, "--json", j2) == 0
    assert open(j1, "rb").read() == open(j2, "rb").read()
    doc = json.load(open(j1))
    assert doc["summary"]["failed"] == 0
    assert doc["unimodular"] is True
    assert doc["dim_left_cointegrals"] == 1


def test_report_sweedler_payload(tmp_path):
    f = str(tmp_path / "sw.qha")
    run_cli("gen", "sweedler", "-o", f)
    j = str(tmp_path / "r.json")
    assert run_cli("report", f, "--json", j) == 0
    doc = json.load(open(j))
    assert doc["unimodular"] is False
    assert doc["dim_left_cointegrals"] == 1
    assert doc["sections"]["frobenius"] == {"skipped": "not unimodular"}


def test_frobenius_command_rejects_sweedler(tmp_path):
    f = str(tmp_path / "sw.qha")
    run_cli("gen", "sweedler", "-o", f)
    assert run_cli("frobenius", f) == 1


def test_trace_auto_pivot(tmp_path, capsys):
    f = str(tmp_path / "h2.qha")
    run_cli("gen", "h2", "-o", f)
    assert run_cli("trace", f) == 0
    out = capsys.readouterr().out
    assert "tw-trace-progen-3" in out


def test_trace_explicit_pivot(tmp_path):
    f = str(tmp_path / "kz2.qha")
    run_cli("gen", "group", "-n", "2", "-o", f)
    assert run_cli("trace", f, "--pivot", "1,0") == 0
    # x is also pivotal in kZ2
    assert run_cli("trace", f, "--pivot", "0,1") == 0


def test_twist_roundtrip(tmp_path):
    f = str(tmp_path / "kz2.qha")
    out = str(tmp_path / "tw.qha")
    run_cli("gen", "group", "-n", "2", "-o", f)
    assert run_cli("twist", f, "--seed", "s1", "-o", out) == 0
    assert run_cli("verify", out) == 0
    # explicit gauge file path
    A = fileio.load(f)
    F = A.random_gauge("s2")
    ftens = str(tmp_path / "F.json")
    fileio.save_tensor(F, A, ftens)
    out2 = str(tmp_path / "tw2.qha")
    assert run_cli("twist", f, "-F", ftens, "-o", out2) == 0
    assert run_cli("verify", out2) == 0


def test_cointegrals_command(tmp_path):
    f = str(tmp_path / "dgc.qha")
    run_cli("gen", "cocycle", "-n", "2", "-p", "5", "-o", f)
    assert run_cli("cointegrals", f) == 0


def test_console_entry_point(tmp_path):
    f = str(tmp_path / "h2.qha")
    r = subprocess.run([sys.executable, "-m", "quasihopf.cli", "gen", "h2", "-o", f],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    r = subprocess.run([sys.executable, "-m", "quasihopf.cli", "verify", f],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert "8/8" in r.stdout


def test_bundled_fixture_files_verify():
    import pathlib
    fixdir = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
    files = sorted(fixdir.glob("*.qha"))
    assert len(files) == 7
    for f in files:
        assert run_cli("verify", str(f)) == 0, f.name
