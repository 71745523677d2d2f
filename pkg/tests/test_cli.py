import json

import pytest

from liequad import data_file
from liequad.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_shipped_g4(capsys):
    code, out, _ = run(capsys, "--no-timestamp", "verify", str(data_file("g4.alg")))
    assert code == 0
    assert "all checks passed" in out


def test_verify_failing_algebra(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text(
        "algebra bad\ndim_even 4\ndim_odd 0\nbasis X P Q Z\n"
        "bracket X P = 1 P\nbracket X Q = -1 Q\nbracket P Q = 1 P\n"
        "form X Z = 1\nform P Q = 1\n"
    )
    code, out, _ = run(capsys, "--no-timestamp", "verify", str(bad))
    assert code == 1
    assert "FAIL" in out


def test_parse_error_exit_code(tmp_path, capsys):
    f = tmp_path / "syntax.alg"
    f.write_text("algebra x\nbogus line\n")
    code, _, err = run(capsys, "verify", str(f))
    assert code == 2
    assert "error" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, "verify", "/nonexistent/file.alg")
    assert code == 2


def test_derivations_command(capsys):
    code, out, _ = run(capsys, "derivations", str(data_file("g4.alg")), "--kind", "skew")
    assert code == 0
    assert "dimension 3" in out


def test_derivations_json(capsys):
    code, out, _ = run(
        capsys, "--format", "json", "derivations", str(data_file("g5.alg")), "--kind", "skew"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 6
    assert len(payload["basis"]) == 6


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) >= 25
    assert any(l.startswith("osp12") for l in lines)


def test_catalog_emit_matches_shipped(capsys):
    code, out, _ = run(capsys, "catalog", "emit", "g4")
    assert code == 0
    assert out == data_file("g4.alg").read_text()


def test_catalog_emit_with_param(capsys):
    code, out, _ = run(capsys, "catalog", "emit", "g6_3", "--param", "mu=1/2")
    assert code == 0
    assert "param mu = 1/2" in out
    assert "bracket X Z = 1/2 Z" in out


def test_catalog_emit_inadmissible(capsys):
    code, _, err = run(capsys, "catalog", "emit", "g6_3", "--param", "mu=-1")
    assert code == 1
    assert "not admissible" in err


def test_catalog_verify_single(capsys):
    code, out, _ = run(capsys, "--no-timestamp", "catalog", "verify", "--id", "g4")
    assert code == 0


def test_decompose_witness(capsys):
    code, out, _ = run(capsys, "decompose", str(data_file("tstar_h3.alg")))
    assert code == 0
    assert "Z - Z*" in out


def test_decompose_no_witness(capsys):
    code, out, _ = run(capsys, "decompose", str(data_file("g4.alg")))
    assert code == 0
    assert "no central witness" in out


def test_check_iso_identity(tmp_path, capsys):
    mapfile = tmp_path / "ident.map"
    mapfile.write_text("".join(f"map {l} = 1 {l}\n" for l in ("X", "P", "Q", "Z")))
    code, out, _ = run(
        capsys,
        "--no-timestamp",
        "check-iso",
        str(data_file("g4.alg")),
        str(data_file("g4.alg")),
        str(mapfile),
    )
    assert code == 0
    assert "isometry" in out


def test_check_iso_failure(tmp_path, capsys):
    mapfile = tmp_path / "swap.map"
    mapfile.write_text(
        "map X = 1 X\nmap P = 1 Q\nmap Q = 1 P\nmap Z = 1 Z\n"
    )
    code, out, _ = run(
        capsys,
        "--no-timestamp",
        "check-iso",
        str(data_file("g4.alg")),
        str(data_file("g4.alg")),
        str(mapfile),
    )
    assert code == 1


def test_extend_tstar(tmp_path, capsys):
    base = tmp_path / "h3.alg"
    base.write_text(
        "algebra h3\ndim_even 3\ndim_odd 0\nbasis X Y Z\nbracket X Y = 1 Z\n"
    )
    code, out, _ = run(capsys, "extend", "tstar", str(base))
    assert code == 0
    assert "bracket X Z* = -1 Y*" in out
    assert "form X X* = 1" in out


def test_extend_tstar_with_cocycle(tmp_path, capsys):
    base = tmp_path / "h3.alg"
    base.write_text(
        "algebra h3\ndim_even 3\ndim_odd 0\nbasis X Y Z\nbracket X Y = 1 Z\n"
    )
    coc = tmp_path / "theta.map"
    coc.write_text("theta X Y = 1 Z\ntheta Y Z = 1 X\ntheta Z X = 1 Y\n")
    code, out, _ = run(capsys, "extend", "tstar", str(base), "--cocycle", str(coc))
    assert code == 0
    assert "bracket X Y = 1 Z + 1 Z*" in out


def test_extend_double1d(tmp_path, capsys):
    mapfile = tmp_path / "adx.map"
    mapfile.write_text("map P = 1 P\nmap Q = -1 Q\n")
    code, out, _ = run(
        capsys, "extend", "double1d", str(data_file("g4.alg")), "--map", str(mapfile)
    )
    assert code == 0
    assert "bracket e P = 1 P" in out
    assert "form e f = 1" in out


def test_extend_double1d_rejects_bad_map(tmp_path, capsys):
    mapfile = tmp_path / "bad.map"
    mapfile.write_text("map P = 1 P\n")  # not a derivation of g4
    code, _, err = run(
        capsys, "extend", "double1d", str(data_file("g4.alg")), "--map", str(mapfile)
    )
    assert code == 1


def test_extend_superdouble(tmp_path, capsys):
    base = tmp_path / "a1.alg"
    base.write_text("algebra a1\ndim_even 1\ndim_odd 0\nbasis A\n")
    odd = tmp_path / "h.alg"
    odd.write_text(
        "algebra h\ndim_even 0\ndim_odd 2\nbasis F1 F2\nform F1 F2 = 1\n"
    )
    psi = tmp_path / "psi.map"
    psi.write_text("psi A F2 = 1 F1\n")
    code, out, _ = run(
        capsys, "extend", "superdouble", str(base), str(odd), "--psi", str(psi)
    )
    assert code == 0
    assert "dim_odd 2" in out
    assert "bracket A F2 = 1 F1" in out
    assert "bracket F2 F2 = 1 A*" in out


def test_extend_tsstar(tmp_path, capsys):
    base = tmp_path / "g2.alg"
    base.write_text("algebra g2\ndim_even 2\ndim_odd 0\nbasis X Y\nbracket X Y = 1 Y\n")
    code, out, _ = run(capsys, "extend", "tsstar", str(base))
    assert code == 0
    assert "dim_odd 2" in out
    assert "bracket Y Y* = 1 X*" in out


def test_verify_json_payload(capsys):
    code, out, _ = run(
        capsys, "--format", "json", "--no-timestamp", "verify", str(data_file("g5.alg"))
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert all(c["status"] == "pass" for c in payload["checks"])
    assert {"check", "law", "status", "residual", "witness"} <= set(payload["checks"][0])


def test_env_format_override(capsys, monkeypatch):
    monkeypatch.setenv("LIEQUAD_FORMAT", "json")
    monkeypatch.setenv("LIEQUAD_NO_TIMESTAMP", "1")
    code, out, _ = run(capsys, "verify", str(data_file("g4.alg")))
    assert code == 0
    json.loads(out)


@pytest.mark.slow
def test_report_all_deterministic(capsys):
    code1, out1, _ = run(capsys, "--format", "json", "--no-timestamp", "report", "--all")
    code2, out2, _ = run(capsys, "--format", "json", "--no-timestamp", "report", "--all")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["ok"] is True


def test_tol_flag_controls_zero_threshold(tmp_path, capsys):
    # a 1e-12 invariance defect is below the default tolerance but above a
    # strict one
    f = tmp_path / "near.alg"
    f.write_text(
        "algebra near\nbackend complex\ndim_even 2\ndim_odd 0\nbasis X Y\n"
        "bracket X Y = 1e-12 Y\nform X X = 1.0\nform Y Y = 1.0\n"
    )
    code_loose, _, _ = run(capsys, "--no-timestamp", "verify", str(f))
    assert code_loose == 0
    code_strict, out, _ = run(capsys, "--no-timestamp", "--tol", "1e-15", "verify", str(f))
    assert code_strict == 1
