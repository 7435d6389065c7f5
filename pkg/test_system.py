#!/usr/bin/env python3
"""
End-to-end checks of the command line: files on disk, calc.main, captured stdout
"""
import json

import pytest

import calc

TABLE = """symbol rho1 dim=1 type=orthogonal
symbol rho2 dim=2 type=symplectic
symbol tau dim=1 type=none dual=tau_
symbol tau_ dim=1 type=none dual=tau
"""


@pytest.fixture
def files(tmp_path):
    """Write the table and one parameter file; returns argv prefix builder"""
    table_path = tmp_path / "table.txt"
    table_path.write_text(TABLE)

    def build(param_text, group, n):
        param_path = tmp_path / "param.txt"
        param_path.write_text(param_text)
        return [str(table_path), str(param_path), "--group", group, "--n", str(n)]
    return build


JORD_13 = "sblock sigma=rho1 a=1 x=0\nsblock sigma=rho1 a=3 x=0\n"
SINGLE_3 = "sblock sigma=rho1 a=3 x=0\n"


def run(argv, capsys):
    code = calc.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_red(files, capsys):
    code, out, _ = run(files(JORD_13, "o-even", 2) + ["red", "--rho", "rho1"], capsys)
    assert code == 0
    assert out == "red = {2}\n"


def test_red_under_so_odd_without_blocks(files, capsys):
    code, out, _ = run(files("sblock sigma=rho2 a=1 x=0\n", "so-odd", 1) + ["red", "--rho", "rho1"], capsys)
    assert (code, out) == (0, "red = {1/2}\n")


def test_reducible_restriction_flag(files, capsys):
    argv = files(JORD_13, "o-even", 2) + ["--so-irreducible", "false", "red", "--rho", "rho1"]
    code, out, _ = run(argv, capsys)
    assert (code, out) == (0, "red = {0}\n")


def test_arho_and_jord(files, capsys):
    prefix = files(JORD_13, "o-even", 2)
    assert run(prefix + ["arho", "--rho", "rho1"], capsys)[1] == "a_rho = 3\n"
    assert run(prefix + ["arho", "--rho", "tau"], capsys)[1] == "a_rho = inf\n"
    assert run(prefix + ["jord", "--rho", "rho1", "--x", "0"], capsys)[1] == "jord(rho1, 0) = {1, 3}\n"
    assert run(prefix + ["jord", "--rho", "rho1"], capsys)[1] == "x=0: {1, 3}\n"
    assert run(prefix + ["jord", "--rho", "rho2"], capsys)[1] == "{}\n"


def test_norm_styles(files, capsys):
    prefix = files(SINGLE_3, "sp", 1)
    assert run(prefix + ["norm", "--rho", "rho1", "--style", "L"], capsys)[1] == "style=L rho=rho1\n"
    assert run(prefix + ["norm", "--rho", "rho1"], capsys)[1] == "style=A rho=rho1\ns=1 ord=-1\n"


def test_norm_product(files, capsys):
    code, out, _ = run(files(SINGLE_3, "sp", 1) + ["norm", "--rho", "rho1", "--product", "--style", "L"], capsys)
    assert code == 0
    assert "s=2 ord=1" in out.splitlines()


def test_lgroup(files, capsys):
    code, out, _ = run(files(SINGLE_3, "sp", 1) + ["lgroup"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[:2] == ["factors_through_LG: yes", "elliptic: yes"]
    assert "orthogonal" in lines[3]


def test_reconstruct(files, capsys):
    prefix = files(SINGLE_3, "sp", 1)
    assert run(prefix + ["reconstruct", "3/4", "5/4"], capsys)[:2] == (0, "(1/4, 1) * 1\n")
    assert run(prefix + ["reconstruct"], capsys)[:2] == (0, "{}\n")


def test_reconstruct_inconsistent(files, capsys):
    code, out, err = run(files(SINGLE_3, "sp", 1) + ["reconstruct", "5/4"], capsys)
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_reconstruct_rejects_half_integer(files, capsys):
    code, _, _ = run(files(SINGLE_3, "sp", 1) + ["reconstruct", "3/2"], capsys)
    assert code == 1


def test_inadmissible(files, capsys):
    param = "sblock sigma=rho1 a=3 x=0\nsblock sigma=rho1 a=3 x=0\n"
    code, _, err = run(files(param, "o-even", 3) + ["red", "--rho", "rho1"], capsys)
    assert code == 2
    assert "signed count" in err


def test_check_passes(files, capsys):
    code, out, _ = run(files(JORD_13, "o-even", 2) + ["check"], capsys)
    assert code == 0
    assert out.splitlines()[-1] == "check: ok"


def test_check_reports_symmetry_violation(files, capsys):
    prefix = files("sblock sigma=rho1 a=1 x=1/4\n", "sp", 0)
    code, out, _ = run(prefix + ["check"], capsys)
    assert code == 1
    assert "symmetry" in out
    assert out.splitlines()[-1] == "check: FAILED"
    code, out, _ = run(prefix + ["red", "--rho", "rho1"], capsys)
    assert code == 1
    assert "FAILED" in out


def test_check_is_deterministic(files, capsys):
    argv = files(JORD_13 + "sblock sigma=tau a=2 x=1/4\nsblock sigma=tau_ a=2 x=-1/4\n", "o-even", 4) + ["check"]
    first = run(argv, capsys)
    second = run(argv, capsys)
    assert first[1] == second[1]


def test_unknown_command(files, capsys):
    code, _, err = run(files(SINGLE_3, "sp", 1) + ["frobnicate"], capsys)
    assert code == 1
    assert "unknown command" in err


def test_parse_error_has_location(files, capsys):
    code, _, err = run(files("sblock sigma=rho1 a=3 y=0\n", "sp", 1) + ["check"], capsys)
    assert code == 1
    assert "param.txt:1:" in err


def test_bad_group_is_an_error(files, capsys):
    code, _, _ = run(files(SINGLE_3, "gl", 1) + ["check"], capsys)
    assert code == 1


def test_export_json(files, capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(files(JORD_13, "o-even", 2) + ["export", "--out", str(target)], capsys)
    assert code == 0
    assert out == f"exported to {target}\n"
    tables = json.loads(target.read_text())
    assert {"Support", "Speh Blocks", "Reducibility", "Pairing", "Orders"} <= set(tables)
    rho1 = next(row for row in tables["Reducibility"] if row["rho"] == "rho1")
    assert rho1["red"] == "2"


def test_export_bare_name_goes_to_output_dir(files, capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("CALC_OUTPUT_DIR", str(tmp_path / "out"))
    code, out, _ = run(files(JORD_13, "o-even", 2) + ["export", "--out", "session.xlsx"], capsys)
    assert code == 0
    assert (tmp_path / "out" / "session.xlsx").is_file()


def test_export_unknown_extension(files, capsys, tmp_path):
    code, _, err = run(files(JORD_13, "o-even", 2) + ["export", "--out", str(tmp_path / "r.csv")], capsys)
    assert code == 1
    assert ".xlsx and .json" in err


def test_boundary_exponent_is_rejected_at_load(files, capsys):
    code, out, err = run(files("sblock sigma=rho1 a=1 x=1/2\n", "sp", 0) + ["check"], capsys)
    assert code == 1
    assert out == ""
    assert "boundary" in err
