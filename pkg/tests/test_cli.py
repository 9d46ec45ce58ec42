"""End-to-end tests of the command-line interface."""

import json

import pytest

from dyckpeaks.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_series_plain(capsys):
    code, out, _ = run(capsys, "series", "--stat", "peak", "--k", "1", "--r", "0", "--order", "6")
    assert code == 0
    assert out.strip() == "1,0,1,2,6,18,57"


def test_series_csv(capsys):
    code, out, _ = run(
        capsys, "series", "--stat", "valley", "--k", "0", "--r", "0", "--order", "3",
        "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[:3] == ["n,coefficient", "0,1", "1,1"]


def test_series_json_uses_decimal_strings(capsys):
    code, out, _ = run(
        capsys, "series", "--stat", "peak", "--k", "1", "--r", "0", "--order", "40",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 40
    assert doc["coefficients"][6] == "57"
    assert all(isinstance(c, str) for c in doc["coefficients"])


@pytest.mark.parametrize("method", ["enum", "dp", "gf"])
def test_count_methods_agree(capsys, method):
    code, out, _ = run(
        capsys, "count", "--stat", "peak", "--k", "1", "--r", "0", "--n", "6",
        "--method", method,
    )
    assert code == 0
    assert out.strip() == "57"


def test_count_empty_path(capsys):
    code, out, _ = run(
        capsys, "count", "--stat", "valley", "--k", "0", "--r", "0", "--n", "0",
        "--method", "enum",
    )
    assert code == 0
    assert out.strip() == "1"


def test_count_enum_guard(capsys):
    code, _, err = run(
        capsys, "count", "--stat", "peak", "--k", "1", "--r", "0", "--n", "16",
        "--method", "enum",
    )
    assert code == 1
    assert "guard" in err
    code, out, _ = run(
        capsys, "count", "--stat", "peak", "--k", "1", "--r", "0", "--n", "6",
        "--method", "enum", "--enum-guard", "6",
    )
    assert code == 0


def test_table_csv(capsys):
    code, out, _ = run(
        capsys, "table", "--n-max", "6", "--k-max", "1", "--method", "dp",
        "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,k,r,kind,count"
    assert "6,1,0,peak,57" in lines


def test_table_json_and_plain_agree(capsys):
    code, plain, _ = run(capsys, "table", "--n-max", "3", "--k-max", "2", "--method", "gf")
    assert code == 0
    code, js, _ = run(
        capsys, "table", "--n-max", "3", "--k-max", "2", "--method", "enum",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(js)
    from_json = {
        (row["n"], row["k"], row["r"], row["kind"]): int(row["count"])
        for row in doc["entries"]
    }
    from_plain = {}
    for line in plain.splitlines():
        n, k, r, kind, count = line.split()
        from_plain[(int(n), int(k), int(r), kind)] = int(count)
    assert from_json == from_plain


def test_bijection_psi(capsys):
    code, out, _ = run(capsys, "bijection", "--map", "psi", "--k", "2", "--path", "UUDD")
    assert code == 0
    assert "UDUD" in out


def test_bijection_psi_requires_k(capsys):
    code, _, err = run(capsys, "bijection", "--map", "psi", "--path", "UUDD")
    assert code == 1
    assert "--k" in err


def test_bijection_theta(capsys):
    code, out, _ = run(
        capsys, "bijection", "--map", "theta", "--path", "UUDUDD", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["output"]["path"] == "UDUD"
    assert doc["input"]["peaks"] == {"2": 2}


def test_bijection_theta_rejects_valley_at_0(capsys):
    code, _, err = run(capsys, "bijection", "--map", "theta", "--path", "UDUD")
    assert code == 1
    assert "valley" in err


def test_bijection_bad_path(capsys):
    code, _, err = run(capsys, "bijection", "--map", "psi", "--k", "2", "--path", "UDD")
    assert code == 1
    assert "index 2" in err


def test_cfrac_spec_file(capsys, tmp_path):
    spec = tmp_path / "catalan.json"
    spec.write_text('{"depth": 9, "lambdas": "x", "mus": "x", "tail": 1}')
    code, out, _ = run(capsys, "cfrac", "--spec", str(spec), "--order", "8")
    assert code == 0
    assert out.strip() == "z^0: 1,1,2,5,14,42,132,429,1430"


def test_cfrac_marked_spec(capsys, tmp_path):
    spec = tmp_path / "marked.json"
    spec.write_text('{"depth": 1, "lambdas": "x", "mus": "x*z", "tail": "C"}')
    code, out, _ = run(
        capsys, "cfrac", "--spec", str(spec), "--order", "6", "--z-order", "1"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "z^0: 1,0,1,2,6,18,57"


def test_cfrac_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "cfrac", "--spec", str(tmp_path / "nope.json"))
    assert code == 1
    assert "error" in err


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "unknown-command")[0] == 1
    assert run(capsys, "series", "--stat", "peak")[0] == 1
    assert run(capsys, "series", "--stat", "sideways", "--k", "1", "--r", "0")[0] == 1


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "series", "--help")[0] == 0


def test_verify_small_run_is_deterministic(capsys):
    args = (
        "verify", "--n-max", "6", "--k-max", "3", "--r-max", "2", "--order", "8",
    )
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "WARN" in out1
    assert "FAIL" not in out1
    assert "OK: 0 failures" in out1
