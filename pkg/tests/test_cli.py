import json

from carlitz_hw.cli import run
from carlitz_hw.scan import CSV_HEADER


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_headline(capsys):
    code, out, err = _run(capsys, "invariants", "--p", "3", "--m", "T^3+2T+1")
    assert code == 0 and err == ""
    rep = json.loads(out)
    assert (rep["g"], rep["lambda"]) == (19, 18)
    assert rep["ordinary"] is False and rep["ordinary_plus"] is True
    assert list(rep) == ["p", "e", "q", "field_modulus", "m", "d", "g",
                         "g_plus", "lambda", "lambda_plus", "ordinary",
                         "ordinary_plus", "supersingular", "defects",
                         "defects_plus"]


def test_invariants_no_orbit_identical(capsys):
    _, out1, _ = _run(capsys, "invariants", "--p", "3", "--m", "T^3+2T+1")
    _, out2, _ = _run(capsys, "invariants", "--p", "3", "--m", "T^3+2T+1",
                      "--no-orbit")
    assert out1 == out2


def test_invariants_reducible_modulus(capsys):
    code, out, err = _run(capsys, "invariants", "--p", "3", "--m", "T^2")
    assert code == 1
    assert out == ""
    assert "not irreducible" in err


def test_genus_command(capsys):
    code, out, _ = _run(capsys, "genus", "--p", "2", "--e", "2", "--d", "3")
    assert code == 0
    assert json.loads(out) == {"p": 2, "e": 2, "q": 4, "d": 3, "g": 52,
                               "g_plus": 10}


def test_powersum_exact(capsys):
    code, out, _ = _run(capsys, "powersum", "--p", "3", "--i", "1", "--n", "8",
                        "--exact")
    assert code == 0
    assert out.strip() == "6; 2*T^6+2*T^4+2*T^2+2"


def test_powersum_mod(capsys):
    code, out, _ = _run(capsys, "powersum", "--p", "3", "--i", "1", "--n", "5",
                        "--mod", "T^3+2T+1")
    assert code == 0
    assert out.strip() == "0; 1"


def test_powersum_zero_degree_formatting(capsys):
    code, out, _ = _run(capsys, "powersum", "--p", "3", "--i", "2", "--n", "5",
                        "--exact")
    assert code == 0
    assert out.strip() == "-inf; 0"


def test_bpoly_exact(capsys):
    code, out, _ = _run(capsys, "bpoly", "--p", "3", "--n", "8", "--exact",
                        "--d", "3")
    assert code == 0
    assert out.strip() == "1; 1; 2*T^6+2*T^4+2*T^2"


def test_bpoly_mod(capsys):
    code, out, _ = _run(capsys, "bpoly", "--p", "3", "--n", "8",
                        "--mod", "T^3+2T+1")
    assert code == 0
    assert out.strip() == "1; 1; 2"


def test_bpoly_exact_requires_d(capsys):
    code, _, err = _run(capsys, "bpoly", "--p", "3", "--n", "8", "--exact")
    assert code == 1 and "--d" in err


def test_scan_csv_stdout(capsys):
    code, out, _ = _run(capsys, "scan", "--p", "2", "--d", "2",
                        "--workers", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    assert lines[1].startswith("T^2+T+1,2,0,0,0,0,true,true,true,,")


def test_scan_jsonl_to_file(tmp_path, capsys):
    path = tmp_path / "scan.jsonl"
    code, out, _ = _run(capsys, "scan", "--p", "3", "--d", "2",
                        "--format", "jsonl", "--out", str(path),
                        "--workers", "1")
    assert code == 0 and out == ""
    rows = [json.loads(line) for line in path.read_text().splitlines()]
    assert [r["m"] for r in rows] == ["T^2+1", "T^2+T+2", "T^2+2*T+2"]
    assert all(r["ordinary"] is True for r in rows)


def test_scan_witness_mode(capsys):
    import csv as csv_mod
    import io
    code, out, _ = _run(capsys, "scan", "--p", "2", "--e", "2", "--d", "2",
                        "--mode", "witness", "--workers", "1")
    assert code == 0
    rows = list(csv_mod.reader(io.StringIO(out)))
    for cells in rows[1:]:
        assert cells[4] == "" and cells[5] == "" and cells[8] == ""
        assert cells[9] == "10"


def test_verify_pass(capsys):
    code, out, _ = _run(capsys, "verify", "--p", "3", "--d", "2",
                        "--suites", "lemma31,digits,gekeler,frobenius,division")
    assert code == 0
    lines = out.splitlines()
    assert lines == [
        "suite=lemma31 result=pass",
        "suite=digits result=pass",
        "suite=gekeler result=pass",
        "suite=frobenius result=pass",
        "suite=division result=pass",
    ]


def test_verify_defaults_to_all_suites(capsys):
    code, out, _ = _run(capsys, "verify", "--p", "2", "--d", "3")
    assert code == 0
    assert len(out.splitlines()) == 5


def test_verify_unknown_suite(capsys):
    code, _, err = _run(capsys, "verify", "--p", "3", "--d", "2",
                        "--suites", "nope")
    assert code == 1 and "unknown suite" in err


def test_unknown_flag_is_error(capsys):
    code, _, err = _run(capsys, "scan", "--p", "3", "--d", "2", "--frobnicate")
    assert code == 1 and "unrecognized arguments" in err


def test_missing_required_flag(capsys):
    code, _, err = _run(capsys, "invariants", "--m", "T")
    assert code == 1 and "--p" in err


def test_nonprime_p(capsys):
    code, _, err = _run(capsys, "invariants", "--p", "6", "--m", "T")
    assert code == 1 and "not prime" in err


def test_parse_error_position(capsys):
    code, _, err = _run(capsys, "invariants", "--p", "3", "--m", "T^+1")
    assert code == 1 and "position" in err


def test_budget_env_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("CARLITZ_HW_BUDGET", "10")
    code, _, err = _run(capsys, "powersum", "--p", "5", "--i", "3",
                        "--n", "100000", "--exact")
    assert code == 3 and "budget" in err


def test_budget_env_must_be_integer(capsys, monkeypatch):
    monkeypatch.setenv("CARLITZ_HW_BUDGET", "lots")
    code, _, err = _run(capsys, "powersum", "--p", "3", "--i", "1", "--n", "5",
                        "--exact")
    assert code == 1 and "CARLITZ_HW_BUDGET" in err


def test_field_poly_flag(capsys):
    code, out, _ = _run(capsys, "invariants", "--p", "2", "--e", "2",
                        "--field-poly", "x^2+x+1", "--m", "T+[0,1]")
    assert code == 0
    assert json.loads(out)["field_modulus"] == "x^2+x+1"


def test_field_poly_requires_extension(capsys):
    code, _, err = _run(capsys, "invariants", "--p", "3",
                        "--field-poly", "x^2+1", "--m", "T")
    assert code == 1 and "--e > 1" in err


def test_field_poly_reducible(capsys):
    code, _, err = _run(capsys, "invariants", "--p", "2", "--e", "2",
                        "--field-poly", "x^2+1", "--m", "T")
    assert code == 1 and "reducible" in err


def test_exponent_out_of_range(capsys):
    code, _, err = _run(capsys, "bpoly", "--p", "3", "--n", "26",
                        "--mod", "T^3+2T+1")
    assert code == 1 and "outside" in err
