import json

import pytest

from qschur.cli import main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_expand_fundamental(capsys):
    rc, out, _ = run_cli(capsys, "expand", "--basis", "F", "(1,3)")
    assert rc == 0
    assert out.strip() == "F(1,3) + F(2,2)"


def test_expand_empty(capsys):
    rc, out, _ = run_cli(capsys, "expand", "--basis", "M", "()")
    assert rc == 0
    assert out.strip() == "1"


def test_expand_json(capsys):
    rc, out, _ = run_cli(capsys, "--json", "expand", "--basis", "M", "(1,2)")
    assert rc == 0
    data = json.loads(out)
    assert data["basis"] == "M"
    assert {tuple(t["composition"]) for t in data["terms"]} == {(1, 2), (1, 1, 1)}


def test_pieri_row(capsys):
    rc, out, _ = run_cli(capsys, "pieri-row", "(1,3)", "1")
    assert rc == 0
    assert out.strip() == "S(1,4) + S(2,3) + S(1,3,1) + S(1,1,3)"


def test_matrix(capsys):
    rc, out, _ = run_cli(capsys, "--json", "matrix", "--basis", "F", "--n", "3")
    data = json.loads(out)
    assert data["matrix"] == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]


def test_matrix_text_deterministic(capsys):
    rc1, out1, _ = run_cli(capsys, "matrix", "--basis", "F", "--n", "4")
    rc2, out2, _ = run_cli(capsys, "matrix", "--basis", "F", "--n", "4")
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_product(capsys):
    rc, out, _ = run_cli(capsys, "product", "(1,)", "(1,3)")
    assert rc == 0
    assert out.strip() == "S(1,4) + S(2,3) + S(1,3,1) + S(1,1,3)"


def test_atom(capsys):
    rc, out, _ = run_cli(capsys, "atom", "--shape", "(1,0,2)")
    assert rc == 0
    assert out.strip() == "x1*x2*x3 + x1*x3^2"


def test_e_poly_specialized(capsys):
    rc, out, _ = run_cli(
        capsys, "e-poly", "--shape", "(1,0,2)", "--basement", "id", "--spec", "q=0,t=0"
    )
    assert rc == 0
    assert out.strip() == "x1*x2*x3 + x1*x3^2"


def test_in_s(tmp_path, capsys):
    path = tmp_path / "expr.json"
    path.write_text(
        json.dumps(
            {"basis": "F", "terms": [{"composition": [1, 3], "coeff": [[0, 0, 1]]}]}
        )
    )
    rc, out, _ = run_cli(capsys, "in-s", str(path))
    assert rc == 0
    assert out.strip() == "S(1,3) - S(2,2) + S(1,2,1)"


def test_guard(capsys, monkeypatch):
    rc, _, err = run_cli(capsys, "e-poly", "--shape", "(9,9,9)", "--vars", "3")
    assert rc == 1
    assert "guard" in err
    monkeypatch.setenv("QSCHUR_MAX_CELLS", "30")
    rc, out, _ = run_cli(capsys, "e-poly", "--shape", "(2,1)", "--vars", "2")
    assert rc == 0


def test_domain_error(capsys):
    rc, _, err = run_cli(capsys, "expand", "--basis", "F", "(1,x)")
    assert rc == 1
    assert "error" in err


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["expand", "--basis", "Q", "(1)"])
    assert exc.value.code == 2


def test_verify_suite(capsys):
    rc, out, _ = run_cli(capsys, "verify", "core", "--max-size", "4")
    assert rc == 0
    assert "all checks passed" in out


def test_verify_unknown_suite(capsys):
    rc, _, err = run_cli(capsys, "verify", "nonsense")
    assert rc == 1


def test_out_file(tmp_path, capsys):
    path = tmp_path / "out.txt"
    rc, out, _ = run_cli(capsys, "--out", str(path), "expand", "--basis", "F", "(1,3)")
    assert rc == 0
    assert path.read_text().strip() == "F(1,3) + F(2,2)"


def test_j_fund(capsys):
    rc, out, _ = run_cli(capsys, "--json", "j-fund", "--shape", "(1,1)")
    assert rc == 0
    data = json.loads(out)
    assert data["basis"] == "F"
    terms = {tuple(t["composition"]): t["coeff"] for t in data["terms"]}
    # (1-t)(1-t^2) on the single fundamental term
    assert set(terms) == {(1, 1)}


def test_hl_p(capsys):
    rc, out, _ = run_cli(capsys, "hl-p", "--shape", "(1,1)", "--vars", "2", "--spec", "t=0")
    assert rc == 0
    assert out.strip() == "x1*x2"
