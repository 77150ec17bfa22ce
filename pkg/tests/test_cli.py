"""End-to-end command line behavior: output shapes and the exit contract."""

import json

import pytest

from diffrad.cli import main
from diffrad.examples import EXPECTED

REQUIRED_KEYS = {"command", "session", "hypotheses", "lhs", "rhs", "holds", "artifacts"}


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run(capsys, argv + ["--json"])
    lines = [ln for ln in out.splitlines() if ln]
    assert len(lines) == 1
    return code, json.loads(lines[0])


def test_radical_text_output(capsys):
    code, out = run(capsys, ["radical", "z^2*(z-1)*(z-2)^3"])
    assert code == 0
    assert "radical: z^4 - 6*z^3 + 12*z^2 - 8*z" in out
    assert "n_tilde: 4" in out


def test_radical_oracle_and_classical(capsys):
    code, out = run(
        capsys,
        ["radical", "--factored", "1;(0,2),(1,1),(2,3)", "--oracle", "--classical"],
    )
    assert code == 0
    assert "oracle agrees: yes" in out
    assert "classical radical: z^3 - 3*z^2 + 2*z" in out
    assert "classical count: 3" in out


def test_radical_json_schema(capsys):
    code, doc = run_json(capsys, ["radical", "z^2*(z-1)*(z-2)^3", "--seed", "7"])
    assert code == 0
    assert REQUIRED_KEYS <= set(doc)
    assert doc["command"] == "radical"
    assert doc["session"]["seed"] == 7
    assert doc["session"]["kappa"] == "1"
    assert doc["artifacts"]["n_tilde"] == 4
    assert doc["holds"] is None


def test_radical_accepts_leading_dash_expression(capsys):
    code, out = run(capsys, ["radical", "-z"])
    assert code == 0
    assert "radical: z" in out


def test_radical_usage_errors(capsys):
    assert main(["radical"]) == 3
    assert main(["radical", "z", "--factored", "1;(0,1)"]) == 3
    assert main(["radical", "z", "--m", "1"]) == 3
    assert main(["radical", "z", "--oracle"]) == 3
    assert main(["radical", "2z"]) == 3
    assert main(["radical", "z", "--kappa", "0"]) == 3
    err = capsys.readouterr().err
    assert "diffrad:" in err


def test_argparse_errors_exit_three():
    with pytest.raises(SystemExit) as exc:
        main(["bogus-command"])
    assert exc.value.code == 3
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 3
    with pytest.raises(SystemExit) as exc:
        main(["fermat", "z", "z", "z", "--form", "cubic"])
    assert exc.value.code == 3


def test_mason_triple_sharp(capsys):
    code, out = run(capsys, ["mason", "z^2 + z", "-(z^2 + 5*z + 6)", "-4*z - 6"])
    assert code == 0
    assert "bound holds (sharp)" in out
    assert "lhs = 2" in out and "rhs = 2" in out


def test_mason_hypotheses_unmet(capsys):
    code, out = run(capsys, ["mason", "z", "z", "2*z"])
    assert code == 2
    assert "hypotheses unmet" in out


def test_mason_multi_paths(capsys):
    code, doc = run_json(capsys, ["mason", "z^2", "z + 1", "z^2 + z + 1", "--multi"])
    assert code == 0
    assert doc["statement"] == "MasonM"
    assert doc["artifacts"]["m"] == 2

    code, doc = run_json(
        capsys, ["mason", "z^2", "z + 1", "z^2 - 2*z + 1", "2*z^2 - z + 2"]
    )
    assert code == 0
    assert doc["artifacts"]["m"] == 3
    assert doc["holds"] is True
    assert main(["mason", "z", "z + 1"]) == 3


def test_fermat_quadratic_identity(capsys):
    b = "(-i/2)*(sqrt(2)*z^2 + 2*z - sqrt(2))"
    c = "(-1/2)*(sqrt(2)*z^2 - 2*z - sqrt(2))"
    code, doc = run_json(capsys, ["fermat", "z^2", b, c, "--n", "2"])
    assert code == 0
    assert doc["statement"] == "FermatXYZ"
    assert doc["lhs"] == 2 and doc["rhs"] == "5/2"
    assert doc["artifacts"]["corollary_bound"] == 2

    assert main(["fermat", "z^2", b, c, "--n", "3"]) == 2
    assert main(["fermat", "z", "z"]) == 3


def test_divisor_table_inline(capsys):
    code, doc = run_json(
        capsys, ["divisor", "--divisor", "(0,2),(1,1),(2,3)", "--radii", "1,2,3"]
    )
    assert code == 0
    table = doc["artifacts"]["table"]
    assert [row["n"] for row in table] == [3, 6, 6]
    assert [row["n_tilde"] for row in table] == [1, 4, 4]
    assert all(row["error"] <= 1e-9 for row in table)


def test_divisor_table_from_file(tmp_path, capsys):
    path = tmp_path / "points.txt"
    path.write_text("(0, 2)\n# chain\n(1, 1)\n\n(2, 3)\n")
    code, doc = run_json(
        capsys, ["divisor", "--file", str(path), "--radii", "1,2,3"]
    )
    assert code == 0
    assert [row["n_tilde"] for row in doc["artifacts"]["table"]] == [1, 4, 4]


def test_divisor_input_validation(capsys):
    assert main(["divisor"]) == 3
    assert main(["divisor", "--divisor", "(0,1)", "--file", "x"]) == 3
    assert main(["divisor", "--file", "/no/such/file"]) == 3
    assert main(["divisor", "--divisor", "(0,1)", "--radii", "oops"]) == 3
    assert main(["divisor", "1;(0,1)"]) == 3
    assert main(["divisor", "--ord-inequality"]) == 3


def test_divisor_truncation_rows(capsys):
    code, doc = run_json(
        capsys,
        [
            "divisor", "--divisor", "(0,3),(3,4),(-3,1),(4,2)", "--kappa", "2",
            "--truncation", "--q", "3", "--n", "2", "--radii", "1/2,2",
        ],
    )
    assert code == 0
    rows = doc["artifacts"]["per_radius"]
    assert rows[0]["r"] == "1/2" and rows[0]["N_holds"] is None
    assert rows[1]["N_holds"] is True
    assert doc["holds"] is True


def test_divisor_ord_inequality(capsys):
    code, doc = run_json(capsys, ["divisor", "--ord-inequality", "1;(0,2)", "1;(-2,2)"])
    assert code == 0
    assert doc["statement"] == "OrdInequality"
    assert doc["artifacts"]["points_checked"] == 4

    assert main(["divisor", "--ord-inequality", "1;(0,1)", "2;(0,1)"]) == 2
    assert main(["divisor", "--ord-inequality", "1;(0,1)", "-1;(0,1)"]) == 2


def test_examples_runner(capsys):
    code, out = run(capsys, ["examples"])
    assert code == 0
    assert "6/6 fixtures reproduced" in out
    assert main(["examples", "bogus"]) == 3


def test_examples_tamper_detected(monkeypatch, capsys):
    broken = dict(EXPECTED["shift-chain-radical"])
    broken["n_tilde"] = 5
    monkeypatch.setitem(EXPECTED, "shift-chain-radical", broken)
    code, out = run(capsys, ["examples", "shift-chain-radical", "--jobs", "2"])
    assert code == 1
    assert "FAIL shift-chain-radical" in out


def test_adjoined_tower_session(capsys):
    code, doc = run_json(
        capsys, ["radical", "z^2 - 5", "--adjoin", "5", "--kappa", "sqrt(5)"]
    )
    assert code == 0
    assert doc["session"]["tower"] == "Q(i, sqrt(2), sqrt(3), sqrt(5))"
    assert doc["artifacts"]["n_tilde"] == 2
    assert main(["radical", "z", "--adjoin", "4"]) == 3


def test_json_schema_on_every_command(capsys, tmp_path):
    invocations = [
        ["radical", "z^2"],
        ["mason", "z^2 + z", "-(z^2 + 5*z + 6)", "-4*z - 6"],
        ["fermat", "1", "z", "z + 1"],
        ["divisor", "--divisor", "(0,1)"],
        ["examples", "shift-chain-radical"],
    ]
    for argv in invocations:
        code, doc = run_json(capsys, argv)
        assert code == 0, argv
        assert REQUIRED_KEYS <= set(doc), argv
        assert doc["command"] == argv[0]
        assert set(doc["session"]) == {"tower", "kappa", "seed", "coprimality"}
