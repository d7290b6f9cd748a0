import json

import pytest

from pdscodes.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pds_recipe_example31(capsys):
    code, out, _ = run_cli(capsys, "pds", "--recipe", "example-3.1")
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == 204
    assert payload["theta1"] == 12
    assert payload["theta2"] == -4
    assert payload["fq_invariant"] is True
    assert payload["direct_check"] == "ok"


def test_pds_recipe_row1(capsys):
    code, out, _ = run_cli(capsys, "pds", "--recipe", "table-2-row-1")
    assert code == 0
    payload = json.loads(out)
    assert (payload["k"], payload["theta1"], payload["theta2"]) == (22, 4, -5)


def test_pds_inline_spec(capsys):
    code, out, _ = run_cli(
        capsys,
        "pds",
        "--field", '{"p": 3, "e": 1, "m": 4}',
        "--subset", '{"quadric": {"kind": "hyperbolic"}}',
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == 32
    assert payload["type"] == "latin"


def test_pds_negative_exit_code(capsys):
    code, out, _ = run_cli(
        capsys,
        "pds",
        "--field", '{"p": 3, "e": 1, "m": 4}',
        "--subset", '{"explicit": {"logs": [0, 1, 40, 41]}}',
    )
    assert code == 3
    assert "error" in json.loads(out)


def test_malformed_subset_is_config_error(capsys):
    # J = Z_N is not a proper subset
    code, _, err = run_cli(
        capsys,
        "pds",
        "--field", '{"p": 2, "e": 2, "m": 4}',
        "--subset", '{"cyclotomic": {"N": 5, "J": [0, 1, 2, 3, 4]}}',
    )
    assert code == 2
    assert "error" in err


def test_unknown_recipe_is_config_error(capsys):
    code, _, err = run_cli(capsys, "pds", "--recipe", "nope")
    assert code == 2
    assert "unknown recipe" in err


def test_code_example31_all_methods(capsys):
    code, out, _ = run_cli(capsys, "code", "--recipe", "example-3.1", "--methods", "all")
    assert code == 0
    payload = json.loads(out)
    assert payload["length"] == 255
    assert payload["dim"] == 5
    assert payload["weight_class"] == "three"
    minimal = payload["minimal"]
    assert minimal["cover"] == "minimal"
    assert minimal["heng"] == "minimal"
    assert minimal["snc"] == "minimal"
    assert minimal["pds_sufficient"]["verdict"] == "minimal"
    assert minimal["cyclotomic_sufficient"] == "minimal"
    weights = {row["w"]: row["freq"] for row in payload["weights"]}
    assert weights == {0: 1, 188: 612, 192: 255, 204: 156}


def test_code_complement_recipe(capsys):
    code, out, _ = run_cli(
        capsys, "code", "--recipe", "example-3.2-complement", "--methods", "pds,cover"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["minimal"]["pds_sufficient"] == {"verdict": "minimal", "fired": "3b"}
    # min/max nonzero weight is 157/220 > 2/3: the complement code satisfies AB
    # (the violation belongs to the k = 22 code of the same subset)
    assert payload["ab_condition"] is True
    assert payload["weight_class"] == "four"


def test_code_quadric_recipe(capsys):
    code, out, _ = run_cli(
        capsys,
        "code", "--recipe", "example-3.3", "--kind", "hyperbolic", "--p", "3", "--m", "4",
        "--methods", "latin,cover",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["minimal"]["latin_sufficient"] == "minimal"
    assert payload["minimal"]["cover"] == "minimal"


def test_code_guard_partial_exit(capsys):
    code, out, _ = run_cli(
        capsys, "code", "--recipe", "table-2-row-1", "--methods", "cover,pds",
        "--guard-codewords", "10",
    )
    assert code == 4
    payload = json.loads(out)
    assert payload["minimal"]["cover"] == "not_run"
    assert payload["minimal"]["pds_sufficient"]["verdict"] == "minimal"


def test_blocking_recipe(capsys):
    # the cutting test applies to the complement (zero set of the indicator)
    code, out, _ = run_cli(
        capsys,
        "blocking",
        "--field", '{"p": 2, "e": 2, "m": 4}',
        "--subset", '{"cyclotomic": {"N": 5, "J": [0]}}',
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["cutting"] is False
    assert "h1_log" in payload["witness"]


def test_sss_recipe(capsys):
    code, out, _ = run_cli(
        capsys, "sss", "--recipe", "table-2-row-1", "--x1-log", "0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == 243


def test_sss_x1_sides(capsys):
    _, out_d, _ = run_cli(capsys, "sss", "--recipe", "example-3.1", "--x1", "in-D")
    _, out_dbar, _ = run_cli(capsys, "sss", "--recipe", "example-3.1", "--x1", "in-Dbar")
    assert json.loads(out_d)["classification"] == "democratic"
    assert json.loads(out_dbar)["classification"] == "dictatorial"


def test_table_format_and_out_file(capsys, tmp_path):
    path = tmp_path / "report.txt"
    code, out, _ = run_cli(
        capsys, "code", "--recipe", "example-3.1", "--methods", "cover",
        "--format", "table", "--out", str(path),
    )
    assert code == 0
    assert out == ""
    text = path.read_text()
    assert "[255,5] code; minimality: minimal" in text
    assert "204\t156" in text


def test_repeated_runs_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "pds", "--recipe", "example-3.1")
    _, out2, _ = run_cli(capsys, "pds", "--recipe", "example-3.1")
    assert out1 == out2


def test_workers_flag(capsys):
    code, out, _ = run_cli(capsys, "pds", "--recipe", "example-3.1", "--workers", "4")
    assert code == 0
    assert json.loads(out)["k"] == 204


def test_generator_matrix_export(capsys, tmp_path):
    path = tmp_path / "gen.txt"
    code, _, _ = run_cli(
        capsys, "code", "--recipe", "table-2-row-1", "--methods", "cover",
        "--gen-matrix", str(path),
    )
    assert code == 0
    lines = path.read_text().strip().splitlines()
    assert len(lines) == 6
    assert all(len(line.split()) == 242 for line in lines)
