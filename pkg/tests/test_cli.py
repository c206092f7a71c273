"""End-to-end command line checks: documents, formats, exit codes."""

import json

import pytest

from hclat import cli, contraction, zforms
from hclat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


# -- documents ------------------------------------------------------------------


def test_lattice_document(capsys):
    doc = run_json(
        capsys,
        "lattice", "--variant", "q", "--n", "1", "--m", "1",
        "--eps", "0", "--mu", "-2", "--window", "-3:1", "--oracle",
    )
    pairs = {p: e for p, e in doc["exponents"]}
    assert pairs[1] == 0 and pairs[0] == 1 and pairs[-1] == 1 and pairs[-2] == 2
    assert doc["oracle_agrees"] is True
    assert doc["nonzero"] is True
    assert doc["support"] == {"kind": "le", "bound": 1}


def test_lattice_vanishing_document(capsys):
    doc = run_json(
        capsys,
        "lattice", "--variant", "qpp", "--n", "1", "--m", "2",
        "--mu", "3", "--window", "0:4",
    )
    assert doc["nonzero"] is False
    assert doc["exponents"] == []


def test_module_qpp_coefficient(capsys):
    doc = run_json(
        capsys,
        "module", "--kind", "ps", "--parabolic", "qpp", "--n", "1",
        "--m", "2", "--eps", "0", "--mu", "3", "--window", "0:0",
    )
    assert doc["rows"] == [[0, 0, "3/2", "3/2", "0"]]


def test_module_induced_rows(capsys):
    doc = run_json(
        capsys,
        "module", "--kind", "ind", "--n", "1", "--m", "1",
        "--lambda", "2", "--window", "-2:2",
    )
    # support starts at 0; F-coefficient is -p(p-1)/2 - 2p at weight 2+p
    assert doc["rows"] == [
        [0, 2, "1", "0", "2"],
        [1, 3, "1", "-2", "3"],
        [2, 4, "1", "-5", "4"],
    ]


def test_classify_from_parameters(capsys, tmp_path):
    table = tmp_path / "form.json"
    table.write_text(json.dumps({"n": 2, "m": 3, "q": "-1/2"}))
    doc = run_json(capsys, "classify", "--table", str(table))
    assert doc == {"n": 2, "m": 3, "abs_q": "1/2"}


def test_classify_from_presentation_tables(capsys, tmp_path):
    g = zforms.make_zform(3, 1, 2)
    tables = zforms.presentation(g, order=(2, 0, 1), signs=(1, -1, 1))
    table = tmp_path / "presentation.json"
    table.write_text(json.dumps(zforms.presentation_to_json(*tables)))
    doc = run_json(capsys, "classify", "--table", str(table))
    assert doc == {"n": 3, "m": 1, "abs_q": "2"}


def test_contract_vanishing_reason(capsys):
    doc = run_json(
        capsys,
        "contract", "--kind", "ps", "--n", "1", "--eps", "0",
        "--mu", "1+z", "--ring", "poly", "--window", "-2:2",
    )
    assert doc["rows"] == []
    assert "constant term" in doc["vanishing_reason"]


def test_contract_laurent_rows(capsys):
    doc = run_json(
        capsys,
        "contract", "--kind", "ps", "--n", "2", "--eps", "1/2",
        "--mu", "z", "--ring", "laurent", "--window", "0:1",
    )
    assert doc["rows"] == [[0, 1, "1", "0", "1"], [1, 3, "2", "-z", "3"]]


def test_contract_induced_rows(capsys):
    doc = run_json(
        capsys,
        "contract", "--kind", "ind", "--n", "1", "--lambda", "1",
        "--window", "0:2",
    )
    assert doc["rows"][2][0] == 2
    assert doc["rows"][2][2] == "1"
    assert doc["rows"][2][3] == "-6*z"


def test_bw_documents(capsys):
    mx = run_json(capsys, "bw", "--lambda", "2", "--op", "max")
    assert mx["embedding"][1][1] == "1/2"
    assert all(isinstance(x, int) for row in mx["E"] for x in row)

    hom = run_json(capsys, "bw", "--lambda", "2", "--op", "hom")
    assert hom["rank"] == 1
    assert hom["generator"] == [[1, 0, 0], [0, 2, 0], [0, 0, 1]]

    cert = run_json(capsys, "bw", "--lambda", "3", "--op", "certify")
    assert cert["certified"] is True and cert["primes"] == [2, 3, 5]

    witness = run_json(capsys, "bw", "--lambda", "-3", "--op", "counit", "--n", "5")
    assert witness["fraction"] == "1/5"

    dual = run_json(capsys, "bw", "--lambda", "1", "--op", "dual", "--n", "1")
    assert dual["weights"] == [3, 1, -1, -3]


def test_verify_document_and_exit(capsys):
    code, out, err = run(capsys, "verify", "--suite", "contraction")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert all(c["suite"] == "contraction" for c in doc["checks"])


def test_verify_corrupted_build_exits_nonzero(capsys, monkeypatch):
    monkeypatch.setattr(
        contraction, "phi_preserves_bracket", lambda: ["fabricated failure"]
    )
    code, out, err = run(capsys, "verify", "--suite", "contraction")
    assert code == 1
    assert json.loads(out)["passed"] is False


# -- formats and output ----------------------------------------------------------


def test_json_reemission_is_byte_identical(capsys):
    code, out, err = run(
        capsys,
        "lattice", "--variant", "q", "--n", "1", "--m", "1",
        "--eps", "0", "--mu", "-2", "--window", "-3:1",
    )
    assert code == 0
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_csv_format(capsys):
    code, out, err = run(
        capsys,
        "module", "--kind", "ind", "--n", "1", "--m", "1",
        "--lambda", "2", "--window", "0:2", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "index,weight,E,F,H"
    assert len(lines) == 4


def test_table_format(capsys):
    code, out, err = run(
        capsys,
        "module", "--kind", "ind", "--n", "1", "--m", "1",
        "--lambda", "2", "--window", "0:2", "--format", "table",
    )
    assert code == 0
    assert "index" in out.splitlines()[1]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "doc.json"
    code, out, err = run(
        capsys, "bw", "--lambda", "4", "--op", "min", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["rank"] == 5


# -- exit codes -------------------------------------------------------------------


def test_usage_error_missing_lambda(capsys):
    code, out, err = run(capsys, "module", "--kind", "ind", "--window", "0:2")
    assert code == 2
    assert "requires --lambda" in err


def test_usage_error_qpp_shape(capsys):
    code, out, err = run(
        capsys,
        "module", "--kind", "ps", "--parabolic", "qpp", "--n", "2",
        "--m", "3", "--eps", "0", "--mu", "1", "--window", "0:0",
    )
    assert code == 2
    assert "qpp requires m = 2n" in err


def test_usage_error_eps_residue(capsys):
    code, out, err = run(
        capsys,
        "lattice", "--variant", "q", "--n", "2", "--m", "1",
        "--eps", "1/3", "--mu", "2", "--window", "0:1",
    )
    assert code == 2
    assert "dividing n = 2" in err


def test_usage_error_bad_window():
    with pytest.raises(SystemExit) as exc:
        main(["module", "--kind", "ind", "--lambda", "1", "--window", "3:1"])
    assert exc.value.code == 2


def test_usage_error_unknown_variant():
    with pytest.raises(SystemExit) as exc:
        main(["lattice", "--variant", "b", "--mu", "2", "--window", "0:1"])
    assert exc.value.code == 2


def test_domain_error_json_object(capsys):
    code, out, err = run(
        capsys,
        "lattice", "--variant", "q", "--n", "1", "--m", "1",
        "--eps", "0", "--mu", "1/2", "--window", "0:1",
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["type"] == "ValueError"
    assert "integer" in doc["error"]["message"]


def test_domain_error_plain_message(capsys):
    code, out, err = run(
        capsys,
        "classify", "--table", "/nonexistent/table.json", "--format", "table",
    )
    assert code == 1
    assert out == ""
    assert "error" in err


def test_negative_window_token(capsys):
    doc = run_json(
        capsys,
        "contract", "--kind", "ps", "--n", "1", "--eps", "0",
        "--mu", "2z", "--window", "-3:0",
    )
    assert [row[0] for row in doc["rows"]] == [-3, -2, -1, 0]


def test_normalize_argv_only_merges_values():
    merged = cli._normalize_argv(["--window", "-3:1", "--oracle", "--mu", "-2"])
    assert merged == ["--window=-3:1", "--oracle", "--mu=-2"]
