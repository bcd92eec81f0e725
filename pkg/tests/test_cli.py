"""The command-line interface: output contracts and exit codes."""

import json

from click.testing import CliRunner

from blobcell import tables
from blobcell.cli import main


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env)


def test_wb_enumerate_count():
    res = run("wb", "enumerate", "2", "--count")
    assert res.exit_code == 0
    assert res.output.strip() == "6"


def test_wb_test_ok():
    res = run("wb", "test", "3")
    assert res.exit_code == 0
    assert "-> ok" in res.output


def test_domino_insert_json_roundtrip():
    res = run("domino", "insert", "--format", "json", "--", "2", "3", "-1")
    assert res.exit_code == 0
    pair = json.loads(res.output)
    assert pair["P"]["shape"] == pair["Q"]["shape"]
    res2 = run("domino", "reverse", json.dumps(pair))
    assert res2.exit_code == 0
    assert res2.output.strip() == "2 3 -1"


def test_domino_shape():
    res = run("domino", "shape", "--", "-1")
    assert res.exit_code == 0
    assert res.output.strip() == "1 1"


def test_knuth_class():
    res = run("knuth", "class", "--format", "json", "--", "1", "2")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["size"] >= 1


def test_ideal_check():
    res = run("ideal", "check", "2")
    assert res.exit_code == 0
    assert "-> ok" in res.output


def test_blob_dims_and_verify():
    res = run("blob", "dims", "3", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["algebra_dim"] == 20
    res = run("blob", "verify", "2")
    assert res.exit_code == 0


def test_tensor_check():
    res = run("tensor", "check", "3")
    assert res.exit_code == 0


def test_fock_crystal_anchor():
    res = run("fock", "crystal", "--",
              "3", "-1", "0", "0", "1", "0", "2", "2", "1", "1", "0",
              "0", "2")
    assert res.exit_code == 0
    assert res.output.strip() == "((6,), (4,))"


def test_kleshchev_pretty_matches_golden():
    res = run("kleshchev", "10", "3", "2", "--format", "pretty")
    assert res.exit_code == 0
    assert res.output.rstrip("\n") == tables.format_table(3, 2)


def test_tables_paper_ok():
    res = run("tables", "--paper")
    assert res.exit_code == 0
    assert "all 44 rows match: True" in res.output


def test_usage_errors_exit_2():
    assert run("wb", "enumerate", "0").exit_code == 2
    assert run("domino", "insert").exit_code == 2
    assert run("domino", "insert", "--", "1", "1").exit_code == 2
    assert run("kleshchev", "4", "4", "2").exit_code == 2  # e != 2m-1
    assert run("nonsense").exit_code == 2


def test_max_n_env_cap():
    res = run("wb", "enumerate", "3", "--count",
              env={"BLOBCELL_MAX_N": "2"})
    assert res.exit_code == 2
    res = run("wb", "enumerate", "3", "--count",
              env={"BLOBCELL_MAX_N": "3"})
    assert res.exit_code == 0


def test_deterministic_output():
    a = run("cells", "2", "--format", "json").output
    b = run("cells", "2", "--format", "json").output
    assert a == b
    a = run("decomp", "4", "3", "2", "--format", "csv").output
    b = run("decomp", "4", "3", "2", "--format", "csv").output
    assert a == b


def test_decomp_exit_zero():
    res = run("decomp", "5", "5", "3")
    assert res.exit_code == 0
    assert res.output.strip().endswith("ok")
