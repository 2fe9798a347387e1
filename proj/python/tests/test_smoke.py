import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import qtasm

SCHEMA_PATH = pathlib.Path(__file__).resolve().parents[2] / "schema" / "qtasm.schema.json"


@pytest.fixture(scope="module")
def schema():
    return json.loads(SCHEMA_PATH.read_text())


def test_counts():
    assert [qtasm.count(n) for n in range(1, 6)] == [1, 2, 7, 42, 429]
    assert qtasm.count(5, "qt") == 3
    assert qtasm.count(5, "ht") == 25
    with pytest.raises(qtasm.ContractError):
        qtasm.count(6, "qt")


def test_enumerate_matches_count():
    rows = qtasm.enumerate(3, "qt")
    assert rows == ["0+0/+-+/0+0"]
    assert len(qtasm.enumerate(4)) == 42


def test_state_count_matches_matrices():
    assert qtasm.state_count("qt-odd", 7) == qtasm.count(7, "qt")
    assert qtasm.state_count("dwbc", 4) == 42


def test_partition_function_values():
    assert qtasm.partition_function("dwbc", 1, "2", ["1", "1"]) == "15/4"
    # sigma(zeta)^2 = -3, so each of the 3 states contributes (-3)^3
    assert qtasm.partition_function("qt-odd", 5, "zeta", ["1", "1", "1"]) == "-81 + 0*zeta"
    base = qtasm.partition_function("qt-odd", 3, "symbolic")
    assert base == "1*a^-3\n-1*a^-1\n-1*a^1\n1*a^3"
    with pytest.raises(qtasm.DomainError):
        qtasm.partition_function("qt-odd", 5, "2", ["0", "1", "1"])


def test_pfaffian_and_sigma():
    rows = [["0", "1", "2", "3"], ["-1", "0", "4", "5"], ["-2", "-4", "0", "6"], ["-3", "-5", "-6", "0"]]
    assert qtasm.pfaffian(rows) == str(1 * 6 - 2 * 5 + 3 * 4)
    assert qtasm.sigma("2") == "3/2"
    assert qtasm.alpha("1", "2") == "9/4"
    with pytest.raises(qtasm.ContractError):
        qtasm.pfaffian([["0", "1"], ["1", "0"]])


def test_verify_reports_validate(schema):
    reports = qtasm.verify("enumeration")
    assert len(reports) == 6
    assert all(r["passed"] for r in reports)
    jsonschema.validate(reports, schema)
    names = [name for name, _ in qtasm.catalog()]
    assert "yang-baxter" in names
    with pytest.raises(qtasm.ContractError):
        qtasm.verify("nope")


def test_verify_is_deterministic():
    assert qtasm.verify("bulk-recursion", seed=3, points=4) == qtasm.verify("bulk-recursion", seed=3, points=4)


CLI = os.environ.get("QTASM_CLI")


@pytest.mark.skipif(not CLI, reason="command-line tool not built")
@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--identity", "yang-baxter", "--seed", "7"],
        ["enumerate", "--class", "qt", "--order", "5", "--list"],
        ["pf", "--pattern", "qt-odd", "--order", "5", "--a", "zeta", "--x", "1,1,1"],
        ["pf", "--pattern", "qt-odd", "--order", "3", "--symbolic"],
        ["counts", "--max-order", "5"],
    ],
)
def test_cli_json_validates(schema, args):
    out = subprocess.run([CLI, "--format", "json", *args], check=True, capture_output=True, text=True).stdout
    jsonschema.validate(json.loads(out), schema)


@pytest.mark.skipif(not CLI, reason="command-line tool not built")
def test_cli_output_is_byte_identical():
    args = [CLI, "--format", "json", "verify", "--identity", "dwbc-ht-recursions", "--seed", "11"]
    first = subprocess.run(args, check=True, capture_output=True).stdout
    second = subprocess.run(args, check=True, capture_output=True).stdout
    assert first == second
