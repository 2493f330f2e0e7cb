"""
Tests de la línea de comandos: códigos de salida y salidas texto/JSON.
"""

import io
import json

import pytest

from scripts.run import main
from src.cli import EXIT_FAILED, EXIT_INVALID, EXIT_OK, CliConfig, dispatch
from src.syntax import parse_contract, pretty_print

BROKEN = """
contract Broken {
    uint256 @global g;
    function f() @address returns { g := 1; }
}
"""

def _run(command, contract, scenario=None, **options):
    out = io.StringIO()
    code = dispatch(CliConfig(command, contract, scenario, **options), out)
    return code, out.getvalue()

@pytest.fixture
def token_path(contracts_dir):
    return contracts_dir / "my_token.crys"

@pytest.fixture
def flagship_path(scenarios_dir):
    return scenarios_dir / "flagship.json"

@pytest.fixture
def broken_path(tmp_path):
    path = tmp_path / "broken.crys"
    path.write_text(BROKEN, encoding="utf-8")
    return path

# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def test_check_clean_contract(token_path):
    code, output = _run("check", token_path)
    assert code == EXIT_OK
    assert output == ""

def test_check_clean_contract_json(token_path):
    code, output = _run("check", token_path, format="json")
    assert code == EXIT_OK
    assert json.loads(output) == {"contract": "MyToken", "ok": True, "diagnostics": []}

def test_check_reports_scope_errors(broken_path):
    code, output = _run("check", broken_path)
    assert code == EXIT_FAILED
    assert output.startswith("error scope-write 4:")

    code, output = _run("check", broken_path, format="json")
    document = json.loads(output)
    assert code == EXIT_FAILED
    assert document["ok"] is False
    assert [d["code"] for d in document["diagnostics"]] == ["scope-write"]

def test_check_accepts_path_without_suffix(contracts_dir):
    code, _ = _run("check", contracts_dir / "global_counter")
    assert code == EXIT_OK

def test_check_missing_file(tmp_path):
    code, output = _run("check", tmp_path / "nada.crys", format="json")
    assert code == EXIT_INVALID
    assert "nada.crys" in json.loads(output)["error"]["message"]

def test_check_parse_error(tmp_path):
    path = tmp_path / "roto.crys"
    path.write_text("contract R { uint256 balance; }", encoding="utf-8")
    code, output = _run("check", path, format="json")
    assert code == EXIT_INVALID
    error = json.loads(output)["error"]
    assert error["code"] == "parse"
    assert (error["line"], error["column"]) == (1, 22)
    assert error["found"] == "balance"

# ---------------------------------------------------------------------------
# dump-ast
# ---------------------------------------------------------------------------

def test_dump_ast_text_is_canonical(token_path):
    code, output = _run("dump-ast", token_path)
    assert code == EXIT_OK
    assert output == pretty_print(parse_contract(token_path.read_text(encoding="utf-8")))
    assert parse_contract(output) == parse_contract(token_path.read_text(encoding="utf-8"))

def test_dump_ast_json(token_path):
    code, output = _run("dump-ast", token_path, format="json")
    document = json.loads(output)
    assert code == EXIT_OK
    assert document["node"] == "ContractDecl"
    assert document["name"] == "MyToken"

# ---------------------------------------------------------------------------
# run
# ---------------------------------------------------------------------------

def test_run_flagship_summary(token_path, flagship_path):
    code, output = _run("run", token_path, flagship_path)
    assert code == EXIT_OK
    lines = output.splitlines()
    assert lines[0] == "run MyToken n=2 k=2 seed=0"
    assert lines[-1] == "passed: 5/5 assertions, 0 unexpected faults"
    assert any(line.startswith("tx 2 transfer @1 applied") for line in lines)

def test_run_json_embeds_trace(token_path, flagship_path):
    code, output = _run("run", token_path, flagship_path, format="json")
    document = json.loads(output)
    assert code == EXIT_OK
    assert document["passed"] is True
    assert document["final"]["params"] == {"n": 2, "k": 2, "seed": 0}
    kinds = [record.get("kind") for record in document["trace"]]
    assert kinds[0] == "deploy"
    assert kinds.count("verdict") == 3

def test_run_writes_trace_file(tmp_path, token_path, flagship_path):
    trace_path = tmp_path / "trazas" / "flagship.jsonl"
    code, output = _run("run", token_path, flagship_path, format="json",
                        trace_path=trace_path, trace_level="step")
    assert code == EXIT_OK
    assert "trace" not in json.loads(output)
    records = [json.loads(line) for line in trace_path.read_text(encoding="utf-8").splitlines()]
    assert any(record.get("rule") == "RELa" for record in records)

def test_run_appends_configuration_dump(token_path, flagship_path):
    code, output = _run("run", token_path, flagship_path, dump="configuration")
    assert code == EXIT_OK
    summary, _, dump = output.partition("passed: 5/5 assertions, 0 unexpected faults\n")
    assert summary.startswith("run MyToken")
    assert dump.startswith("configuration n=2 k=2 seed=0")
    assert "balance : uint256 @ 0 = " + "00" * 31 + "46" in dump

def test_run_json_global_dump(contracts_dir, scenarios_dir):
    code, output = _run("run", contracts_dir / "global_counter.crys",
                        scenarios_dir / "global_counter.json", format="json", dump="global")
    dump = json.loads(output)["dump"]
    assert code == EXIT_OK
    assert dump.startswith("# global")
    assert "counter : uint256 @ 0 = " + "00" * 31 + "05" in dump

def test_run_failed_expectation(tmp_path, token_path, flagship_path):
    scenario = json.loads(flagship_path.read_text(encoding="utf-8"))
    scenario["steps"][5]["expect"]["value"] = 71
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps(scenario), encoding="utf-8")

    code, output = _run("run", token_path, tampered)
    assert code == EXIT_FAILED
    assert "FAIL value balance expected=71 actual=70" in output

def test_run_invalid_scenario(tmp_path, token_path):
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2", encoding="utf-8")
    code, output = _run("run", token_path, bad, format="json")
    assert code == EXIT_INVALID
    assert json.loads(output)["error"]["code"] == "ScenarioError"

def test_run_expect_out_of_range(tmp_path, token_path, flagship_path):
    scenario = json.loads(flagship_path.read_text(encoding="utf-8"))
    scenario["steps"][5]["expect"]["engine"] = 7
    tampered = tmp_path / "fuera_de_rango.json"
    tampered.write_text(json.dumps(scenario), encoding="utf-8")

    code, output = _run("run", token_path, tampered, format="json")
    assert code == EXIT_INVALID
    assert json.loads(output)["error"]["code"] == "ScenarioError"

def test_run_rejects_contract_with_checker_errors(broken_path, flagship_path):
    code, output = _run("run", broken_path, flagship_path, format="json")
    assert code == EXIT_INVALID
    assert json.loads(output)["error"]["code"] == "DeploymentError"

def test_run_invalid_topology(token_path, scenarios_dir):
    code, _ = _run("run", token_path, scenarios_dir / "global_counter.json", engines=0)
    assert code == EXIT_INVALID

def test_cli_config_validation(token_path):
    with pytest.raises(ValueError):
        CliConfig("run", token_path)
    with pytest.raises(ValueError):
        CliConfig("check", token_path, format="yaml")
    with pytest.raises(ValueError):
        CliConfig("deploy", token_path)
    with pytest.raises(ValueError):
        CliConfig("run", token_path, token_path, dump="stack")

# ---------------------------------------------------------------------------
# scripts/run.py
# ---------------------------------------------------------------------------

def test_main_check(token_path, capsys):
    assert main(["check", str(token_path), "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["ok"] is True

def test_main_run_with_seed(contracts_dir, scenarios_dir, capsys):
    code = main([
        "run", str(contracts_dir / "global_counter.crys"), str(scenarios_dir / "global_counter.json"),
        "--seed", "7", "--policy", "interleaved", "--format", "json", "--dump", "global",
    ])
    assert code == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["passed"] is True
    assert "counter : uint256" in document["dump"]

def test_main_missing_contract(tmp_path):
    assert main(["check", str(tmp_path / "nada.crys")]) == EXIT_INVALID

def test_main_unknown_command():
    with pytest.raises(SystemExit):
        main(["deploy", "x.crys"])
