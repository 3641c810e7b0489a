import io
import json
import subprocess
import sys

import jsonschema
import pytest

from braidprob import algebra as alg
from braidprob.cli import OUTPUT_SCHEMA, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run("--format", "json", *argv)
    data = json.loads(out)
    jsonschema.validate(data, OUTPUT_SCHEMA)
    return code, data


def test_equal_true_and_false():
    assert run("equal", "s(1,2) . s(1,2)'", "id 2")[:2] == (0, "true\n")
    assert run("equal", "s(1,2) . s(1,2)", "id 2")[:2] == (1, "false\n")
    code, data = run_json("equal", "m . s(1,2)", "m")
    assert code == 1 and data["result"] is False and data["failures"] == []


def test_span_of_two_multiplications():
    code, out, _ = run("span", "m", "m")
    assert code == 0
    assert out.splitlines() == ["span 2 <- 4 -> 2", "left: (m + m) . s(2,4)", "right: m + m"]
    code, data = run_json("span", "m", "m")
    assert data["result"]["middle"] == 4
    assert data["result"]["left"]["map"] == [1, 1, 2, 2]


def test_span_rejects_comonoid_legs():
    assert run("span", "d", "id 1")[0] == 2
    assert run("span", "m", "id 2")[0] == 2


def test_normalize():
    code, out, _ = run("normalize", "d . m")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "2 -> 2 through 4"
    assert "expression: (m + m) . s(2,4) . (d + d)" in lines
    assert "monoidal: no" in lines
    code, data = run_json("normalize", "e . u")
    assert data["result"]["middle"] == 0
    assert data["result"]["expression"] == "id 0"


def test_compose():
    code, data = run_json("compose", "d", "m")
    assert code == 0 and data["result"]["middle"] == 4
    assert run("compose", "m", "m")[0] == 2


def test_eval(tmp_path):
    path = tmp_path / "line.json"
    alg.dump_algebra(alg.braided_line(), path)
    code, data = run_json("eval", "--algebra", str(path), "d . m")
    assert code == 0
    assert (data["result"]["rows"], data["result"]["cols"]) == (9, 9)
    code, out, _ = run("eval", "--algebra", "super-line", "s(1,2)")
    assert code == 0 and out.startswith("4 x 4 over")
    assert run("eval", "--algebra", "missing.json", "m")[0] == 2


@pytest.mark.parametrize("argv", [
    ("normalize", "m . m"),
    ("normalize", "m . "),
    ("frobnicate",),
    ("equal", "m", "id 1"),
    ("check", "nonsense"),
])
def test_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_error_json_payload():
    code, data = run_json("normalize", "m . m")
    assert code == 2 and data["result"] is None
    assert "byte 2" in data["failures"][0]["error"]
    code, data = run_json("normalize", "m . ?")
    assert code == 2 and "byte 4" in data["failures"][0]["error"]


def test_format_flag_position():
    assert run("equal", "--format", "json", "m", "m")[1] == run("--format", "json", "equal", "m", "m")[1]


def test_check_suite_small(tmp_path):
    path = tmp_path / "line.json"
    alg.dump_algebra(alg.braided_line(), path)
    code, out, _ = run("check", "yang-baxter", "--algebra", str(path))
    assert code == 0 and out.rstrip().endswith("yang-baxter: PASS")
    code, data = run_json("check", "braid", "--cases", "20", "--max-strands", "4", "--max-length", "4")
    assert code == 0 and data["result"]["passed"] and data["result"]["seed"] == 1729


def test_check_reports_failure(tmp_path):
    broken = alg.algebra_to_dict(alg.super_line())
    broken["delta"][3][1] = 1
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(broken))
    code, data = run_json("check", "bimonoid-axioms", "--algebra", str(path), "--cases", "5")
    assert code == 1 and not data["result"]["passed"]
    assert data["failures"] and all("witness" in f for f in data["failures"])


def test_seeded_runs_are_byte_identical():
    argv = [sys.executable, "-m", "braidprob", "--format", "json", "check", "bimonoid-axioms",
            "--cases", "10", "--seed", "5"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["result"]["seed"] == 5
