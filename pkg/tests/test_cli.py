import json

import jsonschema
import pytest

from bachet import __version__
from bachet.cli import main, parse_int_list

ENVELOPE = {
    "type": "object",
    "required": ["command", "parameters", "result", "version"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "parameters": {"type": "object"},
        "result": {"type": "object"},
        "version": {"type": "string"},
    },
}
DECIMAL = {"type": "string", "pattern": "^[0-9]+$"}
INT_ARRAY = {"type": "array", "items": {"type": "integer", "minimum": 1}}
RESULTS = {
    "enumerate": {
        "type": "object",
        "required": ["m", "e", "r", "count", "num_parts", "partitions"],
        "properties": {"count": DECIMAL, "partitions": {"type": "array", "items": INT_ARRAY}},
    },
    "count": {
        "type": "object",
        "anyOf": [
            {"required": ["m", "count"], "properties": {"count": DECIMAL}},
            {"required": ["counts"]},
        ],
    },
    "verify": {
        "type": "object",
        "required": ["verified", "reason", "parts", "minimal_parts"],
        "properties": {"verified": {"type": "boolean"}, "reason": {"type": ["string", "null"]}},
    },
    "ternary": {"type": "object", "required": ["k", "base", "value"], "properties": {"value": DECIMAL}},
    "ary": {"type": "object", "required": ["k", "base", "value"], "properties": {"value": DECIMAL}},
    "perfect": {"type": "object", "required": ["m", "count", "partitions"], "properties": {"count": DECIMAL}},
    "subperfect": {"type": "object", "required": ["m", "count", "partitions"], "properties": {"count": DECIMAL}},
    "factorizations": {"type": "object", "required": ["n", "count", "factorizations"]},
    "plan": {
        "type": "object",
        "required": ["weights", "mode", "r", "rows", "unreachable", "notes"],
        "properties": {
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["target", "coefficients"],
                    "properties": {"coefficients": {"type": ["array", "null"], "items": {"type": "integer"}}},
                },
            }
        },
    },
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert out.endswith("\n") and out.count("\n") == 1
    doc = json.loads(out)
    jsonschema.validate(doc, ENVELOPE)
    jsonschema.validate(doc["result"], RESULTS[doc["command"]])
    assert doc["version"] == __version__
    return code, doc


def test_enumerate_25(capsys):
    code, doc = run_json(capsys, "enumerate", "--m", "25")
    assert code == 0 and doc["result"]["count"] == "9"
    assert [1, 3, 9, 12] in doc["result"]["partitions"]
    assert doc["parameters"] == {"e": 0, "m": 25, "r": 2}


def test_enumerate_one_scale(capsys):
    code, doc = run_json(capsys, "enumerate", "--m", "15", "--e", "0", "--r", "1")
    assert code == 0 and doc["result"]["partitions"] == [[1, 2, 4, 8]]


def test_enumerate_table_golden(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "5", "--format", "table")
    assert code == 0 and out == "5 = 1+1+3\n5 = 1+2+2\ncount: 2\n"


@pytest.mark.parametrize(
    "argv",
    [["enumerate", "--m", "0"], ["enumerate", "--m", "x"], ["count", "--m", "-3"], ["enumerate", "--m", "5", "--r", "0"],
     ["ary", "--base", "1", "--k", "3"], ["factorizations", "--n", "1"], ["plan", "--targets", "1"],
     ["plan", "--m", "4", "--weights", "1,3"], ["verify", "--m", "5", "--parts", "1,0"], []],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    capsys.readouterr()


def test_count_both(capsys):
    code, doc = run_json(capsys, "count", "--m", "16", "--method", "both")
    assert code == 0
    assert doc["result"] == {"m": 16, "count": "12", "formula": "12", "enumerate": "12"}


@pytest.mark.parametrize("m, expected", [("40", "1\n"), ("7", "3\n")])
def test_count_table(capsys, m, expected):
    code, out, _ = run(capsys, "count", "--m", m, "--format", "table")
    assert code == 0 and out == f"{m}: {expected}"


def test_count_range(capsys):
    code, doc = run_json(capsys, "count", "--m", "1..20", "--method", "both")
    assert code == 0 and len(doc["result"]["counts"]) == 20


def test_count_mismatch_exits_1(capsys, monkeypatch):
    import bachet.cli

    monkeypatch.setattr(bachet.cli, "count_bachet", lambda m: 999)
    code, out, _ = run(capsys, "count", "--m", "16", "--method", "both", "--format", "table")
    assert code == 1 and "enumeration gives 12" in out


@pytest.mark.parametrize(
    "argv, code, reason",
    [
        (["--m", "25", "--parts", "1,3,9,12"], 0, None),
        (["--m", "5", "--parts", "1,4"], 1, "fails completeness"),
        (["--m", "5", "--parts", "1,1,1,2"], 1, "not minimal"),
        (["--m", "6", "--parts", "1,4"], 1, "wrong sum"),
        (["--m", "80", "--parts", "2,6,18,54", "--e", "1", "--r", "2"], 0, None),
        (["--m", "15", "--parts", "1,2,4,8", "--r", "1"], 0, None),
    ],
)
def test_verify(capsys, argv, code, reason):
    got, doc = run_json(capsys, "verify", *argv)
    assert got == code and doc["result"]["verified"] is (code == 0)
    if reason is None:
        assert doc["result"]["reason"] is None
    else:
        assert doc["result"]["reason"].startswith(reason)


def test_verify_warns_on_unsorted(capsys):
    code, out, err = run(capsys, "verify", "--m", "25", "--parts", "12,1,3,9", "--format", "table")
    assert code == 0 and "sorted" in err and out == "25 = 1+3+9+12: verified\n"


@pytest.mark.parametrize(
    "argv, value",
    [(["ternary", "--k", "15"], "9"), (["ternary", "--k", "0"], "1"), (["ary", "--base", "2", "--k", "4"], "4")],
)
def test_ternary_ary(capsys, argv, value):
    code, doc = run_json(capsys, *argv)
    assert code == 0 and doc["result"]["value"] == value


@pytest.mark.parametrize(
    "argv, count", [(["perfect", "--m", "11"], "8"), (["subperfect", "--m", "40"], "8"), (["factorizations", "--n", "12"], "8")]
)
def test_macmahon_commands(capsys, argv, count):
    code, doc = run_json(capsys, *argv)
    assert code == 0 and doc["result"]["count"] == count


def test_subperfect_contains_bachet_40(capsys):
    _, doc = run_json(capsys, "subperfect", "--m", "40")
    rows = {tuple(r["factorization"]): r["parts"] for r in doc["result"]["partitions"]}
    assert rows[(3, 3, 3, 3)] == [1, 3, 9, 27]


def test_plan_twenty(capsys):
    code, doc = run_json(capsys, "plan", "--m", "40", "--targets", "20")
    assert code == 0 and doc["result"]["rows"] == [{"target": 20, "coefficients": [-1, 1, -1, 1]}]
    code, out, _ = run(capsys, "plan", "--m", "40", "--targets", "20", "--format", "table")
    assert out.splitlines()[-1].split() == ["20", "|", "-1", "+1", "-1", "+1"]


def test_plan_two_six(capsys):
    _, doc = run_json(capsys, "plan", "--weights", "2,6", "--mode", "two-pan", "--targets", "1..8")
    reachable = [r["target"] for r in doc["result"]["rows"] if r["coefficients"] is not None]
    assert reachable == [2, 4, 6, 8]


def test_plan_unreachable_marker(capsys):
    _, doc = run_json(capsys, "plan", "--weights", "1,4", "--mode", "one-pan", "--targets", "3")
    assert doc["result"]["unreachable"] == [3]
    _, out, _ = run(capsys, "plan", "--weights", "1,4", "--targets", "2", "--format", "table")
    assert "—" in out.splitlines()[-1]


def test_plan_default_targets(capsys):
    _, doc = run_json(capsys, "plan", "--m", "40")
    assert [r["target"] for r in doc["result"]["rows"]] == list(range(1, 41))
    assert doc["result"]["unreachable"] == []


def test_env_default_format(capsys, monkeypatch):
    monkeypatch.setenv("BACHET_FORMAT", "json")
    code, out, _ = run(capsys, "ternary", "--k", "15")
    assert json.loads(out)["result"]["value"] == "9"


def test_byte_identical_outputs(capsys):
    for argv in (["enumerate", "--m", "16"], ["plan", "--m", "13"], ["perfect", "--m", "23"]):
        first = run(capsys, *argv, "--format", "json")
        second = run(capsys, *argv, "--format", "json")
        assert first == second


def test_parse_int_list():
    assert parse_int_list("1,3,5..7") == [1, 3, 5, 6, 7]
    assert parse_int_list("-2..1") == [-2, -1, 0, 1]
