import io
import json
import subprocess
import sys

import pytest

from weylsub.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out, err=io.StringIO())
    return code, out.getvalue()


@pytest.fixture
def gens_file(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"generators": [{"name": "A", "expr": "x^2"},
                                               {"name": "B", "expr": "x d"},
                                               {"name": "C", "expr": "d^2"}],
                                "bounds": {"word_length": 4}}))
    return str(path)


def test_documented_outputs(gens_file):
    assert call("mul", "d^2", "x^2") == (0, '{"status":"ok","result":"x^2 d^2 + 4 x d + 2"}\n')
    assert call("dxy", "--power", "2", "d") == (
        0, '{"status":"ok","result":false,"witness":{"k":1,"residue":"2x"}}\n')
    assert call("classify", "--gens-file", gens_file) == (
        0, '{"status":"ok","result":{"a":"0","m":2,"p":"0"}}\n')


def test_unknown_exits_two():
    code, text = call("member", "d", "--gen", "x^2", "--gen", "x d", "--gen", "d^2",
                      "--word-length", "3")
    reply = json.loads(text)
    assert code == 2 and reply["status"] == "unknown" and reply["result"] is None
    assert reply["bounds_used"] == {"word_length": 3, "x_degree_cap": 24, "order_cap": 24}


def test_member_certificate_and_file_bounds(gens_file):
    code, text = call("member", "x d", "--gens-file", gens_file)
    reply = json.loads(text)
    assert code == 0 and reply["certificate"] == "B"
    assert reply["bounds_used"]["word_length"] == 4


def test_parse_errors_exit_one():
    code, text = call("mul", "x^", "d")
    reply = json.loads(text)
    assert code == 1 and reply["status"] == "error" and reply["offset"] == 2


@pytest.mark.parametrize("argv", [[], ["frob"], ["mul", "x"], ["dxy", "d"], ["member", "d"],
                                  ["classify", "--gens-file", "/nonexistent/g.json"]])
def test_usage_errors_exit_64(argv):
    assert call(*argv)[0] == 64


@pytest.mark.parametrize("argv,result", [
    (["apply", "x d", "x^3"], "3x^3"),
    (["symbol", "x^2 d^2 + 4 x d + 2"], {"order": 2, "symbol": "x^2 xi^2"}),
    (["symbol", "0"], {"order": "-inf", "symbol": "0"}),
    (["reynolds", "x + x^2", "--n", "2"], "x^2"),
    (["invariant-basis", "--n", "3", "--dmax", "2"], ["1", "x d"]),
    (["graded-member", "x^3 xi^3", "--gen", "x^2", "--gen", "x xi", "--gen", "xi^2"], True),
    (["graded-member", "x xi", "--gen", "x^2", "--gen", "xi^2"], False),
    (["cofinite", "--gen", "x^2", "--gen", "x xi"],
     {"verdict": "NotCofinite", "witness": ["0", "1"], "base_generator": "g1"}),
    (["graded-gens", "x^2", "x d", "d^2", "--word-length", "1"], ["x^2", "x xi", "xi^2"]),
    (["twist", "d", "--p", "x^2"], "d + x^2"),
    (["untwist", "d + x^2", "--p", "x^2"], "d"),
    (["trace", "x^4", "--m", "2"], "2x^4"),
    (["canonicalize", "1 + x", "--m", "2"], {"p": "1", "r": "1/2"}),
    (["forward", "--m", "2", "--p", "x^2"], ["x^2", "d^2 + 2 x^2 d + x^4 + 2 x"]),
    (["uniform", "x^3 - x^2"], False),
    (["hurwitz", "x^3"], True),
    (["sn-uniform", "--n", "3", "(1 2 3)"], True),
    (["sn-uniform", "--n", "3", "(1 2)"], False),
])
def test_subcommands(argv, result):
    code, text = call(*argv)
    assert code == 0
    assert json.loads(text)["result"] == result


def test_ramify_profile():
    reply = json.loads(call("ramify", "x^3 - x^2")[1])
    entries = reply["result"]["entries"]
    assert [e["critical_value"] for e in entries] == ["0", "-4/27"]
    assert entries[0]["fiber_indices"] == [2, 1]


def test_verify_triple_reports_obstruction():
    code, text = call("verify-triple", "--a", "1", "--m", "2",
                      "--gen", "x^2", "--gen", "x d", "--gen", "d^2")
    reply = json.loads(text)
    assert code == 0 and reply["result"] is False
    assert "weight-1" in reply["certificate"]


def test_output_is_byte_stable(gens_file):
    for argv in (["classify", "--gens-file", gens_file, "--certificates"],
                 ["member", "x d", "--gen", "x^3", "--gen", "d^3"],
                 ["cofinite", "--gen", "x^3", "--gen", "x xi", "--gen", "xi^3"]):
        first = call(*argv)
        assert all(call(*argv) == first for _ in range(3))
        fresh = subprocess.run([sys.executable, "-m", "weylsub", *argv],
                               capture_output=True, text=True, check=False)
        assert (fresh.returncode, fresh.stdout) == first
