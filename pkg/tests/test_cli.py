import io

import pytest

from dualbraid.cli import Config, run
from dualbraid.errors import BraidError


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_normalize():
    assert call("normalize", "--n", "3", "1.2 2.3 1.2 2.3") == (0, "1.2 1.3 1.2 1.2\n", "")


def test_split():
    code, out, _ = call("split", "--n", "3", "1.2 2.3 1.2 2.3")
    assert (code, out) == (0, "1.2 | 1.2 | e | 1.2 1.2\n")


def test_reverse():
    code, out, _ = call("reverse", "--n", "3", "1.2 2.3 1.2 1.3!")
    assert (code, out) == (0, "D: e\nN: 2.3 2.3\n")
    assert call("reverse", "--n", "3", "--strategy", "rightmost", "1.2 2.3 1.2 1.3!")[1] == out


def test_accept():
    assert call("accept", "--n", "3", "1.2 1.3 1.2 1.2")[:2] == (0, "ACCEPT\n")
    assert call("accept", "--n", "3", "1.2 2.3 1.2 2.3")[:2] == (0, "REJECT\n")
    assert call("accept", "--n", "3", "--raw", "1.2 1.2 1.3 1.2")[:2] == (0, "ACCEPT\n")
    assert call("accept", "--n", "3", "--star", "1.2 1.3 1.2 1.2")[:2] == (0, "REJECT\n")
    assert call("accept", "--n", "4", "--star", "1.3 2.4")[:2] == (0, "ACCEPT\n")


def test_count():
    assert call("count", "--n", "3", "--len", "2") == (0, "automaton=7 oracle=7\n", "")


def test_oracle_count():
    assert call("oracle", "count", "--n", "3", "--len", "2")[:2] == (0, "7\n")


def test_build_text_and_dot():
    code, out, _ = call("build", "--n", "3")
    assert code == 0 and out.startswith("n=3\n")
    assert sum(line.startswith("state ") for line in out.splitlines()) == 4
    code, dot, _ = call("build", "--n", "4", "--format", "dot")
    assert code == 0 and dot.startswith("digraph")
    code, out, _ = call("build", "--n", "4", "--minimize")
    assert code == 0
    code, out, _ = call("build", "--n", "3", "--star", "--full")
    assert code == 0


def test_sigma():
    code, out, _ = call("sigma", "--n", "3", "1.2!")
    assert code == 0
    assert out.splitlines() == ["1.2!", "artin: σ1^-1", "verdict: negative"]
    code, out, _ = call("sigma", "--n", "4", "1.3 1.3!")
    assert out.splitlines() == ["e", "artin: e", "verdict: trivial"]


def test_witness():
    code, out, _ = call("witness", "--k", "2")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "w  = " + "2.3 1.2 1.3 " * 2 + "1.2 " * 5 + "1.2"
    assert all(line.startswith("PASS") for line in lines[2:])
    assert len(lines) == 2 + 5


def test_domain_errors_exit_1():
    code, out, err = call("normalize", "--n", "3", "1.4")
    assert code == 1 and out == "" and err.startswith("error:")
    assert call("normalize", "--n", "3", "1.2 x")[0] == 1
    assert call("witness", "--k", "0")[0] == 1
    assert call("--max-visited", "0", "oracle", "count", "--n", "3", "--len", "2")[0] == 1
    assert call("oracle", "count", "--max-visited", "5", "--n", "3", "--len", "4")[0] == 2
    assert call("--max-visited", "5", "oracle", "count", "--n", "3", "--len", "4")[0] == 1


def test_usage_errors_exit_2(capsys):
    assert call()[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("normalize", "1.2")[0] == 2
    assert call("build", "--n", "3", "--format", "svg")[0] == 2


def test_output_is_deterministic():
    first = call("build", "--n", "4", "--format", "dot")
    assert all(call("build", "--n", "4", "--format", "dot") == first for _ in range(3))


def test_config_validation():
    with pytest.raises(BraidError):
        Config(max_visited=0)
    with pytest.raises(BraidError):
        Config(n=1)
