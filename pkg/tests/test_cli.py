import io
import json
import subprocess
import sys

import pytest

from dyckstat.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_phi():
    code, out, err = call("phi", "NNENEE")
    assert code == 0
    assert out.splitlines() == ["NENNEE", "case: 2"]
    assert err == ""


def test_phi_inv():
    code, out, _ = call("phi-inv", "NENNEE")
    assert (code, out.splitlines()) == (0, ["NNENEE", "case: 2"])


@pytest.mark.parametrize(
    "cmd, word, reason",
    [("phi", "NNNEEE", "MaximalLdr"), ("phi", "NENE", "EndsWithSingleEast"),
     ("phi-inv", "NNENEE", "FewerThanTwoReturns")],
)
def test_domain_errors(cmd, word, reason):
    code, out, err = call(cmd, word)
    assert code == 2
    assert out == ""
    assert reason in err


def test_stats():
    code, out, _ = call("stats", "NNENEE")
    assert code == 0
    assert out.splitlines() == [
        "semilength: 3", "returns: 1", "ldr: 1", "fdf: 2",
        "rises: [1, 2]", "rise_composition: [2, 1]",
    ]


def test_stats_invalid_word():
    code, out, err = call("stats", "NEEN")
    assert code == 2
    assert out == ""
    assert "NEEN" in err


def test_format_flag():
    assert call("stats", "--format", "UD", "UUDUDD")[1] == call("stats", "NNENEE")[1]
    assert call("stats", "110100")[1] == call("stats", "NNENEE")[1]
    assert call("stats", "--format", "NE", "UUDD")[0] == 2


def test_involution_and_trace():
    code, out, _ = call("involution", "NNENEENE")
    assert (code, out.strip()) == (0, "NENNEENE")
    code, out, _ = call("involution", "--trace", "NNENEENE")
    lines = [l.split("\t") for l in out.splitlines()]
    assert lines == [["NNENEE", "strip"], ["NENNEE", "case 2"], ["NENNEENE", "append"]]
    assert lines[-1][0] == call("involution", "NNENEENE")[1].strip()


def test_permutation_commands():
    assert call("perm-to-path", "2 3 1")[:2] == (0, "NNENEE\n")
    assert call("perm-to-path", "2,3,1")[:2] == (0, "NNENEE\n")
    assert call("path-to-perm", "NNNEEE")[:2] == (0, "3 1 2\n")
    code, _, err = call("perm-to-path", "3 2 1")
    assert code == 2 and "321" in err


def test_enumerate():
    code, out, _ = call("enumerate", "3")
    assert out.splitlines() == ["NNNEEE", "NNENEE", "NNEENE", "NENNEE", "NENENE"]
    code, out, _ = call("enumerate", "2", "--stats")
    assert out.splitlines() == ["NNEE\t1\t1\t1\t1", "NENE\t2\t0\t2\t1,2"]


def test_table():
    code, out, _ = call("table", "3")
    data = json.loads(out)
    assert code == 0
    assert data["semilength"] == 3
    got = {(tuple(e["rises"]), e["p"], e["q"]): e["count"] for e in data["entries"]}
    assert got == {((1,), 1, 1): 1, ((1, 2), 1, 2): 1, ((1, 3), 2, 2): 1,
                   ((1, 2), 2, 1): 1, ((1, 2, 3), 3, 3): 1}


def test_verify_switch():
    code, out, _ = call("verify", "--max-n", "3", "--checks", "switch")
    data = json.loads(out)
    assert code == 0
    assert len(data) == 1 and data[0]["check_name"] == "switch" and data[0]["passed"] is True


def test_verify_failure_exit_status(monkeypatch):
    from dyckstat import verify
    monkeypatch.setattr(verify, "fdf", lambda steps: -1)
    code, out, _ = call("verify", "--max-n", "3", "--checks", "duality,switch")
    data = json.loads(out)
    assert code == 1
    assert [d["passed"] for d in data] == [False, True]


def test_render():
    code, out, _ = call("render", "NE")
    assert (code, out) == (0, "|_.\n.\n")


@pytest.mark.parametrize(
    "argv",
    [[], ["frobnicate"], ["verify", "--checks", "nope"], ["enumerate", "-1"],
     ["verify", "--jobs", "0"], ["stats"]],
)
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_deterministic():
    assert call("enumerate", "4", "--stats") == call("enumerate", "4", "--stats")
    assert call("verify", "--max-n", "5") == call("verify", "--max-n", "5")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dyckstat.cli", "phi", "NNENEE"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["NENNEE", "case: 2"]
