import dataclasses
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from polarsteiner import cli, suites
from polarsteiner.oracle import load


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip().startswith("{") else text)


def test_params():
    code, data = run("params", "--space", "C", "--n", "2", "--q", "2")
    assert code == 0 and data["x_size"] == "15"
    assert data["multiplicities"] == ["1", "9", "5"]
    code, data = run("params", "--space", "D", "--n", "2", "--q", "2")
    assert data["x_size"] == "6"


def test_unknown_family_is_a_usage_error(capsys):
    code, _ = run("params", "--space", "Z", "--n", "2", "--q", "2")
    assert code == 2
    assert "unknown family" in capsys.readouterr().err


def test_missing_argument_is_a_usage_error(capsys):
    assert run("bound", "--space", "C", "--n", "2")[0] == 2
    assert run("bound", "--space", "C", "--n", "2", "--q", "6", "--d", "1")[0] == 2


def test_bounds():
    assert run("bound", "--space", "D", "--n", "4", "--q", "2", "--d", "2")[1]["value"] == "135"
    code, data = run("lp", "--space", "D", "--n", "4", "--q", "2", "--d", "2")
    assert code == 0 and data["optimum"] == "135" and data["certificate_ok"]
    assert run("lp", "--space", "C", "--n", "3", "--q", "3", "--d", "1")[1]["optimum"] == "1120"


def test_rationals_are_strings():
    code, data = run("eigenvalues", "--space", "2A-odd", "--n", "2", "--q", "2")
    assert code == 0
    for row in data["Q"]:
        for entry in row:
            assert isinstance(entry, str)
            Fraction(entry)


def test_steiner_verdicts():
    code, data = run("steiner", "--space", "D", "--n", "4", "--q", "2", "--t", "2")
    assert code == 0
    assert (data["outcome"], data["case"], data["R"]) == ("NonexistentByRatio", "C2", "2/5")
    code, data = run("steiner", "--space", "B", "--n", "5", "--q", "2", "--t", "2")
    assert data["outcome"] == "NonexistentByDualNegativity" and data["k"] == 4
    assert Fraction(data["dual_entry"]) < 0
    code, data = run("steiner", "--space", "2A-even", "--n", "5", "--q", "2", "--t", "2")
    assert code == 3 and data["outcome"] == "Open"


def test_table_format():
    code, text = run("params", "--space", "C", "--n", "2", "--q", "2", "--format", "table")
    assert code == 0 and "x_size: 15" in text


def test_verify_suites():
    code, data = run("verify", "--suite", "identities")
    assert code == 0 and data["identities"]["passed"]
    code, data = run("verify", "--suite", "oracle", "--max-size", "500")
    assert code == 0 and data["oracle"]["passed"]


def test_corrupted_table_fails_verification(monkeypatch):
    real = suites.load_table

    def corrupt(spec):
        t = real(spec)
        if spec.n != 3:
            return t
        P = [list(r) for r in t.P]
        P[1][1] += 1
        return dataclasses.replace(t, P=tuple(tuple(r) for r in P))

    monkeypatch.setattr(suites, "load_table", corrupt)
    code, data = run("verify", "--suite", "eigen")
    assert code == 1 and not data["eigen"]["passed"]


def test_enumerate_and_export(tmp_path):
    path = tmp_path / "c2.txt"
    code, data = run("enumerate", "--space", "C", "--n", "2", "--q", "2", "--export", str(path))
    assert code == 0 and data["generators"] == 15 and data["matches_closed_forms"]
    assert load(str(path)).size == 15
    code, _ = run("enumerate", "--space", "C", "--n", "4", "--q", "3", "--max-size", "100")
    assert code == 2


def test_rankmap():
    code, data = run("rankmap", "--kind", "Alternating", "--n", "4", "--q", "2")
    assert code == 0 and data["ok"] and data["exhaustive"]
    assert run("rankmap", "--kind", "Hermitian", "--n", "2", "--q", "3")[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polarsteiner.cli", "params", "--space", "half-D", "--n", "4", "--q", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["x_size"] == "135"


@pytest.mark.parametrize("name", sorted(cli.FAMILY_NAMES))
def test_every_family_name_parses(name):
    n = 4 if name == "half-D" else 2
    assert run("params", "--space", name, "--n", str(n), "--q", "3")[0] == 0
