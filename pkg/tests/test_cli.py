import json
import subprocess
import sys

import pytest

from hankelcalc.cli import run_cli


def _run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hankel_table(capsys):
    code, out, _ = _run(capsys, "hankel", "P2", "--n", "11")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "n,k,H"
    assert [int(r.split(",")[2]) for r in rows[1:]] == [1, 1, -2, 4, 8, -16, -32, -64, 128, -256, -1536, -3072]


def test_hankel_mod(capsys):
    code, out, _ = _run(capsys, "hankel", "P3", "--n", "6", "--mod", "3", "--format", "json")
    assert code == 0
    assert [r["H"] for r in json.loads(out)] == ["1", "1", "2", "1", "2", "1", "2"]


def test_expand_formats(capsys):
    code, out, _ = _run(capsys, "expand", "sqrt(1/(1-x))", "--order", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["coeffs"] == ["1", "1/2", "3/8", "5/16"]
    code, out, _ = _run(capsys, "expand", "P2", "--order", "3", "--format", "csv")
    assert out.splitlines() == ["k,a_k", "0,1", "1,-1", "2,-1", "3,1"]


def test_jfrac_breakdown_exit_code(capsys):
    code, _, err = _run(capsys, "jfrac", "1/(1-x)", "--depth", "3")
    assert code == 3
    assert "n=2" in err and "H_2=0" in err


def test_jfrac_detect_period(capsys):
    code, out, _ = _run(capsys, "jfrac", "CATALAN", "--depth", "10", "--detect-period", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["v_pattern"] == "(1)^*" and d["conjectural"] is True


def test_guess(capsys):
    code, out, _ = _run(capsys, "guess", "CATALAN", "--dx", "2", "--df", "2")
    assert code == 0 and out.strip() == "x*f^2 - f + 1 = 0"


def test_verify_json(capsys):
    code, out, _ = _run(capsys, "verify", "T1.2", "--order", "128", "--format", "json")
    assert code == 0
    [rep] = json.loads(out)
    assert rep["status"] == "pass" and rep["elapsed_ms"] is None


def test_verify_failure_exit_code(capsys, monkeypatch):
    from hankelcalc.verify import registry

    entry = registry._REGISTRY["T1.1"]
    monkeypatch.setitem(
        registry._REGISTRY,
        "T1.1",
        registry.CheckEntry("T1.1", entry.anchor, 10, {}, lambda N: registry.expect(False, 3, "forced"), ""),
    )
    code, out, _ = _run(capsys, "verify", "T1.1")
    assert code == 1 and "index 3" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["hankel", "NOPE", "--n", "3"],
        ["hankel", "P2", "--n", "3", "--mod", "6"],
        ["verify", "T9.9"],
        ["expand", "1+", "--order", "4"],
        ["expand", "P2"],
        ["frobnicate"],
        ["hankel", "P2"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == 2 and err


def test_list(capsys):
    code, out, _ = _run(capsys, "list", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 21


def test_out_file(capsys, tmp_path):
    path = tmp_path / "h.csv"
    code, out, _ = _run(capsys, "hankel", "S2", "--n", "4", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().splitlines()[-1] == "4,0,21"


def test_json_is_byte_stable():
    argv = [sys.executable, "-m", "hankelcalc", "verify", "T1.2", "T1.3", "--order", "64", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b
