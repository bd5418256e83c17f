import json
import subprocess
import sys
from pathlib import Path

import pytest

from cesa.cli import main, parse_field, run
from cesa.scalars import FieldSpec

FIX = Path(__file__).parent / "fixtures"

GOLDEN = {
    "example21": ["verify-example", "2.1", "--char", "2"],
    "example22": ["verify-example", "2.2", "--char", "2", "--trials", "200"],
    "example23": ["verify-example", "2.3", "--char", "0"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_reports(name):
    rep, _ = run(GOLDEN[name])
    assert rep.dumps(timing=False) == (FIX / "reports" / f"{name}.json").read_text(encoding="utf-8")
    assert rep.exit_code() == 0


@pytest.mark.parametrize("text,expected", [("2", FieldSpec.prime(2)), ("F_3", FieldSpec.prime(3)),
                                           ("q", FieldSpec.rationals()), ("0", FieldSpec.rationals())])
def test_parse_field(text, expected):
    assert parse_field(text) == expected


@pytest.mark.parametrize("argv,code", [
    (["verify-example", "2.3", "--char", "2"], 0),
    (["check", str(FIX / "d4.json"), "--char", "2"], 0),
    (["check", str(FIX / "c6.json"), "--char", "0"], 0),
    (["check", str(FIX / "d4.json"), "--char", "0"], 0),
    (["check", str(FIX / "q8.json"), "--mode", "structural"], 0),
    (["check", str(FIX / "nonassoc.json")], 2),
    (["check", str(FIX / "missing.json")], 2),
    (["check", str(FIX / "d4.json"), "--cap", "10"], 3),
    (["qcl", "ex22", "x"], 0),
    (["qcl", "ex22", "x + y"], 0),
    (["qcl", "ex22", "e + z"], 1),
    (["qcl", "ex22", "x +"], 2),
    (["qcl", "ex23", "x"], 3),
])
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code


def test_check_d4_rational_names_counterexample(capsys):
    main(["check", str(FIX / "d4.json"), "--char", "0"])
    out = capsys.readouterr().out
    assert "verdict: not-centrally-essential" in out
    assert "a = r + -1*r3" in out


def test_witness_mode(capsys):
    assert main(["check", str(FIX / "d4.json"), "--char", "0", "--mode", "witness",
                 "--element", "r + f"]) == 0
    assert "c = e + r2" in capsys.readouterr().out


def test_qcl_text_output(capsys):
    main(["qcl", "ex22", "x"])
    out = capsys.readouterr().out
    assert "verdict: (x) * (x) = x^2 is central" in out
    assert "c = (x^2 + z x^2) * (e)^-1" in out


def test_json_report_and_no_timing(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify-example", "2.3", "--json", str(out)]) == 0
    d = json.loads(out.read_text(encoding="utf-8"))
    assert d["schema"] == "cesa-report/1" and "timing_s" in d
    main(["verify-example", "2.3", "--json", str(out), "--no-timing"])
    assert "timing_s" not in json.loads(out.read_text(encoding="utf-8"))


def test_emit_golden(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert main(["verify-example", "2.1", "--emit-golden", str(out)]) == 0
    assert out.read_bytes() == (FIX / "example21_table.json").read_bytes()
    assert main(["verify-example", "2.1", "--golden", str(out)]) == 0


def test_golden_mismatch_fails(tmp_path, capsys):
    bad = tmp_path / "t.json"
    bad.write_text((FIX / "example21_table.json").read_text(encoding="utf-8").replace("θ", "0"),
                   encoding="utf-8")
    assert main(["verify-example", "2.1", "--golden", str(bad)]) == 1
    assert "first failing check: table matches golden file" in capsys.readouterr().out


def test_console_script_runs():
    r = subprocess.run([sys.executable, "-m", "cesa.cli", "verify-example", "2.3"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "not-centrally-essential" in r.stdout
