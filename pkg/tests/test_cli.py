import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from epwcalc.cli import run

GOLDEN = Path(__file__).parent / "golden" / "report_all.json"


def _capture(argv):
    proc = subprocess.run(
        [sys.executable, "-m", "epwcalc.cli", *argv],
        capture_output=True, text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_exit_codes():
    assert run(["euler", "--case", "natural", "--out", "/dev/null"]) == 0
    assert run(["no-such-command"]) == 2
    assert run([]) == 2
    assert run(["ring", "--q", "abc"]) == 2
    assert run(["betti", "--case", "sideways"]) == 2
    # precondition violations surface as computation errors
    assert run(["ring", "--q", "-1"]) == 1
    assert run(["relations", "--q", "0"]) == 1
    assert run(["walls", "--beta", "-1"]) == 1
    assert run(["pell", "--bound", "0"]) == 1


def test_error_goes_to_stderr():
    code, out, err = _capture(["ring", "--q", "-2"])
    assert code == 1
    assert out == ""
    assert "positive" in err


def test_json_schema(tmp_path):
    code, out, _ = _capture(["fixed-locus", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"command", "params", "results"}
    assert payload["command"] == "fixed-locus"
    assert payload["params"] == {"degree": "720", "q": "4"}
    for row in payload["results"]:
        assert set(row) == {"label", "value", "paper_anchor"}
        # every reported value is an exact rational in lowest terms
        parsed = Fraction(row["value"])
        assert str(parsed) == row["value"]


def test_reported_reference_values():
    code, out, _ = _capture(["fixed-locus", "--json"])
    values = {r["label"]: r["value"] for r in json.loads(out)["results"]}
    assert values["chi(O)"] == "-130"
    assert values["chi(Omega^1)"] == "470"
    assert values["c1*c2"] == "-3120"
    assert values["K^3"] == "5760"
    assert values["involution case (+1 natural, -1 opposite)"] == "1"
    assert values["hodge symmetry (1=holds)"] == "1"

    code, out, _ = _capture(["lagrangian", "--json"])
    values = {r["label"]: r["value"] for r in json.loads(out)["results"]}
    assert values["a (h^3 coefficient)"] == "15/8"
    assert values["b (h*c2 coefficient)"] == "-5/8"
    assert values["self-intersection of projection"] == "1200"
    assert values["sign convention chi_top/[W]^2"] == "-1"

    code, out, _ = _capture(["relations", "--json"])
    values = {r["label"]: r["value"] for r in json.loads(out)["results"]}
    assert values["c4 -> h^4 coefficient"] == "-10"
    assert values["c4 -> h^2*c2 coefficient"] == "20/3"
    assert values["c2^2 / c4 ratio"] == "5/2"


def test_text_output_mentions_the_values():
    code, out, _ = _capture(["euler", "--case", "opposite"])
    assert code == 0
    assert "chi fixed locus" in out
    assert "-1536" in out


def test_out_writes_the_report(tmp_path):
    target = tmp_path / "report.json"
    assert run(["betti", "--case", "natural", "--json", "--out", str(target)]) == 0
    payload = json.loads(target.read_text())
    values = [r["value"] for r in payload["results"]]
    assert values == ["1", "1", "255", "486"]


def test_custom_parameters_flow_through():
    code, out, _ = _capture(["lagrangian", "--degree", "72", "--q", "1", "--json"])
    payload = json.loads(out)
    assert payload["params"] == {"degree": "72", "q": "1"}
    values = {r["label"]: r["value"] for r in payload["results"]}
    assert values["a (h^3 coefficient)"] == "12"
    assert values["b (h*c2 coefficient)"] == "-1"


def test_pell_lists_solutions():
    code, out, _ = _capture(["pell", "--bound", "2", "--json"])
    values = {r["label"]: r["value"] for r in json.loads(out)["results"]}
    assert values["solution count"] == "6"
    assert values["negative-x effectivity violations"] == "0"
    assert values["x[0]"] == "-2" and values["y[0]"] == "-3"
    assert values["x[5]"] == "2" and values["y[5]"] == "3"


def test_report_all_is_byte_deterministic():
    code1, out1, _ = _capture(["report-all", "--json"])
    code2, out2, _ = _capture(["report-all", "--json"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_report_all_matches_golden():
    """Byte-for-byte comparison against the checked-in report."""
    code, out, _ = _capture(["report-all", "--json"])
    assert code == 0
    assert out == GOLDEN.read_text()
