import json
import subprocess
import sys

import pytest

from genus_spectra.cli import main, runlength


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_omega_range_text(capsys):
    code, out, _ = run(capsys, "omega", "-p", "5", "-N", "2", "--range", "60..66", "--format", "text")
    assert code == 0
    lines = dict(line.split(": ") for line in out.strip().splitlines())
    assert [lines[str(y)] for y in range(63, 67)] == ["false", "true", "true", "true"]


def test_omega_level_zero(capsys):
    code, out, _ = run(capsys, "omega", "-p", "3", "-N", "0", "-y", "17")
    data = json.loads(out)
    assert code == 0 and data["schema"] == "gst-1"
    assert data["results"] == [{"member": True, "y": 17}]


def test_omega_brute_and_witness(capsys):
    _, out, _ = run(capsys, "omega", "-p", "3", "-N", "2", "--range", "0..20", "--brute", "--witness")
    for row in json.loads(out)["results"]:
        if row["member"]:
            h, x = row["witness"]["h"], row["witness"]["x"]
            assert 9 * h + 3 * x[0] + 4 * x[1] == row["y"]


def test_sigma_stable(capsys):
    code, out, _ = run(capsys, "sigma-stable", "-p", "3", "-e", "2", "--format", "text")
    assert code == 0 and out.strip() == "6"


def test_genus(capsys):
    _, out, _ = run(capsys, "genus", "-p", "3", "-n", "5", "-e", "2", "--sig", "(2; 0,0)")
    assert json.loads(out)["genus"] == 244


def test_spectrum_both_agree(capsys):
    code, out, _ = run(capsys, "spectrum", "-p", "3", "-n", "5", "-e", "2", "--type", "II", "--bound", "60")
    data = json.loads(out)
    assert code == 0
    assert data["agreement"] == "AGREE"
    assert data["enumerated"]["min_reduced"] == 3


def test_spectrum_stable_type_one(capsys):
    _, out, _ = run(capsys, "spectrum", "-p", "5", "-n", "10", "-e", "3", "--type", "I", "--mode", "enumerate")
    assert json.loads(out)["enumerated"]["stable_reduced"] == 439


def test_spectrum_disagreement_exits_nonzero(capsys):
    code, out, _ = run(capsys, "spectrum", "-p", "5", "-n", "11", "-e", "3", "--type", "III")
    assert code == 1 and json.loads(out)["agreement"] == "DISAGREE"
    code, out, _ = run(capsys, "spectrum", "-p", "5", "-n", "11", "-e", "3", "--type", "III", "--errata")
    assert code == 0


def test_invalid_profile_message(capsys):
    code, _, err = run(capsys, "spectrum", "-p", "3", "-n", "5", "-e", "2", "--type", "III")
    assert code == 1 and "type III requires p ≥ 5" in err


def test_profile_from_inline_json(capsys):
    profile = json.dumps({"p": 3, "n": 5, "e": 2, "type": "II"})
    code, out, _ = run(capsys, "spectrum", "--profile", profile, "--bound", "30", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "reduced_genus,genus"


def test_conflicting_sources_is_usage_error(capsys):
    code, _, err = run(capsys, "spectrum", "--profile", "{}", "-p", "3")
    assert code == 2 and "exactly one" in err


def test_group_commands(capsys):
    _, out, _ = run(capsys, "classify", "-p", "3", "-n", "5", "-k", "1", "--a", "4=1", "-w", "1")
    assert json.loads(out)["profile"]["type"] == "II"
    _, out, _ = run(capsys, "zclasses", "-p", "3", "-n", "5")
    data = json.loads(out)
    assert data["count"] == 3 and data["orders"] == [3, 3, 3]
    _, out, _ = run(capsys, "realizable", "-p", "3", "-n", "5", "-k", "1", "--a", "4=1", "-w", "1", "--sig", "(0;0,3)")
    data = json.loads(out)
    assert data["verdict"] == "yes" and len(data["witness"]["elliptic"]) == 3
    code, out, _ = run(capsys, "verify-group", "-p", "3", "-n", "5", "--samples", "300")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_tables_order_81(capsys):
    code, out, _ = run(capsys, "verify-tables", "-p", "3", "-n", "4", "--samples", "200")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["oracle_checked"] == 9


def test_verify_tables_order_243_printed_and_errata(capsys):
    code, out, _ = run(capsys, "verify-tables", "-p", "3", "-n", "5", "--samples", "200")
    data = json.loads(out)
    assert code == 1
    assert {f["profile"]["type"] for f in data["oracle_failures"]} == {"V"}
    code, _, _ = run(capsys, "verify-tables", "-p", "3", "-n", "5", "--samples", "200", "--errata")
    assert code == 0


def test_census_only(capsys):
    _, out, _ = run(capsys, "verify-tables", "-p", "5", "-n", "6", "--census-only", "--samples", "100")
    data = json.loads(out)
    assert data["oracle_checked"] == 0
    assert sum(data["census"]["types"].values()) == 225


def test_output_is_byte_identical_across_runs():
    argv = [sys.executable, "-m", "genus_spectra", "spectrum", "-p", "5", "-n", "11", "-e", "3", "--type", "IV"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert first == second


def test_runlength_and_large_windows(capsys):
    assert runlength([1, 2, 3, 5, 7, 8]) == [[1, 3], [5, 5], [7, 8]]
    _, out, _ = run(capsys, "spectrum", "-p", "3", "-n", "5", "-e", "2", "--type", "I", "--bound", "20000",
                    "--mode", "assemble")
    window = json.loads(out)["assembled"]
    assert "values" not in window
    assert window["values_runlength"][-1][1] == 20000
    _, out, _ = run(capsys, "spectrum", "-p", "3", "-n", "5", "-e", "2", "--type", "I", "--bound", "20000",
                    "--mode", "assemble", "--full")
    assert len(json.loads(out)["assembled"]["values"]) == json.loads(out)["assembled"]["count"]


@pytest.mark.parametrize("argv", [["omega", "-p", "3"], ["nonsense"]])
def test_argparse_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
