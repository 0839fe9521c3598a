import csv
import io
import json
import subprocess
import sys

import pytest

from multiroot.cli import COUNT_COLUMNS, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


class TestCount:
    def test_w12(self, capsys):
        code, doc = run_json(capsys, "count", "--lambda", "1 2", "--q", "2,3", "--method", "all")
        assert code == 0 and doc["schema"] == 1 and doc["pass"]
        values = {(r["q"], r["method"]): r["value"] for r in doc["records"]}
        assert values == {(2, "brute"): 2, (2, "dp"): 2, (3, "brute"): 6, (3, "dp"): 6}

    def test_wbar(self, capsys):
        code, doc = run_json(capsys, "count", "--lambda", "1^4", "--q", "3", "--stat", "wbar")
        assert code == 0
        assert {r["value"] for r in doc["records"]} == {81}

    def test_empty_partition(self, capsys):
        code, doc = run_json(capsys, "count", "--lambda", "", "--q", "5")
        assert code == 0 and {r["value"] for r in doc["records"]} == {1}

    def test_formal_basis_uses_dp(self, capsys):
        code, doc = run_json(capsys, "count", "--lambda", "A (2A) B0", "--basis", "A,B0", "--q", "3", "--stat", "wbar")
        assert code == 0
        assert [(r["method"], r["value"]) for r in doc["records"]] == [("dp", 27)]

    def test_csv_columns(self, capsys):
        code, out, _ = run(capsys, "count", "--lambda", "1 2", "--q", "2", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == COUNT_COLUMNS
        assert rows[1] == ["2 1", "2", "w", "brute", "2", "2", "true"]

    def test_budget_exit(self, capsys):
        code, doc = run_json(capsys, "count", "--lambda", "1^9", "--q", "5", "--budget", "1000")
        assert code == 3
        brute = [r for r in doc["records"] if r["method"] == "brute"][0]
        assert brute["value"] is None and "budget" in brute["error"]

    def test_budget_env(self, capsys, monkeypatch):
        monkeypatch.setenv("MULTIROOT_BUDGET", "10")
        code, _, _ = run(capsys, "count", "--lambda", "1^4", "--q", "2", "--method", "brute")
        assert code == 3

    def test_parse_error_is_usage(self, capsys):
        code, _, err = run(capsys, "count", "--lambda", "1 0", "--q", "2")
        assert code == 2 and "zero part" in err

    def test_non_prime_q(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["count", "--lambda", "1", "--q", "4"])
        assert info.value.code == 2


class TestTheorem:
    def test_sweep(self, capsys):
        code, doc = run_json(capsys, "theorem", "--b", "2", "--e", "2", "--k", "0..3", "--q", "2,3")
        assert code == 0 and len(doc["records"]) == 16
        for r in doc["records"]:
            assert r["value"] == r["expected"] == r["q"] ** (r["k"] + 2)

    def test_12259(self, capsys):
        code, doc = run_json(capsys, "theorem", "--b", "2,5,9", "--e", "2,1,1", "--k", "1", "--q", "2")
        assert code == 0 and {r["value"] for r in doc["records"]} == {32}
        assert doc["records"][0]["lambda"] == "9 5 2^2 1"

    def test_violation_requires_force(self, capsys):
        code, _, err = run(capsys, "theorem", "--b", "2,3", "--e", "2,1", "--k", "0", "--q", "2")
        assert code == 2 and "--force" in err

    def test_forced_violation_reports_without_claim(self, capsys):
        code, doc = run_json(capsys, "theorem", "--b", "2,3", "--e", "2,1", "--k", "0", "--q", "2", "--force")
        assert code == 0
        for r in doc["records"]:
            assert r["hypothesis"] is False and r["expected"] is None
            assert r["value"] == 8  # brute-force value of wbar(2^2 3) at q = 2


class TestMotivic:
    def test_diff_zero(self, capsys):
        code, doc = run_json(capsys, "motivic", "--b", "2", "--e", "1", "--T", "6")
        assert code == 0
        assert [r["diff"] for r in doc["records"]] == ["0"] * 7
        assert doc["closed"] == doc["recursion"]

    def test_specialize_q2(self, capsys):
        code, doc = run_json(capsys, "motivic", "--b", "2", "--e", "1", "--T", "6", "--specialize", "q=2")
        assert code == 0
        assert [r["specialized"] for r in doc["records"]] == [2 ** (j + 1) for j in range(7)]

    def test_specialize_affine_plane(self, capsys):
        code, doc = run_json(capsys, "motivic", "--b", "3", "--e", "2", "--T", "8", "--specialize", "q=3,d=2")
        assert code == 0
        assert [r["specialized"] for r in doc["records"]] == [3 ** (2 * (j + 2)) for j in range(9)]

    def test_forced_violation_fails(self, capsys):
        code, doc = run_json(capsys, "motivic", "--b", "2,3", "--e", "2,1", "--T", "4", "--force")
        assert code == 1 and "divisibility" in doc["error"]

    def test_text_rendering(self, capsys):
        code, out, _ = run(capsys, "motivic", "--b", "2", "--e", "1", "--T", "1")
        assert code == 0
        assert out.splitlines()[0] == "PASS  power=0  closed=S1  recursion=S1  diff=0"


class TestProofcheck:
    @pytest.mark.parametrize(
        "argv",
        [
            ["--b", "2", "--e", "1", "--k", "0..2"],
            ["--b", "2,5", "--e", "2,1", "--k", "0", "--q", "2"],
            ["--b", "1", "--e", "3", "--k", "1"],
        ],
    )
    def test_examples_pass(self, capsys, argv):
        code, doc = run_json(capsys, "proofcheck", *argv)
        assert code == 0 and doc["pass"]
        assert all(r["pass"] for r in doc["records"])

    def test_rejects_violation(self, capsys):
        code, _, _ = run(capsys, "proofcheck", "--b", "2,3", "--e", "2,1")
        assert code == 2


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "multiroot.cli", "theorem", "--b", "2", "--e", "1", "--k", "0..2", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert first == second
    assert "time" not in first
