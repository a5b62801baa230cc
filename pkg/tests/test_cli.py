import json
import os
import subprocess
import sys

import pytest

from gtbasis.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def records(text):
    return [json.loads(line) for line in text.splitlines()]


class TestDim:
    def test_two_one(self, capsys):
        code, out, _ = run(capsys, "dim", "--weight", "2,1", "--rank", "3")
        assert code == 0 and records(out)[0]["dimension"] == 8

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "dim", "--weight", "2,1", "--rank", "3", "--format", "text")
        assert code == 0 and out == "8\n"

    def test_empty_weight(self, capsys):
        code, out, _ = run(capsys, "dim", "--weight", "", "--rank", "5")
        assert code == 0 and records(out)[0]["dimension"] == 1

    def test_weight_too_long(self, capsys):
        code, _, err = run(capsys, "dim", "--weight", "1,1,1", "--rank", "2")
        assert code == 2 and "WeightTooLong" in err


class TestBasis:
    def test_fundamental_rank_two(self, capsys):
        code, out, _ = run(capsys, "basis", "--weight", "1", "--rank", "2")
        recs = records(out)
        assert code == 0 and len(recs) == 2
        assert recs[0]["pattern"] == {"n": 2, "rows": [[0], [1, 0]]}
        assert recs[0]["vector"]["terms"] == [{"columns": [[2]], "coeff": "1"}]

    def test_trivial(self, capsys):
        code, out, _ = run(capsys, "basis", "--weight", "", "--rank", "1")
        (rec,) = records(out)
        assert code == 0 and rec["vector"]["terms"] == [{"columns": [], "coeff": "1"}]

    @pytest.mark.parametrize("weight,error", [("2,3", "NotDecreasing"), ("1,-1", "NegativeEntry"), ("a", "ValidationError")])
    def test_malformed_weight(self, capsys, weight, error):
        code, _, err = run(capsys, "basis", "--weight", weight, "--rank", "2")
        assert code == 2 and error in err

    def test_bad_rank(self, capsys):
        code, _, _ = run(capsys, "basis", "--weight", "1", "--rank", "0")
        assert code == 2


class TestOtherCommands:
    def test_patterns_and_tableaux_agree(self, capsys):
        _, pats, _ = run(capsys, "patterns", "--weight", "2,1", "--rank", "3")
        _, tabs, _ = run(capsys, "tableaux", "--weight", "2,1", "--rank", "3")
        assert len(records(pats)) == len(records(tabs)) == 8

    def test_patterns_by_degree(self, capsys):
        code, out, _ = run(capsys, "patterns", "--weight", "1", "--max-degree", "2")
        assert code == 0 and [r["degree"] for r in records(out)] == [1, 2]

    def test_spectrum(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--weight", "1", "--rank", "2")
        recs = records(out)
        assert code == 0 and len(recs) == 4
        assert {"pattern": {"n": 2, "rows": [[0], [1, 0]]}, "m": 2, "expected": [-1, 0, 1], "status": "match"} in recs

    def test_embed(self, capsys):
        code, out, _ = run(capsys, "embed", "--weight", "2,1", "--max-degree", "3", "--rank", "4")
        recs = records(out)
        assert code == 0 and len(recs) == 8 and all(r["stable"] for r in recs)

    def test_embed_rank_below_degree(self, capsys):
        code, _, _ = run(capsys, "embed", "--weight", "1", "--max-degree", "3", "--rank", "2")
        assert code == 2

    def test_fundamental(self, capsys):
        code, out, _ = run(capsys, "fundamental", "--k", "2", "--rank", "3")
        recs = records(out)
        assert code == 0 and [r["indices"] for r in recs] == [[1, 2], [1, 3], [2, 3]]
        assert all(r["scalar"] == "1" for r in recs)

    def test_fundamental_k_too_large(self, capsys):
        code, _, _ = run(capsys, "fundamental", "--k", "3", "--rank", "2")
        assert code == 2

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2


class TestVerify:
    def test_two_one(self, capsys):
        code, out, _ = run(capsys, "verify", "--weight", "2,1", "--rank", "3")
        (rep,) = records(out)
        assert code == 0 and rep["status"] == "pass"
        assert rep["summary"] == "8 patterns, 24 spectral checks, all match"

    def test_trivial(self, capsys):
        code, out, _ = run(capsys, "verify", "--weight", "", "--rank", "1")
        assert code == 0 and records(out)[0]["status"] == "pass"

    @pytest.mark.parametrize("weight,rank", [("2,1", "3"), ("", "1"), ("1", "2"), ("1,1", "2")])
    def test_perturb_fails(self, capsys, weight, rank):
        code, out, _ = run(capsys, "verify", "--weight", weight, "--rank", rank, "--perturb")
        assert code == 1 and records(out)[0]["status"] == "fail"

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.ndjson"
        code, out, _ = run(capsys, "verify", "--weight", "2,1", "--rank", "3", "--output", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["status"] == "pass"


def _subprocess(args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "gtbasis", *args],
        capture_output=True,
        env={**os.environ, **(env or {})},
        check=False,
    )


class TestDeterminism:
    def test_verify_byte_identical(self):
        args = ["verify", "--weight", "2,1", "--rank", "3"]
        first, second = _subprocess(args), _subprocess(args)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout

    def test_threads_do_not_change_output(self):
        args = ["spectrum", "--weight", "2,1", "--rank", "3"]
        serial = _subprocess(args, {"GT_THREADS": "1"})
        parallel = _subprocess(args, {"GT_THREADS": "2"})
        assert serial.returncode == parallel.returncode == 0
        assert serial.stdout == parallel.stdout
