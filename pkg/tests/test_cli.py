import json
import subprocess
import sys

import pytest


def run_cli(*args, env_extra=None):
    import os

    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "kronmf", *args],
        capture_output=True,
        text=True,
        env=env,
    )


class TestKron:
    def test_text(self):
        res = run_cli("kron", "2,2", "2,2")
        assert res.returncode == 0
        assert res.stdout.strip() == "[4] + [2,2] + [1^4]"

    def test_json_schema(self):
        res = run_cli("kron", "3^3", "3^3", "--format", "json")
        blob = json.loads(res.stdout)
        assert set(blob) == {"left", "right", "n", "terms"}
        assert blob["n"] == 9
        terms = {t["p"]: t["m"] for t in blob["terms"]}
        assert terms["5,2,2"] == 2

    def test_csv(self):
        res = run_cli("kron", "2,2", "2,2", "--format", "csv")
        lines = res.stdout.strip().split("\n")
        assert lines[0] == "partition,multiplicity"
        assert "1^4,1" in lines

    def test_engines_agree(self):
        a = run_cli("kron", "3,2,1", "3,3", "--engine", "oracle")
        b = run_cli("kron", "3,2,1", "3,3", "--engine", "dvir")
        assert a.stdout == b.stdout and a.returncode == 0

    def test_degree_mismatch_exit_2(self):
        res = run_cli("kron", "3", "2,2")
        assert res.returncode == 2
        assert "degree mismatch" in res.stderr

    def test_parse_error_names_token(self):
        res = run_cli("kron", "3,x", "2,2")
        assert res.returncode == 2
        assert "'x'" in res.stderr

    def test_deterministic_output(self):
        a = run_cli("kron", "4,3,2", "5,2,2", "--format", "json")
        b = run_cli("kron", "4,3,2", "5,2,2", "--format", "json")
        assert a.stdout == b.stdout


class TestCoeff:
    def test_value(self):
        res = run_cli("coeff", "3^3", "3^3", "5,2,2")
        assert res.returncode == 0 and res.stdout.strip() == "2"

    def test_json(self):
        res = run_cli("coeff", "4,2", "4,2", "3,2,1", "--format", "json")
        assert json.loads(res.stdout)["g"] == 2


class TestClassify:
    def test_mf_exit_0(self):
        res = run_cli("classify", "3,3", "4,1,1")
        assert res.returncode == 0
        assert "pair-case-4" in res.stdout

    def test_not_mf_exit_1(self):
        res = run_cli("classify", "4,2", "4,2")
        assert res.returncode == 1
        assert "not multiplicity-free" in res.stdout

    def test_triple(self):
        res = run_cli("classify-triple", "3,1", "2,2", "2,1,1")
        assert res.returncode == 1
        res = run_cli("classify-triple", "4", "2,2", "3,1")
        assert res.returncode == 0

    def test_skew(self):
        res = run_cli("classify-skew", "3,2/1", "2,2")
        assert res.returncode == 0
        assert "skew-irr-case-3" in res.stdout
        res = run_cli("classify-skew", "3,3,1/1", "2,2,2")
        assert res.returncode == 1

    def test_skew_size_mismatch(self):
        res = run_cli("classify-skew", "3,2/1", "2,2,1")
        assert res.returncode == 2

    def test_json_verdict(self):
        res = run_cli("classify", "6,3", "3^3", "--format", "json")
        blob = json.loads(res.stdout)
        assert blob["multiplicity_free"] is True and blob["clause"] == "pair-case-6"


class TestTable:
    def test_text_contains_class_sizes(self):
        res = run_cli("table", "3")
        assert res.returncode == 0
        assert "class size" in res.stdout

    def test_csv(self):
        res = run_cli("table", "2", "--format", "csv")
        lines = res.stdout.strip().split("\n")
        assert len(lines) == 3  # header + two data rows

    def test_json(self):
        res = run_cli("table", "4", "--format", "json")
        blob = json.loads(res.stdout)
        assert blob["class_sizes"] == [6, 8, 3, 6, 1]

    def test_ceiling_exit_2(self):
        res = run_cli("table", "40")
        assert res.returncode == 2
        assert "ceiling" in res.stderr

    def test_ceiling_env_override(self):
        res = run_cli("table", "4", env_extra={"KRONMF_TABLE_CEILING": "3"})
        assert res.returncode == 2

    def test_force_bypasses_ceiling(self):
        res = run_cli("table", "15", "--force", "--format", "json")
        assert res.returncode == 0
        assert len(json.loads(res.stdout)["partitions"]) == 176


class TestVerify:
    def test_pairs_clean(self):
        res = run_cli("verify", "5", "--mode", "pairs")
        assert res.returncode == 0
        assert "mismatches=0" in res.stdout
        assert "wall_time" in res.stderr and "wall_time" not in res.stdout

    def test_engines_mode(self):
        res = run_cli("verify", "5", "--mode", "engines")
        assert res.returncode == 0

    def test_triples_mode(self):
        res = run_cli("verify", "4", "--mode", "triples")
        assert res.returncode == 0

    def test_skew_mode(self):
        res = run_cli("verify", "4", "--mode", "skew")
        assert res.returncode == 0

    def test_ceiling(self):
        res = run_cli("verify", "10", "--mode", "pairs")
        assert res.returncode == 2
        res = run_cli(
            "verify", "3", "--mode", "pairs", env_extra={"KRONMF_VERIFY_CEILING_PAIRS": "2"}
        )
        assert res.returncode == 2

    def test_jobs_deterministic(self):
        a = run_cli("verify", "6", "--mode", "pairs", "--jobs", "1")
        b = run_cli("verify", "6", "--mode", "pairs", "--jobs", "3")
        assert a.stdout == b.stdout and a.returncode == b.returncode == 0

    def test_engine_flag_reaches_the_sweep(self):
        a = run_cli("verify", "5", "--mode", "pairs", "--engine", "dvir")
        b = run_cli("verify", "5", "--mode", "pairs", "--engine", "oracle")
        assert a.returncode == b.returncode == 0
        assert "engine=dvir" in a.stdout and "engine=oracle" in b.stdout
        res = run_cli("verify", "4", "--mode", "skew", "--engine", "dvir")
        assert res.returncode == 0

    def test_cache_warm_equals_cold(self, tmp_path):
        path = str(tmp_path / "cache.jsonl")
        cold = run_cli("verify", "5", "--mode", "pairs", "--cache", path)
        head = open(path, encoding="utf-8").readline()
        assert json.loads(head)["format"] == "kronmf-cache"
        warm = run_cli("verify", "5", "--mode", "pairs", "--cache", path)
        assert cold.stdout == warm.stdout
        assert cold.returncode == warm.returncode == 0

    def test_json_report(self):
        res = run_cli("verify", "4", "--mode", "pairs", "--format", "json")
        blob = json.loads(res.stdout)
        assert blob["mismatches"] == [] and blob["mode"] == "pairs"


def test_console_script_is_installed():
    import shutil

    exe = shutil.which("kronmf")
    if exe is None:
        pytest.skip("console script not on PATH")
    res = subprocess.run([exe, "coeff", "2,1", "2,1", "2,1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "1"
