import json
import subprocess
import sys

import pytest

from kiselman.census import Census
from kiselman.cli import main


@pytest.fixture(autouse=True)
def _isolate_cwd(tmp_path, monkeypatch):
    # keep the default count cache inside the test directory
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("KISELMAN_CACHE", raising=False)


def test_reduce(capsys):
    assert main(["reduce", "2 1 2", "--rank", "2"]) == 0
    assert capsys.readouterr().out == "1 2\n"
    assert main(["reduce", "", "--rank", "3"]) == 0
    assert capsys.readouterr().out == "\n"
    assert main(["reduce", "1 3 2 1", "--rank", "3"]) == 0
    assert capsys.readouterr().out == "1 3 2\n"


def test_reduce_parse_error(capsys):
    assert main(["reduce", "1 2 x", "--rank", "3"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["reduce", "4", "--rank", "3"]) == 2


def test_check(capsys):
    assert main(["check", "2 3 1 2 4 3", "--rank", "4"]) == 0
    assert capsys.readouterr().out == "canonical\n"
    assert main(["check", "1 1", "--rank", "1"]) == 1
    assert capsys.readouterr().out == "not canonical (letter 1, positions 1,2)\n"
    assert main(["check", "1 2 1", "--rank", "2"]) == 1


def test_mul(capsys):
    assert main(["mul", "1 2", "1", "--rank", "2"]) == 0
    assert capsys.readouterr().out == "1 2\n"
    assert main(["mul", "2", "1 2", "--rank", "2"]) == 0
    assert capsys.readouterr().out == "1 2\n"
    assert main(["mul", "", "2 1", "--rank", "2"]) == 0
    assert capsys.readouterr().out == "2 1\n"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["reduce", "1"])  # missing --rank
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["unknown-command"])
    assert exc.value.code == 2


def test_count_json_roundtrip(capsys):
    assert main(["count", "--rank", "3"]) == 0
    out = capsys.readouterr().out
    census = Census.from_json(out)
    assert census.total == 18
    assert census.to_json() == out


def test_count_longest(capsys):
    assert main(["count", "--rank", "3", "--longest"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["max_length"] == 4
    assert payload["longest_count"] == "2"


def test_count_cache_hit_and_force(tmp_path, capsys):
    cache = tmp_path / "cache.json"
    argv = ["count", "--rank", "4", "--cache", str(cache)]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0  # served from the cache
    assert capsys.readouterr().out == first
    assert main(argv + ["--force"]) == 0
    assert capsys.readouterr().out == first
    entries = json.loads(cache.read_text())["entries"]
    assert entries["4"]["count"] == "115"


def test_count_default_cache_in_cwd(tmp_path, capsys):
    assert main(["count", "--rank", "2"]) == 0
    capsys.readouterr()
    assert (tmp_path / "kiselman-counts.json").exists()


def test_count_cache_env_var(tmp_path, monkeypatch, capsys):
    target = tmp_path / "env-cache.json"
    monkeypatch.setenv("KISELMAN_CACHE", str(target))
    assert main(["count", "--rank", "2"]) == 0
    capsys.readouterr()
    assert target.exists()


def test_count_selfcheck_detects_corruption(tmp_path, capsys):
    cache = tmp_path / "cache.json"
    assert main(["count", "--rank", "3", "--cache", str(cache)]) == 0
    capsys.readouterr()
    raw = json.loads(cache.read_text())
    raw["entries"]["3"]["count"] = "19"
    cache.write_text(json.dumps(raw))
    assert main(["count", "--rank", "3", "--cache", str(cache), "--selfcheck"]) == 1
    assert "mismatch" in capsys.readouterr().err


def test_count_selfcheck_passes(tmp_path, capsys):
    cache = tmp_path / "cache.json"
    for rank in ("2", "3"):
        assert main(["count", "--rank", rank, "--cache", str(cache)]) == 0
    capsys.readouterr()
    assert main(["count", "--rank", "2", "--cache", str(cache), "--selfcheck"]) == 0
    assert "cache ok: 2 entries" in capsys.readouterr().err


def test_count_guard_without_allow_large(capsys):
    assert main(["count", "--rank", "8"]) == 2
    assert "allow" in capsys.readouterr().err


def test_verify_identities(capsys):
    assert main(["verify", "--suite", "identities", "--max-n", "4"]) == 0
    out = capsys.readouterr().out
    reports = json.loads(out)
    assert all(r["holds"] for r in reports)
    assert {"name", "n_or_k", "lhs", "rhs", "holds", "note"} == set(reports[0])


def test_verify_structure_warns_but_passes(capsys):
    assert main(["verify", "--suite", "structure", "--max-n", "3"]) == 0
    captured = capsys.readouterr()
    assert "WARN" in captured.err
    assert "longest-count-vs-printed-closed-form" in captured.out


def test_verify_csv_format(capsys):
    assert main(["verify", "--suite", "identities", "--max-n", "2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "name,n_or_k,lhs,rhs,holds,note"
    assert all(",true," in line for line in lines[1:])


def test_table_csv(capsys):
    assert main(["table", "--max-n", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,count,length_bound,lower_bound,prefix_upper_bound,km_upper_bound,scaled_log"
    assert lines[1] == "0,1,0,1,,,1.000000"
    assert lines[3].startswith("2,5,2,2,6,5,")
    assert lines[5].startswith("4,115,6,8,1260,4097,")


def test_table_json(capsys):
    assert main(["table", "--max-n", "2", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[2]["count"] == "5"
    assert rows[0]["km_upper_bound"] is None
    assert rows[1]["scaled_log"] == pytest.approx(2**0.5)


def test_console_script_is_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "kiselman.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "kiselman" in proc.stdout
