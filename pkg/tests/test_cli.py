import json

import pytest

from sumsetlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


@pytest.mark.parametrize("text,k,size", [("0,1,5", 4, 8), ("0,1", 4, 4), ("0,1,3,4", 3, 12)])
def test_compute(capsys, text, k, size):
    code, doc, _ = run_json(capsys, "compute", "--k", str(k), "--set", text)
    assert code == 0 and doc["command"] == "compute" and doc["result"]["size"] == size
    code, out, _ = run(capsys, "compute", "--k", str(k), "--set", text)
    assert f"= {size}\n" in out


def test_compute_set_file_and_elision(capsys, tmp_path):
    f = tmp_path / "a.txt"
    f.write_text("# big\n" + "\n".join(str(i) for i in range(300)))
    code, out, _ = run(capsys, "compute", "--k", "2", "--set-file", str(f))
    assert code == 0 and "(100 more)" in out
    code, doc, _ = run_json(capsys, "compute", "--k", "2", "--set-file", str(f))
    assert len(doc["params"]["set"]) == 300


def test_usage_errors(capsys):
    assert run(capsys, "compute", "--k", "4", "--set", "a,b")[0] == 2
    assert run(capsys, "compute", "--k", "1", "--set", "0,1")[0] == 2
    assert run(capsys, "compute", "--k", "4")[0] == 2
    assert run(capsys, "bound", "--k", "4")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", "--lemma", "nope")[0] == 2
    assert run(capsys, "verify", "--lemma", "wo", "--k", "6")[0] == 2
    assert run(capsys, "extremal", "--k", "4", "--n", "1", "--h", "7")[0] == 2


def test_bound(capsys):
    code, doc, _ = run_json(capsys, "bound", "--k", "4", "--size", "5")
    r = doc["result"]
    assert (r["chs_bound"], r["factorial_bound"], r["threshold"], r["k_class"]) == (19, 1, 216, "prime_power")
    code, doc, _ = run_json(capsys, "bound", "--k", "6", "--size", "100")
    assert doc["result"]["chs_bound"] == 688 and doc["result"]["k_class"] == "semiprime"
    code, out, err = run(capsys, "bound", "--k", "12", "--size", "10")
    assert code == 0 and "k_class other" in out and "warning" in err


def test_decompose(capsys):
    code, doc, _ = run_json(capsys, "decompose", "--k", "4", "--set", "0,1,2,4,5,6")
    r = doc["result"]
    assert r["j"] == 3 and len(r["classes"]) == 3 and r["delta_sizes"] == [4, 4, 4]
    assert r["special_index"]["index"] == 2
    code, doc, _ = run_json(capsys, "decompose", "--k", "4", "--set", "4,8,20")
    assert [s["rule"] for s in doc["result"]["normalization"]] == ["gcd", "translate"]
    code, out, _ = run(capsys, "decompose", "--k", "4", "--set", "0,16,32")
    assert "gcd" in out and "normalized A = {0,1,2}" in out


def test_search(capsys):
    code, doc, _ = run_json(
        capsys, "search", "--k", "4", "--size", "6", "--diameter", "24", "--mode", "violations", "--bound", "chs"
    )
    assert code == 0 and doc["result"]["violation_count"] == 0
    code, out, _ = run(capsys, "search", "--k", "4", "--size", "4", "--diameter", "12", "--mode", "violations")
    assert code == 1 and "{0,1,4,5}" in out
    code, doc, _ = run_json(capsys, "search", "--k", "4", "--size", "3", "--diameter", "20", "--mode", "min")
    assert code == 0 and doc["result"]["min_value"] == 8
    assert "workers" not in doc["params"]
    code, _, err = run(capsys, "search", "--k", str(1 << 40), "--size", "3", "--diameter", "20")
    assert code == 3 and "error" in err
    code, doc, _ = run_json(capsys, "search", "--k", "4", "--size", "3", "--diameter", "6", "--no-gcd-one")
    assert doc["params"]["gcd_one"] is False


def test_search_env_workers(capsys, monkeypatch):
    monkeypatch.setenv("SUMSETLAB_WORKERS", "2")
    args = ("search", "--k", "4", "--size", "5", "--diameter", "12")
    a = run_json(capsys, *args)[1]
    b = run_json(capsys, *args, "--workers", "1")[1]
    assert a == b


def test_verify(capsys):
    code, doc, _ = run_json(capsys, "verify", "--lemma", "chowla", "--modulus", "8")
    assert code == 0 and doc["result"]["failure_count"] == 0
    code, doc, _ = run_json(capsys, "verify", "--lemma", "stabilizer", "--k", "12")
    assert code == 0 and doc["result"]["failure_count"] == 0
    code, out, _ = run(capsys, "verify", "--lemma", "lemma51", "--diameter", "20")
    assert code == 0
    for size, value in ((2, 4), (3, 8), (4, 12)):
        assert f"|A| = {size}: min |A+4A| = {value}" in out


def test_extremal(capsys):
    code, out, _ = run(capsys, "extremal", "--k", "4", "--n", "1", "--h", "3", "--check")
    assert code == 0 and "equality: 24 = 24" in out
    code, out, _ = run(capsys, "extremal", "--k", "3", "--n", "1", "--h", "2", "--check")
    assert "equality: 12 = 12" in out
    code, doc, err = run_json(capsys, "extremal", "--k", "4", "--n", "0", "--h", "3", "--check")
    assert code == 0 and "n = 0 < k-h = 1" in err and doc["result"]["equality"] is None


def test_report_appends_one_record_per_run(capsys, tmp_path):
    path = tmp_path / "runs.jsonl"
    run(capsys, "compute", "--k", "4", "--set=-3,1", "--report", str(path))
    run(capsys, "bound", "--k", "4", "--size", "7", "--report", str(path))
    run(capsys, "compute", "--k", "4", "--set", "bad", "--report", str(path))  # usage error: nothing written
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    rec = json.loads(lines[0])
    assert set(rec) == {"timestamp", "command", "params", "result", "elapsed_ms"}
    assert rec["timestamp"].endswith("Z") and rec["params"]["set"] == [-3, 1]
    assert json.loads(lines[1])["result"]["chs_bound"] == 29


def test_module_entry_point():
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-m", "sumsetlab", "bound", "--k", "4", "--size", "5", "--json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(out.stdout)["result"]["chs_bound"] == 19
