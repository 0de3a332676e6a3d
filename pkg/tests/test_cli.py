import json
import subprocess
import sys

CLI = [sys.executable, "-m", "citopo"]


def run(*args, **kw):
    return subprocess.run(CLI + list(args), capture_output=True, text=True, **kw)


def test_compute_dim2():
    res = run("compute", "--dim", "2", "--degrees", "6,5,3")
    assert res.returncode == 0
    assert "c_1 = -8" in res.stdout
    assert "e   = 5760" in res.stdout
    assert "d*p_1 = -5760" in res.stdout


def test_compute_dim3():
    res = run("compute", "--dim", "3", "--degrees", "88,28,19,14,6,6")
    assert res.returncode == 0
    assert "p_1 = -9147" in res.stdout
    assert "e   = -35445749391360" in res.stdout


def test_compute_strips_degree_ones():
    res = run("compute", "--dim", "4", "--degrees", "1,1")
    assert res.returncode == 0
    assert "CP^4" in res.stdout
    assert "e   = 5" in res.stdout


def test_compute_machine_round_trip():
    res = run("--format", "machine", "compute", "--dim", "6", "--degrees",
              "116,114,96,78,59,55,50,40,32,22,13,9")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["d"] == "52933656400035840000"
    # re-serialization is byte-identical
    assert json.dumps(payload, indent=2, sort_keys=True) == res.stdout.rstrip("\n")


def test_compute_invalid_degrees_exit_2():
    res = run("compute", "--dim", "2", "--degrees", "0,3")
    assert res.returncode == 2
    assert "error" in res.stderr


def test_classify_pair_dim3():
    res = run("classify-pair", "--dim", "3", "70,16,16,14,7,6", "56,49,8,6,5,4,4")
    assert res.returncode == 0
    assert "diffeomorphic" in res.stdout
    assert "-119" in res.stdout and "-121" in res.stdout
    assert "disconnected moduli space" in res.stdout


def test_classify_pair_distinct_codims():
    res = run("classify-pair", "--dim", "5",
              "52,50,30,27,23,18,6,5,4", "54,46,36,25,20,15,13,3,2,2")
    assert res.returncode == 0
    assert res.stdout.startswith("diffeomorphic")


def test_classify_pair_identical():
    res = run("classify-pair", "--dim", "2", "4", "4")
    assert res.returncode == 0
    assert "identical-multidegree" in res.stdout


def test_search_finds_table_pair():
    res = run("search", "--dim", "2", "--max-degree", "6", "--max-codim", "6",
              "--distinct-c1")
    assert res.returncode == 0
    assert "(6,5,3)" in res.stdout
    assert "(5,2,2,2,2,2)" in res.stdout


def test_search_no_results_is_success():
    res = run("search", "--dim", "2", "--max-degree", "3", "--max-codim", "2")
    assert res.returncode == 0
    assert "no pairs found" in res.stdout


def test_search_conflicting_filters_exit_2():
    res = run("search", "--dim", "2", "--max-degree", "6", "--max-codim", "6",
              "--distinct-c1", "--equal-c1")
    assert res.returncode == 2


def test_factor_command():
    res = run("factor", "--degrees", "52,44,36,25,20,12,8")
    assert res.returncode == 0
    assert "2^13*3^3*5^3*11*13" in res.stdout
    assert "nu_2 = 13" in res.stdout


def test_factor_table6_pair():
    res = run("factor", "--degrees", "52,50,30,27,23,18,6,5,4")
    assert res.returncode == 0
    assert "2^8*3^7*5^4*13*23" in res.stdout
    assert "nu_2 = 8" in res.stdout
    assert "nu_3 = 7" in res.stdout


def test_factor_degree_one():
    res = run("factor", "--degrees", "1")
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "1"


def test_verify_tables_passes():
    res = run("verify-tables")
    assert res.returncode == 0
    assert "0 failed" in res.stdout.splitlines()[-1]


def test_verify_tables_machine_format():
    res = run("--format", "machine", "verify-tables")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["passed"] is True
    assert payload["counts"]["records"] == 46


def test_verify_tables_mismatch_exit_1(tmp_path):
    path = tmp_path / "corpus.toml"
    path.write_text(
        '[[record]]\nid = "a"\nn = 2\ndegrees = [6, 5, 3]\npartner = "b"\n'
        'claim = "homeomorphic-not-diffeomorphic"\n[record.expected]\ne = "5761"\n'
        '[[record]]\nid = "b"\nn = 2\ndegrees = [5, 2, 2, 2, 2, 2]\npartner = "a"\n'
        'claim = "homeomorphic-not-diffeomorphic"\n[record.expected]\ne = "5760"\n'
    )
    res = run("verify-tables", "--corpus", str(path))
    assert res.returncode == 1
    assert "FAIL a" in res.stdout
    assert "e: expected 5761, computed 5760" in res.stdout


def test_verify_tables_malformed_exit_2(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text("not toml [[")
    res = run("verify-tables", "--corpus", str(path))
    assert res.returncode == 2
