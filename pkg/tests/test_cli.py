import io
import json
import random
import subprocess
import sys

import pytest

from univdist.cli import main


def run(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_index():
    code, out = run("index", "bacacabac")
    assert code == 0
    assert out.splitlines() == ["iota 2", "arch_ends 3 7", "rest ac"]
    code, out = run("index", "--json", "bacacabac")
    assert json.loads(out) == {"iota": 2, "arch_ends": [3, 7], "rest": "ac"}


def test_dist():
    assert run("dist", "--op", "insert", "-k", "2", "aabb") == (0, "1\n")
    assert run("dist", "--op", "subst", "-k", "2", "aabb") == (0, "2\n")
    code, out = run("dist", "--op", "delete", "-k", "1", "--json", "bacacabac")
    assert json.loads(out) == {"op": "delete", "k": 1, "cost": "1", "iota": 2, "arch_ends": [3, 7]}


def test_infeasible_exit_code(capsys):
    code, out = run("dist", "--op", "subst", "-k", "5", "ab")
    assert code == 2 and out == ""
    assert "infeasible: substitutions preserve length" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["dist", "--op", "swap", "-k", "1", "ab"],
    ["dist", "--op", "insert", "-k", "-3", "ab"],
    ["dist", "--op", "insert", "-k", "x", "ab"],
    ["dist", "--op", "insert", "ab"],
    ["frobnicate"],
    ["dist", "--op", "insert", "-k", "1", "--ints", "a b"],
    ["dist", "--op", "insert", "-k", "1", ""],
])
def test_parse_errors_exit_1(argv):
    with pytest.raises(SystemExit) as e:
        code = main(argv, out=io.StringIO())
        raise SystemExit(code)
    assert e.value.code == 1


def test_ints_file_and_stdin(tmp_path, monkeypatch):
    p = tmp_path / "w.txt"
    p.write_text("7 3 7 3\n")
    assert run("dist", "--op", "insert", "-k", "3", "--ints", "--file", str(p)) == (0, "2\n")
    assert run("index", "--ints", stdin="7 3 7", monkeypatch=monkeypatch)[1].startswith("iota 1")
    assert run("index", stdin="abab\n", monkeypatch=monkeypatch)[1].startswith("iota 2")
    code, out = run("witness", "--op", "insert", "-k", "2", "--ints", "10 20")
    assert code == 0 and out.splitlines()[0] == "2"
    assert sorted(map(int, out.splitlines()[1].split())) == [10, 10, 20, 20]


def test_witness_and_verify_roundtrip():
    rng = random.Random(17)
    for _ in range(500):
        sigma = rng.randint(1, 4)
        n = rng.randint(sigma, 14)
        letters = list("abcd"[:sigma]) + [rng.choice("abcd"[:sigma]) for _ in range(n - sigma)]
        rng.shuffle(letters)
        word = "".join(letters)
        op = rng.choice(["insert", "delete", "subst"])
        k = str(rng.randint(0, n // sigma + 2))
        code, out = run("witness", "--op", op, "-k", k, "--json", word)
        if code == 2:
            continue
        data = json.loads(out)
        code, vout = run("verify", "--op", op, "-k", k, word, data["witness"])
        assert code == 0, (word, op, k, data, vout)
        assert vout.startswith("ok cost " + data["cost"])


def test_verify_rejects(tmp_path):
    code, out = run("verify", "--op", "insert", "-k", "3", "ab", "abab")
    assert code == 1 and out.startswith("rejected")
    code, out = run("verify", "--op", "insert", "-k", "1", "ab", "abz", "--json")
    assert code == 1 and json.loads(out)["ok"] is False
    p = tmp_path / "w"
    p.write_text("aabb")
    assert run("verify", "--op", "subst", "-k", "2", "--file", str(p), "abab")[0] == 0


def test_huge_k_json_roundtrip():
    k = 10**18
    code, out = run("dist", "--op", "insert", "-k", str(k), "--json", "ab")
    data = json.loads(out)
    assert int(data["cost"]) == 2 * k - 2 and data["k"] == k


def test_streamed_witness_for_large_k():
    code, out = run("witness", "--op", "insert", "-k", "50000", "ab")
    cost, wit = out.splitlines()
    assert int(cost) == 2 * 50000 - 2
    assert len(wit) == 100000 and wit.count("ab") >= 49999


def test_gen_is_seeded():
    a = run("gen", "--n", "30", "--sigma", "5", "--seed", "4")[1]
    assert a == run("gen", "--n", "30", "--sigma", "5", "--seed", "4")[1]
    assert len(a.strip()) == 30 and set(a.strip()) == set("abcde")
    out = run("gen", "--n", "40", "--sigma", "30", "--seed", "1", "--ints")[1]
    assert len(set(out.split())) == 30
    assert run("gen", "--n", "40", "--sigma", "30")[0] == 1


def test_bench_and_oracle_check():
    code, out = run("bench", "--n", "500", "--k", "5", "--sigma", "4", "--json")
    data = json.loads(out)
    assert code == 0 and set(data["seconds"]) == {"insert", "delete", "subst"}
    code, out = run("oracle-check", "--max-n", "6", "--sigma", "2", "--jobs", "1")
    assert code == 0 and "mismatches 0" in out


def test_force_generic_flag():
    a = run("dist", "--op", "insert", "-k", "7", "aabbab")
    b = run("dist", "--op", "insert", "-k", "7", "--force-generic", "aabbab")
    assert a == b


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "univdist", "dist", "--op", "insert", "-k", "2", "aabb"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "1\n"
    res = subprocess.run([sys.executable, "-m", "univdist", "dist", "--op", "subst", "-k", "5", "ab"],
                         capture_output=True, text=True)
    assert res.returncode == 2 and "preserve length" in res.stderr
