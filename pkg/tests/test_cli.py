import json

import pytest

from argkit.cli import main

EX1 = "p cnf 3 2\na 3 0\ne 1 2 0\n1 2 3 0\n-1 -2 -3 0\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def mutual(tmp_path):
    p = tmp_path / "mutual.apx"
    p.write_text("arg(a).\narg(b).\natt(a,b).\natt(b,a).\n")
    return str(p)


def test_solve(capsys, mutual):
    assert run(capsys, "solve", "-s", "prf", mutual)[:2] == (0, "[a]\n[b]\n")
    assert run(capsys, "solve", "-s", "grd", mutual)[1] == "[]\n"


def test_solve_tgf(capsys, tmp_path):
    p = tmp_path / "g.tgf"
    p.write_text("1\n2\n#\n1 2\n")
    assert run(capsys, "solve", "-s", "stb", str(p))[1] == "[1]\n"
    assert run(capsys, "solve", "-f", "tgf", "-s", "stb", str(p))[1] == "[1]\n"


def test_accept(capsys, mutual):
    assert run(capsys, "accept", "cred", "-s", "stb", "-a", "a", mutual)[:2] == (0, "YES\n")
    assert run(capsys, "accept", "skept", "-s", "prf", "-a", "a", mutual)[:2] == (0, "NO\n")
    code, _, err = run(capsys, "accept", "skept", "-s", "prf", "-a", "zz", mutual)
    assert code == 1 and "zz" in err


def test_classify(capsys, mutual):
    assert run(capsys, "classify", mutual)[1] == "ACY false\nNOEVEN false\nBIP true\nSYM true\n"


def test_distance(capsys, mutual):
    assert run(capsys, "distance", "-g", "acy", mutual)[1] == "1\n[a]\n"
    assert run(capsys, "distance", "-g", "acy", "--verify-set", "b", mutual)[1] == "YES\n"
    assert run(capsys, "distance", "-g", "acy", "--verify-set", "", mutual)[1] == "NO\n"


def test_capacity_exit_code(capsys, tmp_path):
    p = tmp_path / "loops.apx"
    p.write_text("".join(f"arg(a{i}).att(a{i},a{i}).\n" for i in range(8)))
    code, out, err = run(capsys, "distance", "-g", "acy", "--budget", "10", str(p))
    assert code == 2 and out == "" and "greedy upper bound 8" in err
    code, _, _ = run(capsys, "solve", "-s", "prf", "--bound", "4", str(p))
    assert code == 2


def test_usage_and_parse_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "-s", "prf", "--frobnicate", "x"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1
    p = tmp_path / "bad.apx"
    p.write_text("arg(a).\natt(a,b).\n")
    code, _, err = run(capsys, "solve", "-s", "prf", str(p))
    assert code == 1 and "line 2" in err
    assert run(capsys, "solve", "-s", "prf", str(tmp_path / "missing.apx"))[0] == 1


def test_reduce(capsys, tmp_path):
    q = tmp_path / "ex1.qdimacs"
    q.write_text(EX1)
    meta = tmp_path / "meta.json"
    code, out, _ = run(capsys, "reduce", "-r", "1", "--variant", "literal", "--meta", str(meta), str(q))
    assert code == 0 and out.count("arg(") == 11 and out.count("att(") == 30
    m = json.loads(meta.read_text())
    assert m["claimed_class"] == "bip" and m["claimed_deletion_set"] == ["phi"] and m["variant"] == "literal"
    apx = tmp_path / "f1.apx"
    apx.write_text(run(capsys, "reduce", "-r", "1", str(q))[1])
    assert run(capsys, "accept", "skept", "-s", "prf", "-a", "phi", str(apx))[1] == "YES\n"


def test_reduce5_target(capsys, tmp_path):
    c = tmp_path / "f.cnf"
    c.write_text("p cnf 4 3\n1 2 3 0\n-2 -3 -4 0\n-1 -2 4 0\n")
    code, out, _ = run(capsys, "reduce", "-r", "5", "--target", "1", str(c))
    assert code == 0 and out.count("arg(") == 17
    assert run(capsys, "reduce", "-r", "5", str(c))[0] == 1
    assert run(capsys, "reduce", "-r", "5", "--target", "9", str(c))[0] == 1


def test_verify_json_deterministic(capsys):
    args = ["verify", "--claim", "PROP1", "--max-y", "1", "--max-z", "1", "--max-clauses", "2"]
    code, first, _ = run(capsys, *args)
    assert code == 0
    report = json.loads(first)
    assert report["verdict"] == "holds" and report["counts"]["checked"] > 0
    assert "wall_time_ms" not in report
    assert run(capsys, *args)[1] == first
    assert "wall_time_ms" in json.loads(run(capsys, *args, "--timing")[1])


def test_verify_both_variants(capsys):
    out = run(capsys, "verify", "--claim", "PROP1", "--max-y", "1", "--max-z", "1",
              "--max-clauses", "2", "--variant", "both")[1]
    reports = json.loads(out)
    assert [r["params"]["variant"] for r in reports] == ["literal", "repaired"]
    assert [r["verdict"] for r in reports] == ["fails", "holds"]
    assert reports[0]["counterexamples"][0]["index"] >= 0


def test_verify_lemma1_and_bad_claim(capsys):
    out = run(capsys, "verify", "--claim", "LEM1", "--max-y", "1", "--max-z", "1", "--max-clauses", "2")[1]
    assert [r["claim"] for r in json.loads(out)] == [f"LEM1_{i}" for i in range(1, 6)]
    assert run(capsys, "verify", "--claim", "THM9")[0] == 1


def test_formats(capsys):
    out = run(capsys, "formats")[1]
    assert {line.split()[0] for line in out.splitlines()} == {"apx", "tgf", "qdimacs", "dimacs"}
