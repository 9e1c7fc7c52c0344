import json
import subprocess
import sys

import pytest

from helpers import B3, DIAMOND
from latshell.cli import main


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, [json.loads(line) for line in out.splitlines() if line.startswith("{")], out, err


@pytest.fixture
def fixture_file(tmp_path, capsys):
    def make(name):
        assert main(["fixture", name]) == 0
        return write(tmp_path, f"{name}.json", capsys.readouterr().out)

    return make


def test_check_f1b(capsys, fixture_file):
    code, recs, _, _ = run(capsys, "check", fixture_file("F1b"), "--planar", "--rank-connected")
    assert code == 0
    assert [(r["predicate"], r["holds"]) for r in recs] == [("planar", True), ("rank_connected", True)]
    assert recs[0]["evidence"]["type"] == "ConjugateOrder"


def test_check_f1a_interval_witness(capsys, fixture_file):
    code, recs, _, _ = run(capsys, "check", fixture_file("F1a"), "--interval-connected")
    assert code == 1
    (rec,) = recs
    assert rec["holds"] is False
    ev = rec["evidence"]
    assert ev["type"] == "IntervalSplit" and len(ev["components"]) == 2


def test_check_all_predicates_by_default(capsys, fixture_file):
    code, recs, _, _ = run(capsys, "check", fixture_file("F1c"))
    assert code == 1
    assert {r["predicate"] for r in recs} == {
        "planar", "rank_connected", "interval_connected", "dismantlable",
        "upper_semimodular", "lower_semimodular",
    }


def test_check_min_gap(capsys, tmp_path):
    f = write(tmp_path, "d.json", {"n": 4, "covers": DIAMOND})
    assert run(capsys, "check", f, "--interval-connected")[0] == 1
    assert run(capsys, "check", f, "--interval-connected", "--min-gap", "3")[0] == 0


@pytest.mark.parametrize(
    "content",
    ["not json at all", json.dumps({"n": 3}), json.dumps({"n": 3, "covers": [[0, 1], [1, 2], [2, 0]]}),
     json.dumps({"n": 2, "covers": [[0, 1]], "labels": [[0, 1, "x/y"]]})],
)
def test_bad_input_exits_2(capsys, tmp_path, content):
    f = write(tmp_path, "bad.json", content)
    assert run(capsys, "check", f)[0] == 2


def test_missing_file_exits_2(capsys, tmp_path):
    assert run(capsys, "check", str(tmp_path / "nope.json"))[0] == 2


def test_shell_round_trip(capsys, tmp_path, fixture_file):
    path = fixture_file("F1b")
    code, (rec,), _, _ = run(capsys, "shell", path, "--construct")
    assert code == 0 and rec["ok"]
    data = json.loads(open(path).read())
    data["labels"] = rec["labels"]
    code, (ver,), _, _ = run(capsys, "shell", write(tmp_path, "lab.json", data), "--verify")
    assert code == 0 and ver["ok"] and ver["violation"] is None


def test_shell_verify_detects_ties(capsys, tmp_path):
    f = write(tmp_path, "z.json", {"n": 4, "covers": DIAMOND, "labels": [[a, b, "0"] for a, b in DIAMOND]})
    code, (rec,), _, _ = run(capsys, "shell", f, "--verify")
    assert code == 1 and rec["violation"]["type"] == "MultipleRisingChains"


def test_shell_verify_needs_labels(capsys, tmp_path):
    f = write(tmp_path, "d.json", {"n": 4, "covers": DIAMOND})
    assert run(capsys, "shell", f, "--verify")[0] == 2


def test_shell_b3(capsys, tmp_path):
    f = write(tmp_path, "b3.json", {"n": 8, "covers": B3})
    code, (rec,), _, err = run(capsys, "shell", f, "--construct")
    assert code == 1 and "PreconditionFailed" in rec["error"]
    code, (rec,), _, _ = run(capsys, "shell", f, "--search")
    assert code == 0 and len(rec["labels"]) == 12
    code, (rec,), _, _ = run(capsys, "shell", f, "--search", "--max-labels", "2")
    assert code == 1 and rec["labels"] is None


def test_shell_rationals(capsys, tmp_path):
    f = write(tmp_path, "d.json", {
        "n": 4, "covers": DIAMOND,
        "labels": [[0, 1, "1/2"], [1, 3, "1/2"], [0, 2, "2/3"], [2, 3, "1/3"]],
    })
    assert run(capsys, "shell", f, "--verify")[0] == 0


def test_admissible_f1b(capsys, fixture_file):
    code, (rec,), _, _ = run(capsys, "admissible", fixture_file("F1b"))
    assert code == 1 and rec == {"admissible": False, "candidates": 8281}


def test_admissible_chain(capsys, tmp_path):
    f = write(tmp_path, "c.json", {"n": 5, "covers": [[i, i + 1] for i in range(4)]})
    code, (rec,), _, _ = run(capsys, "admissible", f)
    assert code == 0 and rec["omega"] == [[1, 1], [2, 2], [3, 3], [4, 4]]


def test_admissible_with_omega(capsys, tmp_path, fixture_file):
    path = fixture_file("F1b")
    code, (rec,), _, _ = run(capsys, "admissible", path, "--with-omega", "1=1,2=1,3=2,4=2,6=2,7=2")
    assert code == 1
    d = rec["defect"]
    assert (d["x"], d["y"]) == (0, 5) and sorted(d["chains"]) == [[0, 1, 5], [0, 2, 5]]
    # omega taken from the file itself
    data = json.loads(open(path).read())
    data["omega"] = [[1, 1], [2, 1], [3, 2], [4, 2], [6, 2], [7, 2]]
    code, (rec2,), _, _ = run(capsys, "admissible", write(tmp_path, "om.json", data), "--with-omega")
    assert rec2 == rec


def test_admissible_rejects_bad_omega(capsys, fixture_file):
    assert run(capsys, "admissible", fixture_file("F1b"), "--with-omega", "1=1")[0] == 2
    assert run(capsys, "admissible", fixture_file("F1b"), "--with-omega", "1=3,2=1,3=2,4=2,6=2,7=2")[0] == 2


def test_render_f1d(capsys, fixture_file):
    path = fixture_file("F1d")
    code, _, out, _ = run(capsys, "render", path)
    assert code == 0
    assert out.startswith("digraph lattice {")
    assert sum(1 for line in out.splitlines() if "[label=" in line and "->" not in line) == 9
    assert sum(1 for line in out.splitlines() if "->" in line) == 13
    assert '[label="a"]' in out
    assert run(capsys, "render", path)[2] == out


def test_render_two_chain_with_labels(capsys, tmp_path):
    f = write(tmp_path, "c.json", {"n": 2, "covers": [[0, 1]], "labels": [[0, 1, "3/4"]]})
    code, _, out, _ = run(capsys, "render", f)
    assert out.count("->") == 1 and '0 -> 1 [label="3/4"];' in out


def test_corpus_enumerate(capsys):
    code, recs, _, err = run(capsys, "corpus", "--enumerate", "4")
    assert code == 0
    assert "chain:1 diamond:1 total:2" in err
    assert recs[-1]["summary"] == {"total": 2, "kinds": {"chain": 1, "diamond": 1}}


def test_corpus_cross_check(capsys):
    code, recs, _, _ = run(capsys, "corpus", "--enumerate", "5", "--cross-check")
    s = recs[-1]["summary"]
    assert code == 0 and s["lattices"] == 5 and s["violations"] == 0
    code, recs, _, _ = run(capsys, "corpus", "--random", "10", "8", "42", "--cross-check", "--search")
    s = recs[-1]["summary"]
    assert code == 0 and s["lattices"] == 10 and s["violations"] == 0
    assert len(recs) == 11


def test_corpus_bounds(capsys):
    assert run(capsys, "corpus", "--enumerate", "12")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["corpus", "--enumerate", "6", "--cross-check"],
        ["corpus", "--random", "5", "10", "1"],
        ["fixture", "F1a"],
    ],
)
def test_determinism(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == second[0] and first[2] == second[2]


def test_determinism_per_file_command(capsys, fixture_file):
    path = fixture_file("F1b")
    for argv in (["check", path], ["shell", path, "--construct"], ["admissible", path], ["render", path]):
        assert run(capsys, *argv)[2] == run(capsys, *argv)[2]


def test_module_entry_point(tmp_path):
    f = write(tmp_path, "d.json", {"n": 4, "covers": DIAMOND})
    proc = subprocess.run(
        [sys.executable, "-m", "latshell", "check", f, "--dismantlable"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["holds"] is True
