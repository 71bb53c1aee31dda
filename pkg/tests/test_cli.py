import io
import json
import subprocess
import sys

import pytest

from crystaltrees import trees
from crystaltrees.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_equiv_exit_codes():
    assert call("equiv", "sylv", "insertion", "1 2 2 1", "2 1 2 1") == (0, "EQUIVALENT\n")
    assert call("equiv", "sylv", "insertion", "1 2 1 2", "1 2 2 1") == (1, "NOT EQUIVALENT\n")
    assert call("equiv", "sylv", "graph", "1 2 2 1", "2 1 2 1", "--bound", "8")[0] == 0


def test_std():
    assert call("std", "5 4 5 1 7 6 1 5 2 4") == (0, "6 4 7 1 10 9 2 8 3 5\n")
    assert call("std", "-") == (0, "-\n")


@pytest.mark.parametrize("argv", [
    ["std", "1 x"],
    ["std", ""],
    ["equiv", "hypo", "rewrite", "1", "1"],
    ["equiv", "free", "insertion", "1", "1"],
    ["insert", "hypo", "1 2"],
    ["op", "g1", "1 2"],
    ["graph", "sylv", "1 2", "--bound", "1"],
    ["count", "fillings", "/nonexistent.json"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    assert call(*argv)[0] == 2
    err = capsys.readouterr().err
    assert err.count("\n") == 1 and err.startswith("crystaltrees: error:")


def test_op_prints_each_step():
    assert call("op", "f2;f1", "1 3 2 2") == (0, "1 3 2 3\n2 3 2 3\n")
    assert call("op", "e1;e1", "1 1") == (0, "UNDEFINED\n")


def test_class_lists_sorted_closure():
    assert call("class", "sylv", "1 2 1") == (0, "1 2 1\n2 1 1\n")


def test_insert_json_round_trips():
    code, text = call("insert", "sylv", "5 4 5 1 7 6 1 5 2 4", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert trees.tree_from_json(payload["P"]) == trees.rtree((5, 4, 5, 1, 7, 6, 1, 5, 2, 4))
    code, text = call("insert", "baxt", "2 1 2", "--format", "json")
    pair = trees.pair_from_json(json.loads(text)["P"])
    assert trees.is_twin_pair(pair.left, pair.right)
    code, text = call("insert", "plac", "2 1", "--format", "json")
    assert json.loads(text) == {"P": [[1], [2]], "Q": [[1], [2]]}


def test_insert_text():
    code, text = call("insert", "sylv", "2 1")
    assert code == 0 and text.startswith("P:\n")


def test_graph_dot_and_output_file(tmp_path):
    code, text = call("graph", "hypo", "1 2 1 2", "--bound", "4", "--dot")
    assert code == 0 and '  "1212" -> "1213" [label="2"];' in text
    target = tmp_path / "g.dot"
    assert call("graph", "hypo", "1 2 1 2", "--bound", "4", "--dot", "--output", str(target)) == (0, "")
    assert target.read_text() == text
    code, text = call("graph", "plac", "1")
    assert text.splitlines()[0].startswith("3 vertices")


def test_count(tmp_path):
    shape = tmp_path / "s.json"
    shape.write_text(json.dumps(trees.shape_to_json(((None, None), (None, None)))))
    assert call("count", "hooks", str(shape)) == (0, "2\n")
    assert call("count", "fillings", str(shape), "3")[1] == f"{trees.count_fillings(((None, None), (None, None)), 3)}\n"
    assert call("count", "fillings", str(shape))[0] == 2


def test_identity():
    assert call("identity", "sylv", "--alphabet", "2", "--maxlen", "2") == (0, "HOLDS (49 instances)\n")


def test_readings_marks_left_consistent(tmp_path):
    word = (5, 4, 5, 1, 7, 6, 1, 5, 2, 4)
    path = tmp_path / "p.json"
    path.write_text(json.dumps(trees.pair_to_json(trees.TwinPair(trees.ltree(word), trees.rtree(word)))))
    code, text = call("readings", str(path))
    marked = [line for line in text.splitlines() if line.endswith("(left-consistent)")]
    assert code == 0 and marked == ["5 4 1 1 2 5 7 6 5 4  (left-consistent)"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"left": {"label": 1, "left": None, "right": None}, "right": None}))
    assert call("readings", str(bad))[0] == 2


def test_factorcount(tmp_path):
    node = tmp_path / "node.json"
    node.write_text(json.dumps(trees.shape_to_json((None, None))))
    assert call("factorcount", "sylv", "1 1", str(node), str(node)) == (0, "1\n")
    pair = tmp_path / "pair.json"
    pair.write_text(json.dumps([trees.shape_to_json((None, None))] * 2))
    assert call("factorcount", "baxt", "1 2", str(pair), str(pair)) == (0, "1\n")
    assert call("factorcount", "baxt", "1 2", str(node), str(node))[0] == 2


def test_selftest_small():
    code, text = call("selftest", "--size", "small")
    assert code == 0
    assert sum(line.startswith("[PASS]") for line in text.splitlines()) == 10


def test_output_is_deterministic():
    argv = ["graph", "quasicrystal", "1 2 2 1", "--bound", "5", "--dot"]
    assert call(*argv) == call(*argv)


def test_module_entry_point():
    done = subprocess.run(
        [sys.executable, "-m", "crystaltrees", "std", "2 1 2"],
        capture_output=True, text=True, check=False,
    )
    assert done.returncode == 0 and done.stdout == "2 1 3\n"
