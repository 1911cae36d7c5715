import io
import json
import subprocess
import sys

import pytest

from zonotopal.cli import main, parse_range
from zonotopal.errors import InputError


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def triangle(tmp_path):
    p = tmp_path / "triangle.txt"
    p.write_text("# a triangle\na b\nb c\nc a\n")
    return p


def test_hilbert_tsv(triangle):
    assert run("hilbert", "--graph", str(triangle), "--f", "u") == (0, "1\t2\t3\t1\n")


def test_hilbert_json_schema():
    code, text = run("hilbert", "--family", "kn", "--n", "4", "--f", "u+u^2", "--format", "json")
    assert code == 0
    assert json.loads(text) == {
        "graph": "kn(4)", "f": "u + u^2", "hilbert": [1, 4, 9, 15, 5, 3, 1],
        "cumulative": [1, 5, 14, 29, 34, 37, 38], "total_dim": 38, "forest_count": 38,
    }


def test_hilbert_several_polys_and_conventions():
    code, text = run("hilbert", "--family", "kn", "--n", "4", "--f", "u", "--f", "u+u^3",
                     "--convention", "generators", "--backend", "dense")
    assert code == 0
    assert text.splitlines() == ["1\t3\t6\t10\t11\t6\t1", "1\t4\t9\t12\t8\t3\t1"]


def test_table_range():
    code, text = run("table", "--family", "chain", "--n", "3..6", "--f", "u+u^2")
    assert code == 0
    assert text.splitlines() == ["# chain n=3..6 f=u + u^2", "1\t3", "1\t4\t3", "1\t5\t10",
                                 "1\t6\t16\t9"]
    code, text = run("table", "--family", "cycle", "--n", "3,5", "--f", "u+u^2", "--format", "json")
    assert [r["hilbert"] for r in json.loads(text)] == [[1, 3, 2, 1], [1, 5, 14, 10, 1]]


def test_verify_passes_and_reports(triangle):
    code, text = run("verify", "--family", "k3_plus_e", "--f", "u+u^2+4/3u^3")
    assert code == 0
    lines = [line.split("\t") for line in text.splitlines()]
    assert all(parts[0] in ("pass", "note") for parts in lines)
    code, text = run("verify", "--graph", str(triangle), "--f", "u+u^2", "--format", "json")
    report = json.loads(text)
    assert code == 0 and report["relations"]
    assert all(r["verified"] for r in report["relations"])


def test_sweep_is_deterministic():
    args = ("sweep", "--family", "kn", "--n", "4", "--mask", "2,3", "--seed", "5", "--format", "json")
    first, second = run(*args), run(*args)
    assert first == second
    strata = json.loads(first[1])["strata"]
    assert [s["hilbert"][:3] for s in strata] == [[1, 3, 6], [1, 4, 9], [1, 4, 9], [1, 4, 10]]


@pytest.mark.parametrize("argv, code", [
    (("hilbert", "--family", "chain", "--n", "4", "--f", "u^2"), 2),
    (("hilbert", "--family", "chain", "--n", "4", "--f", "u+"), 2),
    (("hilbert", "--family", "nosuch", "--n", "4", "--f", "u"), 2),
    (("hilbert", "--graph", "/nonexistent/graph.txt", "--f", "u"), 2),
    (("hilbert", "--family", "kn", "--n", "8", "--f", "u"), 3),
    (("hilbert", "--family", "chain", "--n", "8", "--f", "u", "--max-edges", "4"), 3),
    (("table", "--family", "chain", "--n", "5..3", "--f", "u"), 2),
])
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_bad_graph_file(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("a b\nc\n")
    assert run("hilbert", "--graph", str(p), "--f", "u")[0] == 2


def test_parse_range():
    assert parse_range("3..5") == [3, 4, 5]
    assert parse_range("4, 7") == [4, 7]
    with pytest.raises(InputError):
        parse_range("x")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zonotopal", "hilbert", "--family", "chain",
                           "--n", "4", "--f", "u+u^2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\t4\t3\n"


def test_single_edge_graph(tmp_path):
    p = tmp_path / "edge.txt"
    p.write_text("a b\n")
    assert run("hilbert", "--graph", str(p), "--f", "u") == (0, "1\t1\n")


@pytest.mark.parametrize("argv, n_strata", [
    (("--family", "kn", "--n", "4", "--mask", "2,3"), 4),
    (("--family", "k3_plus_e", "--mask", "2,3"), 3),
    (("--family", "kn", "--n", "4", "--mask", ""), 1),
])
def test_sweep_stratum_counts(argv, n_strata):
    code, text = run("sweep", *argv, "--seed", "1")
    assert code == 0 and len(text.splitlines()) == n_strata


def test_tsv_and_json_agree():
    args = ("table", "--family", "dn", "--n", "4..7", "--f", "u+u^3", "--f", "u+u^2")
    _, tsv = run(*args)
    _, js = run(*args, "--format", "json")
    from_tsv = [list(map(int, line.split("\t"))) for line in tsv.splitlines() if line[0] != "#"]
    assert from_tsv == [r["hilbert"] for r in json.loads(js)]
