import io
import json

import pytest

from typeb_bruhat.cli import main

RUNNING = "2 5 6 | -8 -7 -4 -1 3"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_covered_by():
    code, out, _ = run("covered-by", "--k", "3", RUNNING)
    assert code == 0
    lines = out.splitlines()
    assert [line.split("\t")[0] for line in lines] == ["B1", "B2", "B3", "B4", "B4"]
    assert "B3\t2 3 6 | -8 -7 -4 -1 5" in lines


def test_covers():
    code, out, _ = run("covers", "--k", "1", "1 | 2")
    assert (code, out) == (0, "B3\t2 | 1\n")
    code, out, _ = run("covers", "--k", "1", "--format", "maya", "1 | 2")
    assert out == "B3\txo\n"


def test_length():
    code, out, _ = run("length", "--k", "3", RUNNING)
    assert code == 0
    assert out.splitlines()[0] == "length\t34"
    assert "alpha\t4 5 5" in out and "mu\t1 0 0" in out and "lambda\t1 4 7 8" in out
    code, out, _ = run("length", "--k", "3", "--format", "json", RUNNING)
    assert json.loads(out)["length"] == 34


def test_enumerate_formats():
    code, out, _ = run("enumerate", "--n", "2", "--k", "1")
    assert out.splitlines() == ["1 | -2", "1 | 2", "2 | -1", "2 | 1"]
    _, out, _ = run("enumerate", "--n", "2", "--k", "1", "--format", "maya")
    assert out.splitlines() == ["ob", "ox", "bo", "xo"]
    _, out, _ = run("enumerate", "--n", "4", "--k", "2", "--format", "json")
    assert len(out.splitlines()) == 24
    assert json.loads(out.splitlines()[0])["u"] == [1, 2]


def test_classify_dual_maya():
    assert run("classify", "--k", "3", RUNNING, "2 5 6 | -8 -7 -4 1 3")[1] == "B1\n"
    assert run("classify", "--k", "3", RUNNING, RUNNING)[1] == "none\n"
    assert run("dual", "--k", "3", RUNNING)[1] == "2 5 6 | -3 1 4 7 8\n"
    assert run("dual", "--k", "3", "--format", "maya", RUNNING)[1] == "xobxooxx\n"
    assert run("maya", "encode", "--k", "3", RUNNING)[1] == "boxboobb\n"
    assert run("maya", "decode", "boxboobb")[1] == RUNNING + "\n"
    assert run("maya", "decode", "• ∘ × • ∘ ∘ • •")[1] == RUNNING + "\n"


def test_graph_writes_files(tmp_path):
    dot, js = tmp_path / "g.dot", tmp_path / "g.json"
    code, out, _ = run("graph", "--n", "4", "--k", "2", "--dot", str(dot), "--json", str(js),
                       "--edge-style", "B4=color:red")
    assert code == 0
    assert "nodes\t24" in out and "rank_sizes\t1 1 2 2 3 3 3 3 2 2 1 1" in out
    assert 'color="red"' in dot.read_text()
    assert len(json.loads(js.read_text())["nodes"]) == 24
    assert b"\r\n" not in dot.read_bytes()


def test_verify_ok():
    code, out, _ = run("verify", "--max-n", "4")
    assert code == 0
    assert out.splitlines()[-1].startswith("OK")
    assert out.count("\tOK") == sum(n + 1 for n in range(1, 5))


def test_verify_with_cache(tmp_path):
    assert run("verify", "--max-n", "3", "--cache", str(tmp_path))[0] == 0
    assert run("verify", "--max-n", "3", "--cache", str(tmp_path))[0] == 0


@pytest.mark.parametrize(
    "argv, code",
    [
        (["bogus"], 1),
        (["length", RUNNING], 1),
        (["length", "--k", "2", RUNNING], 2),
        (["length", "--k", "3", "2 2 6 | -8 -7 -4 -1 3"], 2),
        (["length", "--k", "1", "3 2 1"], 2),
        (["length", "--k", "9", "1 2"], 1),
        (["graph", "--n", "3", "--k", "1", "--edge-style", "B9=color:red"], 1),
        (["maya", "encode", RUNNING], 1),
        (["maya", "decode", "boq"], 2),
        (["verify", "--max-n", "7"], 4),
        (["enumerate", "--n", "20", "--k", "2"], 4),
        (["graph", "--n", "13", "--k", "2"], 4),
    ],
)
def test_exit_codes(argv, code):
    got, out, err = run(*argv)
    assert got == code
    assert err.startswith("error:")


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "typeb_bruhat", "length", "--k", "3", RUNNING],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("length\t34")
