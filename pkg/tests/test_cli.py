import json

import pytest

from wavebasis.cli import main
from wavebasis.tensors import SparseTensor


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["dim", "--n", "3", "--m", "6"], "5"),
    (["dim", "--n", "3", "--m", "5"], "0"),
    (["dim", "--n", "2", "--m", "8"], "14"),
    (["dim", "--n", "3", "--k", "2"], "5"),
    (["count", "--n", "3", "--m", "6", "--what", "tableaux"], "5"),
])
def test_dim_and_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--m", "6", "--what", "words")
    assert code == 0 and out.split() == ["112233", "112323", "121233", "121323", "123123"]
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--m", "2", "--what", "graphs")
    assert out.strip() == "[[1,2]]"
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--m", "6", "--what", "tableaux")
    assert len(out.splitlines()) == 5 and out.splitlines()[0] == "[[1,3,5],[2,4,6]]"
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--m", "4", "--what", "graphs", "--format", "json")
    assert json.loads(out.splitlines()[0]) == {"n": 2, "m": 4, "components": [[1, 4], [2, 3]]}


def test_enumerate_non_divisible(capsys):
    code, out, err = run(capsys, "enumerate", "--n", "3", "--m", "4")
    assert code == 0 and out == "" and "warning" in err


@pytest.mark.parametrize("src, dst, value, expected", [
    ("word", "graph", "112233", "[[1,4,5],[2,3,6]]"),
    ("graph", "word", "[[1,2,3]]", "123"),
    ("word", "tableau", "112233", "[[1,3,5],[2,4,6]]"),
    ("tableau", "graph", "[[1,2,4],[3,5,6]]", "[[1,2,4],[3,5,6]]"),
    ("graph", "tableau", '{"n":3,"m":6,"components":[[1,4,5],[2,3,6]]}', "[[1,3,5],[2,4,6]]"),
])
def test_convert(capsys, src, dst, value, expected):
    code, out, _ = run(capsys, "convert", "--from", src, "--to", dst, "--value", value)
    assert code == 0 and out.strip() == expected


def test_convert_rejects_invalid(capsys):
    code, _, err = run(capsys, "convert", "--from", "graph", "--to", "word", "--value", "[[1,3,5],[2,4,6]]")
    assert code == 1 and "cross" in err
    code, _, _ = run(capsys, "convert", "--from", "word", "--to", "graph", "--value", "2112")
    assert code == 1


@pytest.mark.parametrize("n, m, count, terms", [(3, 3, 1, 6), (3, 6, 5, 36), (2, 4, 2, 4)])
def test_basis(capsys, n, m, count, terms):
    code, out, _ = run(capsys, "basis", "--n", str(n), "--m", str(m))
    lines = out.splitlines()
    assert code == 0 and len(lines) == count
    for line in lines:
        t = SparseTensor.from_json(line)
        assert len(t) == terms
        idx = [term["idx"] for term in json.loads(line)["terms"]]
        assert idx == sorted(idx)


def test_basis_non_divisible(capsys):
    code, out, _ = run(capsys, "basis", "--n", "3", "--m", "4")
    assert code == 0 and out == ""


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--m", "6", "--oracle")
    assert code == 0 and out.splitlines()[-1] == "verdict: pass"
    assert "spanning: pass oracle=5 formula=5 graphs=5 rank=5" in out
    code, out, _ = run(capsys, "verify", "--n", "2", "--m", "6")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--n", "2", "--m", "4", "--format", "json")
    cert = json.loads(out)
    assert cert["verdict"] == "pass" and [s["name"] for s in cert["sections"]] == ["invariance", "independence"]


def test_verify_budget(capsys):
    code, _, err = run(capsys, "verify", "--n", "3", "--m", "12", "--oracle")
    assert code == 3 and "budget" in err
    code, _, _ = run(capsys, "verify", "--n", "2", "--m", "4", "--oracle", "--budget", "10")
    assert code == 3


@pytest.mark.parametrize("n, m, rows, total", [(3, 3, 3, 27), (2, 2, 2, 4), (4, 1, 1, 4)])
def test_decompose(capsys, n, m, rows, total):
    code, out, _ = run(capsys, "decompose", "--n", str(n), "--m", str(m))
    lines = out.splitlines()
    assert code == 0 and len(lines) == rows + 2
    assert lines[-1].startswith(f"total {total} ")
    code, out, _ = run(capsys, "decompose", "--n", str(n), "--m", str(m), "--format", "json")
    assert json.loads(out)["total"] == total


def test_ltris(capsys):
    code, out, _ = run(capsys, "ltris", "--word", "121323")
    lines = out.splitlines()
    assert code == 0 and len([ln for ln in lines if ": col=" in ln]) == 6
    assert "moves=6 cleared=2 final=(0,0,0)" in lines
    assert lines[-1] == "tableau=[[1,2,4],[3,5,6]]"
    code, out, _ = run(capsys, "ltris", "--word", "123")
    assert "moves=3 cleared=1 final=(0,0,0)" in out
    code, out, err = run(capsys, "ltris", "--word", "21")
    assert code == 1 and out == "" and "move 1" in err
    code, out, err = run(capsys, "ltris", "--word", "1133", "--n", "3")
    assert code == 1 and len(out.splitlines()) == 2 and "move 3" in err


def test_render(capsys, tmp_path):
    target = tmp_path / "g.svg"
    code, out, _ = run(capsys, "render", "--word", "121323", "--out", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.startswith("<svg") and 'data-edge="3-5"' in text
    code, out, _ = run(capsys, "render", "--graph", "[[1,2,4],[3,5,6]]")
    assert out == text


def test_usage_errors(capsys):
    for argv in (["dim", "--n", "3"], ["dim", "--n", "1", "--m", "2"], ["bogus"], ["dim", "--n", "x", "--m", "1"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_deterministic_output(capsys):
    outs = [run(capsys, "verify", "--n", "2", "--m", "6", "--format", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
