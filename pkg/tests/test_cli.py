import json

import pytest

from wicks.cli import main

from conftest import GENUS_ONE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", GENUS_ONE)
    assert code == 0
    assert json.loads(out) == {"valid": True, "word": GENUS_ONE, "genus": 1,
                               "edges": 3, "length": 6, "maximal": True}


def test_validate_compact(capsys):
    code, out, _ = run(capsys, "validate", "abcABC", "--syntax", "compact")
    assert code == 0 and json.loads(out)["word"] == GENUS_ONE


@pytest.mark.parametrize("form", ["a b", "a a'", "a b a b", "a b a' b' c"])
def test_invalid_exit_1(capsys, form):
    code, out, err = run(capsys, "validate", form)
    assert code == 1 and out == "" and err.startswith("error:")


def test_usage_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--max-genus", "x"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_info(capsys):
    code, out, _ = run(capsys, "info", GENUS_ONE)
    d = json.loads(out)
    assert code == 0
    assert (d["v"], d["e"], d["pos"], d["neg"]) == (2, 3, 0, 2)
    assert d["symmetry"]["d"] == 6
    assert d["degrees"] == [3, 3]


def test_dual(capsys):
    code, out, _ = run(capsys, "dual", GENUS_ONE)
    d = json.loads(out)
    assert code == 0 and len(d["triangles"]) == 2


def test_transform(capsys):
    code, out, _ = run(capsys, "transform", GENUS_ONE, "--ih", "a")
    d = json.loads(out)
    assert code == 0 and d["move_type"] == "type2a"
    assert d["canonical"] == GENUS_ONE
    code, _, err = run(capsys, "transform", GENUS_ONE, "--ih", "q")
    assert code == 1 and "error" in err


def test_reduce_positive_vertex_fails(capsys, forms2):
    from wicks.topology import POSITIVE, vertex_signs
    f = forms2[0]
    k = vertex_signs(f).signs.index(POSITIVE)
    code, _, err = run(capsys, "reduce", str(f.word), "--vertex", str(k))
    assert code == 1 and err.startswith("error:")


def test_reduce(capsys, forms2):
    from wicks.moves import negative_vertices
    f = forms2[0]
    code, out, _ = run(capsys, "reduce", str(f.word), "--vertex", str(negative_vertices(f)[0]))
    assert code == 0 and json.loads(out)["genus"] == 1


def test_enumerate_both(capsys):
    code, out, _ = run(capsys, "enumerate", "--genus", "2", "--method", "both", "--jobs", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 9
    assert sorted(json.loads(x)["aut_order"] for x in lines) == [1, 1, 1, 2, 2, 2, 2, 2, 3]


def test_enumerate_text_and_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--genus", "1", "--format", "text")
    assert code == 0 and out.startswith("genus 1: 1 classes, mass 1/6")
    code, out, _ = run(capsys, "enumerate", "--genus", "1", "--format", "csv")
    assert out.splitlines() == ["genus,word,aut_order,pos,neg,r,s,t",
                                "1,a b c a' b' c',6,0,2,3,0,2"]


def test_enumerate_out(capsys, tmp_path):
    path = tmp_path / "g2.jsonl"
    code, out, _ = run(capsys, "enumerate", "--genus", "2", "--jobs", "1", "--out", str(path))
    assert code == 0 and json.loads(out)["mass"] == "35/6"
    assert len(path.read_text().splitlines()) == 9


def test_enumerate_guard(capsys):
    code, _, err = run(capsys, "enumerate", "--genus", "4")
    assert code == 1 and "allow_large" in err
    code, _, _ = run(capsys, "enumerate", "--genus", "3", "--method", "backtrack")
    assert code == 1


def test_jobs_must_be_positive(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--genus", "1", "--jobs", "0"])
    assert exc.value.code == 2


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--genus", "3")
    d = json.loads(out)
    assert code == 0 and d["m1"] == "5005/3" and d["M"]["1"] == 1726
    code, out, _ = run(capsys, "count", "--genus", "2", "--format", "text")
    assert out.startswith("genus 2: m1=35/6")
    code, _, _ = run(capsys, "count", "--genus", "0")
    assert code == 1


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--max-genus", "4")
    assert code == 0
    assert [line.split() for line in out.splitlines()] == [["1", "1"], ["2", "9"], ["4", "1349005"]]
    code, out, _ = run(capsys, "table", "--max-genus", "3", "--include-genus-3", "--format", "csv")
    assert out.splitlines()[0] == "genus,surfaces,note"
    assert out.splitlines()[3].startswith("3,1726,")


def test_geometry(capsys):
    code, out, _ = run(capsys, "geometry", "--genus", "2", "--digits", "10")
    d = json.loads(out)
    assert code == 0
    assert d["R"] == "1.7191071206" and d["C"] == "1.8550771353"
    assert d["n_sides"] == 18 and d["error_bound"] == "5e-11"
    code, _, _ = run(capsys, "geometry", "--genus", "1")
    assert code == 1
