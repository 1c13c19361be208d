import json

import pytest

from altspin import cli
from altspin import morphisms as mo
from altspin import paths as pt
from altspin import walls as wl


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_text_and_json(capsys):
    code, out, _ = run(capsys, "verify", "morphisms", "--depth", "3")
    assert code == 0 and out.count("PASS") == 2
    code, out, _ = run(capsys, "verify", "crystal", "--depth", "4", "--samples", "50", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["schema"] == "altspin.report/1" and len(rep["checks"]) == 3


def test_character(capsys):
    code, out, _ = run(capsys, "character", "--m", "3", "--n", "2", "--a", "1", "--b", "1", "--max-energy", "5")
    assert code == 0 and out.strip().endswith("agree")
    code, out, _ = run(capsys, "character", "--max-energy", "4", "--format", "json")
    assert json.loads(out)["table"][0] == [0, 1]


@pytest.mark.parametrize("argv", [
    ["character", "--m", "1", "--n", "1"],
    ["character", "--a", "5"],
    ["character", "--max-energy", "-1"],
    ["verify", "walls", "--window", "0"],
])
def test_bad_input_exit_3(capsys, argv):
    assert run(capsys, *argv)[0] == 3


def test_usage_errors_exit_3():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nosuch"])
    assert exc.value.code == 3
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 3


def test_missing_file_exit_3(capsys, tmp_path):
    assert run(capsys, "map", "walls", "--in", str(tmp_path / "none.json"))[0] == 3


def test_budget_exit_2(capsys, tmp_path):
    f = tmp_path / "t.json"
    f.write_text(json.dumps(mo.tensor_to_json(pt.LambdaPath(1, 0, {3: 0}), pt.LambdaPath(1, 1))))
    assert run(capsys, "map", "iso", "--in", str(f), "--max-steps", "0")[0] == 2


def test_map_iso(capsys, tmp_path):
    v, w = pt.LambdaPath(1, 0, {2: 1}), pt.LambdaPath(1, 1)
    f = tmp_path / "t.json"
    f.write_text(json.dumps(mo.tensor_to_json(v, w)))
    out = tmp_path / "p.json"
    assert run(capsys, "map", "iso", "--in", str(f), "--out", str(out))[0] == 0
    obj = json.loads(out.read_text())
    assert obj["header"]["model"] == [2, 1]
    assert pt.path_from_json(obj) == mo.full_iso(v, w)


def test_map_round_trip(capsys, tmp_path):
    d = wl.WallSequence(6, 2, ((4, 2), (3, 1), (4, 1)), (2, 0))
    path_file = tmp_path / "path.json"
    path_file.write_text(json.dumps(pt.path_to_json(wl.walls_to_path(d))))
    files = {}
    for name, kind, src in [("walls", "walls", path_file), ("parts", "particles", None),
                            ("walls2", "particles", None), ("path2", "walls", None)]:
        src = src or files[{"parts": "walls", "walls2": "parts", "path2": "walls2"}[name]]
        files[name] = tmp_path / f"{name}.json"
        code, _, err = run(capsys, "map", kind, "--in", str(src), "--out", str(files[name]))
        assert code == 0, err
    assert wl.walls_from_json(files["walls"].read_text()) == d
    assert json.loads(files["walls2"].read_text())["domains"] == json.loads(files["walls"].read_text())["domains"]
    assert pt.path_from_json(json.loads(files["path2"].read_text())) == wl.walls_to_path(d)


def test_graph(capsys):
    code, out, _ = run(capsys, "graph", "--radius", "1")
    assert code == 0 and out.startswith("digraph")
