import json
import random
from pathlib import Path

import pytest

from altspin import walls as wl
from altspin.paths import FullPath, GroundLabel, signature_e, signature_f
from altspin.suites import ACTION_SEQUENCES, WORKED_DECOMPOSITIONS, action_examples, full_paths

DATA = Path(__file__).with_name("data")


def short_name(e):
    sg = {1: "p", -1: "m"}
    if e.kind == "dot":
        return "b" + sg[e.a] + sg[e.b]
    zo = "zo"[e.j]
    return ("C" if e.kind == "bar" else e.kind) + zo + sg[e.a if e.kind == "bar" else e.b]


def test_ground_path_has_no_walls():
    d = wl.path_to_walls(FullPath(3, 1, 1, 0, 1, 0))
    assert d.positions == () and d.domains == ((1, 0),)
    assert wl.wall_energy(d) == 0
    assert wl.wall_f(0, d) is None and wl.wall_f(1, d) is None


def test_worked_path_example():
    d = wl.WallSequence(6, 2, ((4, 2), (3, 1), (4, 1)), (2, 0))
    p = wl.walls_to_path(d)
    assert [p.value(s) for s in range(8, -1, -1)] == [6, 0, 2, 0, 6, 0, 2, 1, 5]
    assert wl.path_to_walls(p) == d
    assert [repr(e) for e in wl.normal_order_walls(d)] == ["*++@2", "|1-@0"]


@pytest.mark.parametrize("s,left,right,want", WORKED_DECOMPOSITIONS)
def test_worked_decompositions(s, left, right, want):
    assert " ".join(map(repr, wl.decompose_wall(6, 2, left, right, s))) == want


def test_decompositions_match_frozen_brute_force():
    frozen = json.loads((DATA / "decompositions.json").read_text())
    for model, rows in frozen.items():
        m, n = map(int, model.split(","))
        for s, left, right, found in rows:
            left, right = tuple(left), tuple(right)
            assert len(found) <= 1
            if found:
                got = [short_name(e) for e in wl.decompose_wall(m, n, left, right, s)]
                assert got == found[0]
                assert wl.allowed_position(m, n, left, right, s)
            else:
                with pytest.raises(wl.WallError):
                    wl.decompose_wall(m, n, left, right, s)


def test_invalid_sequences_rejected():
    with pytest.raises(wl.WallError):
        wl.WallSequence(2, 1, ((0, 0), (0, 0)), (0,))
    with pytest.raises(wl.WallError):
        wl.WallSequence(2, 1, ((0, 0), (1, 0)), (1,))
    with pytest.raises(wl.WallError):
        wl.WallSequence(2, 1, ((0, 0), (1, 0), (0, 0)), (0, 2))
    with pytest.raises(wl.WallError):
        wl.WallSequence(2, 1, ((0, 3),), ())


def test_odd_positions():
    assert wl.allowed_position(6, 2, (0, 2), (0, 0), 1)
    assert not wl.allowed_position(6, 2, (0, 2), (0, 0), 3)
    assert wl.allowed_position(6, 2, (4, 2), (4, 0), 3)


def test_energy_values():
    d = wl.WallSequence(2, 1, ((1, 0), (0, 0)), (-2,))
    assert [repr(e) for e in wl.normal_order_walls(d)] == ["|1+@-2"] or wl.wall_energy(d) == 1
    assert wl.wall_energy(d) == 1
    assert wl.wall_grade(d) == -1


def test_codec_exhaustive_small_window():
    for p in full_paths(2, 1, -1, 2):
        d = wl.path_to_walls(p)
        assert wl.walls_to_path(d) == p


def test_random_equivariance_larger_models():
    rng = random.Random(11)
    for m, n in [(3, 1), (3, 2), (6, 2)]:
        labels = GroundLabel.all(m, n)
        for _ in range(60):
            left, right = rng.choice(labels), rng.choice(labels)
            base = FullPath(m, n, left.a, left.b, right.a, right.b)
            p = FullPath(m, n, left.a, left.b, right.a, right.b,
                         {s: rng.randint(0, base.level(s)) for s in range(-5, 7)})
            d = wl.path_to_walls(p)
            for i in (0, 1):
                q = signature_f(i, p)
                assert wl.wall_f(i, d) == (None if q is None else wl.path_to_walls(q))
                q = signature_e(i, p)
                assert wl.wall_e(i, d) == (None if q is None else wl.path_to_walls(q))


def test_energy_drops_under_f():
    rng = random.Random(3)
    for _ in range(200):
        p = FullPath(3, 1, 1, 0, 0, 1, {s: rng.randint(0, 1 if s % 2 else 3) for s in range(-4, 5)})
        d = wl.path_to_walls(p)
        for i in (0, 1):
            nd = wl.wall_f(i, d)
            if nd is not None:
                assert wl.wall_energy(nd) == wl.wall_energy(d) - 1
                assert wl.wall_grade(nd) == wl.wall_grade(d) + 1
                assert wl.wall_e(i, nd) == d


def test_action_sequences():
    assert len(ACTION_SEQUENCES) == 2
    assert action_examples() == []


def test_boundary_bracket_step():
    # the bracket at odd s meets a bullet at the boundary and becomes a bar plus one more bullet
    d = wl.WallSequence(6, 2, ((4, 2), (4, 1)), (3,))
    nd = wl.wall_f(0, d)
    assert [repr(e) for e in wl.normal_order_walls(nd)] == ["|0+@4", "*-+@4"]


def test_json_roundtrip():
    d = wl.WallSequence(6, 2, ((4, 2), (3, 1), (4, 1)), (2, 0))
    assert wl.walls_from_json(json.dumps(wl.walls_to_json(d))) == d
    assert wl.walls_from_json({"domains": [[1, 0], [0, 0]], "positions": [0]}, 2, 1).positions == (0,)
    with pytest.raises(ValueError):
        wl.walls_from_json({"schema": "bad"})
