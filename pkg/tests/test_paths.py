import json
import random
from pathlib import Path

import pytest

from altspin import paths as pt
from altspin.suites import semi_paths

DATA = Path(__file__).with_name("data")


def test_letter_bounds():
    with pytest.raises(ValueError):
        pt.Letter(2, 3)
    with pytest.raises(ValueError):
        pt.GroundLabel(2, 1, 2, 0)
    with pytest.raises(ValueError):
        pt.SemiPath(1, 1, 0, 0)


def test_ground_values():
    m, n, a, b = 6, 2, 3, 1
    assert [pt.ground_value(s, m, n, a, b) for s in (4, 3, 2, 1)] == [a + b, n - b, m - n - a + b, n - b]


def test_ground_path_is_highest_with_zero_energy():
    for label in pt.GroundLabel.all(3, 1):
        p = pt.SemiPath.ground(label)
        assert pt.is_admissible(p)
        assert pt.signature_e(0, p) is None and pt.signature_e(1, p) is None
        assert pt.crystal_energy(p) == 0


def test_paths_are_immutable_and_hashable():
    p = pt.SemiPath(2, 1, 0, 0, {1: 1, 2: 2})
    with pytest.raises(AttributeError):
        p.m = 3
    # the value at s = 1 equals the ground value, so it is not stored
    assert p.overrides == {2: 2}
    assert len({p, pt.SemiPath(2, 1, 0, 0, {2: 2})}) == 1


def test_f_then_e_roundtrip_and_weights():
    rng = random.Random(5)
    for _ in range(400):
        m, n = rng.choice([(2, 1), (3, 1), (3, 2)])
        label = rng.choice(pt.GroundLabel.all(m, n))
        p = pt.SemiPath(m, n, label.a, label.b, {s: rng.randint(0, n if s % 2 else m) for s in range(1, 9)})
        i = rng.randint(0, 1)
        q = pt.signature_f(i, p)
        if q is None:
            continue
        assert pt.signature_e(i, q) == p
        assert pt.crystal_energy(q) == pt.crystal_energy(p) + 1
        assert pt.weight(q) == pt.weight(p) - pt.ALPHA[i]
        assert pt.conjugate(pt.signature_f(1 - i, pt.conjugate(p))) == q


def test_tensor_rule_on_letters():
    x = (pt.Letter(1, 1), pt.Letter(1, 0))
    assert pt.tensor_f(1, x) == (pt.Letter(1, 1), pt.Letter(1, 1))
    assert pt.tensor_e(1, x) == (pt.Letter(1, 0), pt.Letter(1, 0))
    # a 0 followed by a 1 cancels
    assert pt.tensor_f(1, (pt.Letter(1, 0), pt.Letter(1, 1))) is None


def test_admissible_iff_highest_depth_eight():
    for m, n in [(2, 1), (3, 2)]:
        for label in pt.GroundLabel.all(m, n):
            for p in semi_paths(m, n, label, 8):
                hw = pt.signature_e(0, p) is None and pt.signature_e(1, p) is None
                assert pt.is_admissible(p) == hw


def test_rsos_roundtrip_and_energy():
    for p in pt.enumerate_highest(3, 1, 1, 0, 5):
        r = pt.to_rsos(p)
        assert r.is_valid()
        assert pt.from_rsos(r) == p
        assert pt.rsos_energy(r) == pt.crystal_energy(p)


def test_characters_match_frozen_rsos_oracle():
    frozen = json.loads((DATA / "characters.json").read_text())
    for model, tables in frozen.items():
        m, n = map(int, model.split(","))
        if (m, n) == (6, 2):
            continue
        for ab, counts in tables.items():
            a, b = map(int, ab.split(","))
            assert pt.character(m, n, a, b, 5) == counts[:6]


def test_character_trivial_case():
    assert pt.character(2, 1, 0, 0, 0) == [1]


def test_window_edge_is_reported():
    # a window too small to hold the deviations must not silently truncate
    assert pt.character(2, 1, 0, 0, 3) == pt.rsos_character(2, 1, 0, 0, 3)


def test_json_roundtrip():
    p = pt.SemiPath(3, 1, 1, 0, {2: 3})
    assert pt.path_from_json(json.dumps(pt.path_to_json(p))) == p
    f = pt.FullPath(3, 1, 1, 0, 0, 1, {-2: 0, 3: 1})
    assert pt.path_from_json(pt.path_to_json(f)) == f
    with pytest.raises(ValueError):
        pt.path_from_json({"schema": "other"})
    with pytest.raises(ValueError):
        pt.path_from_json({"m": 2})


def test_full_path_reference_switches_at_one():
    f = pt.FullPath(2, 1, 1, 1, 0, 0)
    assert f.value(1) == pt.ground_value(1, 2, 1, 1, 1)
    assert f.value(0) == pt.ground_value(0, 2, 1, 0, 0)
