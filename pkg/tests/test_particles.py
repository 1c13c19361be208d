import json
import random

import pytest

from altspin import particles as pa
from altspin import walls as wl
from altspin.paths import FullPath, GroundLabel, signature_f
from altspin.suites import orbit, orbit_census


def test_parity_enforced():
    with pytest.raises(pa.ParticleError):
        pa.half(1, 1, 0)
    with pytest.raises(pa.ParticleError):
        pa.zero(1, 1, 0)
    assert pa.zero(1, -1, 0).delta == (1, -1)


def test_wall_to_particle_examples():
    d = wl.WallSequence(6, 2, ((4, 2), (3, 1), (4, 1)), (2, 0))
    w = pa.walls_to_particles(d)
    assert w.symbols == (pa.zero(1, 1, -1), pa.half(-1, 1, 0)) and w.sign == 1
    t = pa.walls_to_particles([wl.bracket("T", 1, 2)], (4, 0), (6, 2))
    assert t.symbols == (pa.zero(1, 1, -1), pa.half(-1, 0, -1))
    empty = pa.walls_to_particles(wl.WallSequence(2, 1, ((0, 0),), ()))
    assert empty.symbols == () and empty.sign == 1
    assert pa.particles_to_walls(w) == wl.normal_order_walls(d)
    assert pa.particles_to_walls(t) == [wl.bracket("T", 1, 2)]


def test_odd_brackets_map_to_half_then_zero():
    b = pa.walls_to_particles([wl.bracket("B", 1, 1)], (0, 0), (6, 2)).symbols
    assert b == (pa.half(-1, 1, 0), pa.zero(1, 1, -1))
    t = pa.walls_to_particles([wl.bracket("T", -1, 1)], (4, 2), (6, 2)).symbols
    assert t == (pa.half(1, 0, 0), pa.zero(-1, -1, -1))


def test_relations():
    w = pa.ParticleWord(2, 1, (pa.half(1, 0, 0), pa.half(1, 0, 4)), (0, 0))
    v = pa.apply_relation(w, 0)
    assert v.symbols == (pa.half(1, 0, 6), pa.half(1, 0, -2)) and v.sign == -1
    # boundary branch at a = m - n
    w = pa.ParticleWord(2, 1, (pa.zero(1, -1, 0), pa.half(-1, 0, 1)), (1, 1))
    v = pa.apply_relation(w, 0)
    assert v.symbols == (pa.half(1, 0, 2), pa.zero(-1, -1, -1)) and v.sign == 1
    assert pa.apply_relation(v, 0) == w
    # same a commutes
    w = pa.ParticleWord(3, 1, (pa.zero(1, -1, 0), pa.half(1, 0, 2)), (0, 0))
    assert pa.apply_relation(w, 0).symbols == (pa.half(1, 0, 2), pa.zero(1, -1, 0))


def test_null_pattern():
    w = pa.ParticleWord(3, 1, (pa.half(1, 0, 2), pa.half(1, 0, 0)), (0, 0))
    assert pa.is_null_pair(w, 0)
    assert pa.separately_order(w) is None
    assert pa.normally_order(w) is None


def test_orders_on_small_words():
    empty = pa.ParticleWord(2, 1, (), (0, 0))
    assert pa.normally_order(empty) == empty and pa.separately_order(empty) == empty
    w = pa.ParticleWord(2, 1, (pa.zero(-1, 1, 0), pa.half(1, 0, 0)), (0, 0))
    assert pa.is_normally_ordered(w)
    assert pa.normally_order(w) == w
    assert not pa.is_separately_ordered(w)


def test_pairwise_order_is_not_enough():
    w = pa.ParticleWord(2, 1, (pa.half(1, 0, 0), pa.zero(-1, -1, -1), pa.half(1, 1, -1)), (0, 1))
    assert pa.is_pairwise_ordered(w)
    assert not pa.is_normally_ordered(w)
    assert orbit(w)[1]
    assert pa.normally_order(w) is None


def test_orbit_census_three_symbols():
    stats = orbit_census(2, 1, range(-1, 2), 3)
    assert stats["bad"] == 0 and stats["orbits"] > stats["null"] > 0


def test_separately_ordered_is_minimal():
    # reordering any separately ordered word never gives a smaller separately ordered word
    for w in [pa.ParticleWord(2, 1, (pa.half(1, 0, 0), pa.half(-1, 0, 1), pa.zero(1, -1, 0)), (0, 0))]:
        s = pa.separately_order(w)
        seen, null = orbit(s)
        assert not null
        assert sum(pa.is_separately_ordered(pa.ParticleWord(2, 1, k[2], k[3])) for k in seen) == 1


def test_single_particle_ladders():
    w = pa.ParticleWord(2, 1, (pa.half(1, 0, 0),), (0, 0))
    steps = []
    for i in (1, 0, 1, 0):
        w = pa.particle_f(i, w)
        steps.append(w.symbols[0])
    assert steps == [pa.half(1, 1, -1), pa.half(1, 0, -2), pa.half(1, 1, -3), pa.half(1, 0, -4)]
    assert pa.particle_f(0, pa.ParticleWord(2, 1, (pa.half(1, 0, 0),), (0, 0))) is None
    z = pa.ParticleWord(2, 1, (pa.zero(1, 1, -1),), (0, 0))
    d = pa.particles_to_wall_sequence(z)
    for i in (0, 1):
        img = pa.particle_f(i, z)
        assert (img is None) == (wl.wall_f(i, d) is None)


def test_boundary_swap_rule():
    # f1 on the bracket pair at a = 0 gives a half particle carrying the other sign
    w = pa.ParticleWord(2, 1, (pa.zero(-1, 1, 0), pa.half(1, 0, 0)), (0, 0))
    v = pa.particle_f(1, w)
    assert v.symbols == (pa.half(-1, 1, 0), pa.zero(1, 1, -1))


def test_equivariance_random():
    rng = random.Random(9)
    for m, n in [(2, 1), (6, 2)]:
        labels = GroundLabel.all(m, n)
        for _ in range(80):
            left, right = rng.choice(labels), rng.choice(labels)
            base = FullPath(m, n, left.a, left.b, right.a, right.b)
            p = FullPath(m, n, left.a, left.b, right.a, right.b,
                         {s: rng.randint(0, base.level(s)) for s in range(-5, 7)})
            for _ in range(3):
                d = wl.path_to_walls(p)
                w = pa.walls_to_particles(d)
                assert pa.particles_to_wall_sequence(w) == d
                for i in (0, 1):
                    nd, nw = wl.wall_f(i, d), pa.particle_f(i, w)
                    assert (nd is None) == (nw is None)
                    if nd is not None:
                        assert nw.key() == pa.walls_to_particles(nd).key()
                    nd, nw = wl.wall_e(i, d), pa.particle_e(i, w)
                    assert (nd is None) == (nw is None)
                    if nd is not None:
                        assert nw.key() == pa.walls_to_particles(nd).key()
                q = signature_f(rng.randint(0, 1), p)
                p = q or p


def test_json_roundtrip():
    w = pa.ParticleWord(6, 2, (pa.zero(1, 1, -1), pa.half(-1, 1, 0)), (4, 1), -1)
    assert pa.particles_from_json(json.dumps(pa.particles_to_json(w))) == w
    with pytest.raises(ValueError):
        pa.particles_from_json({"symbols": [{"species": "half"}], "initial": [0, 0], "m": 2, "n": 1})
