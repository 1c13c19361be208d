"""
Domain walls and particles
==========================

A bi-infinite path as a list of domains, as ordered elementary walls and
as a word of particle symbols.  Crystal operators act in all three.
"""

from altspin import particles as pa
from altspin import walls as wl
from altspin.paths import signature_f

d = wl.WallSequence(6, 2, ((4, 2), (3, 1), (4, 1)), (2, 0))
p = wl.walls_to_path(d)
print("path values s=8..-2:", [p.value(s) for s in range(8, -3, -1)])
print("walls:", wl.normal_order_walls(d), " energy:", wl.wall_energy(d))
print("particles:", pa.walls_to_particles(d))

# a composite wall splits into elementary ones
print("(4,0)|(4,2) at s=2:", wl.decompose_wall(6, 2, (4, 0), (4, 2), 2))

# follow f0, f1, f0, f1 in each picture
w = pa.walls_to_particles(d)
for i in (0, 1, 0, 1):
    d, p, w = wl.wall_f(i, d), signature_f(i, p), pa.particle_f(i, w)
    same = wl.path_to_walls(p) == d and pa.walls_to_particles(d).key() == w.key()
    print(f"f{i}: {wl.normal_order_walls(d)}  {w.symbols}  pictures agree: {same}")

# two spin-1/2 symbols with the same labels and modes two apart vanish
null = pa.ParticleWord(3, 1, (pa.half(1, 0, 2), pa.half(1, 0, 0)), (0, 0))
print("null pair:", pa.is_null_pair(null, 0), pa.normally_order(null))
