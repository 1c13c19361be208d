"""
Paths, highest weights and characters
=====================================

Count highest-weight paths by energy in two independent ways.
"""

from altspin import paths as pt

m, n = 3, 2
for label in pt.GroundLabel.all(m, n):
    direct = pt.character(m, n, label.a, label.b, 6)
    rsos = pt.rsos_character(m, n, label.a, label.b, 6)
    flag = "" if direct == rsos else "  <- mismatch"
    print(f"(a,b)=({label.a},{label.b})  {direct}{flag}")

# one admissible path and its RSOS picture
paths = pt.enumerate_highest(2, 1, 0, 0, 3)
p = paths[-1]
print("path values s=1..8:", [p.value(s) for s in range(1, 9)])
print("admissible:", pt.is_admissible(p), " energy:", pt.crystal_energy(p))
r = pt.to_rsos(p)
print("RSOS energy:", pt.rsos_energy(r))

# a crystal operator moves one letter and raises the energy by one
q = pt.signature_f(0, p)
print("f0 p values:", [q.value(s) for s in range(1, 9)], " energy:", pt.crystal_energy(q))
