"""
From a tensor product to a path
===============================

Peel letters off B(lambda) (x) B(mu) until both factors are ground.
"""

from altspin import morphisms as mo
from altspin.paths import LambdaPath, signature_f

v = LambdaPath(1, 0, {2: 1, 3: 1})
w = LambdaPath(1, 1, {1: 0})
print("steps to stabilise:", mo.stabilisation_steps(v, w))

out = mo.Phi_N(v, w, 3)
print("Phi^(3) letters:", [x.value for x in out[2:]])
print("ground factors left:", out[0].is_ground() and out[1].is_ground())

p = mo.full_iso(v, w)
print("image path:", [p.value(s) for s in range(8, 0, -1)])

# crystal operators commute with the map
for i in (0, 1):
    e = mo.elem_f(i, (v, w))
    print(f"f{i}: tensor then map == map then path:", mo.full_iso(*e) == signature_f(i, p))

print(mo.crystal_dot((v, w), radius=1))
