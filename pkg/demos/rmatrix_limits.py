"""
The R-matrix and its crystal limit
==================================

Build R-hat for two small levels exactly, check it against the solved
intertwiner, then watch it collapse to a permutation as q goes to 0.
"""

import numpy as np

from altspin import rmatrix as rm
from altspin.morphisms import comb_R
from altspin.paths import Letter

# exact matrices over Q(q, z)
k, l = 1, 2
R = rm.rhat_projector(k, l)
print("projector form == solved form:", R == rm.rhat_solve(k, l))
print("R(z) R(1/z) is a scalar:", rm.check_unitarity(k, l)[1])

# numerically, in the normalisation where unitarity is exact
r = rm.r_normalized(k, l, 0.3, 1.4)
print("unitarity residual at q=0.3, zeta=1.4: %.1e" % rm.unitarity_residual(k, l, 0.3, 1.4))
print("normalised matrix, rounded:")
print(np.round(r, 3))

# the q -> 0 limit is a bijection on letters: the combinatorial R
tab = rm.rbar_q0_table(k, l, 0)
for (i, j), (img, c) in sorted(tab.items()):
    u, v = comb_R(Letter(k, i), Letter(l, j))
    print(f"[{i}] x [{j}]  ->  [{img[0]}] x [{img[1]}]   comb_R gives [{u.value}] x [{v.value}]")

# local energies, q -> 0 diagonal of the CTM Hamiltonians
h = rm.local_hamiltonian("H1", 3, 1)
print("H1 for (m,n)=(3,1):", dict(sorted(h.diagonal.items())))
