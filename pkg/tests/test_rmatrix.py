import json
from pathlib import Path

import numpy as np
import pytest

from altspin import rmatrix as rm
from altspin.exact import RFMatrix, RationalFn, eval_numeric

DATA = Path(__file__).with_name("data")


@pytest.mark.parametrize("k,l", [(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)])
def test_projector_form_matches_solution(k, l):
    assert rm.rhat_projector(k, l) == rm.rhat_solve(k, l)


def test_projectors_resolve_identity():
    k, l = 2, 1
    total = RFMatrix((k + 1) * (l + 1), (k + 1) * (l + 1))
    for p in range(min(k, l) + 1):
        total = total + rm.projector(p, k, l)
    assert total == rm.rhat_projector(k, l).map(lambda f: f.subs_z(1))


def test_intertwiner_residual_vanishes():
    assert rm.intertwiner_residual(rm.rhat_projector(1, 2), 1, 2).is_zero()


def test_unitarity_scalar():
    g, ok = rm.check_unitarity(1, 2)
    assert ok and g


def test_normalisation_vector():
    r = rm.rhat_projector(2, 2)
    assert r[0, 0] == RationalFn.const(1)


def test_yang_baxter_small():
    assert rm.yang_baxter_holds(1, 1, 1)
    assert rm.yang_baxter_holds(1, 2, 1)


def test_numeric_crossing_and_unitarity():
    for q0, z0 in [(-0.3, 1.2), (0.4, 0.7)]:
        assert rm.crossing_residual(1, 2, q0, z0) < 1e-8
        assert rm.unitarity_residual(2, 1, q0, z0) < 1e-8


def test_numeric_matrix_is_finite():
    r = rm.r_u_basis_numeric(2, 1, -0.3, 1.4)
    assert r.shape == (6, 6) and np.isfinite(r).all()


def test_fast_series_matches_generic_expansion():
    for k, l in [(1, 1), (2, 1), (1, 3)]:
        assert rm.rbar_series(k, l) == rm.rbar_series_generic(k, l)


@pytest.mark.parametrize("k,l", [(1, 1), (2, 3), (3, 2), (4, 4)])
def test_q0_tables(k, l):
    for order, closed in ((0, rm.r0_limit_closed), (1, rm.r1_limit_closed)):
        for (i, j), (img, c) in rm.rbar_q0_table(k, l, order).items():
            want_img, want_c = closed(k, l, i, j)
            assert c == want_c
            if c:
                assert tuple(img) == want_img
            for case in rm.closed_form_cases(k, l, i, j, order):
                assert case == (want_img, want_c)


def test_table_matches_frozen_crystal_isomorphism():
    frozen = json.loads((DATA / "comb_r.json").read_text())
    for key, tab in frozen.items():
        k, l = map(int, key.split(","))
        got = rm.rbar_q0_table(k, l, 0)
        for ij, img in tab.items():
            i, j = map(int, ij.split(","))
            assert got[(i, j)] == (tuple(img), 1)


def test_local_energy_closed_forms_small():
    assert rm.brace(3, 2) == 1 and rm.brace(1, 2) == 1
    h = rm.local_hamiltonian("H3", 2, 1)
    assert h.offdiagonal_vanishes
    assert all(v == rm.h3(*idx, 2, 1) for idx, v in h.diagonal.items())
    assert rm.h3_identity_holds(2, 1)


def test_unknown_kind():
    with pytest.raises(ValueError):
        rm.local_hamiltonian("H4", 2, 1)


def test_kappa_positive():
    assert rm.kappa_numeric(1, 1, 0.3, 1.1) > 0
    assert rm.qpochhammer(0.5, 0.25, 40) == pytest.approx(np.prod([1 - 0.5 * 0.25 ** k for k in range(40)]))


def test_numeric_matches_exact_at_a_point():
    r = rm.rhat_projector(1, 1)
    num = np.array([[eval_numeric(r[i, j], 0.3, 1.7) for j in range(4)] for i in range(4)])
    assert num[0, 0] == pytest.approx(1.0)
