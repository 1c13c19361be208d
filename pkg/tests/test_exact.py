from fractions import Fraction

import pytest

from altspin.exact import (PoleError, RFMatrix, RationalFn, eval_exact, eval_numeric, nullspace,
                           q0_limit, q_binom, q_int, series_at_one, solve)

q = RationalFn.q()
z = RationalFn.z()
one = RationalFn.const(1)


def test_q_integers():
    assert q_int(2) == q + q.inverse()
    assert eval_exact(q_int(2), Fraction(-1, 2)) == Fraction(-5, 2)
    assert q_binom(4, 2) == q ** 4 + q ** 2 + 2 + q ** -2 + q ** -4
    assert q_int(0) == RationalFn()


def test_field_arithmetic():
    f = (q + z) / (one - q * z)
    assert f * (one - q * z) == q + z
    assert f - f == RationalFn()
    w = RationalFn.w()
    assert w * w == z


def test_limits_and_poles():
    assert q0_limit((q + 2) / (one + q)) == 2
    assert q0_limit(q / (one + q)) == 0
    with pytest.raises(PoleError):
        q0_limit(one / q)
    with pytest.raises(PoleError):
        eval_exact(one / (one - q), 1)
    assert eval_numeric(z * q, 0.5, 2.0) == pytest.approx(1.0)


def test_solve_and_nullspace():
    a = RFMatrix.from_rows([[q, one], [one, z]])
    b = RFMatrix.from_rows([[one], [RationalFn()]])
    x = solve(a, b)
    assert a @ x == b
    pivots, basis = nullspace([{0: one, 1: -q}], 2)
    assert pivots == [0] and len(basis) == 1
    v = basis[0]
    assert v.get(0, RationalFn()) - q * v.get(1, RationalFn()) == RationalFn()


def test_series_at_one():
    w = RationalFn.w()
    m0, m1 = series_at_one(RFMatrix.from_rows([[w * q + z]]))
    assert m0[0, 0] == q + 1
    assert m1[0, 0] == q + 2
