"""Trigonometric R-matrices of U_q(sl2^) evaluation modules and their q -> 0 shadows.

Basis conventions
-----------------
V_k (x) V_l is indexed by (i, j) -> i*(l+1) + j.  An R-matrix for levels (k, l)
maps V_k (x) V_l to V_l (x) V_k, so its row index is j'*(k+1) + i' for the
output vector v_j' (x) v_i'.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact import (
    FIELD,
    RFMatrix,
    RationalFn,
    eval_numeric,
    gauss_binom_q2,
    q0_limit,
    q_factorial,
    q_int,
    series_at_one,
    solve,
    nullspace,
)

GENERATORS = ("e0", "e1", "f0", "f1", "t0", "t1")

_Q = RationalFn.q()
_ZV = RationalFn.z()
_ONE = RationalFn.const(1)


def _qpow(e: int) -> RationalFn:
    return _Q ** e


def chevalley_act(gen: str, n: int, j: int, z: RationalFn | None = None) -> dict:
    """Action of a Chevalley generator on v_j of (V_n)_z, as {index: coefficient}."""
    if gen not in GENERATORS:
        raise ValueError(f"unknown generator {gen!r}")
    if not 0 <= j <= n:
        raise ValueError(f"index {j} outside 0..{n}")
    z = _ZV if z is None else z
    out = {}
    if gen in ("f1", "e0"):
        if j < n:
            c = q_int(n - j)
            out[j + 1] = c * z if gen == "e0" else c
    elif gen in ("e1", "f0"):
        if j > 0:
            c = q_int(j)
            out[j - 1] = c / z if gen == "f0" else c
    elif gen == "t1":
        out[j] = _qpow(n - 2 * j)
    else:
        out[j] = _qpow(2 * j - n)
    return {k: v for k, v in out.items() if v}


def _gen_matrix(gen: str, n: int, z: RationalFn) -> RFMatrix:
    data = {}
    for j in range(n + 1):
        for k, v in chevalley_act(gen, n, j, z).items():
            data[(k, j)] = v
    return RFMatrix(n + 1, n + 1, data)


def coproduct(gen: str, k: int, l: int, z1: RationalFn, z2: RationalFn) -> RFMatrix:
    """Generator acting on (V_k)_{z1} (x) (V_l)_{z2}.

    Delta(e) = e(x)1 + t(x)e,  Delta(f) = f(x)t^-1 + 1(x)f,  Delta(t) = t(x)t.
    """
    idx = gen[1]
    t1, t2 = _gen_matrix("t" + idx, k, z1), _gen_matrix("t" + idx, l, z2)
    if gen[0] == "t":
        return t1.kron(t2)
    g1, g2 = _gen_matrix(gen, k, z1), _gen_matrix(gen, l, z2)
    if gen[0] == "e":
        return g1.kron(RFMatrix.identity(l + 1)) + t1.kron(g2)
    tinv = _gen_matrix(("t0" if idx == "1" else "t1"), l, z2)
    return g1.kron(tinv) + RFMatrix.identity(k + 1).kron(g2)


def omega_vector(p: int, k: int, l: int) -> dict:
    """Highest weight vector Omega_p of V_k (x) V_l as {(i, j): coefficient}."""
    if not 0 <= p <= min(k, l):
        raise ValueError(f"p={p} outside 0..min({k},{l})")
    out = {}
    for i in range(p + 1):
        c = _qpow((k + 1 - i) * i) / (q_factorial(i) * q_factorial(p - i))
        out[(i, p - i)] = c if i % 2 == 0 else -c
    return out


def _apply_f1(vec: dict, k: int, l: int) -> dict:
    out = {}
    for (i, j), c in vec.items():
        if i < k:
            key = (i + 1, j)
            val = c * q_int(k - i) * _qpow(2 * j - l)
            out[key] = out[key] + val if key in out else val
        if j < l:
            key = (i, j + 1)
            val = c * q_int(l - j)
            out[key] = out[key] + val if key in out else val
    return {key: v for key, v in out.items() if v}


def apply_generator(gen: str, vec: dict, k: int, l: int, z1=None, z2=None) -> dict:
    """Apply Delta(gen) to a vector {(i, j): coeff} of (V_k)_{z1} (x) (V_l)_{z2}."""
    z1 = _ZV if z1 is None else z1
    z2 = _ONE if z2 is None else z2
    mat = coproduct(gen, k, l, z1, z2)
    out = {}
    for (i, j), c in vec.items():
        col = i * (l + 1) + j
        for (r, cc), v in mat.data.items():
            if cc == col:
                key = divmod(r, l + 1)
                out[key] = out[key] + c * v if key in out else c * v
    return {key: v for key, v in out.items() if v}


@lru_cache(maxsize=None)
def _projectors(k: int, l: int):
    """All P_p for levels (k, l), built block by block in the total-weight grading."""
    dim = (k + 1) * (l + 1)
    mats = [dict() for _ in range(min(k, l) + 1)]
    omegas = [omega_vector(p, k, l) for p in range(min(k, l) + 1)]
    omegas_t = [omega_vector(p, l, k) for p in range(min(k, l) + 1)]
    chains, chains_t = [], []
    for p in range(min(k, l) + 1):
        top = k + l - 2 * p
        vecs, vecs_t = [omegas[p]], [omegas_t[p]]
        for _ in range(top):
            vecs.append(_apply_f1(vecs[-1], k, l))
            vecs_t.append(_apply_f1(vecs_t[-1], l, k))
        chains.append(vecs)
        chains_t.append(vecs_t)
    for w in range(k + l + 1):
        src = [(i, w - i) for i in range(k + 1) if 0 <= w - i <= l]
        dst = [(j, w - j) for j in range(l + 1) if 0 <= w - j <= k]
        ps = [p for p in range(min(k, l, w) + 1) if w - p <= k + l - 2 * p]
        if len(ps) != len(src):
            raise AssertionError("weight block does not match the highest weight decomposition")
        basis = RFMatrix(len(src), len(ps), {
            (a, b): chains[p][w - p].get(src[a], RationalFn())
            for a in range(len(src)) for b, p in enumerate(ps)})
        image = RFMatrix(len(dst), len(ps), {
            (a, b): chains_t[p][w - p].get(dst[a], RationalFn())
            for a in range(len(dst)) for b, p in enumerate(ps)})
        inv = solve(basis, RFMatrix.identity(len(src)))
        for b, p in enumerate(ps):
            for (ra, _), u in ((key, v) for key, v in image.data.items() if key[1] == b):
                for (_, ca), v in ((key, vv) for key, vv in inv.data.items() if key[0] == b):
                    row = dst[ra][0] * (k + 1) + dst[ra][1]
                    col = src[ca][0] * (l + 1) + src[ca][1]
                    mats[p][(row, col)] = u * v
    return tuple(RFMatrix(dim, dim, m) for m in mats)


def projector(p: int, k: int, l: int) -> RFMatrix:
    """The U_1-linear map V_k (x) V_l -> V_l (x) V_k sending Omega_p to Omega'_p, killing other Omega_r."""
    if not 0 <= p <= min(k, l):
        raise ValueError(f"p={p} outside 0..min({k},{l})")
    return _projectors(k, l)[p]


def rgen_coefficient(p: int, k: int, l: int, z: RationalFn) -> RationalFn:
    c = _ONE
    for j in range(p):
        qq = _qpow(k + l - 2 * j)
        c = c * (z - qq) / (_ONE - z * qq)
    return c


def rhat_projector(k: int, l: int, z: RationalFn | None = None) -> RFMatrix:
    """R-hat as the weighted sum of projectors."""
    z = _ZV if z is None else z
    dim = (k + 1) * (l + 1)
    out = RFMatrix(dim, dim)
    for p in range(min(k, l) + 1):
        out = out + projector(p, k, l).scale(rgen_coefficient(p, k, l, z))
    return out


@lru_cache(maxsize=None)
def rhat_solve(k: int, l: int) -> RFMatrix:
    """R-hat from the intertwining equations alone, normalised by v0(x)v0 -> v0(x)v0."""
    dim = (k + 1) * (l + 1)
    unknowns = []
    for i in range(k + 1):
        for j in range(l + 1):
            for jp in range(l + 1):
                ip = i + j - jp
                if 0 <= ip <= k:
                    unknowns.append((jp * (k + 1) + ip, i * (l + 1) + j))
    index = {u: n for n, u in enumerate(unknowns)}
    rows = []
    for gen in ("e1", "f1", "e0", "f0"):
        src = coproduct(gen, k, l, _ZV, _ONE)
        dst = coproduct(gen, l, k, _ONE, _ZV)
        eqs = {}
        # (R src)[r, c] = sum_m R[r, m] src[m, c]
        for (m, c), v in src.data.items():
            for r in range(dim):
                u = index.get((r, m))
                if u is not None:
                    eq = eqs.setdefault((r, c), {})
                    eq[u] = eq[u] + v if u in eq else v
        # -(dst R)[r, c] = -sum_m dst[r, m] R[m, c]
        for (r, m), v in dst.data.items():
            for c in range(dim):
                u = index.get((m, c))
                if u is not None:
                    eq = eqs.setdefault((r, c), {})
                    eq[u] = eq[u] - v if u in eq else -v
        for eq in eqs.values():
            eq = {u: v for u, v in eq.items() if v}
            if eq:
                rows.append(eq)
    _, basis = nullspace(rows, len(unknowns))
    if len(basis) != 1:
        raise ArithmeticError(f"intertwiner space has dimension {len(basis)}, expected 1")
    vec = basis[0]
    norm = vec.get(index[(0, 0)])
    if not norm:
        raise ArithmeticError("solution vanishes on v0 (x) v0")
    inv = norm.inverse()
    return RFMatrix(dim, dim, {unknowns[u]: v * inv for u, v in vec.items()})


def intertwiner_residual(r: RFMatrix, k: int, l: int, z: RationalFn | None = None) -> RFMatrix:
    """Sum over all six generators of the commutation defect (zero for an intertwiner)."""
    z = _ZV if z is None else z
    dim = (k + 1) * (l + 1)
    total = RFMatrix(dim, dim)
    for gen in GENERATORS:
        defect = r @ coproduct(gen, k, l, z, _ONE) - coproduct(gen, l, k, _ONE, z) @ r
        total = total + defect.map(lambda v: v * v)
    return total


def check_unitarity(k: int, l: int):
    """Return (g, ok) with R-hat^{(l,k)}(1/z) R-hat^{(k,l)}(z) = g(z) Id."""
    prod = rhat_projector(l, k, _ZV.inverse()) @ rhat_projector(k, l)
    dim = (k + 1) * (l + 1)
    g = prod[0, 0]
    ok = prod == RFMatrix.identity(dim).scale(g) if g else False
    return g, ok


# gauge form of R-bar ----------------------------------------------------

@lru_cache(maxsize=None)
def rbar_gauge(k: int, l: int) -> RFMatrix:
    """R-bar(zeta) with the c_j factors stripped: entry R-hat(zeta^2) * zeta^(i - i').

    The true u-basis matrix is D_out^-1 (this) D_in with diagonal D built from the
    c_j, which tend to 1 as q -> 0; diagonals of products are unchanged.
    """
    w = RationalFn.w()
    rh = rhat_projector(k, l)
    data = {}
    for (row, col), v in rh.data.items():
        ip = row % (k + 1)
        i = col // (l + 1)
        data[(row, col)] = v * (w ** (i - ip))
    return RFMatrix(rh.rows, rh.cols, data)


def rbar_series_generic(k: int, l: int):
    """(R-bar_0, R-bar_1) by expanding the full gauge matrix in zeta."""
    return series_at_one(rbar_gauge(k, l))


@lru_cache(maxsize=None)
def rbar_series(k: int, l: int):
    """(R-bar_0, R-bar_1) in gauge form: value and zeta-derivative at zeta = 1.

    Each projector coefficient is 1 at z = 1 and its z-derivative there is
    sum_j (1 + x_j)/(1 - x_j) with x_j = q^(k+l-2j), so the expansion needs no z at all.
    """
    dim = (k + 1) * (l + 1)
    r0, r1 = RFMatrix(dim, dim), RFMatrix(dim, dim)
    slope = RationalFn()
    for p in range(min(k, l) + 1):
        if p:
            x = _qpow(k + l - 2 * (p - 1))
            slope = slope + (_ONE + x) / (_ONE - x)
        proj = projector(p, k, l)
        r0 = r0 + proj
        if slope:
            r1 = r1 + proj.scale(slope * 2)
    shift = {}
    for (row, col), v in r0.data.items():
        d = col // (l + 1) - row % (k + 1)
        if d:
            shift[(row, col)] = v * d
    return r0, r1 + RFMatrix(dim, dim, shift)


def limit_matrix(m: RFMatrix) -> dict:
    """Entrywise q -> 0 limits, keeping only nonzero entries."""
    out = {}
    for key, v in m.data.items():
        lim = q0_limit(v)
        if lim:
            out[key] = lim
    return out


def rbar_q0_table(k: int, l: int, order: int) -> dict:
    """q -> 0 limit of R-bar_order as {(i, j): ((j', i'), coefficient)}.

    (i, j) labels u_i^(k) (x) u_j^(l); the image u_j'^(l) (x) u_i'^(k).
    A column with no surviving entry maps to (None, 0).
    """
    if order not in (0, 1):
        raise ValueError("order must be 0 or 1")
    lim = limit_matrix(rbar_series(k, l)[order])
    out = {}
    for i in range(k + 1):
        for j in range(l + 1):
            col = i * (l + 1) + j
            hits = [(row, c) for (row, cc), c in lim.items() if cc == col]
            if not hits:
                out[(i, j)] = (None, 0)
                continue
            if len(hits) > 1:
                raise ArithmeticError(f"column {(i, j)} has {len(hits)} surviving entries")
            row, c = hits[0]
            coeff = int(c) if c.denominator == 1 else c
            out[(i, j)] = (divmod(row, k + 1), coeff)
    return out


def r0_limit_closed(k: int, l: int, i: int, j: int):
    """Closed-form q -> 0 image of u_i^(k) (x) u_j^(l) under R-bar_0."""
    s = i + j
    if s <= k and s <= l:
        return (i, j), 1
    if k <= s <= l:
        return (2 * i + j - k, k - i), 1
    if l <= s <= k:
        return (l - j, i + 2 * j - l), 1
    return (l - k + i, j - l + k), 1


def r1_limit_closed(k: int, l: int, i: int, j: int):
    """Closed-form q -> 0 image of u_i^(k) (x) u_j^(l) under R-bar_1."""
    s = i + j
    if s <= k and s <= l:
        return (i, j), s
    if k <= s <= l:
        return (2 * i + j - k, k - i), k
    if l <= s <= k:
        return (l - j, i + 2 * j - l), l
    return (l - k + i, j - l + k), l + k - s


def closed_form_cases(k: int, l: int, i: int, j: int, order: int):
    """Every applicable case of the four-case table (they must agree on overlaps)."""
    s = i + j
    tests = [s <= k and s <= l, k <= s <= l, l <= s <= k, s >= k and s >= l]
    images = [(i, j), (2 * i + j - k, k - i), (l - j, i + 2 * j - l), (l - k + i, j - l + k)]
    coeffs = [s, k, l, l + k - s] if order == 1 else [1, 1, 1, 1]
    return [(images[c], coeffs[c]) for c in range(4) if tests[c]]


# local Hamiltonians -----------------------------------------------------

def brace(a: int, b: int) -> int:
    """{a}_b: a if a <= b, else 2b - a."""
    return a if a <= b else 2 * b - a


def h1(i: int, j: int, k: int, m: int, n: int) -> int:
    s = i + j
    if s <= m and s <= n:
        return brace(k + j, n)
    if m <= s <= n:
        return brace(k + i + 2 * j - m, n)
    if n <= s <= m:
        return brace(k + n - i, n)
    return brace(k + n - m + j, n)


def h2(i: int, j: int, k: int, m: int, n: int) -> int:
    s = j + k
    if s <= m and s <= n:
        return brace(i + j, m)
    if m <= s <= n:
        return brace(i + m - k, m)
    if n <= s <= m:
        return brace(i + k + 2 * j - n, m)
    return brace(i + j + m - n, m)


def h3(i: int, j: int, m: int, n: int) -> int:
    s = i + j
    if s <= m and s <= n:
        return s
    if m <= s <= n:
        return m
    if n <= s <= m:
        return n
    return m + n - s


@dataclass(frozen=True)
class LocalHamiltonian:
    kind: str
    m: int
    n: int
    levels: tuple
    matrix: RFMatrix
    diagonal: dict          # basis tuple -> q -> 0 eigenvalue
    offdiagonal_vanishes: bool


def local_hamiltonian(kind: str, m: int, n: int) -> LocalHamiltonian:
    """H1, H2 or H3 in gauge form, with the q -> 0 diagonal table."""
    eye = RFMatrix.identity
    if kind == "H1":
        levels = (n, m, n)
        mat = rbar_series(m, n)[0].kron(eye(n + 1)) @ eye(m + 1).kron(rbar_series(n, n)[1]) \
            @ rbar_series(n, m)[0].kron(eye(n + 1))
    elif kind == "H2":
        levels = (m, n, m)
        mat = eye(m + 1).kron(rbar_series(m, n)[0]) @ rbar_series(m, m)[1].kron(eye(n + 1)) \
            @ eye(m + 1).kron(rbar_series(n, m)[0])
    elif kind == "H3":
        levels = (n, m)
        mat = rbar_series(m, n)[0] @ rbar_series(n, m)[1]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    lim = limit_matrix(mat)
    off = all(r == c for (r, c) in lim)
    diag = {}
    for idx in np.ndindex(*[lv + 1 for lv in levels]):
        flat = 0
        for lv, x in zip(levels, idx):
            flat = flat * (lv + 1) + x
        val = lim.get((flat, flat), Fraction(0))
        diag[tuple(int(x) for x in idx)] = int(val) if val.denominator == 1 else val
    return LocalHamiltonian(kind, m, n, levels, mat, diag, off)


def h3_identity_holds(m: int, n: int) -> bool:
    """R-bar_0^{(m,n)} R-bar_1^{(n,m)} = R-bar_1^{(m,n)} R-bar_0^{(n,m)} exactly."""
    a = rbar_series(m, n)[0] @ rbar_series(n, m)[1]
    b = rbar_series(m, n)[1] @ rbar_series(n, m)[0]
    return a == b


# Yang-Baxter ------------------------------------------------------------

def _ybe_field():
    from sympy import QQ
    from sympy.polys.fields import field
    return field("q,x,y", QQ)


def _to_field(f: RationalFn, fld):
    if f.b or f.has_z:
        raise ValueError("expected a function of q alone")
    return fld.from_expr(f.a.as_expr())


def _rhat_in(k, l, zval, fld, cache):
    q = fld.gens[0]
    dim = (k + 1) * (l + 1)
    out = {}
    for p in range(min(k, l) + 1):
        c = fld(1)
        for j in range(p):
            qq = q ** (k + l - 2 * j)
            c = c * (zval - qq) / (1 - zval * qq)
        for key, v in projector(p, k, l).data.items():
            conv = cache.get((k, l, p, key))
            if conv is None:
                conv = cache[(k, l, p, key)] = _to_field(v, fld)
            out[key] = out.get(key, fld(0)) + c * conv
    return dim, {key: v for key, v in out.items() if v}


def _kron_eye_left(size, m, mdim):
    return {(a * mdim + r, a * mdim + c): v for a in range(size) for (r, c), v in m.items()}


def _kron_eye_right(m, size):
    return {(r * size + a, c * size + a): v for (r, c), v in m.items() for a in range(size)}


def _mul(x, y):
    by_row = {}
    for (k, j), v in y.items():
        by_row.setdefault(k, []).append((j, v))
    acc = {}
    for (i, k), u in x.items():
        for j, v in by_row.get(k, ()):
            acc[(i, j)] = acc.get((i, j), 0) + u * v
    return {key: v for key, v in acc.items() if v}


def yang_baxter_holds(a: int, b: int, c: int) -> bool:
    """Braid form of the Yang-Baxter equation on V_a (x) V_b (x) V_c with spectral ratios x, y.

    z1/z2 = x, z2/z3 = y, z1/z3 = x*y.
    """
    fld, _, x, y = _ybe_field()
    cache = {}
    _, r_ab = _rhat_in(a, b, x, fld, cache)
    _, r_ac = _rhat_in(a, c, x * y, fld, cache)
    _, r_bc = _rhat_in(b, c, y, fld, cache)
    lhs = _mul(_kron_eye_right(r_bc, a + 1),
               _mul(_kron_eye_left(b + 1, r_ac, (a + 1) * (c + 1)), _kron_eye_right(r_ab, c + 1)))
    rhs = _mul(_kron_eye_left(c + 1, r_ab, (a + 1) * (b + 1)),
               _mul(_kron_eye_right(r_ac, b + 1), _kron_eye_left(a + 1, r_bc, (b + 1) * (c + 1))))
    keys = set(lhs) | set(rhs)
    return all(lhs.get(key, 0) == rhs.get(key, 0) for key in keys)


# numerics ---------------------------------------------------------------

def c_coefficients(n: int, q0: float) -> np.ndarray:
    """c_j^(n) as the positive root of the Gaussian binomial in q^2."""
    return np.array([math.sqrt(eval_numeric(gauss_binom_q2(n, j), q0)) for j in range(n + 1)])


def _rhat_numeric(k, l, q0, z0):
    dim = (k + 1) * (l + 1)
    out = np.zeros((dim, dim))
    for p in range(min(k, l) + 1):
        coef = 1.0
        for j in range(p):
            qq = q0 ** (k + l - 2 * j)
            den = 1.0 - z0 * qq
            if den == 0.0:
                raise ZeroDivisionError("pole of R-hat")
            coef *= (z0 - qq) / den
        for (r, c), v in projector(p, k, l).data.items():
            out[r, c] += coef * eval_numeric(v, q0)
    return out


def r_u_basis_numeric(k: int, l: int, q0: float, zeta0: float) -> np.ndarray:
    """R-bar(zeta0) in the principal u-basis (spectral pair zeta1 = zeta0, zeta2 = 1)."""
    rh = _rhat_numeric(k, l, q0, zeta0 * zeta0)
    ck, cl = c_coefficients(k, q0), c_coefficients(l, q0)
    out = np.empty_like(rh)
    for row in range(rh.shape[0]):
        jp, ip = divmod(row, k + 1)
        for col in range(rh.shape[1]):
            i, j = divmod(col, l + 1)
            out[row, col] = rh[row, col] * ck[i] * cl[j] * zeta0 ** (i - ip) / (cl[jp] * ck[ip])
    return out


def qpochhammer(x: float, base: float, factors: int = 40) -> float:
    out = 1.0
    term = x
    for _ in range(factors):
        out *= 1.0 - term
        term *= base
    return out


def kappa_numeric(k: int, l: int, q0: float, zeta0: float, factors: int = 40) -> float:
    """Normalisation kappa^{(k,l)}(zeta) with Pochhammer base q^4, truncated."""
    base = q0 ** 4
    z2, zm2 = zeta0 ** 2, zeta0 ** -2
    a, d = q0 ** (2 + k + l), q0 ** (2 + abs(k - l))
    num = qpochhammer(a * z2, base, factors) * qpochhammer(d * zm2, base, factors)
    den = qpochhammer(a * zm2, base, factors) * qpochhammer(d * z2, base, factors)
    return zeta0 ** min(k, l) * num / den


def r_normalized(k: int, l: int, q0: float, zeta0: float, factors: int = 40) -> np.ndarray:
    return r_u_basis_numeric(k, l, q0, zeta0) / kappa_numeric(k, l, q0, zeta0, factors)


def component(r: np.ndarray, k: int, l: int, i: int, j: int, ip: int, jp: int) -> float:
    """R^{i,j}_{i',j'}: coefficient of u_j'^(l) (x) u_i'^(k) in R(u_i^(k) (x) u_j^(l))."""
    return r[jp * (k + 1) + ip, i * (l + 1) + j]


def crossing_residual(k: int, l: int, q0: float, zeta0: float, factors: int = 40) -> float:
    """max |R^{(k,l)}(zeta)^{i,j}_{i',j'} - R^{(l,k)}(-1/(q zeta))^{l-j',i}_{l-j,i'}|."""
    left = r_normalized(k, l, q0, zeta0, factors)
    right = r_normalized(l, k, q0, -1.0 / (q0 * zeta0), factors)
    worst = 0.0
    for i in range(k + 1):
        for j in range(l + 1):
            for ip in range(k + 1):
                for jp in range(l + 1):
                    a = component(left, k, l, i, j, ip, jp)
                    b = component(right, l, k, l - jp, i, l - j, ip)
                    worst = max(worst, abs(a - b))
    return worst


def unitarity_residual(k: int, l: int, q0: float, zeta0: float, factors: int = 40) -> float:
    """max deviation of R^{(l,k)}(1/zeta) R^{(k,l)}(zeta) from the identity."""
    a = r_normalized(k, l, q0, zeta0, factors)
    b = r_normalized(l, k, q0, 1.0 / zeta0, factors)
    return float(np.max(np.abs(b @ a - np.eye(a.shape[0]))))
