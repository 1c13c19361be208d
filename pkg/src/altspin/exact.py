"""Exact rational functions in q and z, with an adjoined square root w of z.

Every value is stored as a + b*w where a and b live in the rational function
field QQ(q, z) and w*w = z.  Spectral half powers (zeta = w, z = zeta**2)
therefore stay exact.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from sympy import QQ
from sympy.polys.fields import field
from sympy.polys.rings import ring

FIELD, _Q, _Z = field("q,z", QQ)
POLY3, _PQ, _PZ, _PW = ring("q,z,w", QQ)


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at one of its poles."""


def _lift(x):
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFn(FIELD(QQ(x.numerator, x.denominator)) if isinstance(x, Fraction) else FIELD(x))
    if isinstance(x, Rational):
        return RationalFn(FIELD(QQ(int(x.numerator), int(x.denominator))))
    return NotImplemented


class RationalFn:
    """An element a + b*w of QQ(q, z)[w] / (w^2 - z)."""

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a=None, b=None):
        self.a = FIELD(0) if a is None else a
        self.b = FIELD(0) if b is None else b
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c):
        return _lift(c)

    @classmethod
    def q(cls):
        return cls(_Q)

    @classmethod
    def z(cls):
        return cls(_Z)

    @classmethod
    def w(cls):
        return cls(FIELD(0), FIELD(1))

    # structure
    @property
    def has_w(self):
        return bool(self.b)

    @property
    def has_z(self):
        return any(m[1] for part in (self.a, self.b) for poly in (part.numer, part.denom) for m in poly.monoms())

    def is_zero(self):
        return not self.a and not self.b

    def __bool__(self):
        return not self.is_zero()

    @property
    def denominator(self):
        """Monic common denominator, a polynomial in q and z."""
        d = _lcm(self.a.denom, self.b.denom)
        return _to3(d.monic() if d else d)

    @property
    def numerator(self):
        """Numerator over `denominator`, a polynomial in q, z, w (degree <= 1 in w)."""
        d = _lcm(self.a.denom, self.b.denom).monic()
        na = self.a.numer * d.exquo(self.a.denom)
        nb = self.b.numer * d.exquo(self.b.denom)
        return _to3(na) + _to3(nb) * _PW

    # arithmetic
    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return RationalFn(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.a, -self.b)

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return RationalFn(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if not b1 and not b2:
            return RationalFn(a1 * a2)
        return RationalFn(a1 * a2 + b1 * b2 * _Z, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if not self.b:
            return RationalFn(1 / self.a)
        norm = self.a * self.a - self.b * self.b * _Z
        return RationalFn(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _lift(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = RationalFn(FIELD(1)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((_canon(self.a), _canon(self.b)))
        return self._hash

    def __repr__(self):
        if not self.b:
            return f"RationalFn({self.a.as_expr()})"
        return f"RationalFn({self.a.as_expr()} + ({self.b.as_expr()})*w)"

    # calculus and substitution
    def diff_z(self):
        return RationalFn(self.a.diff(_Z), self.b.diff(_Z))

    def subs_z(self, value):
        try:
            return RationalFn(self.a.subs(_Z, value), self.b.subs(_Z, value))
        except ZeroDivisionError as exc:
            raise PoleError(f"pole at z={value}") from exc


def _canon(f):
    d = f.denom
    lc = d.LC
    return (tuple(sorted((f.numer * (1 / lc)).terms())), tuple(sorted((d * (1 / lc)).terms())))


def _lcm(p, r):
    return p.lcm(r)


def _to3(poly):
    out = POLY3(0)
    for (i, k), c in poly.terms():
        out += POLY3({(i, k, 0): c})
    return out


def q_int(a: int) -> RationalFn:
    """The symmetric q-integer (q^a - q^-a)/(q - q^-1)."""
    if a == 0:
        return RationalFn()
    sign = 1 if a > 0 else -1
    a = abs(a)
    acc = FIELD(0)
    for k in range(a):
        acc += _Q ** (a - 1 - 2 * k) if a - 1 - 2 * k >= 0 else 1 / _Q ** (2 * k + 1 - a)
    return RationalFn(acc * sign)


def q_factorial(a: int) -> RationalFn:
    if a < 0:
        raise ValueError("negative factorial")
    out = RationalFn.const(1)
    for k in range(2, a + 1):
        out = out * q_int(k)
    return out


def q_binom(a: int, b: int) -> RationalFn:
    """Symmetric q-binomial coefficient [a choose b]_q."""
    if b < 0 or b > a:
        raise ValueError(f"q_binom needs 0 <= b <= a, got ({a}, {b})")
    return q_factorial(a) / (q_factorial(b) * q_factorial(a - b))


def gauss_binom_q2(a: int, b: int) -> RationalFn:
    """Gaussian binomial in the variable q^2; equals q^{b(a-b)} [a choose b]_q."""
    return q_binom(a, b) * RationalFn.q() ** (b * (a - b))


# evaluation -------------------------------------------------------------

def _poly_float(poly, q0, z0):
    total = 0.0
    for (i, k), c in poly.terms():
        total += float(c) * q0 ** i * z0 ** k
    return total


def _poly_exact(poly, q0, z0):
    total = Fraction(0)
    for (i, k), c in poly.terms():
        total += Fraction(int(c.numerator), int(c.denominator)) * q0 ** i * z0 ** k
    return total


def _frac_float(f, q0, z0):
    d = _poly_float(f.denom, q0, z0)
    if d == 0.0:
        raise PoleError(f"pole at q={q0}, z={z0}")
    return _poly_float(f.numer, q0, z0) / d


def eval_numeric(f: RationalFn, q0, z0=1.0, w0=None) -> float:
    """Double precision value at (q0, z0); w defaults to the positive root of z0."""
    q0, z0 = float(q0), float(z0)
    val = _frac_float(f.a, q0, z0)
    if f.b:
        if w0 is None:
            if z0 < 0:
                raise ValueError("w needs an explicit branch for negative z")
            w0 = math.sqrt(z0)
        val += float(w0) * _frac_float(f.b, q0, z0)
    return val


def eval_exact(f: RationalFn, q0, z0=1) -> Fraction:
    """Exact rational value; only defined when f carries no w component."""
    if f.b:
        raise ValueError("exact evaluation needs a w-free function")
    q0, z0 = Fraction(q0), Fraction(z0)
    d = _poly_exact(f.a.denom, q0, z0)
    if d == 0:
        raise PoleError(f"pole at q={q0}, z={z0}")
    return _poly_exact(f.a.numer, q0, z0) / d


def q0_limit(f: RationalFn) -> Fraction:
    """Limit q -> 0 of a z-free, w-free function; raises if it diverges."""
    if f.b or f.has_z:
        raise ValueError("q0_limit expects a function of q alone")
    if not f.a:
        return Fraction(0)
    num, den = f.a.numer, f.a.denom
    on, cn = _low_term(num)
    od, cd = _low_term(den)
    if on < od:
        raise PoleError("diverges as q -> 0")
    if on > od:
        return Fraction(0)
    return Fraction(int(cn.numerator), int(cn.denominator)) / Fraction(int(cd.numerator), int(cd.denominator))


def _low_term(poly):
    low = min(m[0] for m in poly.monoms())
    coeff = sum((c for m, c in poly.terms() if m[0] == low), QQ(0))
    return low, coeff


# matrices ---------------------------------------------------------------

class RFMatrix:
    """Sparse matrix over RationalFn; zero entries are not stored."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows, self.cols = rows, cols
        self.data = {}
        if data:
            for key, val in data.items():
                val = _lift(val)
                if val:
                    self.data[key] = val

    @classmethod
    def identity(cls, size: int):
        one = RationalFn.const(1)
        return cls(size, size, {(i, i): one for i in range(size)})

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def from_rows(cls, rows):
        data = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}
        return cls(len(rows), len(rows[0]) if rows else 0, data)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        return self.data.get(key, RationalFn())

    def to_rows(self):
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def __add__(self, other):
        self._same_shape(other)
        out = dict(self.data)
        for key, val in other.data.items():
            out[key] = out[key] + val if key in out else val
        return RFMatrix(self.rows, self.cols, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = _lift(c)
        return RFMatrix(self.rows, self.cols, {k: v * c for k, v in self.data.items()})

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch {self.shape} @ {other.shape}")
        by_row = {}
        for (k, j), v in other.data.items():
            by_row.setdefault(k, []).append((j, v))
        acc = {}
        for (i, k), u in self.data.items():
            for j, v in by_row.get(k, ()):
                key = (i, j)
                acc[key] = acc[key] + u * v if key in acc else u * v
        return RFMatrix(self.rows, other.cols, acc)

    def kron(self, other):
        out = {}
        for (i, j), u in self.data.items():
            for (k, l), v in other.data.items():
                out[(i * other.rows + k, j * other.cols + l)] = u * v
        return RFMatrix(self.rows * other.rows, self.cols * other.cols, out)

    def map(self, fn):
        return RFMatrix(self.rows, self.cols, {k: fn(v) for k, v in self.data.items()})

    def is_zero(self):
        return not self.data

    def __eq__(self, other):
        if not isinstance(other, RFMatrix) or self.shape != other.shape:
            return False
        return self.data == other.data

    def __repr__(self):
        return f"RFMatrix({self.rows}x{self.cols}, nnz={len(self.data)})"

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")


def series_at_one(m: RFMatrix):
    """Value and first zeta-derivative at zeta = 1, with z = zeta^2 and w = zeta.

    For f = a(z) + b(z) w:  f(1) = a(1) + b(1),  f'(1) = 2 a_z(1) + b(1) + 2 b_z(1).
    """
    m0, m1 = {}, {}
    for key, f in m.data.items():
        a1 = RationalFn(f.a).subs_z(1)
        b1 = RationalFn(f.b).subs_z(1)
        da = RationalFn(f.a).diff_z().subs_z(1)
        db = RationalFn(f.b).diff_z().subs_z(1)
        m0[key] = a1 + b1
        m1[key] = da * 2 + b1 + db * 2
    return RFMatrix(m.rows, m.cols, m0), RFMatrix(m.rows, m.cols, m1)


def solve(a: RFMatrix, rhs: RFMatrix) -> RFMatrix:
    """Solve a x = rhs for square nonsingular a by Gauss-Jordan elimination.

    Pivots are picked by the smallest total degree of numerator plus denominator
    to keep intermediate expressions small.
    """
    n = a.rows
    if a.cols != n or rhs.rows != n:
        raise ValueError("solve needs a square system")
    rows = [dict((j, a[i, j]) for j in range(n) if a[i, j]) for i in range(n)]
    rhs_rows = [dict((j, rhs[i, j]) for j in range(rhs.cols) if rhs[i, j]) for i in range(n)]
    used = [False] * n
    pivot_of = {}
    for col in range(n):
        cands = [i for i in range(n) if not used[i] and col in rows[i]]
        if not cands:
            raise ZeroDivisionError("singular system")
        piv = min(cands, key=lambda i: _weight(rows[i][col]))
        used[piv] = True
        pivot_of[col] = piv
        inv = rows[piv][col].inverse()
        rows[piv] = {j: v * inv for j, v in rows[piv].items()}
        rhs_rows[piv] = {j: v * inv for j, v in rhs_rows[piv].items()}
        for i in range(n):
            if i == piv or col not in rows[i]:
                continue
            factor = rows[i][col]
            _axpy(rows[i], rows[piv], factor)
            _axpy(rhs_rows[i], rhs_rows[piv], factor)
    data = {}
    for col, piv in pivot_of.items():
        for j, v in rhs_rows[piv].items():
            data[(col, j)] = v
    return RFMatrix(n, rhs.cols, data)


def _axpy(target, source, factor):
    for j, v in source.items():
        val = target.get(j)
        new = val - factor * v if val is not None else -(factor * v)
        if new:
            target[j] = new
        else:
            target.pop(j, None)


def _weight(f: RationalFn):
    total = 0
    for part in (f.a, f.b):
        if part:
            total += sum(sum(m) for m in part.numer.monoms()) + sum(sum(m) for m in part.denom.monoms())
    return total


def nullspace(rows_in, ncols):
    """Reduced row echelon nullspace of a sparse system given as list of {col: RationalFn}.

    Returns (pivot_cols, basis) where basis is a list of {col: RationalFn} vectors.
    """
    rows = [dict(r) for r in rows_in if r]
    pivots = []
    reduced = []
    for row in rows:
        for prow, pcol in zip(reduced, pivots):
            if pcol in row:
                _axpy(row, prow, row[pcol])
        if not row:
            continue
        col = min(row, key=lambda c: (_weight(row[c]), c))
        inv = row[col].inverse()
        row = {j: v * inv for j, v in row.items()}
        for prow in reduced:
            if col in prow:
                _axpy(prow, row, prow[col])
        reduced.append(row)
        pivots.append(col)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        vec = {fcol: RationalFn.const(1)}
        for prow, pcol in zip(reduced, pivots):
            if fcol in prow:
                vec[pcol] = -prow[fcol]
        basis.append(vec)
    return pivots, basis
