"""Alternating-level path spaces and their q = 0 crystal structure.

Positions are integers s; the tensor order puts large s on the left:
    ... (x) p(3) (x) p(2) (x) p(1)
Odd positions carry level-n letters, even positions level-m letters.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .rmatrix import h1, h2, h3

PATH_SCHEMA = "altspin.path/1"


class WindowError(RuntimeError):
    """An enumeration reached the edge of its finite window."""


@dataclass(frozen=True)
class Letter:
    level: int
    value: int

    def __post_init__(self):
        if self.level < 0 or not 0 <= self.value <= self.level:
            raise ValueError(f"letter [{self.value}] outside level {self.level}")

    def __repr__(self):
        return f"[{self.value}]^({self.level})"


@dataclass(frozen=True)
class GroundLabel:
    m: int
    n: int
    a: int
    b: int

    def __post_init__(self):
        _check_model(self.m, self.n)
        if not (0 <= self.a <= self.m - self.n and 0 <= self.b <= self.n):
            raise ValueError(f"label ({self.a},{self.b}) out of range for (m,n)=({self.m},{self.n})")

    @staticmethod
    def all(m: int, n: int):
        return [GroundLabel(m, n, a, b) for a in range(m - n + 1) for b in range(n + 1)]

    def conjugate(self) -> "GroundLabel":
        return GroundLabel(self.m, self.n, self.m - self.n - self.a, self.n - self.b)


@dataclass(frozen=True)
class AffineWeight:
    l0: int
    l1: int
    grade: int

    @property
    def level(self):
        return self.l0 + self.l1

    def __sub__(self, other):
        return AffineWeight(self.l0 - other.l0, self.l1 - other.l1, self.grade - other.grade)


# simple roots in (Lambda_0, Lambda_1, principal grade) coordinates
ALPHA = {0: AffineWeight(2, -2, 1), 1: AffineWeight(-2, 2, 1)}


def _check_model(m, n):
    if not (isinstance(m, int) and isinstance(n, int)) or not m > n >= 1:
        raise ValueError(f"need m > n >= 1, got (m,n)=({m},{n})")


def ground_value(s: int, m: int, n: int, a: int, b: int) -> int:
    if s % 2:
        return n - b
    return a + b if s % 4 == 0 else m - n - a + b


def ground_weight_index(s: int, m: int, n: int, a: int, b: int) -> int:
    """a(s) of the periodic weight sequence attached to the ground path."""
    return (m - a - b, a + b, n + a - b, m - n - a + b)[s % 4]


# ----------------------------------------------------------------------
# path types

class _Path:
    """Finite deviation from a reference configuration; immutable."""

    __slots__ = ("_ov", "_key")
    lo = None

    def _init_overrides(self, overrides):
        ov = {}
        for s, v in dict(overrides).items():
            s, v = int(s), int(v)
            if self.lo is not None and s < self.lo:
                raise ValueError(f"position {s} below {self.lo}")
            if not 0 <= v <= self.level(s):
                raise ValueError(f"value {v} at s={s} outside level {self.level(s)}")
            if v != self.base(s):
                ov[s] = v
        object.__setattr__(self, "_ov", ov)
        object.__setattr__(self, "_key", (self._label(), tuple(sorted(ov.items()))))

    def __setattr__(self, *_):
        raise AttributeError("paths are immutable")

    def __eq__(self, other):
        return type(self) is type(other) and self._key == other._key

    def __hash__(self):
        return hash((type(self).__name__, self._key))

    def value(self, s: int) -> int:
        return self._ov.get(s, self.base(s))

    def letter(self, s: int) -> Letter:
        return Letter(self.level(s), self.value(s))

    @property
    def overrides(self) -> dict:
        return dict(self._ov)

    def support(self):
        return sorted(self._ov)

    def replace(self, changes: dict):
        ov = dict(self._ov)
        ov.update(changes)
        return self._rebuild(ov)

    def is_ground(self):
        return not self._ov

    # tails: ground blocks of four positions starting at s = 1 mod 4
    def left_base(self, s):
        return self.base(s)

    def right_base(self, s):
        return self.base(s)


class SemiPath(_Path):
    """Element of P_{a,b}: positions s >= 1, ground (a, b) for large s."""

    __slots__ = ("m", "n", "a", "b")
    lo = 1

    def __init__(self, m: int, n: int, a: int, b: int, overrides=None):
        GroundLabel(m, n, a, b)
        for k, v in (("m", m), ("n", n), ("a", a), ("b", b)):
            object.__setattr__(self, k, v)
        self._init_overrides(overrides or {})

    @classmethod
    def ground(cls, label: GroundLabel):
        return cls(label.m, label.n, label.a, label.b)

    @property
    def label(self):
        return GroundLabel(self.m, self.n, self.a, self.b)

    def _label(self):
        return (self.m, self.n, self.a, self.b)

    def _rebuild(self, ov):
        return SemiPath(self.m, self.n, self.a, self.b, ov)

    def level(self, s):
        return self.n if s % 2 else self.m

    def base(self, s):
        return ground_value(s, self.m, self.n, self.a, self.b)

    def __repr__(self):
        return f"SemiPath(m={self.m}, n={self.n}, a={self.a}, b={self.b}, overrides={self._ov})"


class FullPath(_Path):
    """Bi-infinite path: ground (a, b) for s >> 0 and (ar, br) for s << 0.

    The reference configuration is ground (a, b) on s >= 1 and ground (ar, br)
    on s <= 0; overrides are stored against it.
    """

    __slots__ = ("m", "n", "a", "b", "ar", "br")

    def __init__(self, m, n, a, b, ar, br, overrides=None):
        GroundLabel(m, n, a, b)
        GroundLabel(m, n, ar, br)
        for k, v in (("m", m), ("n", n), ("a", a), ("b", b), ("ar", ar), ("br", br)):
            object.__setattr__(self, k, v)
        self._init_overrides(overrides or {})

    def _label(self):
        return (self.m, self.n, self.a, self.b, self.ar, self.br)

    def _rebuild(self, ov):
        return FullPath(self.m, self.n, self.a, self.b, self.ar, self.br, ov)

    @classmethod
    def from_values(cls, m, n, left, right, values: dict):
        return cls(m, n, left[0], left[1], right[0], right[1], values)

    def level(self, s):
        return self.n if s % 2 else self.m

    def base(self, s):
        if s >= 1:
            return ground_value(s, self.m, self.n, self.a, self.b)
        return ground_value(s, self.m, self.n, self.ar, self.br)

    def left_base(self, s):
        return ground_value(s, self.m, self.n, self.a, self.b)

    def right_base(self, s):
        return ground_value(s, self.m, self.n, self.ar, self.br)

    def __repr__(self):
        return (f"FullPath(m={self.m}, n={self.n}, left=({self.a},{self.b}), "
                f"right=({self.ar},{self.br}), overrides={self._ov})")


class LambdaPath(_Path):
    """Single-level path realising B(lambda), lambda = j Lambda_1 + (level - j) Lambda_0.

    Ground letters are [level - j] at odd s and [j] at even s.
    """

    __slots__ = ("lvl", "j")
    lo = 1

    def __init__(self, lvl: int, j: int, overrides=None):
        if not 0 <= j <= lvl:
            raise ValueError(f"label {j} outside level {lvl}")
        object.__setattr__(self, "lvl", lvl)
        object.__setattr__(self, "j", j)
        self._init_overrides(overrides or {})

    def _label(self):
        return (self.lvl, self.j)

    def _rebuild(self, ov):
        return LambdaPath(self.lvl, self.j, ov)

    def level(self, s):
        return self.lvl

    def base(self, s):
        return self.lvl - self.j if s % 2 else self.j

    def __repr__(self):
        return f"LambdaPath(level={self.lvl}, j={self.j}, overrides={self._ov})"


# ----------------------------------------------------------------------
# signature rule

def _ones(i, level, v):
    return v if i == 1 else level - v


def reduce_word(blocks):
    """Cancel 01 pairs in a word given as [(tag, ones, zeros), ...] left to right.

    Returns (unmatched ones, unmatched zeros) as lists of [tag, count], left to right.
    """
    ones, zeros = [], []
    for tag, x, y in blocks:
        while x and zeros:
            take = min(x, zeros[-1][1])
            x -= take
            zeros[-1][1] -= take
            if not zeros[-1][1]:
                zeros.pop()
        if x:
            ones.append([tag, x])
        if y:
            zeros.append([tag, y])
    return ones, zeros


def _tail_count(path, i, start, base):
    """c with the four ground letters at start+3 .. start reducing to 1^c 0^c."""
    blocks = []
    for s in range(start + 3, start - 1, -1):
        lv = path.level(s)
        x = _ones(i, lv, base(s))
        blocks.append((s, x, lv - x))
    ones, zeros = reduce_word(blocks)
    c1, c0 = sum(c for _, c in ones), sum(c for _, c in zeros)
    if c1 != c0:
        raise AssertionError("ground block does not reduce to 1^c 0^c")
    return c0


def _window(path, margin=4):
    sup = path.support()
    top = max(sup) if sup else 0
    hi = top + margin
    hi += (-hi) % 4
    if path.lo is not None:
        return path.lo, hi
    bottom = min(sup) if sup else 1
    lo = bottom - margin
    lo -= (lo - 1) % 4
    return lo, hi


def signature(path, i: int, lo=None, hi=None):
    """Reduced signature (ones, zeros) over the window plus pre-reduced tails.

    Tags are positions, or "L"/"R" for the left and right tail residues.
    """
    if lo is None:
        lo, hi = _window(path)
    blocks = [("L", 0, _tail_count(path, i, hi + 1, path.left_base))]
    for s in range(hi, lo - 1, -1):
        lv = path.level(s)
        x = _ones(i, lv, path.value(s))
        blocks.append((s, x, lv - x))
    if path.lo is None:
        blocks.append(("R", _tail_count(path, i, lo - 4, path.right_base), 0))
    return reduce_word(blocks)


def _act(path, i: int, raising: bool):
    lo, hi = _window(path)
    while True:
        ones, zeros = signature(path, i, lo, hi)
        if raising:
            if not ones:
                return None
            tag = ones[-1][0]
            if tag == "R":
                lo -= 4
                continue
        else:
            if not zeros:
                return None
            tag = zeros[0][0]
            if tag == "L":
                hi += 4
                continue
        up = (i == 1) != raising
        return path.replace({tag: path.value(tag) + (1 if up else -1)})


def signature_f(i: int, path):
    """Kashiwara f_i by the signature rule; None when the result vanishes."""
    if i not in (0, 1):
        raise ValueError("i must be 0 or 1")
    return _act(path, i, raising=False)


def signature_e(i: int, path):
    """Kashiwara e_i by the signature rule; None when the result vanishes."""
    if i not in (0, 1):
        raise ValueError("i must be 0 or 1")
    return _act(path, i, raising=True)


def tensor_f(i: int, letters):
    """Finite tensor product rule on [Letter, ...] written left to right."""
    blocks = [(k, _ones(i, x.level, x.value), x.level - _ones(i, x.level, x.value))
              for k, x in enumerate(letters)]
    _, zeros = reduce_word(blocks)
    if not zeros:
        return None
    k = zeros[0][0]
    out = list(letters)
    x = out[k]
    out[k] = Letter(x.level, x.value + (1 if i == 1 else -1))
    return tuple(out)


def tensor_e(i: int, letters):
    blocks = [(k, _ones(i, x.level, x.value), x.level - _ones(i, x.level, x.value))
              for k, x in enumerate(letters)]
    ones, _ = reduce_word(blocks)
    if not ones:
        return None
    k = ones[-1][0]
    out = list(letters)
    x = out[k]
    out[k] = Letter(x.level, x.value + (-1 if i == 1 else 1))
    return tuple(out)


# ----------------------------------------------------------------------
# energy and weight

def _energy_terms(values, m, n, smax):
    total = 0
    for s in range(1, smax + 1):
        v = values
        total += s * (h1(v(2 * s + 1), v(2 * s), v(2 * s - 1), m, n)
                      + h2(v(2 * s + 2), v(2 * s + 1), v(2 * s), m, n)
                      + 2 * h3(v(2 * s + 1), v(2 * s), m, n))
    return total


def crystal_energy(path: SemiPath, halo: int = 2) -> int:
    """Ground-renormalised, s-weighted sum of the local energies h1, h2, 2 h3."""
    sup = path.support()
    if not sup:
        return 0
    smax = (max(sup) + halo) // 2 + 1
    m, n = path.m, path.n
    return -(_energy_terms(path.value, m, n, smax) - _energy_terms(path.base, m, n, smax))


def weight(path: SemiPath) -> AffineWeight:
    """Weight of a path of P_{a,b}: classical part from lambda(1), grade -h(p)."""
    shift = sum(path.value(s) - path.base(s) for s in path.support())
    l1 = path.a + path.b - 2 * shift
    return AffineWeight(path.m - l1, l1, -crystal_energy(path))


# ----------------------------------------------------------------------
# admissibility and RSOS

def admissible_sequence(path: SemiPath):
    """(ok, a) where a[s] (s = 1 .. top+1) is the weight index sequence, computed top-down."""
    m, n, a, b = path.m, path.n, path.a, path.b
    sup = path.support()
    top = (max(sup) if sup else 0) + 4
    seq = {top + 1: ground_weight_index(top + 1, m, n, a, b)}
    ok = True
    for s in range(top, 0, -1):
        p = path.value(s)
        lv = path.level(s)
        above = seq[s + 1]
        if not (above >= p and m - above >= lv - p):
            ok = False
        seq[s] = above + lv - 2 * p
    return ok, seq


def is_admissible(path: SemiPath) -> bool:
    return admissible_sequence(path)[0]


def lambda_one(path: SemiPath) -> int:
    """Index of lambda(1) from the closed-form series definition."""
    shift = sum(path.value(s) - path.base(s) for s in path.support())
    return path.a + path.b - 2 * shift


@dataclass(frozen=True)
class RSOSPath:
    """r(1), r(2), ...; equal to the ground sequence beyond the stored prefix."""

    m: int
    n: int
    a: int
    b: int
    values: tuple

    def __post_init__(self):
        vals = list(self.values)
        while vals and vals[-1] == self.ground(len(vals)):
            vals.pop()
        object.__setattr__(self, "values", tuple(vals))

    def ground(self, s):
        return self.a + self.b if s % 2 else self.a + self.n - self.b

    def __call__(self, s):
        return self.values[s - 1] if s <= len(self.values) else self.ground(s)

    def is_valid(self):
        m, n = self.m, self.n
        for s in range(1, len(self.values) + 2):
            r, r2 = self(s), self(s + 1)
            if not 0 <= r <= m or (r2 - r) % 2 != (n % 2) or abs(r2 - r) > n:
                return False
            if not n <= r + r2 <= 2 * m - n:
                return False
        return True


def to_rsos(path: SemiPath) -> RSOSPath:
    ok, seq = admissible_sequence(path)
    if not ok:
        raise ValueError("path is not admissible")
    top = max(seq) - 1
    vals = []
    s = 1
    while 2 * s - 1 <= top + 1:
        x = seq[2 * s - 1]
        vals.append(x if s % 2 else path.m - x)
        s += 1
    return RSOSPath(path.m, path.n, path.a, path.b, tuple(vals))


def from_rsos(r: RSOSPath) -> SemiPath:
    m, n = r.m, r.n
    k = len(r.values) + 2
    aseq = {}
    for s in range(1, k + 2):
        x = r(s)
        aseq[2 * s - 1] = x if s % 2 else m - x
    for s in range(1, k + 1):
        aseq[2 * s] = m - aseq[2 * s + 1]
    ov = {}
    for s in range(1, 2 * k + 1):
        lv = n if s % 2 else m
        diff = aseq[s + 1] + lv - aseq[s]
        if diff % 2 or not 0 <= diff // 2 <= lv:
            raise ValueError("sequence violates the RSOS restrictions")
        ov[s] = diff // 2
    return SemiPath(m, n, r.a, r.b, ov)


def rsos_energy(r: RSOSPath) -> int:
    twice = sum(s * abs(r(s + 2) - r(s)) for s in range(1, len(r.values) + 1))
    if twice % 2:
        raise ArithmeticError("odd doubled energy")
    return twice // 2


def conjugate(path):
    """C: p(s) -> level - p(s); swaps (a, b) with (m-n-a, n-b)."""
    m, n = path.m, path.n
    if isinstance(path, SemiPath):
        ov = {s: path.level(s) - v for s, v in path.overrides.items()}
        return SemiPath(m, n, m - n - path.a, n - path.b, ov)
    if isinstance(path, FullPath):
        ov = {s: path.level(s) - v for s, v in path.overrides.items()}
        return FullPath(m, n, m - n - path.a, n - path.b, m - n - path.ar, n - path.br, ov)
    raise TypeError("conjugation is defined on mixed-level paths")


# ----------------------------------------------------------------------
# enumeration and characters

def enumerate_highest(m: int, n: int, a: int, b: int, max_energy: int):
    """All admissible paths of P_{a,b} with h(p) <= max_energy.

    Searches the window [1, 2*max_energy + 4]; a hit touching the last four
    positions of that window raises WindowError.
    """
    _check_model(m, n)
    top = 2 * max_energy + 4
    top += (-top) % 4
    found = []
    values = {}

    def rec(s, above):
        if s == 0:
            path = SemiPath(m, n, a, b, values)
            if crystal_energy(path) <= max_energy:
                found.append(path)
            return
        lv = n if s % 2 else m
        for p in range(lv + 1):
            if above >= p and m - above >= lv - p:
                values[s] = p
                rec(s - 1, above + lv - 2 * p)
        values.pop(s, None)

    rec(top, ground_weight_index(top + 1, m, n, a, b))
    for path in found:
        sup = path.support()
        if sup and max(sup) > top - 4:
            raise WindowError(f"highest path reaches the window edge at s={max(sup)}")
    return found


def character(m: int, n: int, a: int, b: int, max_energy: int):
    """Counts of highest paths by energy: [c_0, c_1, ..., c_maxE]."""
    counts = [0] * (max_energy + 1)
    for path in enumerate_highest(m, n, a, b, max_energy):
        counts[crystal_energy(path)] += 1
    return counts


def enumerate_rsos(m: int, n: int, a: int, b: int, max_energy: int):
    """All RSOS paths of R_{a,b} with energy <= max_energy."""
    _check_model(m, n)
    k = max_energy + 2
    ground = RSOSPath(m, n, a, b, ())
    found = []
    vals = [0] * (k + 3)
    for s in range(k + 1, k + 3):
        vals[s] = ground(s)

    def rec(s, energy):
        if s == 0:
            found.append(RSOSPath(m, n, a, b, tuple(vals[1:k + 1])))
            return
        nxt = vals[s + 1]
        for r in range(nxt - n, nxt + n + 1, 2):
            if not 0 <= r <= m or not n <= r + nxt <= 2 * m - n:
                continue
            e = energy + s * abs(vals[s + 2] - r)
            if e <= 2 * max_energy:
                vals[s] = r
                rec(s - 1, e)

    rec(k, 0)
    return found


def rsos_character(m, n, a, b, max_energy):
    counts = [0] * (max_energy + 1)
    for r in enumerate_rsos(m, n, a, b, max_energy):
        counts[rsos_energy(r)] += 1
    return counts


# ----------------------------------------------------------------------
# JSON

def path_to_json(path) -> dict:
    if isinstance(path, SemiPath):
        out = {"schema": PATH_SCHEMA, "m": path.m, "n": path.n, "boundary": [path.a, path.b]}
    elif isinstance(path, FullPath):
        out = {"schema": PATH_SCHEMA, "m": path.m, "n": path.n, "boundary": [path.a, path.b],
               "boundary_right": [path.ar, path.br]}
    else:
        raise TypeError("only mixed-level paths serialise")
    out["overrides"] = {str(s): v for s, v in sorted(path.overrides.items())}
    return out


def path_from_json(obj) -> _Path:
    if isinstance(obj, str):
        obj = json.loads(obj)
    schema = obj.get("schema", PATH_SCHEMA)
    if schema != PATH_SCHEMA:
        raise ValueError(f"unsupported schema {schema!r}")
    try:
        m, n = int(obj["m"]), int(obj["n"])
        a, b = (int(x) for x in obj["boundary"])
        ov = {int(s): int(v) for s, v in obj.get("overrides", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed path JSON: {exc}") from None
    if "boundary_right" in obj:
        ar, br = (int(x) for x in obj["boundary_right"])
        return FullPath(m, n, a, b, ar, br, ov)
    return SemiPath(m, n, a, b, ov)
