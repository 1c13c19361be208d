"""Domain walls of bi-infinite paths and their crystal structure.

A WallSequence lists domains left to right, (a_{N+1}, b_{N+1}) ... (a_1, b_1),
with wall positions s_N > ... > s_1.  Domain (a_i, b_i) covers s_i >= s > s_{i-1}.
Every Delta below means (left domain) - (right domain).
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .paths import FullPath, ground_value, reduce_word

WALL_SCHEMA = "altspin.walls/1"


class WallError(ValueError):
    """Malformed or out-of-range wall data."""


# ----------------------------------------------------------------------
# wall sequences

def _in_range(m, n, dom):
    a, b = dom
    return 0 <= a <= m - n and 0 <= b <= n


def allowed_position(m, n, left, right, s) -> bool:
    """Membership of s in the position set attached to the wall left|right."""
    if s % 2 == 0:
        return True
    (a2, b2), (a1, b1) = left, right
    if a2 != a1 or a1 not in (0, m - n):
        return False
    up = b2 > b1
    if a1 == 0:
        return s % 4 == (1 if up else 3)
    return s % 4 == (3 if up else 1)


@dataclass(frozen=True)
class WallSequence:
    m: int
    n: int
    domains: tuple
    positions: tuple

    def __post_init__(self):
        m, n = self.m, self.n
        doms = tuple(tuple(int(x) for x in d) for d in self.domains)
        pos = tuple(int(s) for s in self.positions)
        object.__setattr__(self, "domains", doms)
        object.__setattr__(self, "positions", pos)
        if len(doms) != len(pos) + 1:
            raise WallError("need one more domain than positions")
        for d in doms:
            if not _in_range(m, n, d):
                raise WallError(f"domain {d} out of range")
        for k in range(len(pos)):
            if k and pos[k - 1] <= pos[k]:
                raise WallError("positions must strictly decrease")
            if doms[k] == doms[k + 1]:
                raise WallError("adjacent domains must differ")
            if not allowed_position(m, n, doms[k], doms[k + 1], pos[k]):
                raise WallError(f"position {pos[k]} not allowed for {doms[k]}{doms[k + 1]}")

    @property
    def left(self):
        return self.domains[0]

    @property
    def right(self):
        return self.domains[-1]

    def domain_at(self, s: int):
        for k, p in enumerate(self.positions):
            if s > p:
                return self.domains[k]
        return self.domains[-1]

    def walls(self):
        """(left, right, s) for each wall, left to right."""
        return [(self.domains[k], self.domains[k + 1], s) for k, s in enumerate(self.positions)]


def _from_profile(m, n, profile: dict, left, right) -> WallSequence:
    """Rebuild a wall sequence from explicit domains on a finite window."""
    if not profile:
        if left != right:
            raise WallError("boundary domains differ with an empty window")
        return WallSequence(m, n, (left,), ())
    lo, hi = min(profile), max(profile)
    doms, pos = [left], []
    prev = left
    for s in range(hi, lo - 1, -1):
        cur = profile[s]
        if cur != prev:
            pos.append(s)
            doms.append(cur)
            prev = cur
    if prev != right:
        pos.append(lo - 1)
        doms.append(right)
    return WallSequence(m, n, tuple(doms), tuple(pos))


def _profile(d: WallSequence, lo: int, hi: int) -> dict:
    return {s: d.domain_at(s) for s in range(lo, hi + 1)}


def _span(d: WallSequence, margin=4):
    if not d.positions:
        return -margin, margin
    return min(d.positions) - margin, max(d.positions) + margin


# ----------------------------------------------------------------------
# M1 and M2

def _pair_domains(m, n, s, x, y):
    """Domains of positions s+1 and s (s odd) from x = p(s+1), y = p(s)."""
    total = x + y
    first = s % 4 == 1
    if n <= total <= m:
        b = n - y
        a = m - y - x if first else y + x - n
        return (a, b), (a, b)
    if total > m:
        a = 0 if first else m - n
        return (a, x - m + n), (a, n - y)
    a = m - n if first else 0
    return (a, x), (a, n - y)


def path_to_walls(p: FullPath) -> WallSequence:
    """M1: rules (1)-(4) on every odd position."""
    m, n = p.m, p.n
    sup = p.support()
    lo = (min(sup) if sup else 1) - 4
    hi = (max(sup) if sup else 0) + 4
    lo -= (lo - 1) % 2
    profile = {}
    for s in range(lo, hi + 1, 2):
        top, bottom = _pair_domains(m, n, s, p.value(s + 1), p.value(s))
        profile[s + 1], profile[s] = top, bottom
    return _from_profile(m, n, profile, (p.a, p.b), (p.ar, p.br))


def walls_to_path(d: WallSequence) -> FullPath:
    """M2: p(s) is the ground value of the domain covering s."""
    m, n = d.m, d.n
    lo, hi = _span(d)
    (a, b), (ar, br) = d.left, d.right
    values = {}
    for s in range(lo, hi + 1):
        da, db = d.domain_at(s)
        values[s] = ground_value(s, m, n, da, db)
    return FullPath(m, n, a, b, ar, br, values)


# ----------------------------------------------------------------------
# elementary walls

@dataclass(frozen=True)
class ElementaryWall:
    """kind: "bar" (|), "B" or "T" (brackets), "dot" (spin-0).

    a: a-sign of a bar or dot; b: b-sign of a bracket or dot; j: subscript of a
    bar or bracket (None for a dot); s: position.
    """

    kind: str
    s: int
    a: int = 0
    b: int = 0
    j: int | None = None

    @property
    def spin_half(self):
        return self.kind != "dot"

    @property
    def delta(self):
        if self.kind == "bar":
            return (self.a, 0)
        if self.kind == "dot":
            return (self.a, self.b)
        return (0, self.b)

    def __repr__(self):
        sg = {1: "+", -1: "-"}
        if self.kind == "bar":
            return f"|{self.j}{sg[self.a]}@{self.s}"
        if self.kind == "dot":
            return f"*{sg[self.a]}{sg[self.b]}@{self.s}"
        return f"{self.kind}{self.j}{sg[self.b]}@{self.s}"


def _bar_j(a, s):
    # a (-1)^j = (-1)^(s/2)
    return 0 if a == (-1) ** ((s // 2) % 2) else 1


def _bracket_j(kind, s):
    if s % 2 == 0:
        half_sign = 1 if kind == "B" else -1
        return _bar_j(half_sign, s)
    half_sign = -1 if kind == "B" else 1
    mode = -(s - 1) // 2
    return 0 if half_sign == (-1) ** (mode % 2) else 1


def bar(a, s):
    return ElementaryWall("bar", s, a=a, j=_bar_j(a, s))


def dot(a, b, s):
    return ElementaryWall("dot", s, a=a, b=b)


def bracket(kind, b, s):
    return ElementaryWall(kind, s, b=b, j=_bracket_j(kind, s))


def _bullets(b1, b2, s, even0):
    if even0:
        return [dot(-1, 1, s)] * (b2 - b1) if b2 >= b1 else [dot(1, -1, s)] * (b1 - b2)
    return [dot(-1, -1, s)] * (b1 - b2) if b2 <= b1 else [dot(1, 1, s)] * (b2 - b1)


def decompose_wall(m, n, left, right, s):
    """Ordered elementary decomposition of one composite wall."""
    (a2, b2), (a1, b1) = left, right
    k = m - n
    r = s % 4
    out = None
    if r == 0:
        if b2 - b1 > a1:
            out = [bar(1, s)] * a2 + [bracket("B", 1, s)] * (b2 - b1 - a1) + [dot(-1, 1, s)] * a1
        elif a2 + b2 >= a1 + b1 >= b2:
            out = [bar(1, s)] * (a2 + b2 - a1 - b1) + _bullets(b1, b2, s, True)
        elif k + b2 >= a1 + b1 >= a2 + b2:
            out = [bar(-1, s)] * (a1 + b1 - a2 - b2) + _bullets(b1, b2, s, True)
        elif b1 - b2 > k - a1:
            out = ([bar(-1, s)] * (k - a2) + [bracket("T", -1, s)] * (a1 + b1 - b2 - k)
                   + [dot(1, -1, s)] * (k - a1))
    elif r == 2:
        if b1 - b2 > a1:
            out = [bar(1, s)] * a2 + [bracket("B", -1, s)] * (b1 - b2 - a1) + [dot(-1, -1, s)] * a1
        elif b2 >= b1 - a1 >= b2 - a2:
            out = [bar(1, s)] * (b1 - a1 - b2 + a2) + _bullets(b1, b2, s, False)
        elif b2 - a2 >= b1 - a1 >= b2 - k:
            out = [bar(-1, s)] * (b2 - a2 - b1 + a1) + _bullets(b1, b2, s, False)
        elif b2 - b1 > k - a1:
            out = ([bar(-1, s)] * (k - a2) + [bracket("T", 1, s)] * (b2 - b1 + a1 - k)
                   + [dot(1, 1, s)] * (k - a1))
    elif a1 == a2 == 0:
        if r == 1 and b2 > b1:
            out = [bracket("B", 1, s)] * (b2 - b1)
        elif r == 3 and b2 < b1:
            out = [bracket("B", -1, s)] * (b1 - b2)
    elif a1 == a2 == k:
        if r == 1 and b2 < b1:
            out = [bracket("T", -1, s)] * (b1 - b2)
        elif r == 3 and b2 > b1:
            out = [bracket("T", 1, s)] * (b2 - b1)
    if out is None or not _walk_ok(m, n, out, left, right):
        raise WallError(f"no ordered decomposition for {left}{right} at s={s}")
    return out


def _walk_ok(m, n, elems, left, right):
    cur = right
    for e in reversed(elems):
        nxt = (cur[0] + e.delta[0], cur[1] + e.delta[1])
        if not _in_range(m, n, nxt):
            return False
        if e.kind == "B" and not (cur[0] == nxt[0] == 0):
            return False
        if e.kind == "T" and not (cur[0] == nxt[0] == m - n):
            return False
        cur = nxt
    return cur == left


def normal_order_walls(d: WallSequence):
    """Normally ordered elementary walls of d, left to right."""
    out = []
    for left, right, s in d.walls():
        out.extend(decompose_wall(d.m, d.n, left, right, s))
    return out


def elementary_domains(elems, right):
    """Domains between consecutive elementary walls, left to right (len + 1 entries)."""
    doms = [right]
    for e in reversed(elems):
        cur = doms[-1]
        doms.append((cur[0] + e.delta[0], cur[1] + e.delta[1]))
    return doms[::-1]


def walls_from_elementary(m, n, elems, right) -> WallSequence:
    """Group an ordered elementary list into a wall sequence; checks the ordering."""
    doms = elementary_domains(elems, right)
    out_d, out_s = [doms[0]], []
    for k, e in enumerate(elems):
        if out_s and e.s > out_s[-1]:
            raise WallError("elementary walls are not in decreasing position order")
        if out_s and e.s == out_s[-1]:
            out_d[-1] = doms[k + 1]
        else:
            out_s.append(e.s)
            out_d.append(doms[k + 1])
    # merged composites may collapse to nothing
    dd, ss = [out_d[0]], []
    for k, s in enumerate(out_s):
        if out_d[k + 1] != dd[-1]:
            ss.append(s)
            dd.append(out_d[k + 1])
    d = WallSequence(m, n, tuple(dd), tuple(ss))
    if normal_order_walls(d) != list(elems):
        raise WallError("elementary list is not normally ordered")
    return d


def wall_energy(d: WallSequence) -> int:
    """Sum of -s/2 over bars and dots and -s over brackets; drops by 1 under f."""
    total2 = 0
    for e in normal_order_walls(d):
        total2 += -e.s if e.kind in ("bar", "dot") else -2 * e.s
    return total2 // 2


def wall_grade(d: WallSequence) -> int:
    """Number of f-steps from the wall-free configuration: minus the wall energy."""
    return -wall_energy(d)


# ----------------------------------------------------------------------
# crystal action

def _word(elems, i):
    """Signature blocks for the spin-1/2 subscripts, in the B^(1) tensor rule."""
    blocks = []
    for k, e in enumerate(elems):
        if e.spin_half:
            one = e.j if i == 1 else 1 - e.j
            blocks.append((k, one, 1 - one))
    return reduce_word(blocks)


def _shift_region(d: WallSequence, lo: int, hi: int, delta, sign: int):
    """Add sign*delta to the domain on lo < s <= hi."""
    span_lo, span_hi = _span(d)
    span_lo, span_hi = min(span_lo, lo - 2), max(span_hi, hi + 2)
    prof = _profile(d, span_lo, span_hi)
    for s in range(lo + 1, hi + 1):
        a, b = prof[s]
        prof[s] = (a + sign * delta[0], b + sign * delta[1])
    for dom in prof.values():
        if not _in_range(d.m, d.n, dom):
            return None
    try:
        return _from_profile(d.m, d.n, prof, d.left, d.right)
    except WallError:
        return None


def wall_f(i: int, d: WallSequence):
    """f_i on the wall picture; None when it vanishes."""
    elems = normal_order_walls(d)
    _, zeros = _word(elems, i)
    if not zeros:
        return None
    e = elems[zeros[0][0]]
    target = e.s + 2 if e.kind == "bar" else e.s + 1
    out = _shift_region(d, e.s, target, e.delta, -1)
    if out is None:
        raise WallError(f"move of {e!r} leaves the wall set")
    return out


_UNITS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def wall_e(i: int, d: WallSequence):
    """e_i on the wall picture: the unique predecessor under f_i of the selected wall."""
    elems = normal_order_walls(d)
    ones, _ = _word(elems, i)
    if not ones:
        return None
    e = elems[ones[-1][0]]
    found = set()
    deltas = [e.delta] + [(e.delta[0] + u[0], e.delta[1] + u[1]) for u in _UNITS]
    for back in (1, 2):
        for delta in deltas:
            if delta == (0, 0):
                continue
            cand = _shift_region(d, e.s - back, e.s, delta, 1)
            if cand is None or cand == d:
                continue
            try:
                img = wall_f(i, cand)
            except WallError:
                continue
            if img == d:
                found.add(cand)
    if len(found) > 1:
        raise WallError("ambiguous predecessor")
    return found.pop() if found else None


# ----------------------------------------------------------------------
# JSON

def walls_to_json(d: WallSequence) -> dict:
    return {"schema": WALL_SCHEMA, "m": d.m, "n": d.n,
            "domains": [list(x) for x in d.domains], "positions": list(d.positions)}


def walls_from_json(obj, m=None, n=None) -> WallSequence:
    """m and n inside the object take precedence over the arguments."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    schema = obj.get("schema", WALL_SCHEMA)
    if schema != WALL_SCHEMA:
        raise ValueError(f"unsupported schema {schema!r}")
    try:
        return WallSequence(int(obj.get("m", m)), int(obj.get("n", n)),
                            tuple(tuple(x) for x in obj["domains"]), tuple(obj["positions"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed wall JSON: {exc}") from None
