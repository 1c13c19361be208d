"""Particle words: spin-1/2 and spin-0 symbols with exchange relations.

A word psi_1 psi_2 ... psi_r acts on its initial domain from the right; each
symbol shifts the domain by its Delta, so domains are read right to left.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .paths import reduce_word
from .walls import (ElementaryWall, WallError, WallSequence, bar, bracket, dot,
                    normal_order_walls, walls_from_elementary)

PARTICLE_SCHEMA = "altspin.particles/1"


class ParticleError(ValueError):
    """Malformed particle data or a rewrite that does not terminate."""


@dataclass(frozen=True)
class ParticleSymbol:
    """spin "half": sign a, subscript j; spin "zero": signs a, b.  mode: integer n."""

    spin: str
    a: int
    mode: int
    j: int | None = None
    b: int | None = None

    def __post_init__(self):
        if self.a not in (1, -1):
            raise ParticleError("a must be +1 or -1")
        if self.spin == "half":
            if self.j not in (0, 1) or self.b is not None:
                raise ParticleError("spin-1/2 symbols carry j and no b")
            if self.a * (-1) ** self.j != (-1) ** self.mode:
                raise ParticleError(f"parity violated by {self!r}")
        elif self.spin == "zero":
            if self.b not in (1, -1) or self.j is not None:
                raise ParticleError("spin-0 symbols carry b and no j")
            if -self.a * self.b != (-1) ** self.mode:
                raise ParticleError(f"parity violated by {self!r}")
        else:
            raise ParticleError(f"unknown spin {self.spin!r}")

    @property
    def delta(self):
        return (self.a, 0) if self.spin == "half" else (self.a, self.b)

    @property
    def species(self):
        return (self.a, self.j) if self.spin == "half" else (self.a, self.b)

    def with_mode(self, mode, **kw):
        return replace(self, mode=mode, **kw)

    def __repr__(self):
        sg = {1: "+", -1: "-"}
        if self.spin == "half":
            return f"h{sg[self.a]}{self.j}({self.mode})"
        return f"z{sg[self.a]}{sg[self.b]}({self.mode})"


def half(a, j, mode):
    return ParticleSymbol("half", a, mode, j=j)


def zero(a, b, mode):
    return ParticleSymbol("zero", a, mode, b=b)


@dataclass(frozen=True)
class ParticleWord:
    m: int
    n: int
    symbols: tuple
    initial: tuple
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "initial", tuple(self.initial))

    def domains(self):
        """Domains left to right, len(symbols) + 1 entries."""
        doms = [self.initial]
        for x in reversed(self.symbols):
            a, b = doms[-1]
            doms.append((a + x.delta[0], b + x.delta[1]))
        return doms[::-1]

    def is_valid(self):
        k = self.m - self.n
        return all(0 <= a <= k and 0 <= b <= self.n for a, b in self.domains())

    def key(self):
        """Identity up to sign."""
        return (self.m, self.n, self.symbols, self.initial)


# ----------------------------------------------------------------------
# exchange relations

def _nu(x, y):
    """Number of coinciding labels."""
    return (x.a == y.a) + (x.species[1] == y.species[1])


def _sigma_pair(x, y, right, m, n):
    """Rewrite of the pair x y acting on domain `right`: (sign, x', y')."""
    k = m - n
    if x.spin == y.spin:
        nu = _nu(x, y)
        return -1, x.with_mode(y.mode + nu), y.with_mode(x.mode - nu)
    if x.spin == "zero":
        if x.a == y.a:
            return 1, y, x
        boundary = right[0] == (k if x.a == 1 else 0)
        if not boundary:
            return 1, y, x
        return 1, y.with_mode(y.mode + 1, a=-y.a, j=y.j), x.with_mode(x.mode - 1, a=-x.a, b=x.b)
    # half then zero: invert the zero-half rule on the same right domain
    cands = [(y, x)]
    if x.a != y.a:
        cands.append((y.with_mode(y.mode + 1, a=-y.a, b=y.b), x.with_mode(x.mode - 1, a=-x.a, j=x.j)))
    hits = []
    for u, v in cands:
        mid = (right[0] + v.delta[0], right[1] + v.delta[1])
        if not (0 <= mid[0] <= k and 0 <= mid[1] <= n):
            continue
        sg, p, q = _sigma_pair(u, v, right, m, n)
        if (p, q) == (x, y):
            hits.append((sg, u, v))
    if len(hits) != 1:
        raise ParticleError(f"no unique rewrite for {x!r} {y!r} on {right}")
    return hits[0]


def apply_relation(w: ParticleWord, pos: int) -> ParticleWord:
    """Exchange the symbols at pos and pos + 1."""
    syms = list(w.symbols)
    right = w.domains()[pos + 2]
    sg, x, y = _sigma_pair(syms[pos], syms[pos + 1], right, w.m, w.n)
    syms[pos:pos + 2] = [x, y]
    return ParticleWord(w.m, w.n, tuple(syms), w.initial, w.sign * sg)


def is_null_pair(w: ParticleWord, pos: int) -> bool:
    """The exchange maps the pair to minus itself, so the word vanishes."""
    v = apply_relation(w, pos)
    return v.symbols == w.symbols and v.sign == -w.sign


def _ordered_pair(x, y, right, m, n):
    k = m - n
    if x.spin == y.spin:
        return x.mode < y.mode or (x.mode == y.mode and x.species == y.species)
    if x.spin == "half":
        if x.mode <= y.mode:
            return True
        edge = right[0] == (0 if y.a == 1 else k)
        return x.a == -y.a and x.mode == y.mode + 1 and edge
    if x.mode < y.mode:
        return True
    edge = right[0] == (0 if y.a == 1 else k)
    return x.a == -y.a and x.mode == y.mode and edge


def is_pairwise_ordered(w: ParticleWord) -> bool:
    """Every adjacent pair is one of the six allowed patterns."""
    doms = w.domains()
    return all(_ordered_pair(w.symbols[k], w.symbols[k + 1], doms[k + 2], w.m, w.n)
               for k in range(len(w.symbols) - 1))


def is_normally_ordered(w: ParticleWord) -> bool:
    """Pairwise ordered and readable as an ordered list of elementary walls.

    The pairwise test alone admits words such as h+0(0) z--(-1) h+1(-1) on (0,1),
    where a boundary pair of each kind shares its spin-0 symbol; those lie in
    orbits that vanish.
    """
    if not is_pairwise_ordered(w):
        return False
    try:
        walls_from_elementary(w.m, w.n, _parse(w), w.initial)
    except (WallError, ParticleError):
        return False
    return True


def is_separately_ordered(w: ParticleWord) -> bool:
    """All spin-1/2 symbols first, each species block in nondecreasing mode."""
    syms = w.symbols
    seen_zero = False
    for k, x in enumerate(syms):
        if x.spin == "zero":
            seen_zero = True
        elif seen_zero:
            return False
        if k + 1 < len(syms) and syms[k + 1].spin == x.spin:
            y = syms[k + 1]
            if not (x.mode < y.mode or (x.mode == y.mode and x.species == y.species)):
                return False
    return True


def _reorder(w, ordered, max_steps):
    steps = 0
    while True:
        doms = w.domains()
        for k in range(len(w.symbols) - 1):
            if not ordered(w, k, doms):
                break
        else:
            return w
        if is_null_pair(w, k):
            return None
        w = apply_relation(w, k)
        steps += 1
        if steps > max_steps:
            raise ParticleError("reordering did not terminate")


def normally_order(w: ParticleWord, max_steps: int | None = None):
    """Normally ordered form, or None when the word vanishes."""
    if not w.is_valid():
        raise ParticleError("word leaves the domain range")
    cap = max_steps or 50 * (len(w.symbols) + 1) ** 2

    def ordered(v, k, doms):
        return _ordered_pair(v.symbols[k], v.symbols[k + 1], doms[k + 2], v.m, v.n)
    out = _reorder(w, ordered, cap)
    if out is None or not is_normally_ordered(out):
        return None
    return out


def separately_order(w: ParticleWord, max_steps: int | None = None):
    """Separately ordered form, or None when the word vanishes."""
    cap = max_steps or 50 * (len(w.symbols) + 1) ** 2

    def ordered(v, k, doms):
        x, y = v.symbols[k], v.symbols[k + 1]
        if x.spin != y.spin:
            return x.spin == "half"
        return x.mode < y.mode or (x.mode == y.mode and x.species == y.species)
    return _reorder(w, ordered, cap)


# ----------------------------------------------------------------------
# walls <-> particles

def _wall_symbols(e: ElementaryWall):
    s = e.s
    if e.kind == "bar":
        return [half(e.a, e.j, -s // 2)]
    if e.kind == "dot":
        return [zero(e.a, e.b, -s // 2)]
    sa = 1 if e.kind == "B" else -1
    if s % 2 == 0:
        return [zero(-sa, e.b, -s // 2), half(sa, e.j, -s // 2)]
    return [half(-sa, e.j, -(s - 1) // 2), zero(sa, e.b, -(s + 1) // 2)]


def walls_to_particles(walls, boundary=None, model=None) -> ParticleWord:
    """A WallSequence, or an ordered elementary list with its right boundary domain."""
    if isinstance(walls, WallSequence):
        elems, boundary, (m, n) = normal_order_walls(walls), walls.right, (walls.m, walls.n)
    else:
        elems = list(walls)
        if boundary is None or model is None:
            raise ParticleError("elementary lists need boundary and model")
        m, n = model
        if hasattr(boundary, "a"):
            boundary = (boundary.a, boundary.b)
    syms = []
    for e in elems:
        syms.extend(_wall_symbols(e))
    return ParticleWord(m, n, tuple(syms), tuple(boundary))


def particles_to_walls(w: ParticleWord) -> list:
    """Ordered elementary walls of a normally ordered word."""
    if not is_normally_ordered(w):
        raise ParticleError("word is not normally ordered")
    return _parse(w)


def _parse(nw: ParticleWord) -> list:
    doms = nw.domains()
    syms = nw.symbols
    elems = []
    k = 0
    while k < len(syms):
        x = syms[k]
        y = syms[k + 1] if k + 1 < len(syms) else None
        right = doms[k + 2] if y is not None else None
        if y is not None and x.spin != y.spin and x.a == -y.a:
            edge = right[0] == (0 if y.a == 1 else nw.m - nw.n)
            e = None
            if x.spin == "zero" and x.mode == y.mode and edge:
                e = bracket("B" if y.a == 1 else "T", x.b, -2 * x.mode)
                hj = y.j
            elif x.spin == "half" and x.mode == y.mode + 1 and edge:
                e = bracket("B" if y.a == 1 else "T", y.b, 1 - 2 * x.mode)
                hj = x.j
            if e is not None:
                if e.j != hj:
                    raise ParticleError(f"subscript does not fit the bracket at {e.s}")
                elems.append(e)
                k += 2
                continue
        if x.spin == "half":
            e = bar(x.a, -2 * x.mode)
            if e.j != x.j:
                raise ParticleError(f"subscript of {x!r} does not fit a bar")
        else:
            e = dot(x.a, x.b, -2 * x.mode)
        elems.append(e)
        k += 1
    return elems


def particles_to_wall_sequence(w: ParticleWord) -> WallSequence:
    """Normally order w and regroup its walls into a WallSequence."""
    nw = normally_order(w)
    if nw is None:
        raise ParticleError("word vanishes")
    try:
        return walls_from_elementary(nw.m, nw.n, particles_to_walls(nw), nw.initial)
    except WallError as exc:
        raise ParticleError(str(exc)) from None


# ----------------------------------------------------------------------
# crystal action

def _word(w: ParticleWord, i: int):
    blocks = []
    for k, x in enumerate(w.symbols):
        if x.spin == "half":
            one = x.j if i == 1 else 1 - x.j
            blocks.append((k, one, 1 - one))
    return reduce_word(blocks)


def _act(i, w, raising):
    w = normally_order(w)
    if w is None:
        return None
    ones, zeros = _word(w, i)
    picks = ones[-1:] if raising else zeros[:1]
    if not picks:
        return None
    k = picks[0][0]
    x = w.symbols[k]
    step = 1 if raising else -1
    syms = list(w.symbols)
    syms[k] = x.with_mode(x.mode + step, j=1 - x.j)
    return normally_order(ParticleWord(w.m, w.n, tuple(syms), w.initial, w.sign))


def particle_f(i: int, w: ParticleWord):
    return _act(i, w, raising=False)


def particle_e(i: int, w: ParticleWord):
    return _act(i, w, raising=True)


# ----------------------------------------------------------------------
# JSON

def _sym_json(x):
    out = {"species": x.spin, "a": x.a, "mode": x.mode}
    out["j" if x.spin == "half" else "b"] = x.j if x.spin == "half" else x.b
    return out


def particles_to_json(w: ParticleWord) -> dict:
    return {"schema": PARTICLE_SCHEMA, "m": w.m, "n": w.n, "sign": w.sign,
            "initial": list(w.initial), "symbols": [_sym_json(x) for x in w.symbols]}


def particles_from_json(obj, m=None, n=None) -> ParticleWord:
    if isinstance(obj, str):
        obj = json.loads(obj)
    schema = obj.get("schema", PARTICLE_SCHEMA)
    if schema != PARTICLE_SCHEMA:
        raise ValueError(f"unsupported schema {schema!r}")
    try:
        syms = []
        for x in obj["symbols"]:
            if x["species"] == "half":
                syms.append(half(int(x["a"]), int(x["j"]), int(x["mode"])))
            else:
                syms.append(zero(int(x["a"]), int(x["b"]), int(x["mode"])))
        return ParticleWord(int(obj.get("m", m)), int(obj.get("n", n)), tuple(syms),
                            tuple(obj["initial"]), int(obj.get("sign", 1)))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed particle JSON: {exc}") from None
