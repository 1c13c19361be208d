"""Combinatorial R and the isomorphism chain B(lambda) (x) B(mu) -> P_{a,b}.

Tensor elements are tuples of factors written left to right; a factor is a
Letter or a LambdaPath.  Crystal operators use the same signature rule as paths.
"""
from __future__ import annotations

import json
from collections import deque
from functools import lru_cache

from .paths import Letter, LambdaPath, SemiPath, reduce_word, signature, signature_e, signature_f


class BudgetError(RuntimeError):
    """A search ran out of its configured budget."""


# ----------------------------------------------------------------------
# tensor products of letters and lambda-paths

def _eps_phi(i, factor):
    if isinstance(factor, Letter):
        ones = factor.value if i == 1 else factor.level - factor.value
        return ones, factor.level - ones
    ones, zeros = signature(factor, i)
    return sum(c for _, c in ones), sum(c for _, c in zeros)


def _factor_act(i, factor, raising):
    if isinstance(factor, Letter):
        up = (i == 1) != raising
        v = factor.value + (1 if up else -1)
        return Letter(factor.level, v) if 0 <= v <= factor.level else None
    return signature_e(i, factor) if raising else signature_f(i, factor)


def _tensor_act(i, elem, raising):
    blocks = []
    for k, factor in enumerate(elem):
        eps, phi = _eps_phi(i, factor)
        blocks.append((k, eps, phi))
    ones, zeros = reduce_word(blocks)
    if raising:
        if not ones:
            return None
        k = ones[-1][0]
    else:
        if not zeros:
            return None
        k = zeros[0][0]
    new = _factor_act(i, elem[k], raising)
    if new is None:
        raise AssertionError("factor refused an operator the tensor rule selected")
    return elem[:k] + (new,) + elem[k + 1:]


def elem_f(i: int, elem: tuple):
    return _tensor_act(i, tuple(elem), raising=False)


def elem_e(i: int, elem: tuple):
    return _tensor_act(i, tuple(elem), raising=True)


def neighbours(elem):
    """((op, i), image) for every defined Kashiwara operator."""
    out = []
    for i in (0, 1):
        for op, fn in (("f", elem_f), ("e", elem_e)):
            img = fn(i, elem)
            if img is not None:
                out.append(((op, i), img))
    return out


def apply_word(word, elem):
    """Apply [(op, i), ...] in order; None as soon as one vanishes."""
    for op, i in word:
        elem = (elem_f if op == "f" else elem_e)(i, elem)
        if elem is None:
            return None
    return elem


def _inverse(word):
    return [("e" if op == "f" else "f", i) for op, i in reversed(word)]


# ----------------------------------------------------------------------
# combinatorial R

def comb_R(x: Letter, y: Letter):
    """B^(k) (x) B^(l) -> B^(l) (x) B^(k), normalised by [0] (x) [0] -> [0] (x) [0]."""
    k, l = x.level, y.level
    i, j = x.value, y.value
    s = i + j
    if s <= k and s <= l:
        u, v = i, j
    elif k <= s <= l:
        u, v = 2 * i + j - k, k - i
    elif l <= s <= k:
        u, v = l - j, i + 2 * j - l
    else:
        u, v = l - k + i, j - l + k
    return Letter(l, u), Letter(k, v)


# ----------------------------------------------------------------------
# psi: B(lambda) -> B(sigma lambda) (x) B^(l)

def psi_split(p: LambdaPath):
    shifted = {s - 1: v for s, v in p.overrides.items() if s >= 2}
    return LambdaPath(p.lvl, p.lvl - p.j, shifted), p.letter(1)


def psi_merge(p: LambdaPath, x: Letter) -> LambdaPath:
    if x.level != p.lvl:
        raise ValueError("letter level does not match the path")
    ov = {s + 1: v for s, v in p.overrides.items()}
    ov[1] = x.value
    return LambdaPath(p.lvl, p.lvl - p.j, ov)


def psi_n(p: LambdaPath, count: int):
    """psi^(N): (path for sigma^N lambda, [p(N), ..., p(1)])."""
    letters = []
    for _ in range(count):
        p, x = psi_split(p)
        letters.insert(0, x)
    return p, letters


# ----------------------------------------------------------------------
# Psi: B^(k) (x) B(mu) -> B(sigma mu) (x) B^(n+k)

def _depth(p: LambdaPath):
    sup = p.support()
    return max(sup) if sup else 0


def default_budget(x: Letter, p: LambdaPath) -> int:
    return 10 * (_depth(p) + x.level)


@lru_cache(maxsize=None)
def _psi_cached(x: Letter, p: LambdaPath, budget: int):
    start = (x, p)
    seen = {start: None}
    queue = deque([(start, 0)])
    while queue:
        elem, dist = queue.popleft()
        if elem[1].is_ground():
            word = []
            node = elem
            while seen[node] is not None:
                prev, step = seen[node]
                word.append(step)
                node = prev
            word.reverse()
            break
        if dist >= budget:
            continue
        for step, img in neighbours(elem):
            if img not in seen:
                seen[img] = (elem, step)
                queue.append((img, dist + 1))
    else:
        raise BudgetError(f"no anchor within distance {budget} of {start!r}")
    anchor_letter = elem[0]
    n, b = p.lvl, p.j
    image = (LambdaPath(n, n - b), Letter(n + x.level, anchor_letter.value + n - b))
    out = apply_word(_inverse(word), image)
    if out is None:
        raise AssertionError("replay left the image crystal")
    return out


def Psi_map(x: Letter, p: LambdaPath, budget: int | None = None):
    """Image of x (x) p under the isomorphism pinned by [j] (x) u_mu -> u_{sigma mu} (x) [j+n-b]."""
    if budget is None:
        budget = default_budget(x, p)
    return _psi_cached(x, p, budget)


# ----------------------------------------------------------------------
# Phi and the path isomorphism

def _check_pair(v: LambdaPath, w: LambdaPath):
    if not isinstance(v, LambdaPath) or not isinstance(w, LambdaPath):
        raise TypeError("expected lambda-paths")
    if v.lvl < 1 or w.lvl < 1:
        raise ValueError("levels must be positive")


def Phi_map(v: LambdaPath, w: LambdaPath, budget: int | None = None):
    """B(lambda) (x) B(mu) -> B(sigma lambda) (x) B(mu) (x) B^(m) (x) B^(n)."""
    _check_pair(v, w)
    w1, y = psi_split(w)
    v1, x = psi_split(v)
    w2, z = Psi_map(x, w1, budget)
    return v1, w2, z, y


def Phi_N(v: LambdaPath, w: LambdaPath, count: int, budget: int | None = None):
    """Phi^(N) as the tuple (v_N, w_N, p(2N), ..., p(1))."""
    letters = []
    for _ in range(count):
        v, w, z, y = Phi_map(v, w, budget)
        letters = [z, y] + letters
    return (v, w, *letters)


def full_iso(v: LambdaPath, w: LambdaPath, max_steps: int = 32, budget: int | None = None) -> SemiPath:
    """The isomorphism B(lambda_a) (x) B(mu_b) -> P_{a,b}, run until both factors are ground."""
    _check_pair(v, w)
    m, n, a, b = v.lvl + w.lvl, w.lvl, v.j, w.j
    letters = []
    cur_v, cur_w = v, w
    for _ in range(max_steps):
        if cur_v.is_ground() and cur_w.is_ground():
            break
        cur_v, cur_w, z, y = Phi_map(cur_v, cur_w, budget)
        letters = [z, y] + letters
    else:
        if not (cur_v.is_ground() and cur_w.is_ground()):
            raise BudgetError(f"Phi^(N) did not stabilise within {max_steps} steps")
    total = len(letters)
    values = {total - k: x.value for k, x in enumerate(letters)}
    return SemiPath(m, n, a, b, values)


def stabilisation_steps(v: LambdaPath, w: LambdaPath, max_steps: int = 32, budget=None) -> int:
    """Smallest N with Phi^(N)(v (x) w) in u (x) u (x) letters."""
    for count in range(max_steps + 1):
        if v.is_ground() and w.is_ground():
            return count
        v, w, _, _ = Phi_map(v, w, budget)
    raise BudgetError(f"no stabilisation within {max_steps} steps")


def elements_by_grade(v0, w0, max_grade: int):
    """All v (x) w with grade(v) + grade(w) <= max_grade, as {(v, w): grade}."""
    def ball(p, r):
        layer = {p}
        out = {p: 0}
        for g in range(1, r + 1):
            nxt = set()
            for q in layer:
                for i in (0, 1):
                    img = signature_f(i, q)
                    if img is not None and img not in out:
                        out[img] = g
                        nxt.add(img)
            layer = nxt
        return out
    bv, bw = ball(v0, max_grade), ball(w0, max_grade)
    return {(v, w): gv + gw for v, gv in bv.items() for w, gw in bw.items() if gv + gw <= max_grade}


# ----------------------------------------------------------------------
# DOT export

def _label(elem):
    if isinstance(elem, (SemiPath, LambdaPath)):
        sup = elem.support()
        top = max(sup) if sup else 0
        return " ".join(str(elem.value(s)) for s in range(max(top, 4), 0, -1))
    return " (x) ".join(_label(f) if not isinstance(f, Letter) else str(f.value) for f in elem)


def crystal_dot(start, radius: int = 2) -> str:
    """DOT graph of the f-neighbourhood of a path or tensor element."""
    if isinstance(start, (SemiPath, LambdaPath)):
        step = signature_f
    else:
        step = elem_f
    ids = {start: 0}
    edges = []
    layer = [start]
    for _ in range(radius):
        nxt = []
        for node in layer:
            for i in (0, 1):
                img = step(i, node)
                if img is None:
                    continue
                if img not in ids:
                    ids[img] = len(ids)
                    nxt.append(img)
                edges.append((ids[node], ids[img], i))
        layer = nxt
    lines = ["digraph crystal {"]
    for node, k in ids.items():
        lines.append(f'  n{k} [label="{_label(node)}"];')
    for u, v, i in edges:
        lines.append(f'  n{u} -> n{v} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)


# ----------------------------------------------------------------------
# JSON for v (x) w

TENSOR_SCHEMA = "altspin.tensor/1"


def _lambda_json(p: LambdaPath):
    return {"level": p.lvl, "j": p.j, "overrides": {str(s): v for s, v in sorted(p.overrides.items())}}


def tensor_to_json(v: LambdaPath, w: LambdaPath) -> dict:
    return {"schema": TENSOR_SCHEMA, "lambda": _lambda_json(v), "mu": _lambda_json(w)}


def tensor_from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    schema = obj.get("schema", TENSOR_SCHEMA)
    if schema != TENSOR_SCHEMA:
        raise ValueError(f"unsupported schema {schema!r}")
    try:
        out = []
        for key in ("lambda", "mu"):
            x = obj[key]
            ov = {int(s): int(val) for s, val in x.get("overrides", {}).items()}
            out.append(LambdaPath(int(x["level"]), int(x["j"]), ov))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed tensor JSON: {exc}") from None
    return tuple(out)
