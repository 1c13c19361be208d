"""Independent brute-force oracles; `python tests/oracles.py` refreezes tests/data."""
from __future__ import annotations

import itertools
import json
from collections import deque
from pathlib import Path

DATA = Path(__file__).with_name("data")

# elementary walls by s mod 4: (name, delta, j, boundary) with boundary None, "0" or "top"
ELEMENTARY = {
    0: [("Czp", (1, 0), 0, None), ("Com", (-1, 0), 1, None), ("Bzp", (0, 1), 0, "0"),
        ("Tom", (0, -1), 1, "top"), ("bpm", (1, -1), None, None), ("bmp", (-1, 1), None, None)],
    1: [("Bop", (0, 1), 1, "0"), ("Tzm", (0, -1), 0, "top")],
    2: [("Czm", (-1, 0), 0, None), ("Cop", (1, 0), 1, None), ("Bom", (0, -1), 1, "0"),
        ("Tzp", (0, 1), 0, "top"), ("bpp", (1, 1), None, None), ("bmm", (-1, -1), None, None)],
    3: [("Bzm", (0, -1), 0, "0"), ("Top", (0, 1), 1, "top")],
}


def _valid_walk(m, n, names, left, right, table):
    cur = right
    for name in reversed(names):
        _, delta, _, edge = table[name]
        nxt = (cur[0] + delta[0], cur[1] + delta[1])
        if not (0 <= nxt[0] <= m - n and 0 <= nxt[1] <= n):
            return False
        if edge == "0" and not cur[0] == nxt[0] == 0:
            return False
        if edge == "top" and not cur[0] == nxt[0] == m - n:
            return False
        cur = nxt
    return cur == left


def brute_decompositions(m, n, left, right, s):
    """Every bars-brackets-bullets word (one bar kind, one bracket kind, one bullet kind,
    a single subscript) realising left|right at s."""
    rows = ELEMENTARY[s % 4]
    table = {r[0]: r for r in rows}
    bars = [r[0] for r in rows if r[0][0] == "C"]
    brackets = [r[0] for r in rows if r[0][0] in "BT"]
    bullets = [r[0] for r in rows if r[0][0] == "b"]
    top = m + n + 2
    found = []
    for bar, br, bu in itertools.product(bars or [None], brackets, bullets or [None]):
        for c1, c2, c3 in itertools.product(range(top), repeat=3):
            if (bar is None and c1) or (bu is None and c3) or c1 + c2 + c3 == 0:
                continue
            js = {table[x][2] for x, c in ((bar, c1), (br, c2)) if x and c}
            if len(js) > 1:
                continue
            names = [bar] * c1 + [br] * c2 + [bu] * c3
            if _valid_walk(m, n, names, left, right, table) and names not in found:
                found.append(names)
    return found


def brute_comb_r(k, l):
    """The crystal isomorphism B^(k)(x)B^(l) -> B^(l)(x)B^(k) by simultaneous BFS from [0](x)[0]."""
    def act(i, f, x, y, kx, ky):
        # signature rule on two letters; f=True lowers
        def ep(v, lev):
            ones = v if i == 1 else lev - v
            return ones, lev - ones
        e1, p1 = ep(x, kx)
        e2, p2 = ep(y, ky)
        # word 1^e1 0^p1 1^e2 0^p2 ; cancel 0 1 pairs
        c = min(p1, e2)
        zeros_left, ones_right = p1 - c, e2 - c
        if f:
            if zeros_left:
                target = 0
            elif p2:
                target = 1
            else:
                return None
        else:
            if ones_right:
                target = 1
            elif e1:
                target = 0
            else:
                return None
        up = (i == 1) == f
        if target == 0:
            v = x + (1 if up else -1)
            return (v, y) if 0 <= v <= kx else None
        v = y + (1 if up else -1)
        return (x, v) if 0 <= v <= ky else None

    image = {(0, 0): (0, 0)}
    queue = deque([(0, 0)])
    while queue:
        src = queue.popleft()
        dst = image[src]
        for i in (0, 1):
            for f in (True, False):
                a = act(i, f, *src, k, l)
                b = act(i, f, *dst, l, k)
                if (a is None) != (b is None):
                    raise AssertionError("not an isomorphism")
                if a is not None and a not in image:
                    image[a] = b
                    queue.append(a)
    return image


def rsos_characters(m, n, max_energy):
    from altspin.paths import GroundLabel, rsos_character
    return {f"{g.a},{g.b}": rsos_character(m, n, g.a, g.b, max_energy) for g in GroundLabel.all(m, n)}


def freeze():
    DATA.mkdir(exist_ok=True)
    chars = {f"{m},{n}": rsos_characters(m, n, 6) for m, n in [(2, 1), (3, 1), (3, 2), (6, 2)]}
    comb = {f"{k},{l}": {f"{i},{j}": list(v) for (i, j), v in sorted(brute_comb_r(k, l).items())}
            for k in range(1, 5) for l in range(1, 5)}
    decomp = {}
    for m, n in [(2, 1), (3, 1), (3, 2), (6, 2)]:
        doms = [(a, b) for a in range(m - n + 1) for b in range(n + 1)]
        rows = []
        for s in range(4):
            for left, right in itertools.product(doms, doms):
                if left != right:
                    rows.append([s, left, right, brute_decompositions(m, n, left, right, s)])
        decomp[f"{m},{n}"] = rows
    (DATA / "characters.json").write_text(json.dumps(chars, indent=1))
    (DATA / "comb_r.json").write_text(json.dumps(comb))
    (DATA / "decompositions.json").write_text(json.dumps(decomp))


if __name__ == "__main__":
    freeze()
