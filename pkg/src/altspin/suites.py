"""Verification suites shared by the command line and the test-suite."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import morphisms as mo
from . import particles as pa
from . import paths as pt
from . import rmatrix as rm
from . import walls as wl


@dataclass
class Check:
    name: str
    scale: str
    passed: bool
    detail: str = ""
    budget: bool = False


@dataclass
class RunConfig:
    m: int = 2
    n: int = 1
    depth: int = 6
    max_level: int = 3
    window: int = 8
    seed: int = 0
    samples: int = 2000
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if not (self.m > self.n >= 1):
            raise ValueError(f"need m > n >= 1, got ({self.m},{self.n})")
        for name in ("depth", "max_level", "window", "samples"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def _run(name, scale, fn):
    try:
        ok, detail = fn()
        return Check(name, scale, bool(ok), detail)
    except mo.BudgetError as exc:
        return Check(name, scale, False, str(exc), budget=True)
    except pt.WindowError as exc:
        return Check(name, scale, False, str(exc), budget=True)


# ----------------------------------------------------------------------
# rmatrix

def rmatrix_checks(cfg: RunConfig):
    top = cfg.max_level
    pairs = [(k, l) for k in range(top + 1) for l in range(top + 1)]

    def equivalence():
        bad = [(k, l) for k, l in pairs if rm.rhat_projector(k, l) != rm.rhat_solve(k, l)]
        return not bad, f"{len(pairs)} level pairs, mismatches {bad}"

    def unitarity():
        bad = [(k, l) for k, l in pairs if not rm.check_unitarity(k, l)[1]]
        return not bad, f"{len(pairs)} level pairs, failures {bad}"

    def ybe():
        lv = range(1, min(top, 2) + 1)
        triples = list(itertools.product(lv, repeat=3))
        bad = [t for t in triples if not rm.yang_baxter_holds(*t)]
        return not bad, f"{len(triples)} triples, failures {bad}"

    def numeric():
        pts = [(-0.3, 1.2), (-0.5, 1.5), (0.4, 0.7), (-0.2, 2.0), (0.25, 1.3)]
        worst = 0.0
        for q0, z0 in pts:
            for k, l in [(1, 1), (1, 2), (2, 1), (2, 2)]:
                worst = max(worst, rm.unitarity_residual(k, l, q0, z0),
                            rm.crossing_residual(k, l, q0, z0))
        return worst < 1e-8, f"max residual {worst:.2e}"

    def tables():
        bad = []
        hi = top + 1
        for k in range(hi + 1):
            for l in range(hi + 1):
                for order, closed in ((0, rm.r0_limit_closed), (1, rm.r1_limit_closed)):
                    tab = rm.rbar_q0_table(k, l, order)
                    for (i, j), (img, c) in tab.items():
                        img_c, c_c = closed(k, l, i, j)
                        cases = rm.closed_form_cases(k, l, i, j, order)
                        if c != c_c or (c and tuple(img) != img_c) or any(x != (img_c, c_c) for x in cases):
                            bad.append((k, l, order, i, j))
        return not bad, f"levels <= {hi}, mismatches {bad[:5]}"

    def comb_r():
        bad = []
        for k in range(top + 2):
            for l in range(top + 2):
                tab = rm.rbar_q0_table(k, l, 0)
                for i in range(k + 1):
                    for j in range(l + 1):
                        x, y = pt.Letter(k, i), pt.Letter(l, j)
                        u, v = mo.comb_R(x, y)
                        if tab[(i, j)] != ((u.value, v.value), 1) or mo.comb_R(u, v) != (x, y):
                            bad.append((k, l, i, j))
                        for op in (0, 1):
                            a, b = mo.elem_f(op, (x, y)), mo.elem_f(op, (u, v))
                            if (a is None) != (b is None) or (a is not None and mo.comb_R(*a) != b):
                                bad.append((k, l, i, j, op))
        return not bad, f"levels <= {top + 1}, failures {bad[:5]}"

    def energies():
        m, n = cfg.m, cfg.n
        closed = {"H1": lambda i: rm.h1(*i, m, n), "H2": lambda i: rm.h2(*i, m, n),
                  "H3": lambda i: rm.h3(*i, m, n)}
        bad = []
        for kind, fn in closed.items():
            h = rm.local_hamiltonian(kind, m, n)
            if not h.offdiagonal_vanishes or any(h.diagonal[idx] != fn(idx) for idx in h.diagonal):
                bad.append(kind)
        if not rm.h3_identity_holds(m, n):
            bad.append("H3 identity")
        return not bad, f"failures {bad}"

    scale = f"levels <= {top}"
    yield _run("projector form equals solved intertwiner", scale, equivalence)
    yield _run("unitarity g(z) scalar", scale, unitarity)
    yield _run("Yang-Baxter", "levels <= 2", ybe)
    yield _run("normalised unitarity and crossing (numeric)", "5 points", numeric)
    yield _run("q->0 limits of R-bar_0 and R-bar_1", f"levels <= {top + 1}", tables)
    yield _run("combinatorial R matches order-0 table", f"levels <= {top + 1}", comb_r)
    yield _run("CTM energies h1/h2/h3", f"(m,n)=({cfg.m},{cfg.n})", energies)


# ----------------------------------------------------------------------
# crystal paths

def semi_paths(m, n, label, depth):
    ranges = [range((n if s % 2 else m) + 1) for s in range(1, depth + 1)]
    for vals in itertools.product(*ranges):
        yield pt.SemiPath(m, n, label.a, label.b, {s + 1: v for s, v in enumerate(vals)})


def crystal_checks(cfg: RunConfig):
    m, n, depth = cfg.m, cfg.n, cfg.depth

    def highest():
        bad = adm = 0
        for label in pt.GroundLabel.all(m, n):
            for p in semi_paths(m, n, label, depth):
                a = pt.is_admissible(p)
                hw = pt.signature_e(0, p) is None and pt.signature_e(1, p) is None
                bad += a != hw
                if a:
                    adm += 1
                    r = pt.to_rsos(p)
                    if not r.is_valid() or pt.from_rsos(r) != p or pt.rsos_energy(r) != pt.crystal_energy(p):
                        bad += 1
        return not bad, f"{adm} admissible paths, {bad} failures"

    def energy_law():
        rng = random.Random(cfg.seed)
        labels = pt.GroundLabel.all(m, n)
        bad = done = 0
        while done < cfg.samples:
            label = rng.choice(labels)
            top = rng.randint(1, depth + 2)
            p = pt.SemiPath(m, n, label.a, label.b,
                            {s: rng.randint(0, n if s % 2 else m) for s in range(1, top)})
            i = rng.randint(0, 1)
            q = pt.signature_f(i, p)
            if q is None:
                continue
            done += 1
            if (pt.crystal_energy(q) != pt.crystal_energy(p) + 1 or pt.signature_e(i, q) != p
                    or pt.weight(q) != pt.weight(p) - pt.ALPHA[i]):
                bad += 1
        return not bad, f"{done} applications, {bad} failures"

    def characters():
        bad = []
        for label in pt.GroundLabel.all(m, n):
            c1 = pt.character(m, n, label.a, label.b, depth)
            c2 = pt.rsos_character(m, n, label.a, label.b, depth)
            if c1 != c2 or c1[0] != 1:
                bad.append((label.a, label.b))
        return not bad, f"max energy {depth}, disagreements {bad}"

    scale = f"(m,n)=({m},{n}) depth {depth}"
    yield _run("highest = admissible, RSOS energy", scale, highest)
    yield _run("f raises energy by one", scale, energy_law)
    yield _run("character dual oracle", scale, characters)


# ----------------------------------------------------------------------
# morphisms

def morphism_checks(cfg: RunConfig):
    m, n, depth = cfg.m, cfg.n, cfg.depth

    def ground():
        bad = []
        for label in pt.GroundLabel.all(m, n):
            a, b = label.a, label.b
            v, w = pt.LambdaPath(m - n, a), pt.LambdaPath(n, b)
            e = mo.Phi_N(v, w, 2)
            if [x.value for x in e[2:]] != [a + b, n - b, m - n - a + b, n - b] or not mo.full_iso(v, w).is_ground():
                bad.append((a, b))
        return not bad, f"failures {bad}"

    def iso():
        count = bad = 0
        for label in pt.GroundLabel.all(m, n):
            els = mo.elements_by_grade(pt.LambdaPath(m - n, label.a), pt.LambdaPath(n, label.b), depth)
            images = set()
            for (v, w) in els:
                p = mo.full_iso(v, w)
                images.add(p)
                count += 1
                for i in (0, 1):
                    e, q = mo.elem_f(i, (v, w)), pt.signature_f(i, p)
                    if (e is None) != (q is None) or (e is not None and mo.full_iso(*e) != q):
                        bad += 1
            bad += len(els) - len(images)
        return not bad, f"{count} elements, {bad} failures"

    scale = f"(m,n)=({m},{n}) grade <= {depth}"
    yield _run("ground maps to ground", f"(m,n)=({m},{n})", ground)
    yield _run("full isomorphism commutes with f0, f1", scale, iso)


# ----------------------------------------------------------------------
# walls and particles

def full_paths(m, n, lo, hi):
    """Every FullPath whose values may differ from the reference only on [lo, hi]."""
    labels = pt.GroundLabel.all(m, n)
    rng = list(range(lo, hi + 1))
    for left in labels:
        for right in labels:
            base = pt.FullPath(m, n, left.a, left.b, right.a, right.b)
            for vals in itertools.product(*[range(base.level(s) + 1) for s in rng]):
                yield pt.FullPath(m, n, left.a, left.b, right.a, right.b, dict(zip(rng, vals)))


def _window(cfg):
    lo = -(cfg.window // 2) + 1
    return lo, lo + cfg.window - 1


WORKED_DECOMPOSITIONS = [
    (0, (0, 0), (3, 1), "|1-@0 |1-@0 |1-@0 |1-@0 *+-@0"),
    (0, (1, 2), (1, 0), "|0+@0 B0+@0 *-+@0"),
    (0, (4, 0), (4, 2), "T1-@0 T1-@0"),
    (2, (0, 0), (3, 1), "|0-@2 |0-@2 *--@2"),
    (2, (1, 2), (1, 0), "|0-@2 |0-@2 *++@2 *++@2"),
    (2, (4, 0), (4, 2), "|1+@2 |1+@2 *--@2 *--@2"),
    (1, (0, 2), (0, 0), "B1+@1 B1+@1"),
    (1, (4, 0), (4, 2), "T0-@1 T0-@1"),
    (3, (0, 0), (0, 2), "B0-@3 B0-@3"),
    (3, (4, 2), (4, 0), "T1+@3 T1+@3"),
]

# (operator, domains, positions, elementary walls) after each step, m=6, n=2
ACTION_SEQUENCES = [
    (((4, 2), (3, 1), (4, 1)), (2, 0), [
        (1, None, None, None),
        (0, ((4, 2), (4, 1)), (2,), "T0+@2"),
        (1, ((4, 2), (4, 1)), (3,), "T1+@3"),
        (0, ((4, 2), (4, 1)), (4,), "|0+@4 *-+@4"),
        (1, ((4, 2), (3, 2), (4, 1)), (6, 4), "|1+@6 *-+@4"),
    ]),
    (((3, 2), (2, 1), (3, 1)), (2, 0), [
        (0, ((3, 2), (3, 1)), (2,), "|0-@2 *++@2"),
        (1, ((3, 2), (4, 2), (3, 1)), (4, 2), "|1-@4 *++@2"),
        (0, ((3, 2), (4, 2), (3, 1)), (6, 2), "|0-@6 *++@2"),
    ]),
]


def _fmt(elems):
    return " ".join(repr(e) for e in elems)


def worked_examples():
    bad = []
    for s, left, right, want in WORKED_DECOMPOSITIONS:
        if _fmt(wl.decompose_wall(6, 2, left, right, s)) != want:
            bad.append((s, left, right))
    return bad


def action_examples():
    """Replay the m=6, n=2 sequences in all three pictures."""
    bad = []
    for k, (doms, pos, steps) in enumerate(ACTION_SEQUENCES):
        d = wl.WallSequence(6, 2, doms, pos)
        p = wl.walls_to_path(d)
        w = pa.walls_to_particles(d)
        for i, want_d, want_s, want_e in steps:
            nd, np_, nw = wl.wall_f(i, d), pt.signature_f(i, p), pa.particle_f(i, w)
            if want_d is None:
                if nd is not None or np_ is not None or nw is not None:
                    bad.append((k, i, "expected null"))
                continue
            if nd is None or nd.domains != want_d or nd.positions != want_s or _fmt(wl.normal_order_walls(nd)) != want_e:
                bad.append((k, i, nd))
                break
            if np_ is None or wl.path_to_walls(np_) != nd:
                bad.append((k, i, "path picture"))
            if nw is None or nw.key() != pa.walls_to_particles(nd).key():
                bad.append((k, i, "particle picture"))
            d, p, w = nd, np_, nw
    return bad


def wall_checks(cfg: RunConfig):
    m, n = cfg.m, cfg.n
    lo, hi = _window(cfg)

    def codec():
        count = bad = 0
        seen = set()
        for p in full_paths(m, n, lo, hi):
            d = wl.path_to_walls(p)
            count += 1
            seen.add(d)
            if wl.walls_to_path(d) != p or wl.path_to_walls(wl.walls_to_path(d)) != d:
                bad += 1
        bad += count - len(seen)
        return not bad, f"{count} paths, {len(seen)} wall sequences, {bad} failures"

    def equivariance():
        count = bad = 0
        for p in full_paths(m, n, lo, hi):
            d = wl.path_to_walls(p)
            for i in (0, 1):
                for path_op, wall_op in ((pt.signature_f, wl.wall_f), (pt.signature_e, wl.wall_e)):
                    q = path_op(i, p)
                    got = wall_op(i, d)
                    count += 1
                    if got != (None if q is None else wl.path_to_walls(q)):
                        bad += 1
                    elif got is not None and path_op is pt.signature_f:
                        bad += wl.wall_energy(got) != wl.wall_energy(d) - 1
        return not bad, f"{count} operator applications, {bad} failures"

    scale = f"(m,n)=({m},{n}) window [{lo},{hi}]"
    yield _run("M2 M1 = id and M1 M2 = id", scale, codec)
    yield _run("worked decompositions (m,n)=(6,2)", "10 walls", lambda: (not worked_examples(), ""))
    yield _run("wall f/e equal path f/e", scale, equivariance)
    yield _run("action sequences (m,n)=(6,2)", "2 sequences", lambda: (not action_examples(), ""))


def particle_words(m, n, modes, length):
    syms = []
    for md in modes:
        for a in (1, -1):
            syms.append(pa.half(a, 0 if a == (-1) ** (md % 2) else 1, md))
            syms.append(pa.zero(a, -a * (-1) ** (md % 2), md))
    inits = [(a, b) for a in range(m - n + 1) for b in range(n + 1)]
    for size in range(length + 1):
        for word in itertools.product(syms, repeat=size):
            for init in inits:
                w = pa.ParticleWord(m, n, word, init)
                if w.is_valid():
                    yield w


def orbit(w: pa.ParticleWord):
    """All valid words reachable by exchanges: ({key: sign}, vanishes)."""
    seen = {w.key(): w.sign}
    stack = [w]
    null = False
    while stack:
        v = stack.pop()
        for k in range(len(v.symbols) - 1):
            u = pa.apply_relation(v, k)
            if not u.is_valid():
                continue
            s = seen.get(u.key())
            if s is None:
                seen[u.key()] = u.sign
                stack.append(u)
            elif s != u.sign:
                null = True
    return seen, null


def orbit_census(m, n, modes, length):
    """Count orbits by kind; 'bad' counts orbits violating the basis statements."""
    done = set()
    stats = {"orbits": 0, "null": 0, "bad": 0}
    for w in particle_words(m, n, modes, length):
        if w.key() in done:
            continue
        seen, null = orbit(w)
        done.update(seen)
        stats["orbits"] += 1
        members = [pa.ParticleWord(m, n, k[2], k[3], s) for k, s in seen.items()]
        nrep = [x for x in members if pa.is_normally_ordered(x)]
        srep = [x for x in members if pa.is_separately_ordered(x)]
        no, so = pa.normally_order(w), pa.separately_order(w)
        if null:
            stats["null"] += 1
            ok = not nrep and not srep and no is None and so is None
        else:
            ok = (len(nrep) == 1 and len(srep) == 1 and no is not None and so is not None
                  and (no.key(), no.sign) == (nrep[0].key(), nrep[0].sign)
                  and (so.key(), so.sign) == (srep[0].key(), srep[0].sign))
        stats["bad"] += not ok
    return stats


def particle_checks(cfg: RunConfig):
    m, n = cfg.m, cfg.n
    lo, hi = _window(cfg)

    def picture():
        count = bad = 0
        for p in full_paths(m, n, lo, hi):
            d = wl.path_to_walls(p)
            w = pa.walls_to_particles(d)
            count += 1
            if not pa.is_normally_ordered(w) or pa.particles_to_wall_sequence(w) != d:
                bad += 1
                continue
            for i in (0, 1):
                for wall_op, part_op in ((wl.wall_f, pa.particle_f), (wl.wall_e, pa.particle_e)):
                    dd, ww = wall_op(i, d), part_op(i, w)
                    want = None if dd is None else pa.walls_to_particles(dd).key()
                    bad += want != (None if ww is None else ww.key())
        return not bad, f"{count} configurations, {bad} failures"

    def bases():
        stats = orbit_census(m, n, range(-2, 3), 4 if (m, n) == (2, 1) else 3)
        return not stats["bad"], f"{stats['orbits']} orbits, {stats['null']} vanishing, {stats['bad']} failures"

    scale = f"(m,n)=({m},{n}) window [{lo},{hi}]"
    yield _run("particle picture matches walls", scale, picture)
    yield _run("one separately and one normally ordered word per orbit", f"(m,n)=({m},{n})", bases)


SUITES = {
    "rmatrix": rmatrix_checks,
    "crystal": crystal_checks,
    "morphisms": morphism_checks,
    "walls": wall_checks,
    "particles": particle_checks,
}


def run_suite(name: str, cfg: RunConfig):
    names = list(SUITES) if name == "all" else [name]
    out = []
    for nm in names:
        if nm not in SUITES:
            raise KeyError(nm)
        out.extend(SUITES[nm](cfg))
    return out
