"""altspin command line: verify, character, map, graph.

Exit codes: 0 pass, 1 check failure, 2 budget or diagnostic, 3 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import morphisms as mo
from . import particles as pa
from . import paths as pt
from . import walls as wl
from .suites import SUITES, RunConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _model_args(p):
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=1)


def build_parser():
    parser = _Parser(prog="altspin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=[*SUITES, "all"])
    _model_args(v)
    v.add_argument("--depth", type=int, default=6)
    v.add_argument("--max-level", type=int, default=3)
    v.add_argument("--window", type=int, default=8)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=2000)
    v.add_argument("--format", choices=["text", "json"], default="text")

    c = sub.add_parser("character", help="highest paths counted by energy, two ways")
    _model_args(c)
    c.add_argument("--a", type=int, default=0)
    c.add_argument("--b", type=int, default=0)
    c.add_argument("--max-energy", type=int, default=4)
    c.add_argument("--format", choices=["text", "json"], default="text")

    mp = sub.add_parser("map", help="convert between pictures")
    mp.add_argument("kind", choices=["iso", "walls", "particles"])
    mp.add_argument("--in", dest="infile", required=True)
    mp.add_argument("--out", dest="outfile", default="-")
    _model_args(mp)
    mp.add_argument("--max-steps", type=int, default=32)
    mp.add_argument("--budget", type=int, default=None)

    g = sub.add_parser("graph", help="DOT export of a crystal neighbourhood")
    _model_args(g)
    g.add_argument("--a", type=int, default=0)
    g.add_argument("--b", type=int, default=0)
    g.add_argument("--radius", type=int, default=2)
    return parser


def _emit(text, outfile="-"):
    if outfile == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(outfile, "w") as fh:
            fh.write(text + "\n")


def cmd_verify(args):
    cfg = RunConfig(m=args.m, n=args.n, depth=args.depth, max_level=args.max_level,
                    window=args.window, seed=args.seed, samples=args.samples)
    checks = []
    for check in run_suite(args.suite, cfg):
        checks.append(check)
        if args.format == "text":
            status = "PASS" if check.passed else ("BUDGET" if check.budget else "FAIL")
            print(f"{status}  {check.name}  [{check.scale}]  {check.detail}", flush=True)
    if args.format == "json":
        _emit(json.dumps({"schema": "altspin.report/1", "suite": args.suite,
                          "model": [cfg.m, cfg.n],
                          "checks": [vars(c) for c in checks]}, indent=2))
    if any(c.budget for c in checks):
        return EXIT_BUDGET
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


def cmd_character(args):
    pt.GroundLabel(args.m, args.n, args.a, args.b)
    if args.max_energy < 0:
        raise ValueError("max energy must be nonnegative")
    direct = pt.character(args.m, args.n, args.a, args.b, args.max_energy)
    rsos = pt.rsos_character(args.m, args.n, args.a, args.b, args.max_energy)
    agree = direct == rsos
    if args.format == "json":
        _emit(json.dumps({"schema": "altspin.character/1", "model": [args.m, args.n],
                          "label": [args.a, args.b], "table": [[e, c] for e, c in enumerate(direct)],
                          "rsos": rsos, "agree": agree}))
    else:
        for e, (c1, c2) in enumerate(zip(direct, rsos)):
            print(f"{e}\t{c1}" + ("" if c1 == c2 else f"\tRSOS {c2}"))
        print("agree" if agree else "DISAGREE")
    return EXIT_OK if agree else EXIT_FAIL


def _map(kind, obj, args):
    schema = obj.get("schema")
    header = {"max_steps": args.max_steps, "budget": args.budget}
    if kind == "iso":
        v, w = mo.tensor_from_json(obj)
        out = pt.path_to_json(mo.full_iso(v, w, args.max_steps, args.budget))
    elif kind == "walls":
        if schema == wl.WALL_SCHEMA:
            out = pt.path_to_json(wl.walls_to_path(wl.walls_from_json(obj, args.m, args.n)))
        else:
            path = pt.path_from_json(obj)
            if not isinstance(path, pt.FullPath):
                raise ValueError("walls need a bi-infinite path (give boundary_right)")
            out = wl.walls_to_json(wl.path_to_walls(path))
    else:
        if schema == pa.PARTICLE_SCHEMA:
            out = wl.walls_to_json(pa.particles_to_wall_sequence(pa.particles_from_json(obj, args.m, args.n)))
        else:
            out = pa.particles_to_json(pa.walls_to_particles(wl.walls_from_json(obj, args.m, args.n)))
    out["header"] = {"model": [out["m"], out["n"]], **header}
    return out


def cmd_map(args):
    with (sys.stdin if args.infile == "-" else open(args.infile)) as fh:
        obj = json.load(fh)
    _emit(json.dumps(_map(args.kind, obj, args), indent=2), args.outfile)
    return EXIT_OK


def cmd_graph(args):
    label = pt.GroundLabel(args.m, args.n, args.a, args.b)
    _emit(mo.crystal_dot(pt.SemiPath.ground(label), args.radius))
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "character": cmd_character, "map": cmd_map, "graph": cmd_graph}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (mo.BudgetError, pt.WindowError) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
