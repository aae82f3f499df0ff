"""Command-line interface: ``sga <command> ...``.

Exit codes: 0 decided, 1 cross-check disagreement, 2 parse or usage error,
3 Unknown verdict (or oracle out of range), 4 hypothesis violation.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import catalog
from .chordal import NotChordalError, SimpleGraph, build_csg
from .core import InputError, SignedGraph
from .decide import (
    DEFAULT_ORACLE_LIMIT,
    VerificationError,
    decide,
    er_decide,
    zaslavsky_ss_decide,
)
from .generate import CLASSES, LOOP_POLICIES, all_graphs, count_graphs, random_graph
from .oracle.arrangement import realize
from .oracle.freeness import FREE, OUT_OF_RANGE, freeness_decide
from .oracle.lattice import intersection_lattice, is_supersolvable_lattice
from .poly import chromatic_polynomial
from .signedstruct import is_balanced_chordal

EXIT_OK, EXIT_DISAGREE, EXIT_PARSE, EXIT_UNKNOWN, EXIT_HYPOTHESIS = 0, 1, 2, 3, 4
ORACLE_MAX_VERTICES = 5


class ParseError(Exception):
    pass


def load_graph(source: str) -> SignedGraph:
    """Read a graph from a JSON file, '-' for stdin, or 'named:<name>'."""
    if source.startswith("named:"):
        try:
            return catalog.named(source[len("named:"):])
        except KeyError as exc:
            raise ParseError(str(exc.args[0])) from None
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text()
    except OSError as exc:
        raise ParseError(f"{source}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        return SignedGraph.from_dict(data)
    except InputError as exc:
        raise ParseError(f"{source}: {exc}") from None


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _emit(obj, out) -> None:
    out.write(dump(obj) + "\n")


# -- commands ------------------------------------------------------------

def cmd_analyze(args, out) -> int:
    g = load_graph(args.graph)
    try:
        v = decide(g, verify=args.verify, oracle_limit=args.oracle_limit)
    except VerificationError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DISAGREE
    data = v.to_json()
    data["rank"] = _rank(g)
    _emit(data, out)
    return EXIT_OK if v.decided else EXIT_UNKNOWN


def _rank(g: SignedGraph) -> int:
    from .core import rank

    return rank(g)


def cmd_chromatic(args, out) -> int:
    p = chromatic_polynomial(load_graph(args.graph))
    if args.format == "text":
        out.write(str(p) + "\n")
    else:
        _emit({"coefficients": p.to_json(), "polynomial": str(p)}, out)
    return EXIT_OK


def cmd_characteristic(args, out) -> int:
    g = load_graph(args.graph)
    lat = intersection_lattice(realize(g))
    p = lat.characteristic_polynomial()
    if args.format == "text":
        out.write(str(p) + "\n")
    else:
        _emit({"coefficients": p.to_json(), "polynomial": str(p), "flats": len(lat), "rank": lat.rank}, out)
    return EXIT_OK


def cmd_freeness(args, out) -> int:
    g = load_graph(args.graph)
    res = freeness_decide(realize(g))
    _emit(res.to_json(with_basis=args.basis), out)
    return EXIT_UNKNOWN if res.status == OUT_OF_RANGE else EXIT_OK


def cmd_supersolvable(args, out) -> int:
    g = load_graph(args.graph)
    v = zaslavsky_ss_decide(g)
    data = {"supersolvable": v.supersolvable, "certificate": v.ss_certificate}
    if args.lattice:
        data["lattice"] = is_supersolvable_lattice(realize(g)).to_json()
    _emit(data, out)
    return EXIT_OK


def cmd_balanced_chordal(args, out) -> int:
    res = is_balanced_chordal(load_graph(args.graph))
    _emit({"balanced_chordal": res is True, "witness": None if res is True else res.to_json()}, out)
    return EXIT_OK


def cmd_csg(args, out) -> int:
    g = load_graph(args.graph)
    try:
        csg = build_csg(SimpleGraph.positive_part(g))
    except NotChordalError as exc:
        _emit({"error": "positive part is not chordal", "chordless_cycle": exc.cycle}, sys.stderr)
        return EXIT_HYPOTHESIS
    if args.format == "dot":
        out.write(csg.to_dot())
    else:
        _emit(
            {
                "cliques": [sorted(c) for c in csg.clique_nodes],
                "separators": [sorted(s) for s in csg.separator_nodes],
                "edges": sorted(map(list, csg.cs_edges)),
                "arcs": sorted(map(list, csg.arcs)),
                "boxes": [sorted(map(list, b)) for b in csg.boxes],
                "sink_boxes": csg.sink_boxes,
            },
            out,
        )
    return EXIT_OK


def cmd_random(args, out) -> int:
    rng = random.Random(args.seed)
    g = random_graph(rng, args.n, args.cls, args.loops)
    text = g.to_json() + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


# -- cross-check harness ---------------------------------------------------

def _graphs(n: int, cls: str, loops: str, limit: int, samples: int, seed: int):
    """Exhaustive when the class has at most ``limit`` members, otherwise a seeded sample."""
    if count_graphs(n, cls, loops) <= limit:
        yield from all_graphs(n, cls, loops)
        return
    rng = random.Random(seed)
    pol = "random" if loops == "all-subsets" else loops
    for _ in range(samples):
        yield random_graph(rng, n, cls, pol)


def _check_main_theorem(g):
    bc = is_balanced_chordal(g) is True
    free = freeness_decide(realize(g)).status == FREE
    return bc == free, {"balanced_chordal": bc, "oracle_free": free}


def _check_loops(g):
    # free with any loop set => balanced chordal
    free = freeness_decide(realize(g)).status == FREE
    bc = is_balanced_chordal(g) is True
    return (not free) or bc, {"balanced_chordal": bc, "oracle_free": free}


def _check_chromatic(g):
    a = chromatic_polynomial(g)
    b = intersection_lattice(realize(g)).characteristic_polynomial()
    return a == b, {"chromatic": a.to_json(), "characteristic": b.to_json()}


def _check_er(g):
    er = er_decide(g).free == "yes"
    free = freeness_decide(realize(g)).status == FREE
    return er == free, {"edelman_reiner": er, "oracle_free": free}


def _check_ss(g):
    z = zaslavsky_ss_decide(g).supersolvable == "yes"
    lat = bool(is_supersolvable_lattice(realize(g)))
    return z == lat, {"zaslavsky": z, "lattice": lat}


def _check_decide(g):
    try:
        v = decide(g, verify=True)
    except (VerificationError, AssertionError) as exc:
        return False, {"error": str(exc)}
    return True, {"free": v.free}


MODES = {
    # mode: (check, graph class, loop policy)
    "main-theorem": (_check_main_theorem, "neg-in-pos", "full"),
    "loops": (_check_loops, "neg-in-pos", "all-subsets"),
    "chromatic": (_check_chromatic, "any", "all-subsets"),
    "er": (_check_er, "complete-pos", "all-subsets"),
    "ss": (_check_ss, "neg-in-pos", "all-subsets"),
    "decide": (_check_decide, "any", "all-subsets"),
}


def cmd_crosscheck(args, out) -> int:
    check, cls, loops = MODES[args.mode]
    if args.max_vertices > ORACLE_MAX_VERTICES:
        print(f"refusing: oracle modes support at most {ORACLE_MAX_VERTICES} vertices", file=sys.stderr)
        return EXIT_PARSE
    if args.loops:
        loops = args.loops
    total, bad = 0, []
    for n in range(1, args.max_vertices + 1):
        for g in _graphs(n, cls, loops, args.exhaustive_limit, args.samples, args.seed + n):
            total += 1
            ok, info = check(g)
            if not ok:
                bad.append((g, info))
    report = {"mode": args.mode, "max_vertices": args.max_vertices, "instances": total, "disagreements": len(bad)}
    if bad:
        g, info = min(bad, key=lambda b: (len(b[0].vertices), len(b[0].edges()), b[0].to_json()))
        report["minimal_counterexample"] = {"graph": g.to_dict(), "detail": info}
        Path(args.dump).write_text(g.to_json() + "\n")
        report["dumped_to"] = args.dump
    _emit(report, out)
    return EXIT_DISAGREE if bad else EXIT_OK


# -- parser --------------------------------------------------------------

def _seed(default: int) -> int:
    env = os.environ.get("SGA_SEED")
    return int(env) if env not in (None, "") else default


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sga", description="Freeness and supersolvability of signed-graphic arrangements.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        c = sub.add_parser(name, help=help_)
        c.add_argument("graph", help="graph JSON file, '-' for stdin, or named:<name> (e.g. named:B3)")
        c.set_defaults(func=func)
        return c

    c = graph_cmd("analyze", cmd_analyze, "full verdict with provenance")
    c.add_argument("--verify", action="store_true", help="cross-check theorem verdicts with the oracle")
    c.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT,
                   help="largest vertex count handed to the oracle (0 disables it)")
    for name, func in (("chromatic", cmd_chromatic), ("characteristic", cmd_characteristic)):
        c = graph_cmd(name, func, f"{name} polynomial")
        c.add_argument("--format", choices=("json", "text"), default="json")
    c = graph_cmd("freeness", cmd_freeness, "oracle freeness test")
    c.add_argument("--basis", action="store_true", help="include the Saito basis")
    c = graph_cmd("supersolvable", cmd_supersolvable, "Zaslavsky supersolvability")
    c.add_argument("--lattice", action="store_true", help="also run the lattice filtration search")
    graph_cmd("balanced-chordal", cmd_balanced_chordal, "balanced chordality with witness")
    c = graph_cmd("csg", cmd_csg, "clique-separator graph of the positive part")
    c.add_argument("--format", choices=("dot", "json"), default="dot")

    c = sub.add_parser("random", help="seeded random graph")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--class", dest="cls", choices=sorted(CLASSES), default="neg-in-pos")
    c.add_argument("--loops", choices=("full", "none", "random"), default="full")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_random)

    c = sub.add_parser("crosscheck", help="theorem versus oracle harness")
    c.add_argument("--mode", choices=sorted(MODES), required=True)
    c.add_argument("--max-vertices", type=int, default=3)
    c.add_argument("--exhaustive-limit", type=int, default=20000, help="enumerate classes up to this size")
    c.add_argument("--samples", type=int, default=500, help="sample size for larger classes")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--loops", choices=LOOP_POLICIES, help="override the mode's loop policy")
    c.add_argument("--dump", default="sga-counterexample.json")
    c.set_defaults(func=cmd_crosscheck)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    if hasattr(args, "seed"):
        args.seed = _seed(args.seed)
    if getattr(args, "n", 1) is not None and getattr(args, "n", 1) < 1:
        print("n must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
