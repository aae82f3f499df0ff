"""Theorem-driven freeness and supersolvability decisions with provenance."""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import permutations

from .catalog import D3
from .chordal import SimpleGraph, chordless_cycle, degree_orderings_initial_segment, is_threshold, perfect_elimination_ordering
from .core import InputError, SignedGraph, apply_switching, contract, induced_subgraph, switchings
from .oracle.arrangement import realize
from .oracle.freeness import FREE, OUT_OF_RANGE, freeness_decide
from .poly import chromatic_polynomial, divide_exact
from .signedstruct import (
    BalancedCycleWitness,
    find_frame_circuits,
    good_divisional_edges,
    is_balanced_chordal,
    is_flat_subgraph,
    is_signed_simplicial,
    peel_simplicial_extension,
    signed_elimination_ordering,
)

YES, NO, UNKNOWN = "yes", "no", "unknown"

MAIN_THEOREM = "MainTheorem"
EDELMAN_REINER = "EdelmanReiner"
ZASLAVSKY_SS = "ZaslavskySS"
FRAME_CIRCUIT = "FrameCircuitWitness"
SIMPLICIAL_PEEL = "SimplicialPeel"
ORACLE = "OracleFallback"
UNDECIDED = "Unknown"

DEFAULT_ORACLE_LIMIT = 5


class VerificationError(AssertionError):
    """A theorem verdict disagreed with the oracle."""

    def __init__(self, g: SignedGraph, verdict: Verdict, oracle_status: str):
        self.graph, self.verdict, self.oracle_status = g, verdict, oracle_status
        super().__init__(f"{verdict.provenance} says free={verdict.free}, oracle says {oracle_status} for {g!r}")


@dataclass(frozen=True)
class Verdict:
    balanced_chordal: bool | None = None
    witness: BalancedCycleWitness | None = None
    supersolvable: str = UNKNOWN
    ss_certificate: dict | None = None
    free: str = UNKNOWN
    provenance: str = UNDECIDED
    certificate: dict | None = None
    cross_checked: bool = False

    @property
    def decided(self) -> bool:
        return self.free != UNKNOWN

    def to_json(self) -> dict:
        return {
            "balanced_chordal": self.balanced_chordal,
            "witness": self.witness.to_json() if self.witness else None,
            "supersolvable": self.supersolvable,
            "ss_certificate": self.ss_certificate,
            "free": self.free,
            "provenance": self.provenance,
            "certificate": self.certificate,
            "cross_checked": self.cross_checked,
        }


def _bc(g: SignedGraph) -> tuple[bool, BalancedCycleWitness | None]:
    res = is_balanced_chordal(g)
    return (True, None) if res is True else (False, res)


def _yn(flag: bool) -> str:
    return YES if flag else NO


# -- Edelman-Reiner ------------------------------------------------------

def er_applicable(g: SignedGraph) -> bool:
    return SimpleGraph.positive_part(g).is_complete()


def er_decide(g: SignedGraph) -> Verdict:
    """Free iff G- is threshold and L is an initial segment of a degree ordering of G-."""
    if not er_applicable(g):
        raise InputError("Edelman-Reiner needs a complete positive part")
    neg = SimpleGraph.negative_part(g)
    thr = is_threshold(neg)
    segment = bool(thr) and degree_orderings_initial_segment(neg, g.loops)
    degrees = {v: neg.degree(v) for v in g.vertices}
    cert = {"theorem": EDELMAN_REINER, "threshold": thr.to_json(), "loops": sorted(g.loops),
            "negative_degrees": {str(v): d for v, d in sorted(degrees.items())},
            "initial_segment": segment}
    bc, wit = _bc(g)
    return Verdict(bc, wit, free=_yn(segment), provenance=EDELMAN_REINER, certificate=cert)


# -- main theorem ----------------------------------------------------------

def main_theorem_applicable(g: SignedGraph) -> bool:
    return g.neg <= g.pos


def main_theorem_decide(g: SignedGraph) -> Verdict:
    """E- within E+: full loops give free iff balanced chordal; otherwise only
    'not balanced chordal' is conclusive (non-free)."""
    if not main_theorem_applicable(g):
        raise InputError("the main theorem needs every negative edge to be positive too")
    bc, wit = _bc(g)
    full = g.loops == g.vertex_set
    cert = {"theorem": MAIN_THEOREM, "full_loops": full}
    if full:
        return Verdict(bc, wit, free=_yn(bc), provenance=MAIN_THEOREM, certificate=cert)
    if not bc:
        return Verdict(bc, wit, free=NO, provenance=MAIN_THEOREM, certificate=cert)
    return Verdict(bc, wit, free=UNKNOWN, provenance=UNDECIDED,
                   certificate={"note": "partial loop sets with a balanced chordal graph are open"})


# -- Zaslavsky supersolvability --------------------------------------------

@lru_cache(maxsize=None)
def _d3_keys() -> frozenset:
    return frozenset(_switch_iso_keys(D3()))


def _switch_iso_keys(g: SignedGraph) -> set:
    """Every labelled form of g on 0..n-1 up to switching (small n only)."""
    keys = set()
    vs = g.vertices
    for perm in permutations(range(len(vs))):
        h = g.relabel(dict(zip(vs, perm)))
        for nu in switchings(h, fix_first=False):
            s = apply_switching(h, nu)
            keys.add((s.pos, s.neg, s.loops))
    return keys


def _is_d3(g: SignedGraph) -> bool:
    if len(g.vertices) != 3 or g.loops:
        return False
    h = g.relabel({v: i for i, v in enumerate(g.vertices)})
    return (h.pos, h.neg, h.loops) in _d3_keys()


def _type_ii(g: SignedGraph) -> dict | None:
    """Loopless, and after some switching all negative edges meet one vertex v,
    N-(v) is a clique of F+ and F+ is chordal."""
    if g.loops:
        return None
    for nu in switchings(g):
        h = apply_switching(g, nu)
        pos = SimpleGraph(h.vertices, h.pos)
        peo = perfect_elimination_ordering(pos)
        if peo is None:
            continue
        centers = [v for v in h.vertices if all(v in e for e in h.neg)] if h.neg else list(h.vertices[:1])
        for v in centers:
            if pos.is_clique(h.neg_adj[v]):
                return {"switching": {str(k): s for k, s in sorted(nu.items())}, "center": v, "peo": peo}
    return None


def _extension_bases(g: SignedGraph) -> dict[frozenset, tuple[int, ...]]:
    """All W with g a simplicial extension of g[W], mapped to an adding order."""
    found = {g.vertex_set: ()}
    frontier = [g.vertex_set]
    while frontier:
        nxt = []
        for w in frontier:
            sub = induced_subgraph(g, w)
            for v in sorted(w):
                if is_signed_simplicial(sub, v):
                    smaller = w - {v}
                    if smaller not in found:
                        found[smaller] = (v,) + found[w]
                        nxt.append(smaller)
        frontier = nxt
    return found


def _components(g: SignedGraph) -> list[frozenset[int]]:
    return SimpleGraph(g.vertices, g.pos | g.neg).components()


def zaslavsky_ss_decide(g: SignedGraph) -> Verdict:
    """Zaslavsky's criterion, applied to each connected component.

    The criterion is stated for connected graphs: two disjoint unbalanced
    2-cycles give an independent (so supersolvable) arrangement but meet
    none of its branches.  A product is supersolvable iff every factor is.
    """
    comps = _components(g)
    if len(comps) <= 1:
        return _zaslavsky_connected(g)
    parts = [_zaslavsky_connected(induced_subgraph(g, c)) for c in comps]
    ok = all(v.supersolvable == YES for v in parts)
    cert = {"theorem": ZASLAVSKY_SS, "components": [dict(v.ss_certificate, vertices=sorted(c))
                                                    for v, c in zip(parts, comps)]}
    return Verdict(supersolvable=_yn(ok), ss_certificate=cert)


def _zaslavsky_connected(g: SignedGraph) -> Verdict:
    seo = signed_elimination_ordering(g)
    if seo is not None:
        cert = {"theorem": ZASLAVSKY_SS, "branch": "signed elimination ordering", "ordering": seo}
        return Verdict(supersolvable=YES, ss_certificate=cert)
    bases = _extension_bases(g)
    for w in sorted(bases, key=lambda s: (len(s), sorted(s))):
        base = induced_subgraph(g, w)
        order = list(bases[w])
        if _is_d3(base):
            cert = {"theorem": ZASLAVSKY_SS, "branch": "extension of D3", "base": sorted(w), "adding_order": order}
            return Verdict(supersolvable=YES, ss_certificate=cert)
        t2 = _type_ii(base)
        if t2 is not None:
            cert = {"theorem": ZASLAVSKY_SS, "branch": "extension of a one-vertex negative star",
                    "base": sorted(w), "adding_order": order, **t2}
            return Verdict(supersolvable=YES, ss_certificate=cert)
    return Verdict(supersolvable=NO, ss_certificate={"theorem": ZASLAVSKY_SS, "branch": None})


# -- frame circuits ------------------------------------------------------

def frame_circuit_refute(g: SignedGraph, max_edges: int | None = None) -> Verdict | None:
    """Non-free if a frame circuit with at least four edges is a flat, or G+ is not chordal."""
    for c in find_frame_circuits(g, max_edges):
        if len(c) >= 4 and is_flat_subgraph(g, c.support):
            cert = {"kind": c.kind, "edges": [e.to_json() for e in sorted(c.support)], "flat": True}
            return Verdict(free=NO, provenance=FRAME_CIRCUIT, certificate=cert)
    cyc = chordless_cycle(SimpleGraph.positive_part(g))
    if cyc is not None:
        cert = {"kind": "chordless_positive_cycle", "cycle": cyc}
        return Verdict(free=NO, provenance=FRAME_CIRCUIT, certificate=cert)
    return None


# -- division chain --------------------------------------------------------

def division_chain(g: SignedGraph) -> list[dict] | None:
    """Contract divisional edges (staying in the E- within E+, balanced chordal
    class) until every component has a complete positive part, then close
    each component with Edelman-Reiner.

    Each step divides chi(G) by chi(G/e); the factor is recorded.  Returns
    None when no chain proves freeness.
    """
    if not main_theorem_applicable(g) or g.loops != g.vertex_set or is_balanced_chordal(g) is not True:
        return None
    steps = []
    cur = g
    while True:
        open_comps = [c for c in _components(cur) if not er_applicable(induced_subgraph(cur, c))]
        if not open_comps:
            break
        good = {v: es for v, es in good_divisional_edges(cur).items() if v in open_comps[0]}
        if not good:
            return None
        e = good[min(good)][0]
        nxt = contract(cur, e)
        factor = divide_exact(chromatic_polynomial(cur), chromatic_polynomial(nxt))
        steps.append({"edge": [e.frm, e.to, e.sign], "factor": factor.to_json()})
        cur = nxt
    comps = sorted(sorted(c) for c in _components(cur))
    if any(er_decide(induced_subgraph(cur, c)).free != YES for c in comps):
        return None
    steps.append({"edelman_reiner": comps})
    return steps


# -- dispatch ------------------------------------------------------------

def _with_ss(v: Verdict, ss: Verdict, bc: bool, wit) -> Verdict:
    return replace(v, balanced_chordal=bc, witness=wit, supersolvable=ss.supersolvable,
                   ss_certificate=ss.ss_certificate)


def _check_chain(v: Verdict) -> None:
    # SEO => SS => free => BC
    if v.supersolvable == YES and v.free == NO:
        raise AssertionError("supersolvable but not free")
    if v.free == YES and v.balanced_chordal is False:
        raise AssertionError("free but not balanced chordal")


def _oracle_in_range(g: SignedGraph, limit: int) -> bool:
    return 0 < len(g.vertices) <= limit


def decide(g: SignedGraph, verify: bool = False, oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> Verdict:
    """Dispatch over the theorems; oracle last, when the graph is small enough.

    ``oracle_limit`` bounds the number of vertices handed to the oracle
    (0 disables it).  With ``verify`` a theorem verdict is compared with
    the oracle and a disagreement raises VerificationError.
    """
    bc, wit = _bc(g)
    ss = zaslavsky_ss_decide(g)
    v = _dispatch(g, bc, wit, ss, oracle_limit)
    v = _with_ss(v, ss, bc, wit)
    if v.free == NO and v.provenance != FRAME_CIRCUIT:
        fc = frame_circuit_refute(g)
        if fc is not None:
            v = replace(v, certificate=dict(v.certificate or {}, frame_circuit=fc.certificate))
    _check_chain(v)
    if verify and v.provenance != ORACLE and _oracle_in_range(g, max(oracle_limit, 1)):
        res = freeness_decide(realize(g))
        if res.status != OUT_OF_RANGE:
            if v.decided and _yn(res.status == FREE) != v.free:
                raise VerificationError(g, v, res.status)
            v = replace(v, cross_checked=True)
    return v


def _dispatch(g: SignedGraph, bc: bool, wit, ss: Verdict, oracle_limit: int) -> Verdict:
    if not g.vertices:
        return Verdict(free=YES, provenance=SIMPLICIAL_PEEL, certificate={"peeled": [], "base": []})

    if er_applicable(g):
        if not is_threshold(SimpleGraph.negative_part(g)):
            # not balanced chordal; the main theorem's witness is the sharper certificate
            return replace(main_theorem_decide(g), certificate={"theorem": MAIN_THEOREM, "via": "negative part not threshold"})
        return er_decide(g)

    base, peeled = peel_simplicial_extension(g)
    peel_cert = {"peeled": peeled, "base": list(base.vertices)}
    if not base.vertices:
        return Verdict(free=YES, provenance=SIMPLICIAL_PEEL, certificate=peel_cert)

    if er_applicable(base):
        er = er_decide(base)
        return replace(er, certificate=dict(er.certificate, **peel_cert))

    if main_theorem_applicable(base):
        mt = main_theorem_decide(base)
        if mt.decided:
            return replace(mt, certificate=dict(mt.certificate, **peel_cert))

    fc = frame_circuit_refute(g)
    if fc is not None:
        return fc

    if ss.supersolvable == YES:
        return Verdict(free=YES, provenance=ZASLAVSKY_SS, certificate=ss.ss_certificate)

    if _oracle_in_range(base, oracle_limit):
        res = freeness_decide(realize(base))
        if res.status != OUT_OF_RANGE:
            cert = dict(res.to_json(), **peel_cert)
            return Verdict(free=_yn(res.status == FREE), provenance=ORACLE, certificate=cert, cross_checked=True)

    return Verdict(free=UNKNOWN, provenance=UNDECIDED, certificate=peel_cert)
