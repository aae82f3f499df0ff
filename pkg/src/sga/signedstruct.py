"""Structure predicates on signed graphs.

Signed-simplicial vertices and elimination orderings, balanced chordality,
frame circuits of the signed-graphic matroid, flats, divisional edges and
simplicial-extension peeling.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .chordal import SimpleGraph, chordless_cycle
from .core import (
    LOOP,
    NEG,
    POS,
    DirectedEdge,
    Edge,
    InputError,
    SignedGraph,
    _pair,
    apply_switching,
    contract,
    induced_subgraph,
    switchings,
)
from .poly import chromatic_polynomial, divide_exact


def _sign_edge(sign: int, u: int, v: int) -> Edge:
    a, b = _pair(u, v)
    return Edge(sign, a, b)


# -- signed-simplicial vertices -----------------------------------------

def is_signed_simplicial(g: SignedGraph, v: int) -> bool:
    if v not in g.vertex_set:
        raise InputError(f"unknown vertex {v}")
    pos, neg = g.pos_adj[v], g.neg_adj[v]
    for same in (pos, neg):
        for a, b in combinations(sorted(same), 2):
            if _pair(a, b) not in g.pos:
                return False
    for a in pos:
        for b in neg:
            if a != b and _pair(a, b) not in g.neg:
                return False
    if v in g.loops and not (pos | neg) <= g.loops:
        return False
    return (pos & neg) <= g.loops


def signed_simplicial_vertices(g: SignedGraph) -> list[int]:
    return [v for v in g.vertices if is_signed_simplicial(g, v)]


def signed_elimination_ordering(g: SignedGraph) -> list[int] | None:
    """Ordering (v1..vn), each v_k signed simplicial in G[v1..vk]; full backtracking."""

    @lru_cache(maxsize=None)
    def solve(alive: frozenset[int]):
        if not alive:
            return ()
        sub = induced_subgraph(g, alive)
        for v in sorted(alive):
            if is_signed_simplicial(sub, v):
                rest = solve(alive - {v})
                if rest is not None:
                    return rest + (v,)
        return None

    found = solve(g.vertex_set)
    return None if found is None else list(found)


def greedy_elimination(g: SignedGraph) -> list[int] | None:
    """First-choice elimination without backtracking; None when it gets stuck."""
    alive = set(g.vertices)
    removed = []
    while alive:
        sub = induced_subgraph(g, alive)
        pick = next((v for v in sorted(alive) if is_signed_simplicial(sub, v)), None)
        if pick is None:
            return None
        removed.append(pick)
        alive.remove(pick)
    return removed[::-1]


def is_signed_elimination_ordering(g: SignedGraph, order: Sequence[int]) -> bool:
    if sorted(order) != list(g.vertices):
        return False
    return all(
        is_signed_simplicial(induced_subgraph(g, order[: k + 1]), order[k]) for k in range(len(order))
    )


def peel_simplicial_extension(g: SignedGraph) -> tuple[SignedGraph, list[int]]:
    """Strip signed-simplicial vertices until none is left.

    Returns the base and the removed vertices in removal order; reading
    that list backwards re-adds them as a simplicial extension of the base.
    """
    cur = g
    peeled: list[int] = []
    while cur.vertices:
        ss = signed_simplicial_vertices(cur)
        if not ss:
            break
        peeled.append(ss[0])
        cur = cur.without(ss[0])
    return cur, peeled


def is_simplicial_extension_of(g: SignedGraph, w: Iterable[int]) -> list[int] | None:
    """Order of V - W adding signed-simplicial vertices one at a time, or None."""
    base = frozenset(w)
    if not base <= g.vertex_set:
        raise InputError("base vertices must be vertices of the graph")

    @lru_cache(maxsize=None)
    def reach(alive: frozenset[int]):
        if alive == base:
            return ()
        sub = induced_subgraph(g, alive)
        for v in sorted(alive - base):
            if is_signed_simplicial(sub, v):
                rest = reach(alive - {v})
                if rest is not None:
                    return rest + (v,)
        return None

    found = reach(g.vertex_set)
    return None if found is None else list(found)


# -- cycles and balanced chordality -------------------------------------

def _simple_cycles(g: SignedGraph, min_len: int = 3, max_len: int | None = None):
    """Vertex cycles, each once: start at the minimum, second < last."""
    vs = g.vertices
    adj = {v: g.pos_adj[v] | g.neg_adj[v] for v in vs}
    max_len = max_len or len(vs)
    for start in vs:
        path = [start]
        on_path = {start}

        def extend():
            last = path[-1]
            for nxt in sorted(adj[last]):
                if nxt == start and len(path) >= min_len and path[1] < path[-1]:
                    yield list(path)
                elif nxt > start and nxt not in on_path and len(path) < max_len:
                    path.append(nxt)
                    on_path.add(nxt)
                    yield from extend()
                    path.pop()
                    on_path.remove(nxt)

        yield from extend()


def _sign_choices(g: SignedGraph, cycle: Sequence[int]):
    k = len(cycle)
    options = []
    for i in range(k):
        p = _pair(cycle[i], cycle[(i + 1) % k])
        options.append([s for s, es in ((POS, g.pos), (NEG, g.neg)) if p in es])
    return product(*options)


@dataclass(frozen=True)
class BalancedCycleWitness:
    cycle: tuple[int, ...]
    signs: tuple[int, ...]
    checked_chords: tuple[tuple[Edge, str], ...] = ()

    @property
    def length(self) -> int:
        return len(self.cycle)

    def __bool__(self) -> bool:
        # a witness means "not balanced chordal"
        return False

    def edges(self) -> list[Edge]:
        k = len(self.cycle)
        return [_sign_edge(self.signs[i], self.cycle[i], self.cycle[(i + 1) % k]) for i in range(k)]

    def to_json(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "signs": ["+" if s == POS else "-" for s in self.signs],
            "checked_chords": [[e.to_json(), why] for e, why in self.checked_chords],
        }


def _chord_report(g: SignedGraph, cycle, signs):
    """Return (has balanced chord, refutations of every non-cycle edge on the cycle)."""
    k = len(cycle)
    pos_of = {v: i for i, v in enumerate(cycle)}
    used = {_sign_edge(signs[i], cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    # prefix parity of negative edges along the cycle
    prefix = [0]
    for s in signs:
        prefix.append(prefix[-1] + (s == NEG))
    reports = []
    for a, b in combinations(sorted(cycle), 2):
        i, j = sorted((pos_of[a], pos_of[b]))
        for sign, es in ((POS, g.pos), (NEG, g.neg)):
            e = _sign_edge(sign, a, b)
            if _pair(a, b) not in es or e in used:
                continue
            if j - i in (1, k - 1):
                reports.append((e, "parallel to a cycle edge: splits off an unbalanced 2-cycle"))
                continue
            arc = prefix[j] - prefix[i]
            neg_chord = sign == NEG
            if (arc + neg_chord) % 2 == 0:
                return True, []
            reports.append(
                (e, f"splits into unbalanced cycles {list(cycle[i:j + 1])} and "
                    f"{list(cycle[j:]) + list(cycle[:i + 1])}")
            )
    return False, reports


def balanced_cycles(g: SignedGraph, min_len: int = 4):
    for cyc in _simple_cycles(g, min_len=min_len):
        for signs in _sign_choices(g, cyc):
            if sum(s == NEG for s in signs) % 2 == 0:
                yield cyc, signs


def is_balanced_chordal(g: SignedGraph) -> bool | BalancedCycleWitness:
    """True, or a balanced cycle of length >= 4 with every chord refuted."""
    for cyc, signs in balanced_cycles(g):
        has_chord, reports = _chord_report(g, cyc, signs)
        if not has_chord:
            return BalancedCycleWitness(tuple(cyc), tuple(signs), tuple(reports))
    return True


def check_witness(g: SignedGraph, w: BalancedCycleWitness) -> bool:
    """Re-verify a witness against the graph from scratch."""
    if w.length < 4 or len(set(w.cycle)) != w.length:
        return False
    if any(not g.has_edge(e) for e in w.edges()):
        return False
    if sum(s == NEG for s in w.signs) % 2:
        return False
    has_chord, reports = _chord_report(g, list(w.cycle), list(w.signs))
    return not has_chord and {e for e, _ in reports} == {e for e, _ in w.checked_chords}


def balanced_chordal_by_switching(g: SignedGraph) -> bool:
    """Cross-check: not balanced chordal iff some switching has a non-chordal G+."""
    for nu in switchings(g):
        h = apply_switching(g, nu)
        if chordless_cycle(SimpleGraph(h.vertices, h.pos)) is not None:
            return False
    return True


# -- matroid: rank, circuits, flats -------------------------------------

def edge_set_rank(g: SignedGraph, edges: Iterable[Edge]) -> int:
    """Rank of an edge set in the frame matroid: |V| - #balanced components."""
    from .core import rank

    return rank(g.edge_subgraph(edges))


@dataclass(frozen=True)
class FrameCircuit:
    kind: str  # balanced_cycle | loose_handcuff | tight_handcuff
    support: frozenset[Edge]

    def __len__(self) -> int:
        return len(self.support)

    def vertices(self) -> frozenset[int]:
        return frozenset(x for e in self.support for x in (e.u, e.v))

    def sort_key(self):
        order = {"tight_handcuff": 0, "loose_handcuff": 1, "balanced_cycle": 2}
        return (len(self.support), order[self.kind], sorted(self.support))

    def to_json(self) -> dict:
        return {"kind": self.kind, "edges": [e.to_json() for e in sorted(self.support)]}


def _signed_cycles(g: SignedGraph, max_edges: int):
    """All cycles as (vertex set, edge set, balanced), 1- and 2-cycles included."""
    for v in sorted(g.loops):
        yield frozenset([v]), frozenset([Edge(LOOP, v, v)]), False
    for u, v in sorted(g.pos & g.neg):
        yield frozenset([u, v]), frozenset([Edge(POS, u, v), Edge(NEG, u, v)]), False
    for cyc in _simple_cycles(g, min_len=3, max_len=max_edges):
        k = len(cyc)
        for signs in _sign_choices(g, cyc):
            es = frozenset(_sign_edge(signs[i], cyc[i], cyc[(i + 1) % k]) for i in range(k))
            yield frozenset(cyc), es, sum(s == NEG for s in signs) % 2 == 0


def _connecting_paths(g: SignedGraph, sources, targets, avoid, max_len):
    """Signed paths from sources to targets; interior avoids ``avoid``."""
    adj = {v: g.pos_adj[v] | g.neg_adj[v] for v in g.vertices}
    for s in sorted(sources):
        stack = [(s, [s])]
        while stack:
            x, path = stack.pop()
            if len(path) - 1 >= max_len:
                continue
            for y in sorted(adj[x]):
                if y in path:
                    continue
                if y in targets:
                    full = path + [y]
                    opts = []
                    for a, b in zip(full, full[1:]):
                        p = _pair(a, b)
                        opts.append([s_ for s_, es in ((POS, g.pos), (NEG, g.neg)) if p in es])
                    for signs in product(*opts):
                        yield frozenset(_sign_edge(sg, a, b) for sg, (a, b) in zip(signs, zip(full, full[1:])))
                elif y not in avoid:
                    stack.append((y, path + [y]))


def find_frame_circuits(g: SignedGraph, max_edges: int | None = None) -> list[FrameCircuit]:
    """All frame circuits with at most ``max_edges`` edges, sorted canonically."""
    if max_edges is None:
        max_edges = len(g.vertices) + 1
    cycles = list(_signed_cycles(g, max_edges))
    found: dict[frozenset[Edge], str] = {}
    for vs, es, bal in cycles:
        if bal and len(es) <= max_edges:
            found[es] = "balanced_cycle"
    unbal = [(vs, es) for vs, es, bal in cycles if not bal]
    for (v1, e1), (v2, e2) in combinations(unbal, 2):
        size = len(e1) + len(e2)
        if size > max_edges:
            continue
        common = v1 & v2
        if len(common) == 1:
            found.setdefault(e1 | e2, "tight_handcuff")
        elif not common:
            budget = max_edges - size
            if budget < 1:
                continue
            for path in _connecting_paths(g, v1, v2, v1 | v2, budget):
                found.setdefault(e1 | e2 | path, "loose_handcuff")
    circuits = [FrameCircuit(kind, es) for es, kind in found.items()]
    return sorted(circuits, key=FrameCircuit.sort_key)


def is_circuit_by_rank(g: SignedGraph, edges: Iterable[Edge]) -> bool:
    """Independent check: minimally dependent in the frame matroid."""
    es = list(edges)
    if edge_set_rank(g, es) != len(es) - 1:
        return False
    return all(edge_set_rank(g, es[:i] + es[i + 1:]) == len(es) - 1 for i in range(len(es)))


def closure(g: SignedGraph, edges: Iterable[Edge]) -> frozenset[Edge]:
    f = frozenset(edges)
    r = edge_set_rank(g, f)
    return f | {e for e in g.edges() if e not in f and edge_set_rank(g, f | {e}) == r}


def is_flat_subgraph(g: SignedGraph, f: Iterable[Edge]) -> bool:
    f = frozenset(f)
    for e in f:
        if not g.has_edge(e):
            raise InputError(f"{e} is not an edge of the graph")
    return closure(g, f) == f


# -- divisional edges ----------------------------------------------------

def divisional_edge(g: SignedGraph, e: DirectedEdge) -> bool:
    quotient = divide_exact(chromatic_polynomial(g), chromatic_polynomial(contract(g, e)))
    return quotient is not None


def incident_edges(g: SignedGraph, v: int) -> list[DirectedEdge]:
    out = [DirectedEdge(v, u, POS) for u in sorted(g.pos_adj[v])]
    return out + [DirectedEdge(v, u, NEG) for u in sorted(g.neg_adj[v])]


def negatives_within_positives(g: SignedGraph) -> bool:
    return g.neg <= g.pos


def good_divisional_edges(g: SignedGraph) -> dict[int, list[DirectedEdge]]:
    """For each vertex v, divisional edges (v, w) whose contraction keeps
    E- within E+ and stays balanced chordal."""
    out: dict[int, list[DirectedEdge]] = {}
    for v in g.vertices:
        for e in incident_edges(g, v):
            h = contract(g, e)
            if negatives_within_positives(h) and is_balanced_chordal(h) is True and divisional_edge(g, e):
                out.setdefault(v, []).append(e)
    return out


def two_nonadjacent_divisional(g: SignedGraph) -> tuple[DirectedEdge, DirectedEdge] | None:
    good = good_divisional_edges(g)
    for a, b in combinations(sorted(good), 2):
        if b not in g.neighbors(a):
            return good[a][0], good[b][0]
    return None
