"""Signed graphs and their elementary transformations.

A signed graph carries a positive edge set, a negative edge set and a set of
looped vertices.  A vertex pair may appear in both edge sets; that pair is
the unbalanced 2-cycle.  Loops are unbalanced 1-cycles.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, NamedTuple, Sequence

POS, NEG, LOOP = 1, -1, 0


class InputError(ValueError):
    """Raised for malformed graphs, unknown vertices and missing edges."""


class Edge(NamedTuple):
    """Element of the edge ground set: a signed pair or a loop.

    Loops are stored as ``Edge(0, v, v)``; signed pairs keep ``u < v``.
    """

    sign: int
    u: int
    v: int

    @property
    def is_loop(self) -> bool:
        return self.sign == LOOP

    def to_json(self) -> list:
        if self.is_loop:
            return ["loop", self.u]
        return ["+" if self.sign == POS else "-", self.u, self.v]


class DirectedEdge(NamedTuple):
    """A signed edge with a chosen direction; contraction removes ``frm``."""

    frm: int
    to: int
    sign: int


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _pairs(edges: Iterable[Sequence[int]]) -> frozenset[tuple[int, int]]:
    out = set()
    for e in edges:
        u, v = e
        if u == v:
            raise InputError(f"self-pair ({u}, {v}) is not an edge; use a loop")
        out.add(_pair(int(u), int(v)))
    return frozenset(out)


@dataclass(frozen=True)
class SignedGraph:
    vertices: tuple[int, ...]
    pos: frozenset[tuple[int, int]] = frozenset()
    neg: frozenset[tuple[int, int]] = frozenset()
    loops: frozenset[int] = frozenset()

    def __init__(
        self,
        vertices: Iterable[int],
        pos: Iterable[Sequence[int]] = (),
        neg: Iterable[Sequence[int]] = (),
        loops: Iterable[int] = (),
    ):
        verts = tuple(sorted({int(v) for v in vertices}))
        for v in verts:
            if v < 0:
                raise InputError(f"vertex ids must be non-negative, got {v}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "pos", _pairs(pos))
        object.__setattr__(self, "neg", _pairs(neg))
        object.__setattr__(self, "loops", frozenset(int(v) for v in loops))
        vs = set(verts)
        for u, v in self.pos | self.neg:
            if u not in vs or v not in vs:
                raise InputError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
        for v in self.loops:
            if v not in vs:
                raise InputError(f"loop at unknown vertex {v}")

    # -- convenience -----------------------------------------------------
    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def pos_adj(self) -> dict[int, frozenset[int]]:
        return _adjacency(self.vertices, self.pos)

    @cached_property
    def neg_adj(self) -> dict[int, frozenset[int]]:
        return _adjacency(self.vertices, self.neg)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.pos_adj[v] | self.neg_adj[v]

    def degree(self, v: int) -> int:
        """Incident positive and negative edges plus one for a loop."""
        return len(self.pos_adj[v]) + len(self.neg_adj[v]) + (v in self.loops)

    def edges(self) -> list[Edge]:
        """The ground set, sorted: loops, then positive, then negative pairs."""
        out = [Edge(LOOP, v, v) for v in sorted(self.loops)]
        out += [Edge(POS, u, v) for u, v in sorted(self.pos)]
        out += [Edge(NEG, u, v) for u, v in sorted(self.neg)]
        return out

    def has_edge(self, e: Edge) -> bool:
        if e.sign == LOOP:
            return e.u in self.loops
        pairs = self.pos if e.sign == POS else self.neg
        return _pair(e.u, e.v) in pairs

    def __len__(self) -> int:
        return len(self.vertices)

    def without(self, *vs: int) -> SignedGraph:
        return induced_subgraph(self, self.vertex_set - set(vs))

    def edge_subgraph(self, edges: Iterable[Edge]) -> SignedGraph:
        """Spanning subgraph keeping only the given ground-set elements."""
        edges = list(edges)
        for e in edges:
            if not self.has_edge(e):
                raise InputError(f"{e} is not an edge of the graph")
        return SignedGraph(
            self.vertices,
            [(e.u, e.v) for e in edges if e.sign == POS],
            [(e.u, e.v) for e in edges if e.sign == NEG],
            [e.u for e in edges if e.sign == LOOP],
        )

    def relabel(self, mapping: Mapping[int, int]) -> SignedGraph:
        return SignedGraph(
            [mapping[v] for v in self.vertices],
            [(mapping[u], mapping[v]) for u, v in self.pos],
            [(mapping[u], mapping[v]) for u, v in self.neg],
            [mapping[v] for v in self.loops],
        )

    def union(self, other: SignedGraph) -> SignedGraph:
        return SignedGraph(
            self.vertex_set | other.vertex_set,
            self.pos | other.pos,
            self.neg | other.neg,
            self.loops | other.loops,
        )

    # -- serialization ---------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "positive": [list(p) for p in sorted(self.pos)],
            "negative": [list(p) for p in sorted(self.neg)],
            "loops": sorted(self.loops),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    @classmethod
    def from_dict(cls, data: Mapping) -> SignedGraph:
        if not isinstance(data, Mapping):
            raise InputError("graph JSON must be an object")
        unknown = set(data) - {"vertices", "positive", "negative", "loops"}
        if unknown:
            raise InputError(f"unknown graph keys: {sorted(unknown)}")
        try:
            verts = list(data.get("vertices", []))
            pos = [tuple(p) for p in data.get("positive", [])]
            neg = [tuple(p) for p in data.get("negative", [])]
            loops = list(data.get("loops", []))
        except TypeError as exc:
            raise InputError(f"malformed graph JSON: {exc}") from None
        for p in pos + neg:
            if len(p) != 2 or not all(isinstance(x, int) for x in p):
                raise InputError(f"edge {list(p)} is not a pair of integer ids")
        if not all(isinstance(x, int) for x in verts + loops):
            raise InputError("vertex ids and loops must be integers")
        return cls(verts, pos, neg, loops)

    @classmethod
    def from_json(cls, text: str) -> SignedGraph:
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        return (
            f"SignedGraph(V={list(self.vertices)}, +={sorted(self.pos)}, "
            f"-={sorted(self.neg)}, L={sorted(self.loops)})"
        )


def _adjacency(vertices, pairs) -> dict[int, frozenset[int]]:
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)
    return {v: frozenset(ns) for v, ns in adj.items()}


def complete_signed(n_or_vertices) -> SignedGraph:
    """The complete signed graph with loops, ``B_n``."""
    vs = list(range(1, n_or_vertices + 1)) if isinstance(n_or_vertices, int) else list(n_or_vertices)
    pairs = [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]
    return SignedGraph(vs, pairs, pairs, vs)


# -- operations ----------------------------------------------------------

def induced_subgraph(g: SignedGraph, w: Iterable[int]) -> SignedGraph:
    w = frozenset(w)
    missing = w - g.vertex_set
    if missing:
        raise InputError(f"unknown vertices {sorted(missing)}")
    return SignedGraph(
        w,
        [p for p in g.pos if p[0] in w and p[1] in w],
        [p for p in g.neg if p[0] in w and p[1] in w],
        g.loops & w,
    )


def apply_switching(g: SignedGraph, nu: Mapping[int, int]) -> SignedGraph:
    if set(nu) != g.vertex_set:
        raise InputError("switching function must be defined exactly on the vertex set")
    if any(s not in (1, -1) for s in nu.values()):
        raise InputError("switching values must be +1 or -1")
    pos = [p for p in g.pos if nu[p[0]] == nu[p[1]]] + [p for p in g.neg if nu[p[0]] != nu[p[1]]]
    neg = [p for p in g.pos if nu[p[0]] != nu[p[1]]] + [p for p in g.neg if nu[p[0]] == nu[p[1]]]
    return SignedGraph(g.vertices, pos, neg, g.loops)


def switchings(g: SignedGraph, fix_first: bool = True):
    """All switching functions, optionally with the first vertex fixed to +1."""
    vs = g.vertices
    if not vs:
        yield {}
        return
    head = [(1,)] if fix_first else [(1, -1)]
    for signs in product(*head, *([(1, -1)] * (len(vs) - 1))):
        yield dict(zip(vs, signs))


def contract(g: SignedGraph, e: DirectedEdge) -> SignedGraph:
    v, w, sign = e.frm, e.to, e.sign
    if v == w:
        raise InputError("loops cannot be contracted")
    if sign not in (POS, NEG):
        raise InputError(f"edge sign must be +1 or -1, got {sign}")
    pairs = g.pos if sign == POS else g.neg
    if _pair(v, w) not in pairs:
        raise InputError(f"({v}, {w}) is not a {'positive' if sign == POS else 'negative'} edge")
    rest = g.without(v)
    same = [(u, w) for u in g.pos_adj[v] if u != w]
    flip = [(u, w) for u in g.neg_adj[v] if u != w]
    if sign == NEG:
        same, flip = flip, same
    other = g.neg if sign == POS else g.pos
    loops = set(rest.loops)
    if v in g.loops or _pair(v, w) in other:
        loops.add(w)
    return SignedGraph(rest.vertices, rest.pos | _pairs(same), rest.neg | _pairs(flip), loops)


def _component_labels(g: SignedGraph):
    """BFS over both signs; returns (components, balanced flags)."""
    seen: dict[int, int] = {}
    comps, flags = [], []
    for root in g.vertices:
        if root in seen:
            continue
        seen[root] = 1
        comp = [root]
        balanced = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if x in g.loops:
                balanced = False
            for y in g.pos_adj[x] | g.neg_adj[x]:
                if y in g.pos_adj[x] and y in g.neg_adj[x]:
                    balanced = False
                want = seen[x] if y in g.pos_adj[x] else -seen[x]
                if y not in seen:
                    seen[y] = want
                    comp.append(y)
                    queue.append(y)
                elif seen[y] != want:
                    balanced = False
        comps.append(frozenset(comp))
        flags.append(balanced)
    return comps, flags


def balanced_components(g: SignedGraph) -> list[tuple[frozenset[int], bool]]:
    comps, flags = _component_labels(g)
    return list(zip(comps, flags))


def is_balanced(g: SignedGraph) -> bool:
    return all(flag for _, flag in balanced_components(g))


def rank(g: SignedGraph) -> int:
    return len(g.vertices) - sum(flag for _, flag in balanced_components(g))


def cycle_balance(g: SignedGraph, cycle: Sequence[int], signs: Sequence[int] | None = None) -> bool:
    """Return True when the given cycle is balanced.

    ``cycle`` lists distinct vertices; ``signs[i]`` is the sign of the edge
    from ``cycle[i]`` to ``cycle[i+1]`` (cyclically).  It may be omitted when
    every consecutive pair carries a single sign.
    """
    k = len(cycle)
    if k == 0 or len(set(cycle)) != k:
        raise InputError("a cycle is a non-empty sequence of distinct vertices")
    for v in cycle:
        if v not in g.vertex_set:
            raise InputError(f"unknown vertex {v}")
    if k == 1:
        if cycle[0] not in g.loops:
            raise InputError(f"vertex {cycle[0]} has no loop")
        return False
    if k == 2:
        p = _pair(*cycle)
        if p not in g.pos or p not in g.neg:
            raise InputError(f"{list(p)} is not a 2-cycle")
        return False
    if signs is None:
        signs = []
        for i in range(k):
            p = _pair(cycle[i], cycle[(i + 1) % k])
            options = [s for s, es in ((POS, g.pos), (NEG, g.neg)) if p in es]
            if len(options) != 1:
                raise InputError(f"edge {list(p)} is missing or ambiguous; pass signs")
            signs.append(options[0])
    if len(signs) != k:
        raise InputError("need one sign per cycle edge")
    for i, s in enumerate(signs):
        p = _pair(cycle[i], cycle[(i + 1) % k])
        if p not in (g.pos if s == POS else g.neg):
            raise InputError(f"{'+' if s == POS else '-'}{list(p)} is not an edge")
    return sum(1 for s in signs if s == NEG) % 2 == 0


def canonical_key(g: SignedGraph, up_to_switching: bool = True) -> tuple:
    """Invariant key under vertex relabeling (and optionally switching).

    Brute force over permutations; meant for caching at desk scale (n <= 6).
    """
    from itertools import permutations

    vs = g.vertices
    n = len(vs)
    best = None
    nus = list(switchings(g)) if up_to_switching else [{v: 1 for v in vs}]
    for nu in nus:
        h = apply_switching(g, nu) if up_to_switching else g
        for perm in permutations(range(n)):
            m = {vs[i]: perm[i] for i in range(n)}
            key = (
                n,
                tuple(sorted(_pair(m[u], m[v]) for u, v in h.pos)),
                tuple(sorted(_pair(m[u], m[v]) for u, v in h.neg)),
                tuple(sorted(m[v] for v in h.loops)),
            )
            if best is None or key < best:
                best = key
    return best
