"""Chordal and threshold structure of simple graphs.

Includes perfect elimination orderings, minimal vertex separators, the
clique-separator graph (maximal cliques, minimal separators, containment
arcs, boxes and sink boxes) and threshold recognition.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .core import InputError, SignedGraph


class NotChordalError(InputError):
    def __init__(self, cycle: list[int]):
        super().__init__(f"graph is not chordal; chordless cycle {cycle}")
        self.cycle = cycle


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __init__(self, vertices: Iterable[int], edges: Iterable[Sequence[int]] = ()):
        vs = tuple(sorted(set(vertices)))
        es = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-pair ({u}, {v}) in a simple graph")
            es.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))
        vset = set(vs)
        for u, v in es:
            if u not in vset or v not in vset:
                raise InputError(f"edge ({u}, {v}) has an endpoint outside the vertex set")

    @classmethod
    def positive_part(cls, g: SignedGraph) -> SimpleGraph:
        return cls(g.vertices, g.pos)

    @classmethod
    def negative_part(cls, g: SignedGraph) -> SimpleGraph:
        return cls(g.vertices, g.neg)

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.adjacent(a, b) for a, b in combinations(vs, 2))

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2

    def induced(self, w: Iterable[int]) -> SimpleGraph:
        w = set(w)
        return SimpleGraph(w, [e for e in self.edges if e[0] in w and e[1] in w])

    def components(self, removed: Iterable[int] = ()) -> list[frozenset[int]]:
        removed = set(removed)
        seen = set(removed)
        out = []
        for root in self.vertices:
            if root in seen:
                continue
            seen.add(root)
            comp = [root]
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            out.append(frozenset(comp))
        return out

    def is_simplicial(self, v: int, within: frozenset[int] | None = None) -> bool:
        nbrs = self.adj[v] if within is None else self.adj[v] & within
        return self.is_clique(nbrs)


# -- chordality ----------------------------------------------------------

def perfect_elimination_ordering(g: SimpleGraph) -> list[int] | None:
    """Ordering (v1..vn) with each v_i simplicial in G[v1..vi], or None.

    Built back to front by repeatedly deleting the smallest simplicial vertex.
    """
    alive = set(g.vertices)
    removed: list[int] = []
    while alive:
        within = frozenset(alive)
        pick = next((v for v in sorted(alive) if g.is_simplicial(v, within)), None)
        if pick is None:
            return None
        removed.append(pick)
        alive.remove(pick)
    return removed[::-1]


def is_peo(g: SimpleGraph, order: Sequence[int]) -> bool:
    if sorted(order) != list(g.vertices):
        return False
    for i, v in enumerate(order):
        if not g.is_simplicial(v, frozenset(order[:i])):
            return False
    return True


def chordless_cycle(g: SimpleGraph) -> list[int] | None:
    """A chordless cycle of length >= 4, or None when g is chordal."""
    for v in g.vertices:
        nbrs = sorted(g.adj[v])
        for a, b in combinations(nbrs, 2):
            if g.adjacent(a, b):
                continue
            blocked = (g.adj[v] | {v}) - {a, b}
            path = _shortest_path(g, a, b, blocked)
            if path is not None:
                return [v] + path
    return None


def _shortest_path(g: SimpleGraph, a: int, b: int, blocked) -> list[int] | None:
    prev = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            path = [b]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for y in sorted(g.adj[x]):
            if y not in prev and y not in blocked:
                prev[y] = x
                queue.append(y)
    return None


def is_chordal(g: SimpleGraph) -> bool:
    return perfect_elimination_ordering(g) is not None


def minimal_vertex_separators(g: SimpleGraph) -> set[frozenset[int]]:
    """All minimal vertex separators (Berry-Bordat-Cogis generation).

    A set is a minimal separator iff G - S has two full components; every
    neighbourhood N(C) of a component C of G - N[x] or G - (S u N(x)) is one.
    The empty set separates any two components of a disconnected graph.
    """
    def boundaries(removed):
        out = []
        for comp in g.components(removed):
            nb = set()
            for x in comp:
                nb |= g.adj[x]
            nb -= comp
            if nb:
                out.append(frozenset(nb))
        return out

    found: set[frozenset[int]] = set()
    if len(g.components()) > 1:
        found.add(frozenset())
    queue = deque()
    for v in g.vertices:
        for s in boundaries(g.adj[v] | {v}):
            if s not in found:
                found.add(s)
                queue.append(s)
    while queue:
        s = queue.popleft()
        for x in s:
            for t in boundaries(s | g.adj[x]):
                if t not in found:
                    found.add(t)
                    queue.append(t)
    return found


def separates(g: SimpleGraph, s: Iterable[int], a: int, b: int) -> bool:
    s = set(s)
    return not any(a in c and b in c for c in g.components(s))


def maximal_cliques(g: SimpleGraph) -> list[frozenset[int]]:
    """Maximal cliques of a chordal graph, read off a perfect elimination ordering."""
    order = perfect_elimination_ordering(g)
    if order is None:
        raise NotChordalError(chordless_cycle(g))
    cands = []
    for i, v in enumerate(order):
        cands.append(frozenset({v} | (g.adj[v] & set(order[:i]))))
    cands = set(cands)
    return sorted((c for c in cands if not any(c < d for d in cands)), key=_node_key)


def _node_key(s: frozenset[int]):
    return (len(s), sorted(s))


# -- clique-separator graph ---------------------------------------------

@dataclass
class CliqueSeparatorGraph:
    clique_nodes: list[frozenset[int]]
    separator_nodes: list[frozenset[int]]
    cs_edges: set[tuple[int, int]]
    arcs: set[tuple[int, int]]
    boxes: list[frozenset[tuple[str, int]]] = field(default_factory=list)
    sink_boxes: list[int] = field(default_factory=list)

    def node_set(self, node: tuple[str, int]) -> frozenset[int]:
        kind, i = node
        return self.clique_nodes[i] if kind == "C" else self.separator_nodes[i]

    def box_of(self, node: tuple[str, int]) -> int:
        for i, box in enumerate(self.boxes):
            if node in box:
                return i
        raise KeyError(node)

    def box_adjacency(self, box: int) -> dict[tuple[str, int], set[tuple[str, int]]]:
        nodes = self.boxes[box]
        adj = {n: set() for n in nodes}
        for c, s in self.cs_edges:
            if ("C", c) in nodes:
                adj[("C", c)].add(("S", s))
                adj[("S", s)].add(("C", c))
        return adj

    def box_arcs(self) -> set[tuple[int, int]]:
        return {
            (self.box_of(("S", a)), self.box_of(("S", b)))
            for a, b in self.arcs
            if self.box_of(("S", a)) != self.box_of(("S", b))
        }

    def to_dot(self) -> str:
        def label(s):
            return ",".join(str(v) for v in sorted(s))

        lines = ["digraph csg {"]
        for i, c in enumerate(self.clique_nodes):
            lines.append(f'  C{i} [shape=box, label="{label(c)}"];')
        for i, s in enumerate(self.separator_nodes):
            lines.append(f'  S{i} [shape=ellipse, label="{label(s)}"];')
        for c, s in sorted(self.cs_edges):
            lines.append(f"  C{c} -> S{s} [dir=none];")
        for a, b in sorted(self.arcs):
            lines.append(f"  S{a} -> S{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_csg(g: SimpleGraph) -> CliqueSeparatorGraph:
    cyc = chordless_cycle(g)
    if cyc is not None:
        raise NotChordalError(cyc)
    cliques = maximal_cliques(g)
    seps = sorted(minimal_vertex_separators(g), key=_node_key)

    def between(lo, hi):
        return any(lo < s < hi for s in seps)

    cs_edges = {
        (i, j) for i, c in enumerate(cliques) for j, s in enumerate(seps) if s < c and not between(s, c)
    }
    arcs = {
        (i, j) for i, s in enumerate(seps) for j, t in enumerate(seps) if s < t and not between(s, t)
    }
    # boxes: components after deleting the arcs
    nodes = [("C", i) for i in range(len(cliques))] + [("S", j) for j in range(len(seps))]
    parent = {n: n for n in nodes}

    def find(n):
        while parent[n] != n:
            parent[n] = parent[parent[n]]
            n = parent[n]
        return n

    for c, s in cs_edges:
        parent[find(("C", c))] = find(("S", s))
    groups: dict = {}
    for n in nodes:
        groups.setdefault(find(n), set()).add(n)
    boxes = sorted((frozenset(b) for b in groups.values()), key=lambda b: sorted(b))
    csg = CliqueSeparatorGraph(cliques, seps, cs_edges, arcs, boxes)
    out = {a for a, _ in csg.box_arcs()}
    csg.sink_boxes = [i for i in range(len(boxes)) if i not in out]
    return csg


# -- threshold graphs ----------------------------------------------------

@dataclass(frozen=True)
class ThresholdCertificate:
    threshold: bool
    build_sequence: tuple[tuple[int, str], ...] = ()
    witness: tuple[tuple[int, ...], str] | None = None

    def __bool__(self) -> bool:
        return self.threshold

    def to_json(self) -> dict:
        if self.threshold:
            return {"threshold": True, "build_sequence": [list(s) for s in self.build_sequence]}
        quad, kind = self.witness
        return {"threshold": False, "forbidden": kind, "vertices": list(quad)}


FORBIDDEN = ("2K2", "C4", "P4")


def classify_four(g: SimpleGraph, quad: Sequence[int]) -> str | None:
    """Name of the induced subgraph on four vertices if it is 2K2, C4 or P4."""
    sub = g.induced(quad)
    degs = sorted(sub.degree(v) for v in quad)
    m = len(sub.edges)
    if m == 2 and degs == [1, 1, 1, 1]:
        return "2K2"
    if m == 4 and degs == [2, 2, 2, 2]:
        return "C4"
    if m == 3 and degs == [1, 1, 2, 2]:
        return "P4"
    return None


def forbidden_subgraph(g: SimpleGraph) -> tuple[tuple[int, ...], str] | None:
    for quad in combinations(g.vertices, 4):
        kind = classify_four(g, quad)
        if kind:
            return quad, kind
    return None


def is_threshold(g: SimpleGraph) -> ThresholdCertificate:
    """Peel isolated or dominating vertices; report the build order or a witness."""
    alive = set(g.vertices)
    removed: list[tuple[int, str]] = []
    while len(alive) > 1:
        within = frozenset(alive)
        iso = [v for v in alive if not (g.adj[v] & within)]
        if iso:
            v, kind = max(iso), "isolated"
        else:
            dom = [v for v in alive if len(g.adj[v] & within) == len(alive) - 1]
            if not dom:
                witness = forbidden_subgraph(g.induced(alive))
                assert witness is not None, "Golumbic characterization violated"
                return ThresholdCertificate(False, witness=witness)
            v, kind = max(dom), "dominating"
        removed.append((v, kind))
        alive.remove(v)
    if alive:
        removed.append((alive.pop(), "isolated"))
    return ThresholdCertificate(True, build_sequence=tuple(reversed(removed)))


def replay_build(seq: Sequence[tuple[int, str]]) -> SimpleGraph:
    verts: list[int] = []
    edges = []
    for v, kind in seq:
        if kind == "dominating":
            edges += [(u, v) for u in verts]
        verts.append(v)
    return SimpleGraph(verts, edges)


def degree_orderings_initial_segment(g: SimpleGraph, l: Iterable[int]) -> bool:
    """True iff l is an initial segment of some ordering by non-increasing degree."""
    l = set(l)
    if not l <= set(g.vertices):
        raise InputError(f"unknown vertices {sorted(l - set(g.vertices))}")
    rest = set(g.vertices) - l
    if not l or not rest:
        return True
    return min(g.degree(v) for v in l) >= max(g.degree(v) for v in rest)
