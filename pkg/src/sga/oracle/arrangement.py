"""Central arrangements with integer normals, realized from signed graphs."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from ..core import LOOP, POS, DirectedEdge, Edge, InputError, SignedGraph
from .linalg import Echelon
from .polyring import Poly, product


def normalize(v: Sequence[int]) -> tuple[int, ...] | None:
    """Primitive integer vector with first nonzero entry positive; None for zero."""
    g = 0
    for c in v:
        g = gcd(g, c)
    if g == 0:
        return None
    lead = next(c for c in v if c)
    if lead < 0:
        g = -g
    return tuple(c // g for c in v)


@dataclass(frozen=True)
class Arrangement:
    dimension: int
    normals: tuple[tuple[int, ...], ...]
    labels: tuple = ()
    coords: tuple = ()  # name of each ambient coordinate (vertex labels for A(G))

    def __post_init__(self):
        seen = set()
        for n in self.normals:
            if len(n) != self.dimension:
                raise InputError(f"normal {n} has the wrong length")
            key = normalize(n)
            if key is None:
                raise InputError("zero normal vector")
            if key in seen:
                raise InputError(f"proportional normals {n}")
            seen.add(key)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(len(self.normals))))
        if not self.coords:
            object.__setattr__(self, "coords", tuple(range(self.dimension)))

    def __len__(self) -> int:
        return len(self.normals)

    def rank(self) -> int:
        return Echelon({i: c for i, c in enumerate(n) if c} for n in self.normals).rank

    def forms(self) -> list[Poly]:
        return [Poly.linear(n) for n in self.normals]

    def defining_polynomial(self) -> Poly:
        return product(self.forms(), self.dimension)

    def subarrangement(self, indices: Iterable[int]) -> Arrangement:
        idx = sorted(indices)
        return Arrangement(
            self.dimension, tuple(self.normals[i] for i in idx), tuple(self.labels[i] for i in idx), self.coords
        )

    def matroid_key(self) -> frozenset:
        return frozenset(normalize(n) for n in self.normals)

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "coords": list(self.coords),
            "hyperplanes": [list(n) for n in self.normals],
        }


def realize(g: SignedGraph) -> Arrangement:
    idx = {v: i for i, v in enumerate(g.vertices)}
    n = len(g.vertices)
    normals, labels = [], []
    for e in g.edges():
        vec = [0] * n
        if e.sign == LOOP:
            vec[idx[e.u]] = 1
        else:
            vec[idx[e.u]] = 1
            vec[idx[e.v]] = -1 if e.sign == POS else 1
        normals.append(tuple(vec))
        labels.append(e)
    return Arrangement(n, tuple(normals), tuple(labels), tuple(g.vertices))


def hyperplane_of(a: Arrangement, e: Edge | DirectedEdge) -> int:
    if isinstance(e, DirectedEdge):
        u, v = sorted((e.frm, e.to))
        e = Edge(e.sign, u, v)
    try:
        return a.labels.index(e)
    except ValueError:
        raise InputError(f"{e} is not a hyperplane label") from None


def restriction(a: Arrangement, h: int, eliminate: int | None = None) -> Arrangement:
    """A^H: substitute the equation of H into every other form and drop a coordinate.

    ``eliminate`` picks the coordinate solved for (default: the first one
    with a nonzero entry).  Images are normalized and duplicates merged;
    the label of a merged image is the first source label.
    """
    alpha = a.normals[h]
    p = eliminate if eliminate is not None else next(i for i, c in enumerate(alpha) if c)
    if alpha[p] == 0:
        raise InputError("cannot eliminate a coordinate absent from the hyperplane")
    out: dict[tuple[int, ...], object] = {}
    for i, beta in enumerate(a.normals):
        if i == h:
            continue
        img = [alpha[p] * beta[j] - beta[p] * alpha[j] for j in range(a.dimension) if j != p]
        key = normalize(img)
        if key is not None and key not in out:
            out[key] = a.labels[i]
    coords = tuple(c for j, c in enumerate(a.coords) if j != p)
    return Arrangement(a.dimension - 1, tuple(out), tuple(out.values()), coords)


def restriction_along_edge(g: SignedGraph, e: DirectedEdge) -> Arrangement:
    """A(G)^H for the hyperplane of the edge, solving for the coordinate of e.frm."""
    a = realize(g)
    return restriction(a, hyperplane_of(a, e), eliminate=g.vertices.index(e.frm))


def same_arrangement(a: Arrangement, b: Arrangement) -> bool:
    """Equal up to order of hyperplanes, with coordinates matched by name."""
    if set(a.coords) != set(b.coords):
        return False
    perm = [b.coords.index(c) for c in a.coords]

    def key(arr, order):
        return frozenset(normalize([n[j] for j in order]) for n in arr.normals)

    return key(a, range(a.dimension)) == key(b, perm)


def coordinate_components(a: Arrangement) -> tuple[list[list[int]], list[int]]:
    """Split into (hyperplane index groups with disjoint coordinate supports, unused coordinates)."""
    parent = list(range(a.dimension))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for n in a.normals:
        sup = [j for j, c in enumerate(n) if c]
        for j in sup[1:]:
            parent[find(j)] = find(sup[0])
    used = {j for n in a.normals for j, c in enumerate(n) if c}
    groups: dict[int, list[int]] = {}
    for i, n in enumerate(a.normals):
        groups.setdefault(find(next(j for j, c in enumerate(n) if c)), []).append(i)
    return sorted(groups.values()), [j for j in range(a.dimension) if j not in used]
