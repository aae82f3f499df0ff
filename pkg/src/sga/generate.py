"""Exhaustive and seeded random signed graphs over the standard classes."""
from __future__ import annotations

import random
from itertools import combinations, product
from typing import Iterator

from .core import InputError, SignedGraph

# pair states: 0 absent, 1 positive, 2 negative, 3 both
CLASSES = {
    "any": (0, 1, 2, 3),
    "neg-in-pos": (0, 1, 3),
    "complete-pos": (1, 3),
}
LOOP_POLICIES = ("full", "none", "random", "all-subsets")


def _build(n: int, states, loops) -> SignedGraph:
    pairs = list(combinations(range(1, n + 1), 2))
    pos = [p for p, s in zip(pairs, states) if s in (1, 3)]
    neg = [p for p, s in zip(pairs, states) if s in (2, 3)]
    return SignedGraph(range(1, n + 1), pos, neg, loops)


def _loop_sets(n: int, policy: str):
    if policy == "full":
        return [tuple(range(1, n + 1))]
    if policy == "none":
        return [()]
    if policy == "all-subsets":
        return [tuple(v for v, b in zip(range(1, n + 1), bits) if b) for bits in product((0, 1), repeat=n)]
    raise InputError(f"loop policy {policy!r} has no exhaustive form")


def all_graphs(n: int, cls: str = "any", loops: str = "all-subsets") -> Iterator[SignedGraph]:
    states = CLASSES[cls]
    loop_sets = _loop_sets(n, loops)
    for choice in product(states, repeat=n * (n - 1) // 2):
        for ls in loop_sets:
            yield _build(n, choice, ls)


def count_graphs(n: int, cls: str = "any", loops: str = "all-subsets") -> int:
    return len(CLASSES[cls]) ** (n * (n - 1) // 2) * len(_loop_sets(n, loops))


def random_graph(rng: random.Random, n: int, cls: str = "any", loops: str = "random") -> SignedGraph:
    """Each vertex pair i.i.d. uniform over the class states."""
    if n < 1:
        raise InputError("n must be at least 1")
    states = CLASSES[cls]
    choice = [rng.choice(states) for _ in range(n * (n - 1) // 2)]
    if loops == "random":
        ls = [v for v in range(1, n + 1) if rng.random() < 0.5]
    else:
        ls = _loop_sets(n, loops)[0] if loops != "all-subsets" else []
    return _build(n, choice, ls)


def in_class(g: SignedGraph, cls: str, loops: str) -> bool:
    if cls == "neg-in-pos" and not g.neg <= g.pos:
        return False
    if loops == "full":
        return g.loops == g.vertex_set
    if loops == "none":
        return not g.loops
    return True


def random_chordal(rng: random.Random, n: int) -> SignedGraph:
    """Chordal positive part: each new vertex joins a random clique of the current graph."""
    pos = []
    adj: dict[int, set[int]] = {}
    for v in range(1, n + 1):
        nbrs: set[int] = set()
        if adj and rng.random() < 0.85:
            seed = rng.choice(sorted(adj))
            clique = {seed} | adj[seed]
            # random clique inside the closed neighborhood of seed
            chosen = [seed]
            for u in sorted(clique - {seed}):
                if rng.random() < 0.6 and all(u in adj[w] for w in chosen):
                    chosen.append(u)
            nbrs = set(chosen)
        adj[v] = set(nbrs)
        for u in nbrs:
            adj[u].add(v)
            pos.append((u, v))
    return SignedGraph(range(1, n + 1), pos, [], [])
