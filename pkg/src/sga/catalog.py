"""Named signed graphs used in examples and tests."""
from __future__ import annotations

from .core import SignedGraph, complete_signed

_K3 = [(1, 2), (1, 3), (2, 3)]
_K4 = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def B(n: int) -> SignedGraph:
    return complete_signed(n)


def D3() -> SignedGraph:
    return SignedGraph([1, 2, 3], _K3, _K3, [])


def F1() -> SignedGraph:
    return SignedGraph([1, 2, 3, 4], [(1, 4), (2, 3)], [(1, 2), (3, 4)], [])


def G1() -> SignedGraph:
    return SignedGraph([1, 2, 3, 4], [(1, 4), (3, 4), (1, 3), (1, 2), (2, 3)], [(1, 2), (3, 4)], [])


def G2() -> SignedGraph:
    return SignedGraph([1, 2, 3, 4], [(1, 4), (3, 4), (1, 3), (1, 2), (2, 3)], [(1, 2), (1, 4)], [])


def F2() -> SignedGraph:
    return SignedGraph([1, 2, 4], [(1, 2), (1, 4)], [(1, 2), (1, 4)], [])


def G3() -> SignedGraph:
    return SignedGraph([1, 2, 3], _K3, [(2, 3)], [1])


def K4_2K2(loops=(1, 2, 3, 4)) -> SignedGraph:
    return SignedGraph([1, 2, 3, 4], _K4, [(1, 2), (3, 4)], loops)


def csg_figure() -> SignedGraph:
    """Nine-vertex chordal graph whose clique-separator graph has three boxes."""
    edges = [
        (1, 2), (1, 5), (1, 8), (2, 3), (2, 5), (2, 8), (3, 5), (3, 6),
        (3, 8), (4, 5), (4, 7), (4, 8), (5, 8), (6, 8), (7, 8), (8, 9),
    ]
    return SignedGraph(range(1, 10), edges, [], [])


def left_example() -> SignedGraph:
    """a..e as 1..5; vertices b and e are signed simplicial."""
    a, b, c, d, e = 1, 2, 3, 4, 5
    pos = [(a, b), (a, c), (a, d), (a, e), (b, c), (b, d), (c, d), (c, e), (d, e)]
    neg = [(a, b), (a, c), (a, d), (a, e)]
    return SignedGraph(range(1, 6), pos, neg, range(1, 6))


def right_example() -> SignedGraph:
    """a..f as 1..6; no signed-simplicial vertex, {c, d} induces B2."""
    a, b, c, d, e, f = 1, 2, 3, 4, 5, 6
    pos = [(a, b), (b, d), (d, f), (f, e), (e, c), (c, a), (a, d), (d, e), (b, c), (c, f), (c, d)]
    neg = [(a, b), (a, c), (b, c), (c, d), (c, e), (c, f), (e, f)]
    return SignedGraph(range(1, 7), pos, neg, range(1, 7))


NAMED = {
    "D3": D3,
    "F1": F1,
    "F2": F2,
    "G1": G1,
    "G2": G2,
    "G3": G3,
    "K4_2K2": K4_2K2,
    "csg_figure": csg_figure,
    "left_example": left_example,
    "right_example": right_example,
}


def named(name: str) -> SignedGraph:
    if name.startswith("B") and name[1:].isdigit():
        return B(int(name[1:]))
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown graph {name!r}; known: B<n>, {', '.join(sorted(NAMED))}") from None
