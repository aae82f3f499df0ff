"""Exact univariate integer polynomials and the signed chromatic polynomial."""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from . import kernels
from .core import InputError, SignedGraph, induced_subgraph


class IntPoly:
    """Dense polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls) -> IntPoly:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "t" if d == 1 else f"t^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


def divide_exact(p: IntPoly, q: IntPoly) -> IntPoly | None:
    """Return r with p == q*r over the integers, or None."""
    if q.is_zero():
        raise InputError("division by the zero polynomial")
    if p.is_zero():
        return IntPoly()
    rem = list(p.coeffs)
    dq, lq = q.degree, q.leading()
    if p.degree < dq:
        return None
    quot = [0] * (p.degree - dq + 1)
    for i in range(p.degree - dq, -1, -1):
        c, r = divmod(rem[i + dq], lq)
        if r:
            return None
        quot[i] = c
        if c:
            for j, qc in enumerate(q.coeffs):
                rem[i + j] -= c * qc
    if any(rem[:dq]):
        return None
    return IntPoly(quot)


def nonneg_integer_roots(p: IntPoly) -> list[int] | None:
    """Sorted roots when p = +-prod(t - r_i) with every r_i a non-negative integer."""
    if p.is_zero():
        return None
    if p.leading() == -1:
        p = -p
    if p.leading() != 1:
        return None
    roots: list[int] = []
    # Cauchy bound on root magnitude
    bound = 1 + max((abs(c) for c in p.coeffs[:-1]), default=0)
    r = 0
    while p.degree > 0 and r <= bound:
        q = divide_exact(p, IntPoly([-r, 1]))
        if q is None:
            r += 1
            continue
        roots.append(r)
        p = q
    return roots if p.degree == 0 else None


# -- colorings -----------------------------------------------------------

def _kernel_inputs(g: SignedGraph):
    # high-degree vertices first keeps the pruning effective
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    idx = {v: i for i, v in enumerate(order)}
    pos = [[idx[u] for u in g.pos_adj[v] if idx[u] < idx[v]] for v in order]
    neg = [[idx[u] for u in g.neg_adj[v] if idx[u] < idx[v]] for v in order]
    loops = [v in g.loops for v in order]
    return len(order), pos, neg, loops


def count_proper_colorings(g: SignedGraph, k: int) -> int:
    """Number of proper k-colorings with colours in {0, +-1, ..., +-k}."""
    if k < 0:
        raise InputError("k must be non-negative")
    n, pos, neg, loops = _kernel_inputs(g)
    return kernels.count_colorings(n, pos, neg, loops, k)


def count_extensions(g: SignedGraph, fixed: Mapping[int, int], k: int) -> int:
    """Proper k-colorings of g that agree with ``fixed`` on its domain."""
    free = [v for v in g.vertices if v not in fixed]
    colors = dict(fixed)
    for v, c in fixed.items():
        if abs(c) > k:
            return 0
    total = 0
    for assignment in product(range(-k, k + 1), repeat=len(free)):
        colors.update(zip(free, assignment))
        if is_proper(g, colors):
            total += 1
    return total


def is_proper(g: SignedGraph, colors: Mapping[int, int]) -> bool:
    if any(colors[v] == 0 for v in g.loops):
        return False
    if any(colors[u] == colors[v] for u, v in g.pos):
        return False
    return not any(colors[u] == -colors[v] for u, v in g.neg)


def interpolate(points: Sequence[tuple[int, int]]) -> IntPoly:
    """Lagrange interpolation; the result must have integer coefficients."""
    n = len(points)
    acc = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        for d, c in enumerate(basis):
            acc[d] += c * yi / denom
    if any(c.denominator != 1 for c in acc):
        raise ArithmeticError(f"interpolation produced non-integer coefficients {acc}")
    return IntPoly(int(c) for c in acc)


def chromatic_polynomial(g: SignedGraph) -> IntPoly:
    """Fit chi(G, 2k+1) = #proper k-colorings at k = 1..|V|+1."""
    n = len(g.vertices)
    pts = [(2 * k + 1, count_proper_colorings(g, k)) for k in range(1, n + 2)]
    return interpolate(pts)


def b_chromatic(n: int) -> IntPoly:
    """Closed form for B_n: prod_{i<n} (t - 1 - 2i)."""
    return IntPoly.from_roots(1 + 2 * i for i in range(n))


def gluing_check(g1: SignedGraph, g2: SignedGraph, shared: Iterable[int]) -> bool:
    """Check chi(G1 u G2) * chi(B_n) == chi(G1) * chi(G2) for a B_n gluing."""
    shared = frozenset(shared)
    if g1.vertex_set & g2.vertex_set != shared:
        raise InputError("the graphs must overlap exactly on the shared vertices")
    s1, s2 = induced_subgraph(g1, shared), induced_subgraph(g2, shared)
    n = len(shared)
    full = n * (n - 1) // 2
    for s in (s1, s2):
        if len(s.pos) != full or len(s.neg) != full or s.loops != shared:
            raise InputError("the shared vertices must induce a complete signed graph with loops")
    union = g1.union(g2)
    lhs = chromatic_polynomial(union) * b_chromatic(n)
    return lhs == chromatic_polynomial(g1) * chromatic_polynomial(g2)
