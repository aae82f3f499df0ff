"""Sparse multivariate integer polynomials (exponent tuple -> coefficient)."""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Mapping, Sequence


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of the given total degree, in a fixed order."""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        out.extend((first,) + rest for rest in monomials(nvars - 1, degree - first))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict[tuple[int, ...], int]:
    return {m: i for i, m in enumerate(monomials(nvars, degree))}


class Poly:
    __slots__ = ("terms", "nvars")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> Poly:
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs) if c})

    @classmethod
    def const(cls, nvars: int, c: int) -> Poly:
        return cls(nvars, {(0,) * nvars: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Poly) -> Poly:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.nvars, out)

    def __neg__(self) -> Poly:
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return Poly(self.nvars, {m: c * other for m, c in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __call__(self, point: Sequence[int]) -> int:
        total = 0
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= x**e
            total += t
        return total

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def to_json(self) -> list:
        return [[list(m), c] for m, c in sorted(self.terms.items(), reverse=True)]

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.terms})"


def product(polys: Sequence[Poly], nvars: int) -> Poly:
    out = Poly.const(nvars, 1)
    for p in polys:
        out = out * p
    return out


def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det(matrix: Sequence[Sequence[Poly]], nvars: int) -> Poly:
    """Leibniz expansion; fine for the ell <= 5 matrices used here."""
    n = len(matrix)
    total = Poly(nvars)
    for p in permutations(range(n)):
        term = Poly.const(nvars, _perm_sign(p))
        for i in range(n):
            term = term * matrix[i][p[i]]
            if term.is_zero():
                break
        total = total + term
    return total
