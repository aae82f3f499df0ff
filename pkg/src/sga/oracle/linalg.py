"""Exact sparse linear algebra over the rationals.

Rows are dicts ``{column: int}``.  Reduction is fraction-free: every row is
kept primitive (content 1), so numbers stay small for the +-1 matrices
produced by signed-graphic arrangements.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Row = dict


def _primitive(row: Row) -> Row:
    g = 0
    for c in row.values():
        g = gcd(g, c)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {k: c // g for k, c in row.items()}
    return row


def _eliminate(row: Row, piv_row: Row, col: int) -> Row:
    """row := a*row - b*piv_row so that ``col`` drops out."""
    a, b = piv_row[col], row[col]
    g = gcd(a, b)
    a, b = a // g, b // g
    out = {k: a * c for k, c in row.items()} if a != 1 else dict(row)
    for k, c in piv_row.items():
        v = out.get(k, 0) - b * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return _primitive(out) if out else out


class Echelon:
    """Incrementally maintained reduced row echelon form.

    ``pivots`` maps a pivot column to its row; every stored row is zero in
    every other pivot column.
    """

    def __init__(self, rows: Iterable[Row] = ()):
        self.pivots: dict[int, Row] = {}
        for r in rows:
            self.add(r)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Row) -> Row:
        row = {k: c for k, c in row.items() if c}
        # pivot columns only shrink under elimination, so scan until stable
        changed = True
        while changed and row:
            changed = False
            for col in sorted(set(row) & self.pivots.keys()):
                if col in row:
                    row = _eliminate(row, self.pivots[col], col)
                    changed = True
        return row

    def add(self, row: Row) -> bool:
        """Insert a row; return False when it was already in the span."""
        row = self.reduce(row)
        if not row:
            return False
        row = _primitive(row)
        col = min(row)
        for other_col, other in list(self.pivots.items()):
            if col in other:
                self.pivots[other_col] = _eliminate(other, row, col)
        self.pivots[col] = row
        return True

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)

    def nullspace(self, ncols: int) -> list[Row]:
        """Integer basis of {x : row . x = 0 for all rows}."""
        basis = []
        piv = self.pivots
        for free in range(ncols):
            if free in piv:
                continue
            vec: dict[int, Fraction] = {free: Fraction(1)}
            for col, row in piv.items():
                c = row.get(free)
                if c:
                    vec[col] = Fraction(-c, row[col])
            den = 1
            for v in vec.values():
                den = den * v.denominator // gcd(den, v.denominator)
            basis.append(_primitive({k: int(v * den) for k, v in vec.items()}))
        return basis


def rank(rows: Sequence[Sequence[int]]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add({i: c for i, c in enumerate(r) if c})
    return ech.rank


def in_span(rows: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    ech = Echelon({i: c for i, c in enumerate(r) if c} for r in rows)
    return ech.contains({i: c for i, c in enumerate(v) if c})


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
