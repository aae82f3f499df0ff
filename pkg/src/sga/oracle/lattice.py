"""Intersection lattice, Moebius function, characteristic polynomial, supersolvability."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .. import kernels
from ..poly import IntPoly
from .arrangement import Arrangement
from .linalg import Echelon


def _row(v):
    return {i: c for i, c in enumerate(v) if c}


@dataclass(frozen=True)
class IntersectionLattice:
    """Flats as bitmasks of the hyperplanes containing them, sorted by rank."""

    arrangement: Arrangement
    masks: tuple[int, ...]
    ranks: tuple[int, ...]
    mobius: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.ranks[-1] if self.ranks else 0

    def __len__(self) -> int:
        return len(self.masks)

    def flats_of_rank(self, r: int) -> list[int]:
        return [m for m, k in zip(self.masks, self.ranks) if k == r]

    @cached_property
    def rank_of(self) -> dict[int, int]:
        return dict(zip(self.masks, self.ranks))

    @cached_property
    def pair_closure(self) -> dict[tuple[int, int], int]:
        """Rank-2 flat spanned by each pair of hyperplanes."""
        out = {}
        for m in self.flats_of_rank(2):
            hs = [i for i in range(len(self.arrangement)) if m >> i & 1]
            for a in hs:
                for b in hs:
                    if a < b:
                        out[a, b] = m
        return out

    def characteristic_polynomial(self) -> IntPoly:
        ell = self.arrangement.dimension
        coeffs = [0] * (ell + 1)
        for mu, r in zip(self.mobius, self.ranks):
            coeffs[ell - r] += mu
        return IntPoly(coeffs)

    def to_json(self) -> dict:
        return {"flats": len(self.masks), "rank": self.rank}


def _closure(normals, members: list[int]) -> tuple[int, int]:
    ech = Echelon(_row(normals[i]) for i in members)
    mask = 0
    for i, n in enumerate(normals):
        if ech.contains(_row(n)):
            mask |= 1 << i
    return mask, ech.rank


def intersection_lattice(a: Arrangement) -> IntersectionLattice:
    normals = a.normals
    n = len(normals)
    masks, ranks = [0], [0]
    layer = [0]
    r = 0
    while layer:
        nxt: dict[int, None] = {}
        for m in layer:
            members = [i for i in range(n) if m >> i & 1]
            covered = m
            for h in range(n):
                if covered >> h & 1:
                    continue
                # each cover of m is reached once; its other hyperplanes are skipped
                cm, _ = _closure(normals, members + [h])
                covered |= cm
                nxt[cm] = None
        layer = sorted(nxt)
        r += 1
        masks.extend(layer)
        ranks.extend([r] * len(layer))
    mu = kernels.mobius(masks, ranks)
    return IntersectionLattice(a, tuple(masks), tuple(ranks), tuple(mu))


def characteristic_polynomial(a: Arrangement) -> IntPoly:
    return intersection_lattice(a).characteristic_polynomial()


def localization(a: Arrangement, flat_mask: int) -> Arrangement:
    return a.subarrangement(i for i in range(len(a)) if flat_mask >> i & 1)


@dataclass(frozen=True)
class SupersolvableResult:
    supersolvable: bool
    filtration: tuple[tuple[int, ...], ...] = ()  # A_1 <= A_2 <= ... as hyperplane index lists

    def __bool__(self) -> bool:
        return self.supersolvable

    def to_json(self) -> dict:
        return {"supersolvable": self.supersolvable, "filtration": [list(f) for f in self.filtration]}


def _indices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def is_supersolvable_lattice(a: Arrangement, lattice: IntersectionLattice | None = None) -> SupersolvableResult:
    """Search for a filtration A_1 < ... < A_r with rank(A_i) = i such that
    any two hyperplanes of A_i - A_{i-1} meet inside a member of A_{i-1}.

    Only closed sub-arrangements (localizations) are tried; any valid
    filtration consists of localizations, so this loses nothing.
    """
    lat = lattice or intersection_lattice(a)
    if len(a) == 0:
        return SupersolvableResult(True, ())
    top = lat.masks[-1]
    by_rank: dict[int, list[int]] = {}
    for m, r in zip(lat.masks, lat.ranks):
        by_rank.setdefault(r, []).append(m)
    pc = lat.pair_closure

    def modular_step(x: int, y: int) -> bool:
        diff = _indices(x & ~y)
        for i, h in enumerate(diff):
            for h2 in diff[i + 1:]:
                if not pc[h, h2] & y:
                    return False
        return True

    @lru_cache(maxsize=None)
    def chain(x: int):
        r = lat.rank_of[x]
        if r <= 1:
            return (x,)
        for y in by_rank[r - 1]:
            if y & ~x == 0 and modular_step(x, y):
                below = chain(y)
                if below is not None:
                    return below + (x,)
        return None

    found = chain(top)
    if found is None:
        return SupersolvableResult(False)
    return SupersolvableResult(True, tuple(_indices(m) for m in found))
