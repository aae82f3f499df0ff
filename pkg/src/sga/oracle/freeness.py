"""Exact freeness test for central arrangements.

Minimal homogeneous generators of D(A) are found degree by degree: the
degree-d piece is a nullspace, and new generators are whatever the
monomial multiples of earlier generators fail to span.  D(A) is free
exactly when this produces ell generators; Saito's criterion (determinant
equal to c*Q with c != 0) certifies the basis.

The defining conditions theta(alpha_H) in alpha_H*S are linear: substitute
a parametrization of H into sum_i a_i f_i and require the zero polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ..core import InputError
from .arrangement import Arrangement, coordinate_components
from .linalg import Echelon, determinant
from .polyring import Poly, det as poly_det, monomial_index, monomials

MAX_DIMENSION = 5
MAX_HYPERPLANES = 25

FREE, NON_FREE, OUT_OF_RANGE = "free", "non_free", "out_of_range"


@dataclass(frozen=True)
class GradedStep:
    degree: int
    dim_derivations: int  # dim D(A)_d
    dim_generated: int  # span of multiples of lower-degree generators
    new_generators: int

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "dim_D": self.dim_derivations,
            "dim_generated": self.dim_generated,
            "new_generators": self.new_generators,
        }


@dataclass(frozen=True)
class FreenessResult:
    status: str
    exponents: tuple[int, ...] = ()
    basis: tuple[tuple[Poly, ...], ...] = ()  # theta_k = sum_i basis[k][i] d/dx_i
    saito_constant: int = 0
    obstruction: tuple[tuple[str, GradedStep], ...] = ()  # (component, step)
    reason: str = ""

    @property
    def free(self) -> bool | None:
        return None if self.status == OUT_OF_RANGE else self.status == FREE

    def to_json(self, with_basis: bool = False) -> dict:
        out = {"status": self.status, "exponents": sorted(self.exponents), "reason": self.reason}
        if self.status == NON_FREE:
            out["obstruction"] = [dict(s.to_json(), component=c) for c, s in self.obstruction]
        if with_basis and self.basis:
            out["saito_constant"] = self.saito_constant
            out["basis"] = [[p.to_json() for p in theta] for theta in self.basis]
        return out


def _pivot(alpha) -> int:
    return min((j for j, c in enumerate(alpha) if c), key=lambda j: (abs(alpha[j]), j))


def _substitution_powers(alpha, p: int, nvars: int, top: int) -> list[Poly]:
    """(-sum_{j != p} a_j x_j)^e for e = 0..top."""
    lin = Poly(nvars, {tuple(int(k == j) for k in range(nvars)): -c for j, c in enumerate(alpha) if c and j != p})
    out = [Poly.const(nvars, 1)]
    for _ in range(top):
        out.append(out[-1] * lin)
    return out


class _Component:
    """Graded pieces of D(A) for an arrangement with ell coordinates."""

    def __init__(self, normals, ell: int):
        self.normals = normals
        self.ell = ell
        self._pivots = [_pivot(a) for a in normals]
        self._powers: dict[int, list[Poly]] = {}

    def _powers_for(self, h: int, d: int) -> list[Poly]:
        cached = self._powers.get(h)
        if cached is None or len(cached) <= d:
            cached = _substitution_powers(self.normals[h], self._pivots[h], self.ell, d)
            self._powers[h] = cached
        return cached

    def constraint_echelon(self, d: int) -> tuple[Echelon, int]:
        ell = self.ell
        mons = monomials(ell, d)
        nm = len(mons)
        ech = Echelon()
        for h, alpha in enumerate(self.normals):
            p = self._pivots[h]
            ap = alpha[p]
            pw = self._powers_for(h, d)
            rows: dict[tuple[int, ...], dict[int, int]] = {}
            for i, ai in enumerate(alpha):
                if not ai:
                    continue
                for mi, m in enumerate(mons):
                    e = m[p]
                    scale = ai * ap ** (d - e)
                    rest = m[:p] + (0,) + m[p + 1:]
                    col = i * nm + mi
                    for pm, pc in pw[e].terms.items():
                        key = tuple(x + y for x, y in zip(rest, pm))
                        row = rows.setdefault(key, {})
                        row[col] = row.get(col, 0) + scale * pc
            for row in rows.values():
                ech.add(row)
        return ech, ell * nm

    def derivations(self, d: int) -> list[dict[int, int]]:
        ech, ncols = self.constraint_echelon(d)
        return ech.nullspace(ncols)

    def to_polys(self, vec: dict[int, int], d: int) -> tuple[Poly, ...]:
        mons = monomials(self.ell, d)
        nm = len(mons)
        terms = [dict() for _ in range(self.ell)]
        for col, c in vec.items():
            terms[col // nm][mons[col % nm]] = c
        return tuple(Poly(self.ell, t) for t in terms)

    def shift(self, vec: dict[int, int], d: int, mono: tuple[int, ...]) -> dict[int, int]:
        """Coordinates of mono * theta in degree d + deg(mono)."""
        src = monomials(self.ell, d)
        nm = len(src)
        e = d + sum(mono)
        dst = monomial_index(self.ell, e)
        nd = len(dst)
        out = {}
        for col, c in vec.items():
            i, m = divmod(col, nm)
            out[i * nd + dst[tuple(a + b for a, b in zip(src[m], mono))]] = c
        return out


def _generic_point(normals, ell: int) -> tuple[int, ...]:
    for base in range(ell + 2, 10 * ell + 20):
        pt = tuple(base**i + i for i in range(ell))
        if all(sum(a * x for a, x in zip(n, pt)) for n in normals):
            return pt
    raise ArithmeticError("no point off the arrangement found")


def _det_at(thetas, pt) -> int:
    return determinant([[f(pt) for f in theta] for theta in thetas])


def _decide_component(normals, ell: int):
    """Returns (free, exponents, basis polys, table, reason)."""
    comp = _Component(normals, ell)
    n_h = len(normals)
    pt = _generic_point(normals, ell)
    gens: list[tuple[int, dict[int, int], tuple[Poly, ...]]] = []
    table: list[GradedStep] = []
    d = 0
    while True:
        d_star = None
        if len(gens) == ell - 1:
            d_star = n_h - sum(g[0] for g in gens)
            if d_star < d:
                return False, (), (), table, f"last generator would need degree {d_star} < {d}"
        deg = d if d_star is None else d_star
        space = comp.derivations(deg)
        span = Echelon()
        for e, vec, _ in gens:
            for mono in monomials(ell, deg - e):
                span.add(comp.shift(vec, e, mono))
        generated = span.rank
        if d_star is not None:
            # the last generator, if any, lives in degree d_star; Saito decides
            thetas = [g[2] for g in gens]
            for vec in space:
                cand = comp.to_polys(vec, deg)
                if _det_at(thetas + [cand], pt):
                    table.append(GradedStep(deg, len(space), generated, 1))
                    gens.append((deg, vec, cand))
                    return True, tuple(g[0] for g in gens), tuple(g[2] for g in gens), table, ""
            table.append(GradedStep(deg, len(space), generated, 0))
            return False, (), (), table, f"no derivation of degree {deg} completes a Saito basis"
        new = [vec for vec in space if span.add(vec)]
        table.append(GradedStep(deg, len(space), generated, len(new)))
        gens.extend((deg, vec, comp.to_polys(vec, deg)) for vec in new)
        m = len(gens)
        s = sum(g[0] for g in gens)
        if m > ell:
            return False, (), (), table, f"{m} minimal generators exceed ell = {ell}"
        if m == ell:
            thetas = [g[2] for g in gens]
            if s == n_h and _det_at(thetas, pt):
                return True, tuple(g[0] for g in gens), tuple(thetas), table, ""
            return False, (), (), table, f"{ell} minimal generators of degree sum {s} do not satisfy Saito"
        if s + (ell - m) * (d + 1) > n_h:
            return False, (), (), table, (
                f"degree bound: {m} generators of degree sum {s} leave {ell - m} of degree > {d}, "
                f"exceeding {n_h} hyperplanes"
            )
        d += 1


def _embed(p: Poly, coords: list[int], ell: int) -> Poly:
    terms = {}
    for m, c in p.terms.items():
        full = [0] * ell
        for j, e in zip(coords, m):
            full[j] = e
        terms[tuple(full)] = c
    return Poly(ell, terms)


def freeness_decide(
    a: Arrangement, max_dimension: int = MAX_DIMENSION, max_hyperplanes: int = MAX_HYPERPLANES
) -> FreenessResult:
    """Decide freeness exactly; the bounds apply to each coordinate-disjoint factor."""
    ell = a.dimension
    groups, unused = coordinate_components(a)
    parts = []
    for idx in groups:
        coords = sorted({j for i in idx for j, c in enumerate(a.normals[i]) if c})
        if len(coords) > max_dimension or len(idx) > max_hyperplanes:
            return FreenessResult(
                OUT_OF_RANGE,
                reason=f"factor of dimension {len(coords)} with {len(idx)} hyperplanes exceeds "
                f"the oracle bound ({max_dimension}, {max_hyperplanes})",
            )
        parts.append((idx, coords))

    exponents = [0] * len(unused)
    basis = []
    obstruction = []
    for j in unused:
        basis.append(tuple(Poly.const(ell, int(k == j)) for k in range(ell)))
    free = True
    reasons: list[str] = []
    for idx, coords in parts:
        normals = [tuple(a.normals[i][j] for j in coords) for i in idx]
        ok, exps, thetas, table, why = _decide_component(normals, len(coords))
        label = ",".join(str(a.coords[j]) for j in coords)
        if not ok:
            free = False
            obstruction.extend((label, step) for step in table)
            reasons.append(f"factor {label}: {why}")
            continue
        exponents.extend(exps)
        for theta in thetas:
            full = [Poly(ell) for _ in range(ell)]
            for j, f in zip(coords, theta):
                full[j] = _embed(f, coords, ell)
            basis.append(tuple(full))
    if not free:
        return FreenessResult(NON_FREE, obstruction=tuple(obstruction), reason="; ".join(reasons))
    order = sorted(range(len(basis)), key=lambda k: exponents[k])
    basis = [basis[k] for k in order]
    pt = _generic_point(a.normals, ell) if a.normals else tuple(range(1, ell + 1))
    c, r = divmod(_det_at(basis, pt), a.defining_polynomial()(pt))
    if r or c == 0:
        raise ArithmeticError("Saito determinant is not a nonzero multiple of Q")
    return FreenessResult(
        FREE,
        exponents=tuple(exponents[k] for k in order),
        basis=tuple(basis),
        saito_constant=c,
        reason="Saito criterion",
    )


def _vanishes_on(f: Poly, alpha) -> bool:
    """f restricted to the hyperplane alpha . x = 0 is the zero polynomial."""
    p = _pivot(alpha)
    d = max(f.degree(), 0)
    pw = _substitution_powers(alpha, p, f.nvars, d)
    acc = Poly(f.nvars)
    for m, c in f.terms.items():
        e = m[p]
        rest = m[:p] + (0,) + m[p + 1:]
        mono = Poly(f.nvars, {rest: c * alpha[p] ** (d - e)})
        acc = acc + mono * pw[e]
    return acc.is_zero()


def verify_saito(a: Arrangement, result: FreenessResult) -> bool:
    """Symbolic re-check: every theta lies in D(A) and det = c*Q exactly."""
    if result.status != FREE:
        raise InputError("only free results carry a Saito certificate")
    ell = a.dimension
    if sum(result.exponents) != len(a) or len(result.basis) != ell:
        return False
    for theta in result.basis:
        for alpha in a.normals:
            image = Poly(ell)
            for ai, f in zip(alpha, theta):
                if ai:
                    image = image + f * ai
            if not _vanishes_on(image, alpha):
                return False
    d = poly_det([list(theta) for theta in result.basis], ell)
    return result.saito_constant != 0 and d == a.defining_polynomial() * result.saito_constant


def graded_dimension_upper_bound(ell: int, d: int) -> int:
    return ell * comb(d + ell - 1, ell - 1)
