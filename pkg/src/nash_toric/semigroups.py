"""Affine semigroups S_sigma = sigma^vee ∩ M and their Hilbert bases."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import ceil, floor
from typing import Sequence

from . import lattice
from .cones import Cone, dual_cone, triangulate
from .errors import ToricError
from .lattice import Vector, dot


def _box(points: Sequence[Sequence], rays: Sequence[Vector]) -> list[range]:
    """Integer box containing conv(points) + sum_i [0, 1] * rays_i."""
    dim = len(points[0])
    out = []
    for j in range(dim):
        lo = floor(min(p[j] for p in points)) + sum(min(0, r[j]) for r in rays)
        hi = ceil(max(p[j] for p in points)) + sum(max(0, r[j]) for r in rays)
        out.append(range(lo, hi + 1))
    return out


def _parallelepiped_points(rays: Sequence[Vector]) -> list[Vector]:
    """Lattice points of {sum l_i r_i : 0 <= l_i < 1} for independent rays."""
    dim = len(rays[0])
    cols = lattice.transpose(rays)
    out = []
    for p in product(*_box([(0,) * dim], rays)):
        lam = lattice.solve(cols, p)
        if lam is not None and all(0 <= x < 1 for x in lam):
            out.append(p)
    return out


def hilbert_basis(c: Cone) -> list[Vector]:
    """Minimal generating set of the monoid c ∩ Z^d, in lexicographic order.

    Candidates are the rays plus the lattice points of the fundamental
    parallelepipeds of a triangulation; reducible candidates are then dropped.
    """
    if not c.is_pointed:
        raise ToricError("Hilbert basis requires a strongly convex cone")
    if not c.rays:
        return []
    cands: set[Vector] = set(c.rays)
    for simplex in triangulate(c):
        cands.update(p for p in _parallelepiped_points(simplex.rays) if any(p))
    basis = []
    for x in cands:
        reducible = any(
            g != x and c.contains(tuple(a - b for a, b in zip(x, g))) for g in cands
        )
        if not reducible:
            basis.append(x)
    return sorted(basis)


@dataclass(frozen=True)
class AffineSemigroup:
    """S_sigma for a full-dimensional strongly convex cone sigma in N_R.

    Elements are stored in ambient coordinates of M = Z^d.  Membership is the
    inequality test u . v >= 0 on the rays v of sigma (S_sigma is saturated).
    """

    sigma: Cone
    dual: Cone
    hilbert_basis: tuple[Vector, ...]
    _mcub_cache: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    @classmethod
    def of_cone(cls, sigma: Cone) -> "AffineSemigroup":
        if not sigma.is_pointed or not sigma.is_full_dimensional:
            raise ToricError("S_sigma needs a full-dimensional strongly convex cone")
        d = dual_cone(sigma)
        return cls(sigma, d, tuple(hilbert_basis(d)))

    @property
    def dim(self) -> int:
        return self.sigma.dim

    def coords(self, u: Sequence[int]) -> tuple[int, ...]:
        """Values of u on the rays of sigma; u is in S iff all are >= 0."""
        return tuple(dot(u, v) for v in self.sigma.rays)

    def __contains__(self, u: Sequence[int]) -> bool:
        return all(dot(u, v) >= 0 for v in self.sigma.rays)

    def minimal_common_upper_bounds(self, a: Vector, b: Vector) -> tuple[Vector, ...]:
        """Minimal generators of the S-module (a + S) ∩ (b + S)."""
        key = (a, b) if a <= b else (b, a)
        hit = self._mcub_cache.get(key)
        if hit is None:
            hit = _mcub(self, *key)
            self._mcub_cache[key] = hit
        return hit


def _mcub(s: AffineSemigroup, a: Vector, b: Vector) -> tuple[Vector, ...]:
    vs = s.sigma.rays
    bound = [max(dot(a, v), dot(b, v)) for v in vs]
    if all(x == y for x, y in zip(bound, s.coords(a))):
        return (a,)
    if all(x == y for x, y in zip(bound, s.coords(b))):
        return (b,)
    d = s.dim
    vertices = []
    for idx in combinations(range(len(vs)), d):
        rows = [vs[i] for i in idx]
        if lattice.rank(rows) < d:
            continue
        x = lattice.solve(rows, [bound[i] for i in idx])
        if all(dot(x, v) >= bnd for v, bnd in zip(vs, bound)):
            vertices.append(x)

    def inside(m) -> bool:
        return all(dot(m, v) >= bnd for v, bnd in zip(vs, bound))

    out = []
    for m in product(*_box(vertices, s.dual.rays)):
        if not inside(m):
            continue
        if any(inside(tuple(x - y for x, y in zip(m, h))) for h in s.hilbert_basis):
            continue
        out.append(m)
    return tuple(sorted(out))


def semigroup_membership(s: AffineSemigroup, v: Sequence[int]) -> bool:
    return lattice.as_vector(v) in s

