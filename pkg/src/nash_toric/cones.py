"""Rational polyhedral cones and fans in N_R = R^d.

A :class:`Cone` stores primitive extreme rays in lexicographic order.  Only the
duals of lower-dimensional cones are allowed to contain a line; such a cone
keeps a basis of its lineality space in ``lineality`` and its pointed part
(taken inside the orthogonal complement of the lineality space) in ``rays``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from . import lattice
from .errors import ToricError
from .lattice import Vector, dot

log = logging.getLogger(__name__)


def _canonical_subspace(vectors: Sequence[Sequence]) -> tuple[Vector, ...]:
    rref, _ = lattice.row_reduce(vectors)
    return tuple(sorted(lattice.primitive(r) for r in rref))


def cone_from_inequalities(ineqs: Iterable[Sequence[int]], dim: int) -> "Cone":
    """The cone {x : u . x >= 0 for every u in ineqs}, converted to generators.

    Extreme rays are the one-dimensional solution sets of rank-(k-1) tight
    subsystems (k = dimension of the pointed part), kept when they satisfy
    every inequality.  Exact over Q.
    """
    rows = sorted({lattice.primitive(u) for u in ineqs if any(u)})
    lin = lattice.nullspace(rows, dim) if rows else list(lattice.identity(dim))
    lin_rows = _canonical_subspace(lin) if lin else ()
    k = dim - len(lin_rows)
    rays: set[Vector] = set()
    if k > 0:
        for tight in combinations(rows, k - 1):
            eqs = list(tight) + list(lin_rows)
            sol = lattice.nullspace(eqs, dim) if eqs else list(lattice.identity(dim))
            if len(sol) != 1:
                continue
            r = sol[0]
            for cand in (r, tuple(-x for x in r)):
                if all(dot(u, cand) >= 0 for u in rows):
                    rays.add(cand)
    return Cone(dim, tuple(sorted(rays)), lin_rows)


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone given by primitive generators.

    Use :func:`cone` to build one from arbitrary generators; the raw
    constructor assumes the fields are already canonical.
    """

    dim: int
    rays: tuple[Vector, ...]
    lineality: tuple[Vector, ...] = ()

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def generators(self) -> tuple[Vector, ...]:
        """Rays together with both signs of every lineality basis vector."""
        neg = tuple(tuple(-x for x in v) for v in self.lineality)
        return tuple(sorted(set(self.rays) | set(self.lineality) | set(neg)))

    @cached_property
    def inequalities(self) -> tuple[Vector, ...]:
        """Generators of the dual cone; x is in the cone iff u . x >= 0 for all of them."""
        return dual_cone(self).generators

    @cached_property
    def dimension(self) -> int:
        return lattice.rank(self.rays + self.lineality) if (self.rays or self.lineality) else 0

    @property
    def is_full_dimensional(self) -> bool:
        return self.dimension == self.dim

    @property
    def is_simplicial(self) -> bool:
        return self.is_pointed and len(self.rays) == self.dimension

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.dim:
            raise ToricError("dimension mismatch")
        return all(dot(u, v) >= 0 for u in self.inequalities)

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def interior_point(self) -> Vector:
        """An integer point of the relative interior (sum of the rays)."""
        return tuple(sum(col) for col in zip(*self.rays)) if self.rays else (0,) * self.dim

    def index(self) -> int:
        """Multiplicity: index of the ray lattice in its saturation (simplicial cones)."""
        if not self.rays:
            return 1
        if not self.is_simplicial:
            raise ToricError("lattice index is only defined for simplicial cones")
        return lattice.lattice_index(self.rays)

    def to_json(self) -> dict:
        out: dict = {"dim": self.dim, "rays": [list(r) for r in self.generators]}
        if self.lineality:
            out["lineality"] = [list(v) for v in self.lineality]
        return out

    def __str__(self) -> str:
        body = ", ".join(str(r) for r in self.rays)
        return f"cone({body})" if self.rays else "cone(0)"


def cone(*rays: Sequence[int], dim: int | None = None, pointed: bool = True) -> Cone:
    """Cone generated by ``rays``; redundant and non-primitive generators are cleaned up.

    Raises ToricError when ``pointed`` is set and the generators span a line.
    """
    gens = [lattice.as_vector(r) for r in rays]
    if dim is None:
        if not gens:
            raise ToricError("dimension needed for the zero cone")
        dim = len(gens[0])
    if any(len(g) != dim for g in gens):
        raise ToricError("rays of different dimensions")
    gens = [g for g in gens if any(g)]
    if not gens:
        return Cone(dim, ())
    dual = cone_from_inequalities(gens, dim)
    c = cone_from_inequalities(dual.generators, dim)
    if pointed and c.lineality:
        raise ToricError("cone is not strongly convex")
    return c


def cone_from_json(obj: dict) -> Cone:
    try:
        dim = int(obj["dim"])
        rays = obj["rays"]
    except (KeyError, TypeError) as exc:
        raise ToricError(f"malformed cone object: {exc}") from None
    return cone(*rays, dim=dim)


def dual_cone(c: Cone) -> Cone:
    """sigma^vee = {u : u . v >= 0 for all v in sigma}."""
    return cone_from_inequalities(c.generators, c.dim)


def faces(c: Cone) -> list[Cone]:
    """All faces of a pointed cone, from {0} up to the cone itself, sorted by dimension."""
    if not c.is_pointed:
        raise ToricError("faces are only enumerated for strongly convex cones")
    ineqs = c.inequalities
    found: set[tuple[Vector, ...]] = set()
    for k in range(len(c.rays) + 1):
        for subset in combinations(c.rays, k):
            found.add(_face_closure(c.rays, ineqs, subset))
    out = [Cone(c.dim, rays) for rays in found]
    out.sort(key=lambda f: (f.dimension, f.rays))
    return out


def _face_closure(rays, ineqs, subset) -> tuple[Vector, ...]:
    vanishing = [u for u in ineqs if all(dot(u, r) == 0 for r in subset)]
    return tuple(r for r in rays if all(dot(u, r) == 0 for u in vanishing))


def facets(c: Cone) -> list[Cone]:
    return [f for f in faces(c) if f.dimension == c.dimension - 1]


def is_face(c: Cone, f: Cone) -> bool:
    return any(f == g for g in faces(c))


def is_smooth(c: Cone) -> bool:
    """Rays extend to a Z-basis of N."""
    if not c.is_pointed:
        return False
    if len(c.rays) != c.dimension:
        return False
    return lattice.extends_to_basis(c.rays)


def limit_face(c: Cone, v: Sequence[int]) -> Cone:
    """The face of ``c`` whose relative interior contains ``v``.

    This is the face whose distinguished point is the limit at 0 of the
    one-parameter subgroup of ``v``.
    """
    v = lattice.as_vector(v)
    if not any(v):
        raise ToricError("one-parameter subgroup must be nonzero")
    if not c.contains(v):
        raise ToricError("limit does not exist: vector lies outside the cone")
    vanishing = [u for u in c.inequalities if dot(u, v) == 0]
    return Cone(c.dim, tuple(r for r in c.rays if all(dot(u, r) == 0 for u in vanishing)))


def intersect(a: Cone, b: Cone) -> Cone:
    if a.dim != b.dim:
        raise ToricError("dimension mismatch")
    return cone_from_inequalities(a.inequalities + b.inequalities, a.dim)


def triangulate(c: Cone) -> list[Cone]:
    """Pulling triangulation of a pointed cone into simplicial cones, using its own rays."""
    if not c.is_pointed:
        raise ToricError("cannot triangulate a cone with lineality")
    if len(c.rays) <= c.dimension:
        return [c]
    apex = c.rays[0]
    out = []
    for f in facets(c):
        if apex in f.rays:
            continue
        for simplex in triangulate(f):
            out.append(Cone(c.dim, tuple(sorted(simplex.rays + (apex,)))))
    return out


def _section_volume(c: Cone, basis, ell) -> Fraction:
    """Volume (in span coordinates) of {x in c : ell . x <= 1}, up to a 1/k! factor."""
    total = Fraction(0)
    basis_t = lattice.transpose(basis)
    for s in triangulate(c):
        coords = [lattice.solve(basis_t, r) for r in s.rays]
        num = abs(_frac_det(coords))
        den = 1
        for r in s.rays:
            den *= dot(ell, r)
        total += Fraction(num) / den
    return total


def _frac_det(m) -> Fraction:
    a = [list(r) for r in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def is_covered(c: Cone, pieces: Sequence[Cone]) -> bool:
    """Whether the cones in ``pieces`` (interiors pairwise disjoint, all inside c) cover c."""
    if not c.rays:
        return True
    inside = [p for p in pieces if p.dimension == c.dimension and c.contains_cone(p)]
    if not inside:
        return False
    basis = [lattice.primitive(r) for r in lattice.row_reduce(c.rays)[0]]
    ell = tuple(sum(col) for col in zip(*[u for u in c.inequalities]))
    want = _section_volume(c, basis, ell)
    got = sum((_section_volume(p, basis, ell) for p in inside), Fraction(0))
    return got == want


@dataclass(frozen=True)
class Fan:
    """A fan recorded by its maximal cones; faces are derived on demand."""

    dim: int
    maximal_cones: tuple[Cone, ...] = field(default=())

    @classmethod
    def of(cls, cones: Iterable[Cone], dim: int | None = None) -> "Fan":
        cones = list(cones)
        if dim is None:
            if not cones:
                raise ToricError("dimension needed for an empty fan")
            dim = cones[0].dim
        # Drop cones that are faces of other listed cones.
        maximal = []
        for c in cones:
            if any(c != d and d.contains_cone(c) for d in cones):
                continue
            if c not in maximal:
                maximal.append(c)
        maximal.sort(key=lambda c: c.rays)
        return cls(dim, tuple(maximal))

    @classmethod
    def face_fan(cls, c: Cone) -> "Fan":
        return cls(c.dim, (c,))

    def cones(self) -> list[Cone]:
        out: set[Cone] = set()
        for c in self.maximal_cones:
            out.update(faces(c))
        return sorted(out, key=lambda f: (f.dimension, f.rays))

    def rays(self) -> list[Vector]:
        return sorted({r for c in self.maximal_cones for r in c.rays})

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "maximal_cones": [[list(r) for r in c.rays] for c in self.maximal_cones]}


def fan_from_json(obj: dict) -> Fan:
    try:
        dim = int(obj["dim"])
        cones = [cone(*rays, dim=dim) for rays in obj["maximal_cones"]]
    except (KeyError, TypeError) as exc:
        raise ToricError(f"malformed fan object: {exc}") from None
    return Fan.of(cones, dim)


def check_fan(f: Fan) -> list[str]:
    """Validate the fan axiom on maximal cones. Returns a list of problems (empty if valid).

    Every pairwise intersection must be a face of both cones.  Exact in every
    dimension, though intended for d <= 3.
    """
    problems = []
    for c in f.maximal_cones:
        if c.dim != f.dim:
            problems.append(f"{c}: wrong ambient dimension")
        if not c.is_pointed:
            problems.append(f"{c}: not strongly convex")
    for a, b in combinations(f.maximal_cones, 2):
        meet = intersect(a, b)
        if not meet.is_pointed:
            problems.append(f"{a} and {b}: intersection is not strongly convex")
            continue
        for c in (a, b):
            if not is_face(c, meet):
                problems.append(f"{a} ∩ {b} = {meet} is not a face of {c}")
    if f.dim > 3 and not problems:
        log.debug("fan validated by face-lattice enumeration in dimension %d", f.dim)
    return problems


def is_refinement(s: Fan, t: Fan) -> bool:
    """Whether ``s`` refines ``t``.

    Every cone of s lies in a cone of t and every cone of t is a union of cones
    of s.  Given the first condition, the second reduces to each maximal cone of
    t being covered by the cones of s inside it.
    """
    if s.dim != t.dim:
        raise ToricError("dimension mismatch")
    for c in s.maximal_cones:
        if not any(d.contains_cone(c) for d in t.maximal_cones):
            return False
    s_cones = s.cones()
    return all(is_covered(d, s_cones) for d in t.maximal_cones)


def angular_key(sigma: Cone, w: Sequence) -> Fraction:
    """Position of a nonzero ``w`` in a 2D cone, 0 at ``sigma.rays[0]`` and 1 at ``rays[1]``."""
    a, b = sigma.rays
    da = a[0] * w[1] - a[1] * w[0]
    db = w[0] * b[1] - w[1] * b[0]
    return Fraction(da, da + db)
