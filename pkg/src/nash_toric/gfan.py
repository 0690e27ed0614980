"""Groebner fans of ideals of k[S_sigma], restricted to sigma.

For a marked reduced basis G the closed Groebner cone is

    C_G = {w in sigma : (a_i - b) . w >= 0 for every b in supp(g_i)}

where a_i is the marked leading exponent of g_i.  In dimension 2 the whole
restricted fan is enumerated by walking from one boundary ray of sigma to the
other: at each wall w the next cone comes from the order "w first, then the
far boundary ray", i.e. from the weight just past the wall.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from .cones import Cone, Fan, cone, cone_from_inequalities
from .errors import ToricError
from .groebner import Ideal, MarkedGroebnerBasis, buchberger
from .lattice import Vector
from .polyalg import MonomialOrder, default_tiebreak

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroebnerCone:
    cone: Cone
    witness_weight: Vector
    basis: MarkedGroebnerBasis

    def to_json(self) -> dict:
        return {"rays": [list(r) for r in self.cone.rays],
                "witness_weight": list(self.witness_weight),
                "leading_exponents": sorted(list(a) for a in self.basis.leading_exponents())}


def cone_of_basis(gb: MarkedGroebnerBasis, sigma: Cone) -> Cone:
    ineqs = list(sigma.inequalities)
    for g, a in gb.pairs:
        for b in g.terms:
            if b != a:
                ineqs.append(tuple(x - y for x, y in zip(a, b)))
    c = cone_from_inequalities(ineqs, sigma.dim)
    if not c.is_full_dimensional:
        raise ToricError("degenerate weight cone")
    return c


def groebner_cones_2d(ideal: Ideal, sigma: Cone,
                      tiebreak: MonomialOrder | None = None) -> list[GroebnerCone]:
    """Maximal cones of the Groebner fan restricted to a 2D sigma, in sweep order."""
    if sigma.dim != 2 or not sigma.is_full_dimensional:
        raise ToricError("fan enumeration unsupported: sigma must be a full-dimensional 2D cone")
    tiebreak = tiebreak or default_tiebreak(ideal.ring.semigroup)
    start, end = sigma.rays
    wall = start
    pieces: list[tuple[Vector, Vector, MarkedGroebnerBasis]] = []
    while True:
        gb = buchberger(ideal, MonomialOrder([wall, end, *tiebreak.rows]))
        c = cone_of_basis(gb, sigma)
        if wall not in c.rays:
            raise ToricError(f"Groebner cone {c} does not start at the wall {wall}")
        far = next(r for r in c.rays if r != wall)
        if pieces and pieces[-1][2].leading_exponents() == gb.leading_exponents():
            # Equal initial ideals on both sides of a wall: merge rather than guess.
            log.warning("merging Groebner cones across a non-wall at %s", wall)
            pieces[-1] = (pieces[-1][0], far, pieces[-1][2])
        else:
            pieces.append((wall, far, gb))
        if far == end:
            break
        wall = far
    return [GroebnerCone(cone(a, b), tuple(x + y for x, y in zip(a, b)), gb)
            for a, b, gb in pieces]


def groebner_fan_2d(ideal: Ideal, sigma: Cone, tiebreak: MonomialOrder | None = None) -> Fan:
    return Fan.of([gc.cone for gc in groebner_cones_2d(ideal, sigma, tiebreak)], sigma.dim)


def is_trivial_fan(f: Fan, sigma: Cone) -> bool:
    return f.maximal_cones == (sigma,)
