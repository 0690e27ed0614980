"""Normalized (higher) Nash modifications of affine toric varieties.

The normalized n-th Nash modification of U_sigma is the toric variety of the
Groebner fan, restricted to sigma, of an ideal built from
B = <x^{a_1} - 1, ..., x^{a_s} - 1> (the a_i generate S_sigma).  Which power
of B corresponds to order n is selected by :func:`calibrate_power_rule`
against the published rays of the A3 example; the winner is frozen in
``DEFAULT_POWER_RULE``.

Only the normalized modification is computed.  If it is singular, so is the
unnormalized one, because normalization of a normal variety is the identity.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from .cones import Cone, Fan, angular_key, cone, is_refinement, is_smooth
from .errors import ToricError
from .gfan import GroebnerCone, groebner_cones_2d, is_trivial_fan
from .groebner import Ideal
from .lattice import Vector, determinant, dot, primitive
from .polyalg import QQ, PrimeField, SemigroupRing
from .semigroups import AffineSemigroup

log = logging.getLogger(__name__)

POWER_RULES = ("base", "power(n)", "power(n+1)")
DEFAULT_POWER_RULE = "power(n+1)"
ITERATION_CAP = 64


def a_k_cone(k: int) -> Cone:
    """Cone of the A_k surface singularity z^{k+1} = xy."""
    return cone((0, 1), (k + 1, -k))


A3 = a_k_cone(3)


def _exponent(rule: str, n: int) -> int:
    if n < 1:
        raise ToricError("order n must be a positive integer")
    if rule == "base":
        return 1
    if rule == "power(n)":
        return n
    if rule == "power(n+1)":
        return n + 1
    raise ToricError(f"unknown power rule {rule!r}; expected one of {POWER_RULES}")


def build_nash_ideal(s: AffineSemigroup, n: int, rule: str = DEFAULT_POWER_RULE,
                     field=QQ) -> Ideal:
    """B, B^n or B^(n+1) with B = <x^{a_i} - 1>, expanded into products of generators."""
    k = _exponent(rule, n)
    ring = SemigroupRing(s, field)
    one = ring.one()
    base = [ring.monomial(a) - one for a in s.hilbert_basis]
    gens = []
    for combo in combinations_with_replacement(range(len(base)), k):
        p = one
        for i in combo:
            p = p * base[i]
        if not p.is_zero() and p not in gens:
            gens.append(p)
    return Ideal.of(ring, gens)


@dataclass(frozen=True)
class NashReport:
    input_cone: Cone
    order_n: int
    field: object
    power_rule: str
    fan: Fan
    is_isomorphism: bool
    per_cone_smoothness: dict
    groebner_cones: tuple[GroebnerCone, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "input_cone": self.input_cone.to_json(),
            "n": self.order_n,
            "field": self.field.name,
            "power_rule": self.power_rule,
            "fan": self.fan.to_json(),
            "is_isomorphism": self.is_isomorphism,
            "cones": [{"rays": [list(r) for r in c.rays], "index": c.index(),
                       "smooth": self.per_cone_smoothness[c]} for c in self.fan.maximal_cones],
        }


def nash_fan(c: Cone, n: int = 1, field=QQ, rule: str = DEFAULT_POWER_RULE) -> NashReport:
    """Fan of the normalized n-th Nash modification of U_c (2D cones only)."""
    if c.dim != 2:
        raise ToricError("fan enumeration unsupported in dimension > 2")
    s = AffineSemigroup.of_cone(c)
    ideal = build_nash_ideal(s, n, rule, field)
    gcs = groebner_cones_2d(ideal, c)
    f = Fan.of([g.cone for g in gcs], 2)
    return NashReport(
        input_cone=c, order_n=n, field=field, power_rule=rule, fan=f,
        is_isomorphism=is_trivial_fan(f, c),
        per_cone_smoothness={x: is_smooth(x) for x in f.maximal_cones},
        groebner_cones=tuple(gcs),
    )


def toh_yama_rays(n: int) -> tuple[Vector, Vector]:
    """Closed-form rays of the A3 cone C_{G_n}: (2, -1) and l_n."""
    if n < 1:
        raise ToricError("order n must be a positive integer")
    if n % 2:
        return (2, -1), (2 * n - 2, -n + 2)
    return (2, -1), (2 * n, -n + 1)


def toh_yama_cone(n: int) -> Cone:
    return cone(*toh_yama_rays(n))


def calibrate_power_rule(ns: Sequence[int] = (2, 3, 4), field=QQ) -> dict:
    """Which power rule reproduces the published A3 cones for every n in ``ns``."""
    results = {}
    for rule in POWER_RULES:
        results[rule] = all(
            toh_yama_cone(n) in nash_fan(A3, n, field, rule).fan.maximal_cones for n in ns)
    matching = [r for r, ok in results.items() if ok]
    return {"ns": list(ns), "results": results,
            "selected": matching[0] if len(matching) == 1 else None}


@dataclass(frozen=True)
class IterationTrace:
    fans: tuple[Fan, ...]
    singular: tuple[tuple[Cone, ...], ...]
    terminated: bool

    @property
    def steps(self) -> int:
        return len(self.fans) - 1

    @property
    def final(self) -> Fan:
        return self.fans[-1]

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "terminated": self.terminated,
            "steps": self.steps,
            "trace": [{"fan": f.to_json(),
                       "singular": [[list(r) for r in c.rays] for c in sing]}
                      for f, sing in zip(self.fans, self.singular)],
        }


def _nash_cones(args) -> list[Cone]:
    rays, p = args
    field = PrimeField(p) if p else QQ
    return list(nash_fan(cone(*rays), 1, field).fan.maximal_cones)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("NASH_TORIC_THREADS", "1")))
    except ValueError:
        return 1


def iterate_normalized_nash(c: Cone, field=QQ, cap: int = ITERATION_CAP) -> IterationTrace:
    """Apply normalized Nash (n = 1) to every singular cone until all cones are smooth."""
    if c.dim != 2:
        raise ToricError("iteration is only supported for toric surfaces")
    current = Fan.of([c])
    fans, singular = [], []
    threads = _threads()
    while True:
        sing = tuple(x for x in current.maximal_cones if not is_smooth(x))
        fans.append(current)
        singular.append(sing)
        if not sing:
            return IterationTrace(tuple(fans), tuple(singular), True)
        if len(fans) > cap:
            raise ToricError(f"iteration cap of {cap} steps exceeded")
        jobs = [(x.rays, field.characteristic) for x in sing]
        if threads > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                parts = list(pool.map(_nash_cones, jobs))
        else:
            parts = [_nash_cones(j) for j in jobs]
        new = [x for x in current.maximal_cones if is_smooth(x)]
        for part in parts:
            new.extend(part)
        nxt = Fan.of(new, 2)
        if not is_refinement(nxt, current):
            raise ToricError("Nash step did not refine the previous fan")
        current = nxt


def blowup_oracle_n1(c: Cone) -> Fan:
    """Nash blowup fan of a toric surface from the Newton polyhedron of a monomial ideal.

    The ideal is generated by x^{a_i + a_j} over Hilbert-basis pairs with
    det(a_i, a_j) != 0; the fan is the set of linearity domains in sigma of
    w -> min over those exponents e of w . e.
    """
    if c.dim != 2:
        raise ToricError("the monomial blowup oracle is implemented for surfaces only")
    hb = AffineSemigroup.of_cone(c).hilbert_basis
    exps = sorted({tuple(x + y for x, y in zip(a, b))
                   for i, a in enumerate(hb) for b in hb[i + 1:]
                   if determinant([a, b]) != 0})
    if not exps:
        raise ToricError("need two independent Hilbert basis elements")
    breaks = set()
    for e in exps:
        for f in exps:
            if e >= f:
                continue
            diff = tuple(x - y for x, y in zip(e, f))
            for w in ((-diff[1], diff[0]), (diff[1], -diff[0])):
                w = primitive(w)
                if not c.contains(w) or w in c.rays:
                    continue
                best = min(dot(w, x) for x in exps)
                if len({x for x in exps if dot(w, x) == best}) >= 2:
                    breaks.add(w)
    rays = [c.rays[0], *sorted(breaks, key=lambda w: angular_key(c, w)), c.rays[1]]
    return Fan.of([cone(a, b) for a, b in zip(rays, rays[1:])], 2)
