"""Division, Buchberger's algorithm and marked reduced Groebner bases in k[S_sigma].

x^a divides x^b when b - a lies in S.  Two leading monomials can have several
minimal common multiples (S need not be factorial), so a pair of basis
elements contributes one S-polynomial per minimal generator of
(a + S) ∩ (b + S).
"""
from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import ToricError
from .polyalg import (Exponent, MonomialOrder, Poly, SemigroupRing, default_tiebreak,
                      initial_form)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ideal:
    ring: SemigroupRing
    generators: tuple[Poly, ...]

    @classmethod
    def of(cls, ring: SemigroupRing, generators: Sequence[Poly]) -> "Ideal":
        gens = tuple(g for g in generators if not g.is_zero())
        if any(g.ring != ring for g in gens):
            raise ToricError("generators belong to different rings")
        return cls(ring, gens)

    def to_json(self) -> dict:
        return {"generators": [g.to_json() for g in self.generators]}


@dataclass(frozen=True)
class MarkedGroebnerBasis:
    """Reduced Groebner basis with the leading exponent of each element recorded."""

    pairs: tuple[tuple[Poly, Exponent], ...]
    order: MonomialOrder

    @property
    def polys(self) -> list[Poly]:
        return [g for g, _ in self.pairs]

    def leading_exponents(self) -> frozenset[Exponent]:
        return frozenset(a for _, a in self.pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, MarkedGroebnerBasis) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def to_json(self) -> dict:
        return {"order": [list(r) for r in self.order.rows],
                "basis": [{"leading": list(a), **g.to_json()} for g, a in self.pairs]}


class _Reducer:
    """Divisor data prepared once for repeated reductions."""

    def __init__(self, ring: SemigroupRing, order: MonomialOrder):
        self.ring = ring
        self.order = order
        self.coords = lru_cache(maxsize=None)(ring.semigroup.coords)
        self.divisors: list[tuple[Exponent, tuple, Poly, object]] = []

    def add(self, g: Poly) -> None:
        a, c = g.leading(self.order)
        self.divisors.append((a, self.coords(a), g, self.ring.field.inv(c)))

    def find(self, u: Exponent):
        cu = self.coords(u)
        for i, (a, ca, g, inv) in enumerate(self.divisors):
            if all(x >= y for x, y in zip(cu, ca)):
                return i
        return None

    def reduce(self, f: Poly, quotients: list | None = None, tail_only: bool = False) -> Poly:
        """Full reduction of f. Fills ``quotients`` (dicts) when given."""
        red = self.ring.field.reduce
        key = self.order.key
        p = dict(f.terms)
        r: dict = {}
        if tail_only and p:
            top = max(p, key=key)
            r[top] = p.pop(top)
        while p:
            u = max(p, key=key)
            c = p[u]
            i = self.find(u)
            if i is None:
                r[u] = c
                del p[u]
                continue
            a, _, g, inv = self.divisors[i]
            shift = tuple(x - y for x, y in zip(u, a))
            factor = red(c * inv)
            for e, v in g.terms.items():
                e2 = tuple(x + y for x, y in zip(e, shift))
                nv = red(p.get(e2, 0) - factor * v)
                if nv:
                    p[e2] = nv
                else:
                    p.pop(e2, None)
            if quotients is not None:
                q = quotients[i]
                nv = red(q.get(shift, 0) + factor)
                if nv:
                    q[shift] = nv
                else:
                    q.pop(shift, None)
        return Poly(f.ring, r)


def divide(f: Poly, divisors: Sequence[Poly], order: MonomialOrder) -> tuple[list[Poly], Poly]:
    """Multivariate division: f = sum q_i d_i + r, no term of r divisible by any lead."""
    red = _Reducer(f.ring, order)
    for d in divisors:
        if d.is_zero():
            raise ToricError("division by the zero polynomial")
        red.add(d)
    qs: list[dict] = [{} for _ in divisors]
    r = red.reduce(f, qs)
    return [Poly(f.ring, q) for q in qs], r


def s_polynomials(g: Poly, h: Poly, order: MonomialOrder) -> list[Poly]:
    """One S-polynomial per minimal common multiple of the leading monomials."""
    a, ca = g.leading(order)
    b, cb = h.leading(order)
    field = g.field
    out = []
    for m in g.ring.semigroup.minimal_common_upper_bounds(a, b):
        sa = tuple(x - y for x, y in zip(m, a))
        sb = tuple(x - y for x, y in zip(m, b))
        out.append(g.scale_shift(field.inv(ca), sa) - h.scale_shift(field.inv(cb), sb))
    return out


def buchberger(ideal: Ideal, order: MonomialOrder) -> MarkedGroebnerBasis:
    """The marked reduced Groebner basis of ``ideal`` for ``order``."""
    ring = ideal.ring
    if not ideal.generators:
        raise ToricError("the zero ideal has no nonzero Groebner basis")
    order.validate(ring.semigroup)
    reducer = _Reducer(ring, order)
    basis: list[Poly] = []
    queue: list = []
    semigroup = ring.semigroup
    counter = 0

    def push_pairs(j: int) -> None:
        nonlocal counter
        aj = reducer.divisors[j][0]
        for i in range(j):
            ai = reducer.divisors[i][0]
            for m in semigroup.minimal_common_upper_bounds(ai, aj):
                counter += 1
                heapq.heappush(queue, (order.key(m), counter, i, j, m))

    def insert(r: Poly) -> bool:
        r = r.monic(order)
        basis.append(r)
        reducer.add(r)
        if r.leading(order)[0] == (0,) * ring.dim:
            return True
        push_pairs(len(basis) - 1)
        return False

    unit = False
    for f in sorted(ideal.generators, key=lambda p: order.key(p.leading(order)[0])):
        r = reducer.reduce(f)
        if not r.is_zero() and insert(r):
            unit = True
            break
    while queue and not unit:
        _, _, i, j, m = heapq.heappop(queue)
        gi, gj = basis[i], basis[j]
        ai, aj = reducer.divisors[i][0], reducer.divisors[j][0]
        sa = tuple(x - y for x, y in zip(m, ai))
        sb = tuple(x - y for x, y in zip(m, aj))
        s = gi.scale_shift(1, sa) - gj.scale_shift(1, sb)
        r = reducer.reduce(s)
        if not r.is_zero() and insert(r):
            unit = True
    if unit:
        one = ring.one()
        return MarkedGroebnerBasis(((one, (0,) * ring.dim),), order)
    return _reduced(ring, basis, order)


def _reduced(ring: SemigroupRing, basis: list[Poly], order: MonomialOrder) -> MarkedGroebnerBasis:
    key = order.key
    basis = sorted(basis, key=lambda g: key(g.leading(order)[0]))
    minimal: list[Poly] = []
    for g in basis:
        a = g.leading(order)[0]
        if not any(ring.divides(h.leading(order)[0], a) for h in minimal):
            minimal.append(g)
    reducer = _Reducer(ring, order)
    for g in minimal:
        reducer.add(g)
    pairs = []
    for g in minimal:
        a = g.leading(order)[0]
        pairs.append((reducer.reduce(g, tail_only=True), a))
    return MarkedGroebnerBasis(tuple(pairs), order)


def is_groebner_basis(polys: Sequence[Poly], order: MonomialOrder) -> bool:
    """Buchberger's criterion over all minimal common multiples."""
    if not polys:
        return True
    reducer = _Reducer(polys[0].ring, order)
    for g in polys:
        reducer.add(g)
    for g, h in combinations(polys, 2):
        for s in s_polynomials(g, h, order):
            if not reducer.reduce(s).is_zero():
                return False
    return True


def is_reduced(gb: MarkedGroebnerBasis) -> bool:
    """Monic, marked leads correct, and no term divisible by another element's lead."""
    ring = gb.pairs[0][0].ring
    for g, a in gb.pairs:
        if g.leading(gb.order) != (a, 1):
            return False
        for _, b in gb.pairs:
            for e in g.terms:
                if (b != a or e != a) and ring.divides(b, e):
                    return False
    return True


def normal_form(f: Poly, gb: MarkedGroebnerBasis) -> Poly:
    return divide(f, gb.polys, gb.order)[1]


def ideal_contains(gb: MarkedGroebnerBasis, f: Poly) -> bool:
    return normal_form(f, gb).is_zero()


def initial_ideal(ideal: Ideal, w: Sequence[int], tiebreak: MonomialOrder | None = None) -> Ideal:
    """in_w(I), generated by the initial forms of a Groebner basis for (w, tiebreak)."""
    sigma = ideal.ring.semigroup.sigma
    if not sigma.contains(w):
        raise ToricError("weight must lie in sigma")
    tiebreak = tiebreak or default_tiebreak(ideal.ring.semigroup)
    gb = buchberger(ideal, MonomialOrder.weight_then(w, tiebreak))
    return Ideal.of(ideal.ring, [initial_form(g, w) for g in gb.polys])


def ambient_presentation_check(ideal: Ideal, gb: MarkedGroebnerBasis) -> bool:
    """Cross-check an intrinsic basis through a polynomial presentation of k[S].

    k[S] = k[y_1..y_s] / T with y_i -> x^{a_i} for the Hilbert basis a_i.  The
    toric ideal T comes from an elimination computed by sympy.  The check
    passes when every lifted basis element lies in lift(I) + T and every
    generator of I reduces to zero modulo the intrinsic basis.
    """
    import sympy

    ring = ideal.ring
    hb = ring.semigroup.hilbert_basis
    d = ring.dim
    ys = sympy.symbols(f"y0:{len(hb)}")
    xs = sympy.symbols(f"x0:{d}")
    zs = sympy.symbols(f"z0:{d}")
    rels = [x * z - 1 for x, z in zip(xs, zs)]
    for y, a in zip(ys, hb):
        mono = sympy.Integer(1)
        for x, z, e in zip(xs, zs, a):
            mono *= x ** e if e >= 0 else z ** (-e)
        rels.append(y - mono)
    opts = {"modulus": ring.field.characteristic} if ring.field.characteristic else {}
    elim = sympy.groebner(rels, *xs, *zs, *ys, order="lex", **opts)
    toric = [g for g in elim.exprs if not (g.free_symbols & set(xs + zs))]

    decompose = _decomposer(ring)

    def lift(f: Poly):
        expr = sympy.Integer(0)
        for e, c in f.terms.items():
            mono = sympy.Integer(1)
            for y, k in zip(ys, decompose(e)):
                mono *= y ** k
            expr += sympy.Rational(str(c)) * mono
        return expr

    ambient = sympy.groebner([lift(g) for g in ideal.generators] + toric, *ys,
                             order="grevlex", **opts)
    if not all(ambient.contains(lift(g)) for g in gb.polys):
        return False
    return all(ideal_contains(gb, f) for f in ideal.generators)


def _decomposer(ring: SemigroupRing):
    """Map an element of S to exponents of the Hilbert basis summing to it."""
    hb = ring.semigroup.hilbert_basis

    @lru_cache(maxsize=None)
    def go(e: Exponent):
        if not any(e):
            return (0,) * len(hb)
        for i, h in enumerate(hb):
            rest = tuple(x - y for x, y in zip(e, h))
            if rest in ring.semigroup:
                sub = go(rest)
                if sub is not None:
                    return sub[:i] + (sub[i] + 1,) + sub[i + 1:]
        return None

    def decompose(e: Exponent):
        out = go(tuple(e))
        if out is None:
            raise ToricError(f"{e} is not generated by the Hilbert basis")
        return out

    return decompose
