"""Numerical semigroups of curve branches and the nonsingularity test for N_n at the origin.

Indexing follows the list S = {s_-1, s_0, s_1, ...}: s_-1 = 0 is the order
of a unit and s_0 is the multiplicity.  The origin of the n-th Nash
modification is nonsingular iff s_n - 1 lies in S.  Shifting the indexing
convention by one shifts n by one.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable

from .errors import ToricError


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    conductor: int
    small_elements: tuple[int, ...]  # every element below the conductor

    def __contains__(self, x: int) -> bool:
        return x >= self.conductor or x in self.small_elements

    @property
    def frobenius_number(self) -> int:
        return self.conductor - 1

    def elements(self, count: int) -> list[int]:
        """The first ``count`` elements s_-1, s_0, s_1, ..."""
        out = list(self.small_elements[:count])
        x = self.conductor
        while len(out) < count:
            out.append(x)
            x += 1
        return out

    def element(self, n: int) -> int:
        """s_n, with s_-1 = 0."""
        if n < -1:
            raise ToricError("semigroup index starts at -1")
        return self.elements(n + 2)[-1]

    def to_json(self) -> dict:
        return {"generators": list(self.generators), "conductor": self.conductor}


def semigroup_from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    gens = sorted({int(g) for g in gens})
    if not gens or gens[0] < 1:
        raise ToricError("generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise ToricError("not a branch semigroup: generators have gcd > 1")
    # Once min(gens) consecutive integers are members, everything above is too.
    member = []
    run = 0
    x = 0
    while run < gens[0]:
        ok = x == 0 or any(x >= g and member[x - g] for g in gens)
        member.append(ok)
        run = run + 1 if ok else 0
        x += 1
    conductor = x - run
    small = tuple(i for i in range(conductor) if member[i])
    minimal = tuple(g for g in gens
                    if not any(h < g and (g - h) in _Membership(member, conductor)
                               for h in gens if h != g))
    return NumericalSemigroup(minimal, conductor, small)


class _Membership:
    def __init__(self, member, conductor):
        self.member, self.conductor = member, conductor

    def __contains__(self, x: int) -> bool:
        return x >= self.conductor or (x >= 0 and self.member[x])


def yasuda_nonsingular(s: NumericalSemigroup, n: int, characteristic: int = 0) -> bool:
    """Whether the origin of the n-th Nash modification of the branch is nonsingular."""
    if characteristic:
        raise ToricError("the semigroup criterion holds in characteristic zero only; "
                         "it is false in positive characteristic")
    if n < 1:
        raise ToricError("order n must be a positive integer")
    return s.element(n) - 1 in s


def resolution_orders(s: NumericalSemigroup, up_to: int,
                      characteristic: int = 0) -> tuple[set[int], int]:
    """Orders n <= up_to with a nonsingular modification, and the conductor threshold.

    The threshold is the least n >= 1 with s_n - 1 >= conductor; every larger n
    passes because all integers from the conductor on lie in S.
    """
    if up_to < 1:
        raise ToricError("up_to must be at least 1")
    good = {n for n in range(1, up_to + 1) if yasuda_nonsingular(s, n, characteristic)}
    n = 1
    while s.element(n) - 1 < s.conductor:
        n += 1
    return good, n


def curve_report(gens: Iterable[int], up_to: int, characteristic: int = 0) -> dict:
    s = semigroup_from_generators(gens)
    good, threshold = resolution_orders(s, up_to, characteristic)
    return {
        "schema": 1,
        "generators": list(s.generators),
        "conductor": s.conductor,
        "elements_prefix": s.elements(max(up_to + 2, s.conductor + 2)),
        "good_orders": sorted(good),
        "stable_threshold": threshold,
    }
