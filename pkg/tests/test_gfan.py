import random

import pytest

from nash_toric.cones import Fan, check_fan, cone, is_refinement
from nash_toric.errors import ToricError
from nash_toric.gfan import cone_of_basis, groebner_cones_2d, groebner_fan_2d, is_trivial_fan
from nash_toric.groebner import Ideal, buchberger
from nash_toric.nash import A3, a_k_cone, build_nash_ideal
from nash_toric.polyalg import MonomialOrder, SemigroupRing, default_tiebreak
from nash_toric.semigroups import AffineSemigroup


def _ideal(c, n=1, rule="power(n+1)"):
    return build_nash_ideal(AffineSemigroup.of_cone(c), n, rule)


def test_a3_fan_splits_at_toh_yama_ray():
    f = groebner_fan_2d(_ideal(A3), A3)
    assert f.maximal_cones == (cone((0, 1), (2, -1)), cone((2, -1), (4, -3)))


def test_base_ideal_has_trivial_fan():
    # B = <x^a - 1> has a single Groebner cone on A3.
    assert is_trivial_fan(groebner_fan_2d(_ideal(A3, 1, "base"), A3), A3)


def test_principal_binomial_walls():
    s = AffineSemigroup.of_cone(cone((1, 0), (0, 1)))
    r = SemigroupRing(s)
    f = r.poly({(2, 0): 1, (0, 1): -1})
    fan = groebner_fan_2d(Ideal.of(r, [f]), s.sigma)
    assert fan.maximal_cones == (cone((0, 1), (1, 2)), cone((1, 0), (1, 2)))


def test_fan_is_a_subdivision():
    for k in (1, 2, 3):
        c = a_k_cone(k)
        f = groebner_fan_2d(_ideal(c), c)
        assert check_fan(f) == []
        assert is_refinement(f, Fan.of([c]))


def test_cones_are_stable_under_interior_weights():
    rng = random.Random(7)
    for c in (A3, a_k_cone(2), cone((0, 1), (5, -2))):
        ideal = _ideal(c)
        tiebreak = default_tiebreak(ideal.ring.semigroup)
        for gc in groebner_cones_2d(ideal, c):
            a, b = gc.cone.rays
            for _ in range(10):
                p, q = rng.randint(1, 20), rng.randint(1, 20)
                w = tuple(p * x + q * y for x, y in zip(a, b))
                gb = buchberger(ideal, MonomialOrder.weight_then(w, tiebreak))
                assert gb.leading_exponents() == gc.basis.leading_exponents()
                assert cone_of_basis(gb, c) == gc.cone


def test_three_dimensional_enumeration_refused():
    c = cone((1, 0, 0), (0, 1, 0), (1, 1, 2))
    with pytest.raises(ToricError, match="unsupported"):
        groebner_cones_2d(_ideal(c), c)
