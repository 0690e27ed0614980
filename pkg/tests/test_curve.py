import random
from math import gcd

import pytest
from hypothesis import given, strategies as st

from nash_toric.curve import (curve_report, resolution_orders, semigroup_from_generators,
                              yasuda_nonsingular)
from nash_toric.errors import ToricError


@pytest.mark.parametrize("gens, conductor, prefix", [
    ((2, 3), 2, [0, 2, 3, 4, 5]),
    ((1,), 0, [0, 1, 2, 3, 4]),
    ((2, 5), 4, [0, 2, 4, 5, 6]),
    ((3, 4, 5), 3, [0, 3, 4, 5, 6]),
    ((3, 5), 8, [0, 3, 5, 6, 8]),
])
def test_semigroup_examples(gens, conductor, prefix):
    s = semigroup_from_generators(gens)
    assert s.conductor == conductor
    assert s.elements(5) == prefix


def test_not_a_branch():
    with pytest.raises(ToricError, match="not a branch semigroup"):
        semigroup_from_generators([2, 4])
    with pytest.raises(ToricError):
        semigroup_from_generators([0, 3])


def test_minimal_generators():
    assert semigroup_from_generators([2, 3, 4, 5]).generators == (2, 3)


def test_criterion_examples():
    cusp = semigroup_from_generators([2, 3])
    assert cusp.element(-1) == 0 and cusp.element(0) == 2 and cusp.element(1) == 3
    assert yasuda_nonsingular(cusp, 1)
    s25 = semigroup_from_generators([2, 5])
    assert not yasuda_nonsingular(s25, 1)
    assert yasuda_nonsingular(s25, 2)
    assert all(yasuda_nonsingular(semigroup_from_generators([1]), n) for n in range(1, 6))


def test_resolution_orders_examples():
    assert resolution_orders(semigroup_from_generators([2, 5]), 5) == ({2, 3, 4, 5}, 2)
    assert resolution_orders(semigroup_from_generators([2, 3]), 3) == ({1, 2, 3}, 1)
    assert resolution_orders(semigroup_from_generators([3, 4, 5]), 3) == ({1, 2, 3}, 1)


def test_positive_characteristic_refused():
    s = semigroup_from_generators([2, 3])
    with pytest.raises(ToricError, match="positive characteristic"):
        yasuda_nonsingular(s, 1, characteristic=3)
    with pytest.raises(ToricError):
        yasuda_nonsingular(s, 0)


def test_report_shape():
    rep = curve_report([2, 5], 5)
    assert rep == {"schema": 1, "generators": [2, 5], "conductor": 4,
                   "elements_prefix": [0, 2, 4, 5, 6, 7, 8],
                   "good_orders": [2, 3, 4, 5], "stable_threshold": 2}


generator_sets = st.lists(st.integers(1, 15), min_size=1, max_size=4).filter(
    lambda gs: gcd(*gs) == 1)


@given(generator_sets)
def test_conductor_is_sharp(gens):
    s = semigroup_from_generators(gens)
    assert all(x in s for x in range(s.conductor, s.conductor + 20))
    if s.conductor:
        assert s.conductor - 1 not in s


@given(generator_sets, st.integers(0, 10**6))
def test_closed_under_addition(gens, seed):
    s = semigroup_from_generators(gens)
    rng = random.Random(seed)
    elems = s.elements(30)
    for _ in range(20):
        assert rng.choice(elems) + rng.choice(elems) in s


@given(generator_sets)
def test_good_orders_upward_closed_from_threshold(gens):
    s = semigroup_from_generators(gens)
    _, threshold = resolution_orders(s, 1)
    top = threshold + 20
    good, _ = resolution_orders(s, top)
    assert all(n in good for n in range(threshold, top + 1))
    for n in range(1, top + 1):
        if s.element(n) - 1 >= s.conductor:
            assert yasuda_nonsingular(s, n)
