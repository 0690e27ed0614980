import random

import pytest
from hypothesis import given, settings, strategies as st

from nash_toric.cones import cone, is_smooth
from nash_toric.errors import ToricError
from nash_toric.lattice import matmul, transpose
from nash_toric.nash import (A3, a_k_cone, blowup_oracle_n1, iterate_normalized_nash, nash_fan,
                             toh_yama_cone, toh_yama_rays)
from nash_toric.polyalg import PrimeField

from conftest import random_unimodular

BATTERY = [a_k_cone(1), a_k_cone(2), A3, cone((0, 1), (5, -2))]


def _rays(f):
    return [c.rays for c in f.maximal_cones]


@pytest.mark.parametrize("c, expected", [
    (a_k_cone(1), [((0, 1), (1, 0)), ((1, 0), (2, -1))]),
    (a_k_cone(2), [((0, 1), (3, -1)), ((3, -2), (3, -1))]),
    (A3, [((0, 1), (2, -1)), ((2, -1), (4, -3))]),
    (cone((0, 1), (5, -2)), [((0, 1), (1, 0)), ((1, 0), (4, -1)), ((4, -1), (5, -2))]),
])
def test_first_nash_fans(c, expected):
    rep = nash_fan(c)
    assert _rays(rep.fan) == expected
    assert not rep.is_isomorphism


def test_a3_second_order_fan():
    assert _rays(nash_fan(A3, 2).fan) == [
        ((0, 1), (4, -1)), ((2, -1), (4, -1)), ((2, -1), (8, -5)), ((4, -3), (8, -5))]


def test_smooth_and_wide_cones_unchanged():
    for c in (cone((1, 0), (0, 1)), cone((1, 2), (2, 3))):
        assert nash_fan(c).is_isomorphism


def test_toh_yama_closed_forms():
    assert [toh_yama_rays(n)[1] for n in range(1, 7)] == [
        (0, 1), (4, -1), (4, -1), (8, -3), (8, -3), (12, -5)]
    for n in range(1, 7):
        assert toh_yama_cone(n).index() == 2


def test_bad_inputs():
    with pytest.raises(ToricError, match="positive"):
        nash_fan(A3, 0)
    with pytest.raises(ToricError, match="power rule"):
        nash_fan(A3, 1, rule="square")
    with pytest.raises(ToricError):
        nash_fan(cone((1, 0, 0), (0, 1, 0), (0, 0, 1)))


@pytest.mark.parametrize("c", BATTERY + [cone((1, 0), (0, 1)), cone((1, 2), (2, 3))])
def test_oracle_matches(c):
    assert blowup_oracle_n1(c) == nash_fan(c).fan


@pytest.mark.parametrize("p", [2, 3, 5])
def test_positive_characteristic_agrees(p):
    for c in BATTERY[:3]:
        assert nash_fan(c, 1, PrimeField(p)).fan == nash_fan(c).fan


@pytest.mark.parametrize("c, steps", [
    (a_k_cone(1), 1), (a_k_cone(2), 2), (A3, 2), (cone((0, 1), (7, -5)), 2)])
def test_iteration_resolves(c, steps):
    trace = iterate_normalized_nash(c)
    assert trace.terminated and trace.steps == steps
    assert all(is_smooth(k) for k in trace.final.maximal_cones)


def test_iteration_on_a3_reaches_minimal_resolution():
    assert iterate_normalized_nash(A3).final.rays() == [
        (0, 1), (1, 0), (2, -1), (3, -2), (4, -3)]


def test_iteration_cap():
    with pytest.raises(ToricError, match="cap"):
        iterate_normalized_nash(A3, cap=1)


@settings(max_examples=10)
@given(st.integers(0, 10**6))
def test_smooth_cones_have_trivial_nash_fan(seed):
    u = random_unimodular(random.Random(seed))
    c = cone(*transpose(matmul(u, transpose([(1, 0), (0, 1)]))))
    assert nash_fan(c).is_isomorphism


@settings(max_examples=10)
@given(st.integers(0, 10**6))
def test_nash_fan_is_equivariant(seed):
    # Changing lattice coordinates moves the fan along with the cone.
    u = random_unimodular(random.Random(seed))
    move = lambda rays: cone(*transpose(matmul(u, transpose(rays))))
    c = a_k_cone(2)
    moved = nash_fan(move(c.rays)).fan
    assert sorted(k.rays for k in moved.maximal_cones) == sorted(
        move(k.rays).rays for k in nash_fan(c).fan.maximal_cones)
