"""Exact computation of normalized Nash modifications of toric varieties."""
from .cones import Cone, Fan, cone, dual_cone, is_refinement, is_smooth, limit_face
from .curve import NumericalSemigroup, resolution_orders, semigroup_from_generators, yasuda_nonsingular
from .errors import ToricError
from .gfan import GroebnerCone, cone_of_basis, groebner_cones_2d, groebner_fan_2d
from .groebner import Ideal, MarkedGroebnerBasis, buchberger, divide, initial_ideal
from .nash import (A3, NashReport, IterationTrace, a_k_cone, blowup_oracle_n1,
                   calibrate_power_rule, iterate_normalized_nash, nash_fan, toh_yama_cone)
from .polyalg import QQ, MonomialOrder, Poly, PrimeField, SemigroupRing, initial_form
from .semigroups import AffineSemigroup, hilbert_basis

__all__ = [
    "A3", "AffineSemigroup", "Cone", "Fan", "GroebnerCone", "Ideal", "IterationTrace",
    "MarkedGroebnerBasis", "MonomialOrder", "NashReport", "NumericalSemigroup", "Poly",
    "PrimeField", "QQ", "SemigroupRing", "ToricError", "a_k_cone", "blowup_oracle_n1",
    "buchberger", "calibrate_power_rule", "cone", "cone_of_basis", "divide", "dual_cone",
    "groebner_cones_2d", "groebner_fan_2d", "hilbert_basis", "initial_form", "initial_ideal",
    "is_refinement", "is_smooth", "iterate_normalized_nash", "limit_face", "nash_fan",
    "resolution_orders", "semigroup_from_generators", "toh_yama_cone", "yasuda_nonsingular",
]
