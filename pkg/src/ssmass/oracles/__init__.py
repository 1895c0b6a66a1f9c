"""Independent brute-force verifiers.

Nothing here calls the closed-form code it is used to check.
"""
from .combinatorics import (
    bernoulli_akiyama_tanigawa,
    brauer_delta_prime,
    gram_model,
    gram_model_dual,
    gram_model_is_modular,
    gram_model_type,
    weyl_assignment_count,
)
from .curves import eichler_mass, supersingular_j_invariants
from .fields import GF, FiniteField
from .groups import (
    enumerate_gl2_mod,
    enumerate_group_order,
    enumerate_su2,
    similitude_image,
)

__all__ = [
    "FiniteField",
    "GF",
    "bernoulli_akiyama_tanigawa",
    "brauer_delta_prime",
    "eichler_mass",
    "enumerate_gl2_mod",
    "enumerate_group_order",
    "enumerate_su2",
    "gram_model",
    "gram_model_dual",
    "gram_model_is_modular",
    "gram_model_type",
    "similitude_image",
    "supersingular_j_invariants",
    "weyl_assignment_count",
]
