"""Exact mass formulas and component counts for supersingular abelian varieties with quaternionic multiplication.

The modules, bottom-up: ``exact`` (rationals, Bernoulli numbers, polynomials),
``arith_data`` (input decks), ``local_lattices``, ``groups_finite``, ``adlv``,
``mass`` (the headline counts), ``shimura_curve`` and the independent
``oracles`` used by ``verify`` and the tests.
"""
from . import adlv
from .arith_data import PELInput, delta_prime, load_deck, parse_deck, self_dual_exists
from .errors import (
    CapExceededError,
    DeckError,
    HypothesisError,
    InvariantError,
    SSMassError,
    ValidationError,
)
from .mass import count_components, count_superspecial, mass_I1, siegel_counts, supersingular_dimension

__version__ = "0.1.0"

__all__ = [
    "PELInput",
    "load_deck",
    "parse_deck",
    "delta_prime",
    "self_dual_exists",
    "adlv",
    "count_components",
    "count_superspecial",
    "mass_I1",
    "siegel_counts",
    "supersingular_dimension",
    "SSMassError",
    "ValidationError",
    "DeckError",
    "HypothesisError",
    "CapExceededError",
    "InvariantError",
]
