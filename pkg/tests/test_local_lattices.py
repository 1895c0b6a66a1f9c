import random
from fractions import Fraction

import pytest
from lattice_gen import congruent, random_alternating, random_unimodular

from ssmass.errors import ValidationError
from ssmass.local_lattices import (AlternatingGram, JordanType, canonical_form, hermitian_dual, is_Pi_modular,
                                   modular_exists, modular_normal_form, parahoric_index, scale_by_Pi,
                                   self_dual_hermitian_type, skew_modular_exists, skew_to_hermitian_index,
                                   split_self_dual_exists, symplectic_divisors, valuation, verify_certificate)
from ssmass.oracles import gram_model, gram_model_dual, gram_model_is_modular, gram_model_type


def test_valuation():
    assert valuation(Fraction(12, 5), 2) == 2
    assert valuation(Fraction(3, 20), 2) == -2
    assert valuation(0, 3) == float("inf")


def test_gram_validation():
    with pytest.raises(ValidationError, match="alternating"):
        AlternatingGram([[0, 1], [1, 0]], 3)
    with pytest.raises(ValidationError, match="singular"):
        AlternatingGram([[0, 0], [0, 0]], 3)
    with pytest.raises(ValidationError, match="even size"):
        AlternatingGram([[0]], 3)


def test_canonical_input_is_fixed():
    g = canonical_form((0, 0), 5)
    res = symplectic_divisors(g, 5)
    assert res.d == (0, 0)
    assert [list(r) for r in res.basis] == [[int(i == j) for j in range(4)] for i in range(4)]


def test_scaling_shifts_divisors():
    assert symplectic_divisors([[0, 3], [-3, 0]], 3).d == (1,)
    assert symplectic_divisors([[0, Fraction(1, 9)], [Fraction(-1, 9), 0]], 3).d == (-2,)


@pytest.mark.parametrize("n", [4, 6])
def test_certificate_on_random_inputs(n):
    rng = random.Random(1000 + n)
    for _ in range(100):
        prime = rng.choice((2, 3, 5))
        g = random_alternating(rng, n, prime)
        res = symplectic_divisors(g)
        assert verify_certificate(g, res)


def test_divisors_invariant_under_unimodular_change():
    rng = random.Random(7)
    for _ in range(50):
        prime = rng.choice((2, 3, 5))
        n = rng.choice((4, 6))
        g = random_alternating(rng, n, prime)
        b = random_unimodular(rng, n, prime)
        moved = AlternatingGram(congruent(g.entries, b), prime)
        assert symplectic_divisors(moved).d == symplectic_divisors(g).d


def test_certificate_rejects_wrong_answer():
    g = AlternatingGram([[0, 3], [-3, 0]], 3)
    res = symplectic_divisors(g)
    assert not verify_certificate(g, type(res)((0,), res.basis))


def test_jordan_type_validation():
    with pytest.raises(ValidationError, match="even rank"):
        JordanType({1: 3})
    assert JordanType({1: 2, 0: 1}).summands() == ["(pi^0)", "H(1)"]


def test_dual_examples():
    assert hermitian_dual(JordanType({0: 3})) == JordanType({0: 3})
    assert hermitian_dual(JordanType({1: 2})) == JordanType({-1: 2})
    assert hermitian_dual(JordanType({2: 1})) == JordanType({-2: 1})


def test_scale_examples():
    assert scale_by_Pi(JordanType({1: 2}), 0) == JordanType({1: 2})
    assert scale_by_Pi(JordanType({0: 2}), 1) == JordanType({2: 2})
    assert scale_by_Pi(JordanType({0: 1}), -1) == JordanType({-2: 1})


@pytest.mark.parametrize("ranks", [{0: 3}, {1: 2, 2: 1}, {-3: 4, 0: 1, 5: 2}])
def test_dual_and_scale_against_gram_model(ranks):
    J = JordanType(ranks)
    g, partner = gram_model(J)
    zero = [0] * len(g)
    assert gram_model_type(g, partner, zero) == J
    assert gram_model_type(g, partner, gram_model_dual(g, partner, zero)) == hermitian_dual(J)
    assert hermitian_dual(hermitian_dual(J)) == J
    for k in (-2, 1, 3):
        assert hermitian_dual(scale_by_Pi(J, k)) == scale_by_Pi(hermitian_dual(J), -k)


def test_modularity_examples():
    assert is_Pi_modular(JordanType({1: 2}), 1)
    assert is_Pi_modular(JordanType({0: 2}), 0)
    assert not any(is_Pi_modular(JordanType({0: 2, 2: 2}), i) for i in range(-5, 6))
    with pytest.raises(ValidationError):
        is_Pi_modular(JordanType(), 0)


def test_modular_exists_examples():
    assert not modular_exists(3, 1)
    assert modular_normal_form(3, 0) == JordanType({0: 3})
    assert modular_normal_form(2, 1) == JordanType({1: 2})
    with pytest.raises(ValidationError):
        modular_normal_form(3, 1)


def test_modular_dichotomy_grid():
    for n in range(1, 9):
        for i in range(-8, 9):
            assert modular_exists(n, i) == (n % 2 == 0 or i % 2 == 0)
            if modular_exists(n, i):
                J = modular_normal_form(n, i)
                assert is_Pi_modular(J, i) and gram_model_is_modular(J, i)


def test_skew_modular_shift_grid():
    assert skew_modular_exists(1, 0, 1)
    assert not skew_modular_exists(1, 0, 0)
    for n in range(1, 9):
        for i in range(-8, 9):
            for ord_gamma in range(-3, 4):
                j = skew_to_hermitian_index(i, ord_gamma)
                assert j == i + ord_gamma - 1
                assert skew_modular_exists(n, i, ord_gamma) == (n % 2 == 0 or j % 2 == 0)


def test_split_self_dual():
    assert all(split_self_dual_exists(n) for n in (1, 2, 5))
    with pytest.raises(ValidationError):
        split_self_dual_exists(0)


def test_self_dual_type_and_parahoric_index():
    assert self_dual_hermitian_type(3, 1) == JordanType({0: 3})
    assert self_dual_hermitian_type(2, 0) == JordanType({-1: 2})
    assert parahoric_index(JordanType({-1: 2})) == 1
    assert parahoric_index(JordanType({0: 3})) == 0
    assert parahoric_index(JordanType({1: 2, 2: 1})) == 1
    with pytest.raises(ValidationError):
        parahoric_index(JordanType({0: 1, 4: 1}))


@pytest.mark.parametrize("k", [-2, 1, 3])
def test_scale_against_gram_model(k):
    J = JordanType({1: 2, 2: 1})
    g, partner = gram_model(J)
    assert gram_model_type(g, partner, [k] * len(g)) == scale_by_Pi(J, k)
