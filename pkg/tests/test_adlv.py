import random
from fractions import Fraction
from math import lcm

import pytest

from ssmass import adlv
from ssmass.adlv import Cochar, CocharClass, Shape
from ssmass.arith_data import FieldDatum, LocalPlace, PELInput, QuaternionDatum
from ssmass.errors import CapExceededError, HypothesisError, ValidationError
from ssmass.oracles import weyl_assignment_count

SHAPES = [(1,), (2,), (3,), (4,), (1, 1), (1, 2), (2, 2), (2, 3)]


def random_cochar(rng, shape):
    return Cochar(shape, rng.randint(-3, 3), tuple(rng.randint(-3, 3) for _ in shape.indices()))


def eps(shape, v, j, i, k=1):
    return Cochar.from_map(shape, 0, {(v, j, i): k})


def test_shape_validation():
    with pytest.raises(ValidationError):
        Shape((), 1)
    with pytest.raises(ValidationError):
        Shape((2,), 0)


def test_sigma_examples():
    s = Shape((2,), 1)
    assert adlv.sigma_act(adlv.mu(s)) == adlv.mu(s)
    assert adlv.sigma_act(eps(s, 0, 0, 1)) == eps(s, 0, 1, 1)
    flat = Shape((1, 1), 2)
    x = random_cochar(random.Random(0), flat)
    assert adlv.sigma_act(x) == x


@pytest.mark.parametrize("f", SHAPES)
def test_sigma_order_is_lcm(f):
    s = Shape(f, 2)
    x = Cochar(s, 0, tuple(range(len(s.indices()))))
    y, order = adlv.sigma_act(x), 1
    while y != x:
        y, order = adlv.sigma_act(y), order + 1
    assert order == lcm(*f)


@pytest.mark.parametrize("f", SHAPES)
def test_diamond_is_constant_along_orbits(f):
    rng = random.Random(sum(f))
    s = Shape(f, 2)
    d = adlv.diamond(random_cochar(rng, s))
    assert adlv.sigma_act(d) == d


def test_mu_newton_kappa():
    s = Shape((1,), 1)
    assert adlv.mu(s).c == 1 and adlv.mu(s).a == (0,)
    assert adlv.newton_point(s).a == (Fraction(-1, 2),)
    big = Shape((2, 3), 2)
    assert all(2 * x == -1 for x in adlv.newton_point(big).a)
    assert adlv.kottwitz_point(big) == 1
    assert adlv.natural(2 * adlv.mu(big)) == 2
    coeffs = adlv.coroot_coefficients(adlv.mu(big) - adlv.newton_point(big))
    assert all(x >= 0 for x in coeffs.values())


def test_lambda_Gb_examples():
    s = Shape((1,), 1)
    assert adlv.lambda_Gb(s).representative == adlv.mu(s) - eps(s, 0, 0, 1)
    s = Shape((2,), 1)
    assert adlv.lambda_Gb(s).representative == adlv.mu(s) - eps(s, 0, 0, 1)
    s = Shape((2,), 2)
    assert adlv.lambda_Gb(s).representative == adlv.mu(s) - eps(s, 0, 0, 1) - eps(s, 0, 0, 2)


@pytest.mark.parametrize("f", SHAPES)
@pytest.mark.parametrize("m", [1, 2, 3])
def test_lambda_Gb_is_best_approximation(f, m):
    s = Shape(f, m)
    rep = adlv.lambda_Gb(s).representative
    assert adlv.natural(rep) == 1
    coeffs = adlv.coroot_coefficients(adlv.newton_point(s) - adlv.diamond(rep))
    assert all(0 <= x < 1 for x in coeffs.values())


def test_one_minus_sigma_membership():
    rng = random.Random(3)
    s = Shape((2, 3), 2)
    assert adlv.in_one_minus_sigma(Cochar.from_map(s, 0))
    for _ in range(50):
        x = random_cochar(rng, s)
        assert adlv.in_one_minus_sigma(x - adlv.sigma_act(x))
    assert not adlv.in_one_minus_sigma(eps(s, 0, 0, 1))
    assert not adlv.in_one_minus_sigma(adlv.mu(s))


def test_coinvariant_classes():
    s = Shape((3,), 1)
    a = CocharClass(eps(s, 0, 0, 1))
    b = CocharClass(eps(s, 0, 2, 1))
    assert a == b and hash(a) == hash(b)
    assert a != CocharClass(eps(s, 0, 0, 1, 2))


def test_coroot_span_only():
    with pytest.raises(ValidationError):
        adlv.coroot_coefficients(adlv.mu(Shape((1,), 1)))


@pytest.mark.parametrize("f, m, count", [((1,), 1, 1), ((2,), 1, 2), ((3,), 2, 9), ((1, 2), 1, 2),
                                         ((4,), 2, 36), ((1,), 3, 1)])
def test_count_examples(f, m, count):
    s = Shape(f, m)
    assert adlv.components_closed(s) == adlv.components_enum(s) == count


@pytest.mark.parametrize("f", SHAPES)
@pytest.mark.parametrize("m", [1, 2, 3])
def test_closed_enum_oracle_agree(f, m):
    s = Shape(f, m)
    assert adlv.components_closed(s) == adlv.components_enum(s) == weyl_assignment_count(f, m)


@pytest.mark.parametrize("f, m", [((2,), 2), ((1, 2), 2), ((3,), 1)])
def test_orbit_representatives_match_lambda_Gb(f, m):
    s = Shape(f, m)
    target = adlv.lambda_Gb(s)
    reps = list(adlv.orbit_representatives(s))
    assert len(reps) == adlv.components_closed(s)
    assert all(CocharClass(r) == target for r in reps)


def test_parallel_enumeration_matches(monkeypatch):
    s = Shape((2, 3), 3)
    assert adlv.components_enum(s, workers=2) == adlv.components_closed(s)
    monkeypatch.setenv("SSMASS_THREADS", "junk")
    assert adlv.components_enum(s) == adlv.components_closed(s)


def test_cap():
    with pytest.raises(CapExceededError):
        adlv.components_enum(Shape((5,), 5))


def test_counts_from_input():
    fd = FieldDatum(2, {7: (LocalPlace(7, 2),)}, (1,))
    inp = PELInput(fd, QuaternionDatum(), 1, 3, 7)
    assert adlv.count_components_closed(inp) == adlv.count_components_enum(inp) == 2
    with pytest.raises(HypothesisError):
        adlv.count_components_closed(PELInput.over_Q([7, 11], p=7))
