from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ssmass import mass
from ssmass.arith_data import FieldDatum, LocalPlace, PELInput, QuaternionDatum
from ssmass.errors import HypothesisError, InvariantError, ValidationError
from ssmass.exact import RationalPolynomial
from ssmass.groups_finite import order_gsp_modN
from ssmass.oracles import eichler_mass
from ssmass.verify import random_valid_inputs

q = RationalPolynomial.x()


def quadratic_inert(m=1, zeta=(Fraction(1, 6),)):
    places = {7: (LocalPlace(7, 2),), 3: (LocalPlace(3, 1), LocalPlace(3, 1))}
    return PELInput(FieldDatum(2, places, zeta), QuaternionDatum(), m, 3, 7)


def test_kappa_examples():
    assert mass.kappa_c(1, 0, q) == q + 1
    assert mass.kappa_c(2, 1, q) == q ** 4 - 1
    assert mass.kappa_c(2, 0, q) == (q + 1) * (q ** 2 - 1)
    with pytest.raises(ValidationError):
        mass.kappa_c(3, 2, q)


def test_lambda_parahoric_examples():
    assert mass.lambda_parahoric(1, 0, q) == q - 1
    assert mass.lambda_parahoric(2, 1, q) == q ** 2 - 1
    assert mass.lambda_parahoric(2, 0, q) == (q - 1) * (q ** 2 + 1)
    assert mass.lambda_parahoric(2, 0, 3) == 20


@pytest.mark.parametrize("m", range(1, 7))
def test_lambda_parahoric_polynomial_and_argmin(m):
    for c in range(m // 2 + 1):
        poly = mass.lambda_parahoric(m, c, q)
        assert poly.has_integer_coefficients()
        assert all(poly(x) == mass.lambda_parahoric(m, c, x) for x in (2, 3, 5))
    for x in (2, 3, 4, 5, 7):
        values = {c: mass.lambda_parahoric(m, c, x) for c in range(m // 2 + 1)}
        best = min(values.values())
        assert [c for c, v in values.items() if v == best] == [mass.max_volume_c(m)]


@pytest.mark.parametrize("m", range(1, 7))
def test_max_volume_parahoric_matches_component_lambda(m):
    assert mass.lambda_parahoric(m, mass.max_volume_c(m), q) == mass.lambda_component(m, q, True)


def test_max_volume_c():
    assert [mass.max_volume_c(m) for m in (1, 2, 5, 6)] == [0, 1, 0, 3]
    with pytest.raises(ValidationError):
        mass.max_volume_c(0)


def test_lambda_component_examples():
    assert mass.lambda_component(1, 2, False, 1) == 1
    assert mass.lambda_component(2, 2, False, 0) == 3
    assert mass.lambda_component(2, 3, True) == 8
    assert mass.lambda_component(3, q, True) == (q - 1) * (q ** 2 + 1) * (q ** 3 - 1)
    with pytest.raises(ValidationError):
        mass.lambda_component(2, 3, True, 1)
    with pytest.raises(ValidationError):
        mass.lambda_component(2, 3, False)


def test_lambda_superspecial_examples():
    assert mass.lambda_superspecial(1, 4, True, False) == 5
    assert mass.lambda_superspecial(2, 2, False, True, 0) == 3
    assert mass.lambda_superspecial(1, 7, True, True) == 6
    assert mass.lambda_superspecial(2, 7, True, True) == 300
    with pytest.raises(ValidationError):
        mass.lambda_superspecial(1, 7, False, False, 1)
    with pytest.raises(ValidationError):
        mass.lambda_superspecial(1, 7, False, True, 0)
    with pytest.raises(ValidationError):
        mass.lambda_superspecial(1, 7, True, True, 1)


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19, 23])
def test_mass_matches_eichler_deuring(p):
    report = mass.mass_I1(PELInput.over_Q(m=1, N=3, p=p))
    assert report.mass == eichler_mass(p) == Fraction(p - 1, 24)


def test_mass_report_fields():
    report = mass.mass_I1(PELInput.over_Q(m=1, N=3, p=7))
    assert report.zeta_part == Fraction(-1, 12)
    assert report.sign_exponent == 1
    assert report.local_factors == (((7, 0), 6, "lambda of the selected parahoric"),)
    with pytest.raises(InvariantError):
        mass.MassReport(Fraction(1, 3), 1, Fraction(-1, 12), (((7, 0), 6, ""),), 1)


@pytest.mark.parametrize("p, count", [(7, 12), (11, 20), (13, 24)])
def test_modular_curve_counts(p, count):
    inp = PELInput.over_Q(m=1, N=3, p=p)
    assert mass.count_components(inp).count == count
    assert mass.count_superspecial(inp).count == count
    assert count == 48 * eichler_mass(p)


def test_components_with_quaternion_ramification():
    report = mass.count_components(PELInput.over_Q([2, 3], m=1, N=5, p=7))
    assert report.factor("|G(Z/NZ)|") == 480
    assert [report.factor(f"lambda_({ell}, 0)") for ell in (2, 3, 7)] == [1, 2, 6]
    assert report.count == 240


def test_superspecial_m2():
    report = mass.count_superspecial(PELInput.over_Q(m=2, N=3, p=7))
    assert report.factor("lambda'_(7, 0)") == 300
    assert report.count == 5400


def test_quadratic_field_uses_split_branch():
    inp = quadratic_inert()
    report = mass.count_superspecial(inp)
    assert report.factor("lambda'_(7, 0)") == 50
    assert mass.count_components(inp).factor("binomial") == 2


def test_bad_user_zeta_is_caught():
    with pytest.raises(InvariantError, match="not a positive integer"):
        mass.count_components(quadratic_inert(zeta=(Fraction(1, 7),)))
    with pytest.raises(InvariantError, match="not positive"):
        mass.mass_I1(quadratic_inert(zeta=(Fraction(-1, 6),)))
    with pytest.raises(HypothesisError):
        mass.mass_I1(quadratic_inert(m=2))


def test_counting_hypotheses():
    with pytest.raises(HypothesisError, match="self-dual"):
        mass.count_components(PELInput.over_Q([(2, 0), (3, 1)], m=1, N=5, p=7))
    with pytest.raises(HypothesisError, match="unramified in B"):
        mass.count_components(PELInput.over_Q([7, 11], m=1, N=5, p=7))


@pytest.mark.parametrize("g", range(1, 5))
@pytest.mark.parametrize("p", [5, 7, 11, 13])
@pytest.mark.parametrize("N", [3, 4, 5])
def test_siegel_specialization(g, p, N):
    if N % p == 0:
        return
    sc = mass.siegel_counts(g, N, p)
    inp = PELInput.over_Q(m=g, N=N, p=p)
    assert mass.count_components(inp).count == sc.components
    assert mass.count_superspecial(inp).count == sc.superspecial
    assert sc.dim == g * g // 4 == mass.supersingular_dimension(inp)


def test_siegel_examples():
    assert mass.siegel_counts(1, 3, 7) == (12, 12, 0)
    assert mass.siegel_counts(2, 3, 7).components == mass.siegel_constant(2, 3) * (7 ** 2 - 1)
    assert mass.siegel_constant(1, 3) == order_gsp_modN(1, 3) * Fraction(-1, 2) * Fraction(-1, 12)
    with pytest.raises(ValidationError):
        mass.siegel_counts(1, 3, 3)


@pytest.mark.parametrize("m", range(1, 7))
def test_siegel_lambda_identity(m):
    theirs = RationalPolynomial((1,))
    if m % 2:
        for i in range(1, m + 1):
            theirs = theirs * (q ** i + (-1) ** i)
    else:
        for i in range(1, m // 2 + 1):
            theirs = theirs * (q ** (4 * i - 2) - 1)
    assert mass.lambda_component(m, q, True) == theirs


def _deck(fs, m):
    fd = FieldDatum(sum(fs), {7: tuple(LocalPlace(7, f) for f in fs)})
    return PELInput(fd, QuaternionDatum(), m, 3, 7)


@pytest.mark.parametrize("fs, m, dim", [((1,), 1, 0), ((1,), 2, 1), ((2,), 2, 3), ((3,), 3, 8), ((1, 2), 2, 4)])
def test_dimension(fs, m, dim):
    assert mass.supersingular_dimension(_deck(fs, m)) == dim


BATTERY = random_valid_inputs(60, seed=11)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(BATTERY))
def test_counts_positive_integers(inp):
    assert mass.mass_I1(inp).mass > 0
    for fn in (mass.count_components, mass.count_superspecial):
        report = fn(inp)
        assert isinstance(report.count, int) and report.count > 0


def test_component_report_checks():
    with pytest.raises(InvariantError):
        mass.ComponentReport(5, (("a", 2, ""), ("b", 3, "")))
    with pytest.raises(InvariantError):
        mass.ComponentReport(Fraction(1, 2), (("a", Fraction(1, 2), ""),))
