"""Local volume factors, masses and the component / superspecial counts."""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import NamedTuple

from .adlv import components_closed, shape_of
from .arith_data import check_p_gate, delta_prime, self_dual_exists
from .errors import HypothesisError, InvariantError, ValidationError
from .exact import RationalPolynomial, poly_div_exact, zeta_neg
from .groups_finite import order_G_modN, order_gsp_modN

__all__ = [
    "ParahoricChoice",
    "MassReport",
    "ComponentReport",
    "SiegelCounts",
    "SIEGEL_SIGN_CONVENTION",
    "kappa_c",
    "lambda_parahoric",
    "max_volume_c",
    "lambda_component",
    "lambda_superspecial",
    "mass_I1",
    "count_components",
    "count_superspecial",
    "siegel_constant",
    "siegel_counts",
    "supersingular_dimension",
]

SIEGEL_SIGN_CONVENTION = "(-1)^(g(g+1)/2) / 2^g"


def _check_c(m, c):
    if not isinstance(m, int) or m < 1:
        raise ValidationError("m must be a positive integer")
    if not isinstance(c, int) or not 0 <= c <= m // 2:
        raise ValidationError(f"c = {c} outside [0, {m // 2}]")


def _carrier(q):
    # symbolic q stays a polynomial, numeric q becomes an exact rational
    return q if isinstance(q, RationalPolynomial) else Fraction(q)


@dataclass(frozen=True)
class ParahoricChoice:
    place: tuple
    m: int
    c: int

    def __post_init__(self):
        _check_c(self.m, self.c)


def kappa_c(m, c, q):
    _check_c(m, c)
    q = _carrier(q)
    out = _carrier(1)
    for i in range(1, c + 1):
        out = out * (q ** (4 * i) - 1)
    for i in range(1, m - 2 * c + 1):
        out = out * (q ** i - (-1) ** i)
    return out


def _prod_q(q, terms):
    out = _carrier(1)
    for t in terms:
        out = out * t
    return out


def lambda_parahoric(m, c, q):
    """prod_{i<=m} (q^{2i} - 1) / kappa_c(m, c, q); exact in both carriers."""
    q = _carrier(q)
    num = _prod_q(q, (q ** (2 * i) - 1 for i in range(1, m + 1)))
    den = kappa_c(m, c, q)
    if isinstance(q, RationalPolynomial):
        quotient = poly_div_exact(num, den)
        if quotient is None:
            raise InvariantError(f"lambda(P_{c}) for m = {m} is not a polynomial in q")
        return quotient
    return num / den


def max_volume_c(m):
    if m < 1:
        raise ValidationError("m must be >= 1")
    return 0 if m % 2 else m // 2


def _alternating(m, q):
    q = _carrier(q)
    return _prod_q(q, (q ** i + (-1) ** i for i in range(1, m + 1)))


def _even_branch(m, q):
    q = _carrier(q)
    return _prod_q(q, (q ** (4 * i - 2) - 1 for i in range(1, m // 2 + 1)))


def lambda_component(m, q, v_over_p, gamma_parity=None):
    """lambda_v at a place of Delta' for the component count."""
    if v_over_p and gamma_parity is not None:
        raise ValidationError("B is split above p, so a place over p carries no gamma parity")
    if not v_over_p and gamma_parity not in (0, 1):
        raise ValidationError("a place away from p needs gamma_parity 0 or 1")
    if m % 2 or (not v_over_p and gamma_parity == 1):
        return _alternating(m, q)
    return _even_branch(m, q)


def lambda_superspecial(m, q, v_over_p, in_delta_prime, gamma_parity=None):
    """lambda'_v at a place over p or in Delta' for the superspecial count."""
    if v_over_p:
        if gamma_parity is not None:
            raise ValidationError("B is split above p, so a place over p carries no gamma parity")
        q_ = _carrier(q)
        if not in_delta_prime:
            return _prod_q(q_, (q_ ** i + 1 for i in range(1, m + 1)))
        return _alternating(m, q)
    if not in_delta_prime:
        raise ValidationError("lambda' is only defined at places over p or in Delta'")
    if gamma_parity not in (0, 1):
        raise ValidationError("a place away from p needs gamma_parity 0 or 1")
    if gamma_parity == 0:
        if m % 2:
            raise ValidationError("even gamma valuation with odd m admits no self-dual lattice")
        return _even_branch(m, q)
    return _alternating(m, q)


@dataclass(frozen=True)
class MassReport:
    mass: Fraction
    sign_exponent: int
    zeta_part: Fraction
    # (place, value, description)
    local_factors: tuple
    # m * d, the power of two in the denominator
    two_power: int

    def __post_init__(self):
        if self.mass <= 0:
            raise InvariantError(f"mass {self.mass} is not positive")
        rebuilt = abs((-1) ** self.sign_exponent * self.zeta_part / 2 ** self.two_power)
        rebuilt *= prod((f for _, f, _ in self.local_factors), start=Fraction(1))
        if rebuilt != self.mass:
            raise InvariantError("mass report does not reconstruct")


@dataclass(frozen=True)
class ComponentReport:
    count: int
    # (name, value, description); the values multiply to count
    factors: tuple

    def __post_init__(self):
        total = prod((Fraction(v) for _, v, _ in self.factors), start=Fraction(1))
        if total != self.count:
            raise InvariantError("component report does not reconstruct")
        if not isinstance(self.count, int) or self.count < 1:
            raise InvariantError(f"count {self.count} is not a positive integer")

    def factor(self, name):
        return next(v for n, v, _ in self.factors if n == name)


def _require_counting_hypotheses(inp):
    check_p_gate(inp)
    if not self_dual_exists(inp):
        raise HypothesisError(
            "hypothesis violated: a self-dual lattice exists (m even, or gamma has odd "
            "valuation at every ramified place)")


def _zeta_part(inp):
    return prod((Fraction(inp.field.zeta(j)) for j in range(1, inp.m + 1)), start=Fraction(1))


def _sign_and_scale(inp):
    m, d = inp.m, inp.field.degree
    exponent = d * m * (m + 1) // 2
    return exponent, Fraction((-1) ** exponent, 2 ** (m * d))


def _local_lambdas(inp, superspecial=False):
    dp = delta_prime(inp)
    out = []
    keys = set(dp)
    if superspecial:
        keys |= {(inp.p, idx) for idx in range(len(inp.places_over_p()))}
    for ell, idx in sorted(keys):
        v = inp.field.place(ell, idx)
        over_p = ell == inp.p
        parity = None if over_p else inp.quat.parity_at(ell, idx)
        if superspecial:
            val = lambda_superspecial(inp.m, v.q, over_p, (ell, idx) in dp, parity)
            desc = "lambda' at the superspecial stabilizer"
        else:
            val = lambda_component(inp.m, v.q, over_p, parity)
            desc = "lambda of the selected parahoric"
        out.append(((ell, idx), val, desc))
    return out


def mass_I1(inp):
    """Mass of the inner form I^1 with respect to the stabilizer level U^1."""
    _require_counting_hypotheses(inp)
    exponent, scale = _sign_and_scale(inp)
    zeta = _zeta_part(inp)
    local = _local_lambdas(inp)
    mass = scale * zeta * prod((f for _, f, _ in local), start=Fraction(1))
    if mass <= 0:
        raise InvariantError(
            f"mass {mass} is not positive: the signed zeta product has the wrong sign, "
            "check the supplied zeta values")
    return MassReport(mass, exponent, zeta, tuple(local), inp.m * inp.field.degree)


def _assemble(named):
    total = prod((Fraction(v) for _, v, _ in named), start=Fraction(1))
    if total.denominator != 1 or total <= 0:
        detail = ", ".join(f"{n} = {v}" for n, v, _ in named)
        raise InvariantError(
            f"count {total} is not a positive integer ({detail}); "
            "inconsistent zeta values are the usual cause")
    return ComponentReport(int(total), tuple(named))


def count_components(inp):
    """Number of irreducible components of the supersingular locus."""
    _require_counting_hypotheses(inp)
    g_order = order_G_modN(inp).order
    binom = components_closed(shape_of(inp))
    report = mass_I1(inp)
    named = [("|G(Z/NZ)|", g_order, "order of G over Z/NZ"),
             ("binomial", binom, "prod over v | p of C(f_v, floor(f_v/2))^m"),
             ("sign/2^(md)", Fraction((-1) ** report.sign_exponent, 2 ** (inp.m * inp.field.degree)),
              f"(-1)^{report.sign_exponent} / 2^{inp.m * inp.field.degree}"),
             ("zeta", report.zeta_part, "prod_{j<=m} zeta_F(1-2j)")]
    named += [(f"lambda_{key}", val, desc) for key, val, desc in report.local_factors]
    return _assemble(named)


def count_superspecial(inp):
    """Number of points of the superspecial locus."""
    _require_counting_hypotheses(inp)
    exponent, scale = _sign_and_scale(inp)
    named = [("|G(Z/NZ)|", order_G_modN(inp).order, "order of G over Z/NZ"),
             ("sign/2^(md)", scale, f"(-1)^{exponent} / 2^{inp.m * inp.field.degree}"),
             ("zeta", _zeta_part(inp), "prod_{j<=m} zeta_F(1-2j)")]
    named += [(f"lambda'_{key}", val, desc) for key, val, desc in _local_lambdas(inp, True)]
    return _assemble(named)


class SiegelCounts(NamedTuple):
    superspecial: int
    components: int
    dim: int


def siegel_constant(g, N):
    """C(g, N) = |GSp_2g(Z/N)| (-1)^{g(g+1)/2} / 2^g prod zeta(1-2i)."""
    zeta = prod((zeta_neg(i) for i in range(1, g + 1)), start=Fraction(1))
    return order_gsp_modN(g, N) * Fraction((-1) ** (g * (g + 1) // 2), 2 ** g) * zeta


def siegel_counts(g, N, p):
    if g < 1 or N < 3 or gcd(p, N) != 1:
        raise ValidationError("need g >= 1, N >= 3 and gcd(p, N) = 1")
    C = siegel_constant(g, N)
    sp = C * prod(p ** i + (-1) ** i for i in range(1, g + 1))
    if g % 2:
        lam = prod(p ** i + (-1) ** i for i in range(1, g + 1))
    else:
        lam = prod(p ** (4 * i - 2) - 1 for i in range(1, g // 2 + 1))
    comp = C * lam
    for name, val in (("superspecial", sp), ("components", comp)):
        if val.denominator != 1 or val <= 0:
            raise InvariantError(f"Siegel {name} count {val} is not a positive integer")
    return SiegelCounts(int(sp), int(comp), g * g // 4)


def supersingular_dimension(inp):
    m = inp.m
    return sum((f // 2) * m * (m + 1) // 2 + (f % 2) * (m * m // 4)
               for f in shape_of(inp).f)
