"""Orders of finite classical groups and of the integral group G over Z/NZ."""
from dataclasses import dataclass, field
from math import prod

from sympy import factorint

from .arith_data import LocalPlace, ensure_valid
from .errors import HypothesisError, InvariantError, ValidationError

__all__ = [
    "GroupOrderReport",
    "order_sp",
    "order_u",
    "order_reductive_quotient",
    "order_gsp_modN",
    "order_G_modN",
    "verify_similitude_surjective",
]


@dataclass(frozen=True)
class GroupOrderReport:
    order: int
    factorization: dict
    # (factor, description) pairs whose product is the order
    formula_trace: tuple = field(default=())

    def __post_init__(self):
        if prod(p ** e for p, e in self.factorization.items()) != self.order:
            raise InvariantError("factorization does not reconstruct the order")


def _report(factors):
    order = prod(f for f, _ in factors)
    return GroupOrderReport(order, dict(factorint(order)), tuple(factors))


def _check_prime_power(q):
    if not isinstance(q, int) or q < 2 or len(factorint(q)) != 1:
        raise ValidationError(f"q = {q} is not a prime power")


def order_sp(n, q):
    """|Sp_{2n}(F_q)| = q^{n^2} prod_{i<=n} (q^{2i} - 1); n = 0 gives 1."""
    _check_prime_power(q)
    if n < 0:
        raise ValidationError("n must be >= 0")
    return q ** (n * n) * prod(q ** (2 * i) - 1 for i in range(1, n + 1))


def order_u(n, q):
    """|U_n(F_q)| = q^{n(n-1)/2} prod_{i<=n} (q^i - (-1)^i); n = 0 gives 1."""
    _check_prime_power(q)
    if n < 0:
        raise ValidationError("n must be >= 0")
    return q ** (n * (n - 1) // 2) * prod(q ** i - (-1) ** i for i in range(1, n + 1))


def _residue_q(place):
    return place.q if isinstance(place, LocalPlace) else place


def order_reductive_quotient(m, c, place):
    """Order of the reductive quotient Sp_{2c}(F_{q^2}) x U_{m-2c}(F_q) of P_c."""
    if not 0 <= c <= m // 2:
        raise ValidationError(f"c = {c} outside [0, {m // 2}]")
    q = _residue_q(place)
    return order_sp(c, q * q) * order_u(m - 2 * c, q)


def _ell_parts(N):
    return sorted(factorint(N).items())


def order_gsp_modN(g, N):
    """|GSp_{2g}(Z/NZ)|, lifting from F_ell by smoothness (dim 2g^2 + g + 1)."""
    if g < 1 or N < 1:
        raise ValidationError("need g >= 1 and N >= 1")
    return prod(ell ** ((k - 1) * (2 * g * g + g + 1)) * (ell - 1) * order_sp(g, ell)
                for ell, k in _ell_parts(N))


def _ramified_local_order(m, c, place):
    f, ell = place.inertia_f, place.residue_char
    total_dim = f * (2 * m * m + m)
    quotient_dim = 2 * f * (2 * c * c + c) + f * (m - 2 * c) ** 2
    return ell ** (total_dim - quotient_dim) * order_reductive_quotient(m, c, place)


def order_G_modN(inp):
    """|G(Z/NZ)| for the group of similitudes of the PEL datum, as a report.

    Split places contribute |Sp_{2m}(F_{q_v})|; a place of B's discriminant
    contributes the stabilizer of the self-dual lattice there, whose
    reductive quotient has c = 0 (odd gamma valuation) or c = m/2 (even).
    A deck-supplied override replaces the computation.
    """
    ensure_valid(inp)
    if inp.g_order_override is not None:
        return _report([(inp.g_order_override, "user-supplied |G(Z/NZ)|")])
    m, d = inp.m, inp.field.degree
    factors = []
    for ell, k in _ell_parts(inp.N):
        places = inp.field.places_over(ell)
        for idx, v in enumerate(places):
            if v.ram_e != 1:
                raise HypothesisError(
                    f"|G(Z/NZ)| needs every prime dividing N unramified in F; "
                    f"the place ({ell}, {idx}) has e = {v.ram_e} (supply G_order_modN to override)")
        if k > 1:
            factors.append((ell ** ((k - 1) * (1 + d * (2 * m * m + m))),
                            f"lift from F_{ell} to Z/{ell}^{k}"))
        factors.append((ell - 1, f"similitude factor at {ell}"))
        for idx, v in enumerate(places):
            parity = inp.quat.parity_at(ell, idx)
            if parity is None:
                factors.append((order_sp(m, v.q), f"|Sp_{2 * m}(F_{v.q})| at split place ({ell}, {idx})"))
                continue
            c = 0 if parity == 1 else m // 2
            if parity == 0 and m % 2:
                raise InvariantError(
                    f"place ({ell}, {idx}) has even gamma valuation but m = {m} is odd: "
                    "no self-dual lattice, so no integral model")
            factors.append((_ramified_local_order(m, c, v),
                            f"parahoric P_{c} at ramified place ({ell}, {idx})"))
    return _report(factors)


def verify_similitude_surjective(kind, n, q):
    """Whether the similitude character of the brute-forced group is onto the units.

    kind 'symplectic' uses GSp_{2n}(F_q), kind 'hermitian-stabilizer' uses GU_n
    over F_{q^2}.
    """
    from .oracles.groups import similitude_image

    if q > 4 or (2 * n if kind == "symplectic" else n) > 4:
        raise HypothesisError("similitude check is limited to q <= 4 and matrix size <= 4")
    hit, units = similitude_image(kind, n, q)
    return hit == units
