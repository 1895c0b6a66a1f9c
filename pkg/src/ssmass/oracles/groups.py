"""Exhaustive counts of small finite classical groups.

Each search fixes the columns of a matrix one at a time and keeps only the
columns whose pairings with the earlier ones already match the defining
form.  Every candidate column is still tested at every step, so the count is
exact; the pruning only avoids revisiting matrices that fail on an earlier
column.  The caps are on the size of the naive search space.
"""
from itertools import product
from math import gcd

from ..errors import CapExceededError, ValidationError
from .fields import GF, prime_power

__all__ = [
    "ENUMERATION_CAP",
    "enumerate_group_order",
    "enumerate_sp",
    "enumerate_gsp",
    "enumerate_u",
    "enumerate_gu",
    "similitude_image",
    "enumerate_gl2_mod",
    "enumerate_su2",
]

ENUMERATION_CAP = 2 ** 20


def _field(q, *, quadratic=False):
    pk = prime_power(q)
    if pk is None:
        raise ValidationError(f"q = {q} is not a prime power")
    p, k = pk
    return GF(p, 2 * k if quadratic else k)


def _check_cap(size, cap=ENUMERATION_CAP):
    if size > cap:
        raise CapExceededError(f"search space {size} exceeds the enumeration cap {cap}")


def _alternating_J(F, n):
    one, m_one = 1, F.neg(1)
    J = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        J[i][n + i] = one
        J[n + i][i] = m_one
    return J


def _bilinear(F, G, x, y):
    acc = 0
    for i, xi in enumerate(x):
        if xi:
            row = G[i]
            for j, yj in enumerate(y):
                if yj and row[j]:
                    acc = F.add(acc, F.mul(xi, F.mul(row[j], yj)))
    return acc


def _count_columns(F, vectors, pair, target, size):
    """Count sequences of `size` vectors c_0.. with pair(c_a, c_b) == target(a, b) for a <= b."""
    chosen = []

    def rec(t):
        if t == size:
            return 1
        total = 0
        for v in vectors:
            if pair(v, v) != target(t, t):
                continue
            if all(pair(chosen[a], v) == target(a, t) for a in range(t)):
                chosen.append(v)
                total += rec(t + 1)
                chosen.pop()
        return total

    return rec(0)


def enumerate_gsp(n, q, multiplier=None):
    """|GSp_{2n}(F_q)|, or the number with a given similitude multiplier."""
    F = _field(q)
    _check_cap(q ** (4 * n * n))
    J = _alternating_J(F, n)
    vectors = list(product(F.elements, repeat=2 * n))
    pair = lambda x, y: _bilinear(F, J, x, y)  # noqa: E731
    total = 0
    for c in (F.units if multiplier is None else [multiplier]):
        target = lambda a, b, c=c: F.mul(c, J[a][b])  # noqa: E731
        total += _count_columns(F, vectors, pair, target, 2 * n)
    return total


def enumerate_sp(n, q):
    """|Sp_{2n}(F_q)| by exhaustive search."""
    return enumerate_gsp(n, q, multiplier=1)


def _hermitian_setup(n, q):
    F = _field(q, quadratic=True)
    _check_cap(q ** (4 * n * n))
    vectors = list(product(F.elements, repeat=n))

    def pair(x, y):
        acc = 0
        for a, b in zip(x, y):
            if a and b:
                acc = F.add(acc, F.mul(F.conj(a), b))
        return acc

    return F, vectors, pair


def enumerate_gu(n, q, multiplier=None):
    """|GU_n(F_q)|: g over F_{q^2} with conj(g)^T g = c I, c in F_q^x."""
    F, vectors, pair = _hermitian_setup(n, q)
    base = F.subfield(F.k // 2)
    total = 0
    for c in ([x for x in base if x] if multiplier is None else [multiplier]):
        target = lambda a, b, c=c: c if a == b else 0  # noqa: E731
        total += _count_columns(F, vectors, pair, target, n)
    return total


def enumerate_u(n, q):
    """|U_n(F_q)| by exhaustive search."""
    return enumerate_gu(n, q, multiplier=1)


def similitude_image(kind, n, q):
    """Set of multipliers hit by the similitude character, with the unit group.

    kind 'symplectic': GSp_{2n}(F_q); kind 'hermitian-stabilizer': GU_n over
    F_{q^2} with the identity Hermitian form (the residue-level model of the
    stabilizer of a unimodular Hermitian lattice).
    """
    if kind == "symplectic":
        F = _field(q)
        units = set(F.units)
        hit = {c for c in units if enumerate_gsp(n, q, multiplier=c)}
    elif kind == "hermitian-stabilizer":
        F = _field(q, quadratic=True)
        units = {x for x in F.subfield(F.k // 2) if x}
        hit = {c for c in units if enumerate_gu(n, q, multiplier=c)}
    else:
        raise ValidationError(f"unknown similitude kind {kind!r}")
    return hit, units


def enumerate_group_order(kind, n, q):
    """Exhaustive order of sp / u / gsp / gu-stab over F_q."""
    if kind == "sp":
        return enumerate_sp(n, q)
    if kind == "u":
        return enumerate_u(n, q)
    if kind == "gsp":
        return enumerate_gsp(n, q)
    if kind == "gu-stab":
        return enumerate_gu(n, q)
    raise ValidationError(f"unknown group kind {kind!r}")


def enumerate_gl2_mod(N):
    """|GL_2(Z/NZ)| by checking every 2x2 matrix."""
    _check_cap(N ** 4)
    count = 0
    for a, b, c, d in product(range(N), repeat=4):
        if gcd((a * d - b * c) % N, N) == 1:
            count += 1
    return count


def enumerate_su2(p):
    """#{A in GL_2(F_{p^2}) : conj(A)^T A = I, det A = 1} for p <= 7."""
    if p > 7:
        raise CapExceededError("su2 enumeration is capped at p <= 7")
    F = GF(p, 2)
    # columns (a, c), (b, d) must be orthonormal for the standard Hermitian form
    unit_columns = [(x, y) for x, y in product(F.elements, repeat=2)
                    if F.add(F.mul(F.conj(x), x), F.mul(F.conj(y), y)) == 1]
    count = 0
    for a, c in unit_columns:
        ca, cc = F.conj(a), F.conj(c)
        for b, d in unit_columns:
            if F.add(F.mul(ca, b), F.mul(cc, d)) != 0:
                continue
            if F.sub(F.mul(a, d), F.mul(b, c)) == 1:
                count += 1
    return count
