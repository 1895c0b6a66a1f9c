"""Supersingular elliptic curves in characteristic p, by point counting.

For every j in F_{p^2} a short Weierstrass model with that j-invariant is
written down and its points over F_{p^2} are counted; the curve is
supersingular iff the trace of Frobenius is divisible by p.  The automorphism
group orders (6 at j = 0, 4 at j = 1728, 2 otherwise, valid for p >= 5) are
standard facts used as external input.
"""
from fractions import Fraction

import numpy as np

from ..errors import CapExceededError

__all__ = ["supersingular_j_invariants", "eichler_mass"]


def _nonresidue(p):
    return next(n for n in range(2, p) if pow(n, (p - 1) // 2, p) == p - 1)


def _frobenius_traces(p):
    """Yield ((j0, j1), trace over F_{p^2}) for every j = j0 + j1*sqrt(n)."""
    n = _nonresidue(p)
    legendre = np.array([0] + [1 if pow(a, (p - 1) // 2, p) == 1 else -1 for a in range(1, p)],
                        dtype=np.int64)
    idx = np.arange(p * p, dtype=np.int64)
    xu, xv = idx % p, idx // p

    def mul(a, b):
        return ((a[0] * b[0] + n * a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p)

    x2 = mul((xu, xv), (xu, xv))
    x3 = mul(x2, (xu, xv))
    for j1 in range(p):
        for j0 in range(p):
            j = (j0, j1)
            if j == (0, 0):
                A, B = (0, 0), (1, 0)
            elif j == (1728 % p, 0):
                A, B = (1, 0), (0, 0)
            else:
                # y^2 = x^3 + 3k x + 2k(1728 - j) with k = j(1728 - j)
                t = ((1728 - j0) % p, (-j1) % p)
                k = ((j0 * t[0] + n * j1 * t[1]) % p, (j0 * t[1] + j1 * t[0]) % p)
                A = (3 * k[0] % p, 3 * k[1] % p)
                B = ((2 * (k[0] * t[0] + n * k[1] * t[1])) % p, (2 * (k[0] * t[1] + k[1] * t[0])) % p)
            ax = mul((A[0], A[1]), (xu, xv))
            yu = (x3[0] + ax[0] + B[0]) % p
            yv = (x3[1] + ax[1] + B[1]) % p
            # z is a square in F_{p^2} iff its norm is a square in F_p
            norm = (yu * yu - n * yv * yv) % p
            char_sum = int(legendre[norm].sum())
            yield j, -char_sum


def supersingular_j_invariants(p):
    """Supersingular j-invariants as pairs (j0, j1) meaning j0 + j1*sqrt(n)."""
    if not 5 <= p <= 50:
        raise CapExceededError("supersingular enumeration is limited to 5 <= p <= 50")
    return [j for j, t in _frobenius_traces(p) if t % p == 0]


def eichler_mass(p):
    """Sum of 1/|Aut E| over supersingular E in characteristic p."""
    total = Fraction(0)
    for j in supersingular_j_invariants(p):
        if j == (0, 0):
            total += Fraction(1, 6)
        elif j == (1728 % p, 0):
            total += Fraction(1, 4)
        else:
            total += Fraction(1, 2)
    return total
