"""Oracles that re-derive closed forms by a second, unrelated route."""
from fractions import Fraction

from ..errors import CapExceededError
from ..local_lattices import JordanType

__all__ = [
    "bernoulli_akiyama_tanigawa",
    "brauer_delta_prime",
    "weyl_assignment_count",
    "gram_model",
    "gram_model_type",
    "gram_model_dual",
    "gram_model_is_modular",
]

WEYL_CAP = 2 ** 24


def bernoulli_akiyama_tanigawa(n):
    """B_n by the Akiyama-Tanigawa triangle, with B_1 = -1/2."""
    row = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
    # the triangle yields B_1 = +1/2
    return -row[0] if n == 1 else row[0]


def brauer_delta_prime(ram_B, p, f_map):
    """Places where D has local invariant 1/2.

    ``ram_B`` holds the finite places (prime, index) where B ramifies, and
    ``f_map`` maps the index of each place over p to its local degree.  Local
    invariants add in (1/2)Z/Z: inv_v(D) = inv_v(B) + [F_v:Q_p]/2 at v | p and
    inv_v(D) = inv_v(B) elsewhere.
    """
    inv = {}
    for key in ram_B:
        inv[key] = Fraction(1, 2)
    for idx, f in f_map.items():
        key = (p, idx)
        inv[key] = (inv.get(key, Fraction(0)) + Fraction(f, 2)) % 1
    return frozenset(k for k, x in inv.items() if x == Fraction(1, 2))


def weyl_assignment_count(shape, m):
    """Number of (v, i)-indexed subsets of Z/f_v of the sizes ceil(f_v/2)
    (i odd) / floor(f_v/2) (i even), counted by convolving (1 + x) per slot."""
    if 2 ** (m * sum(shape)) > WEYL_CAP:
        raise CapExceededError(f"2^{m * sum(shape)} assignments exceed the cap {WEYL_CAP}")

    def subsets_by_size(f):
        poly = [1]
        for _ in range(f):
            poly = [a + b for a, b in zip(poly + [0], [0] + poly)]
        return poly

    def rec(places):
        if not places:
            return 1
        f, rest = places[0], places[1:]
        sizes = subsets_by_size(f)
        here = 1
        for i in range(1, m + 1):
            here *= sizes[(f + 1) // 2 if i % 2 else f // 2]
        return here * rec(rest)

    return rec(tuple(shape))


# --- explicit Hermitian Gram models ---------------------------------------
#
# A lattice sum_k Pi^{s_k} O_B e_k is modelled by the exponent vector s, over
# a basis whose Gram matrix has one nonzero entry per row: phi(e_k, e_partner(k))
# has Pi-valuation g_k.  phi(a e_k, c e_l) = a phi(e_k, e_l) c-bar, so
# a e_k lies in the dual iff v(a) >= -g_k - s_partner(k).

def gram_model(J):
    """(g, partner) for the orthogonal basis of the normal form of J."""
    g, partner = [], []
    for i, n in sorted(J.ranks.items()):
        if i % 2:
            for _ in range(n // 2):
                k = len(g)
                g += [i, i]
                partner += [k + 1, k]
        else:
            for _ in range(n):
                partner.append(len(g))
                g.append(i)
    return g, partner


def gram_model_type(g, partner, s):
    ranks = {}
    for k, l in enumerate(partner):
        idx = s[k] + g[k] + s[l]
        ranks[idx] = ranks.get(idx, 0) + 1
    return JordanType(ranks)


def gram_model_dual(g, partner, s):
    return [-g[k] - s[partner[k]] for k in range(len(g))]


def gram_model_is_modular(J, i):
    """Lambda == Pi^i Lambda^dual, compared coordinatewise in the model."""
    g, partner = gram_model(J)
    s = [0] * len(g)
    return [i + x for x in gram_model_dual(g, partner, s)] == s
