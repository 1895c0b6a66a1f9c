"""Random alternating Gram matrices and unimodular changes of basis."""
from fractions import Fraction

from ssmass.errors import ValidationError
from ssmass.local_lattices import AlternatingGram


def random_alternating(rng, n, prime):
    while True:
        g = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.15:
                    continue
                unit = rng.choice([u for u in range(1, 4 * prime) if u % prime])
                x = Fraction(rng.choice((1, -1)) * unit) * Fraction(prime) ** rng.randint(-3, 3)
                g[i][j], g[j][i] = x, -x
        try:
            return AlternatingGram(g, prime)
        except ValidationError:
            continue


def random_unimodular(rng, n, prime):
    # product of elementary integral matrices times a diagonal of units
    b = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-5, 5)
        for r in range(n):
            b[r][j] += c * b[r][i]
    for i in range(n):
        u = rng.choice([u for u in range(1, 3 * prime) if u % prime])
        for r in range(n):
            b[r][i] *= u
    return b


def congruent(g, b):
    n = len(b)
    return [[sum(b[k][i] * g[k][l] * b[l][j] for k in range(n) for l in range(n)) for j in range(n)]
            for i in range(n)]
