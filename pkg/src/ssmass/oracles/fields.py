"""Small finite fields for the brute-force oracles.

Elements of F_{p^k} are encoded as integers 0 <= a < p^k whose base-p digits
are the coefficients of a polynomial in a root of a primitive polynomial.
Addition and multiplication go through precomputed tables, which keeps the
enumerations fast enough for desk-scale checks.
"""
from functools import lru_cache
from itertools import product

from sympy import factorint

__all__ = ["FiniteField", "GF", "prime_power"]


def prime_power(q):
    """(p, k) with q = p^k, or None."""
    if q < 2:
        return None
    f = factorint(q)
    if len(f) != 1:
        return None
    (p, k), = f.items()
    return p, k


def _digits(a, p, k):
    out = []
    for _ in range(k):
        out.append(a % p)
        a //= p
    return out


def _encode(ds, p):
    a = 0
    for d in reversed(ds):
        a = a * p + d
    return a


class FiniteField:
    def __init__(self, p, k=1):
        self.p, self.k = p, k
        self.q = q = p ** k
        self.modulus = self._find_primitive_poly()
        # exp/log tables with respect to the class of x
        self.exp = exp = [0] * (q - 1)
        self.log = log = [None] * q
        cur = [1] + [0] * (k - 1)
        for e in range(q - 1):
            a = _encode(cur, p)
            exp[e] = a
            log[a] = e
            cur = self._times_x(cur)
        self.add_t = [[_encode([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p)
                       for b in range(q)] for a in range(q)]
        self.mul_t = [[0 if a == 0 or b == 0 else exp[(log[a] + log[b]) % (q - 1)]
                       for b in range(q)] for a in range(q)]
        self.neg_t = [_encode([(-x) % p for x in _digits(a, p, k)], p) for a in range(q)]

    def _times_x(self, coeffs):
        p = self.p
        top = coeffs[-1]
        shifted = [0] + coeffs[:-1]
        # x^k = -(c_0 + ... + c_{k-1} x^{k-1})
        return [(s - top * c) % p for s, c in zip(shifted, self.modulus)]

    def _find_primitive_poly(self):
        p, k, q = self.p, self.k, self.p ** self.k
        if k == 1:
            # x = g for a generator g of F_p^x; store modulus as [-g]
            for g in range(1, p):
                if p == 2 or len({pow(g, e, p) for e in range(p - 1)}) == p - 1:
                    return [(-g) % p]
        for tail in product(range(p), repeat=k):
            if tail[0] == 0:
                continue
            self.modulus = list(tail)
            cur = [1] + [0] * (k - 1)
            seen = set()
            for _ in range(q - 1):
                seen.add(tuple(cur))
                cur = self._times_x(cur)
            if len(seen) == q - 1 and cur == [1] + [0] * (k - 1) and (0,) * k not in seen:
                return list(tail)
        raise ValueError(f"no primitive polynomial of degree {k} over F_{p}")

    @property
    def elements(self):
        return range(self.q)

    @property
    def units(self):
        return range(1, self.q)

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return self.add_t[a][b]

    def sub(self, a, b):
        return self.add_t[a][self.neg_t[b]]

    def mul(self, a, b):
        return self.mul_t[a][b]

    def neg(self, a):
        return self.neg_t[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a, e):
        if a == 0:
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def frob(self, a, times=1):
        return self.pow(a, self.p ** times)

    def conj(self, a):
        """The involution x -> x^{sqrt(q)} of F_q over F_{sqrt(q)}."""
        if self.k % 2:
            raise ValueError("conjugation needs an even-degree field")
        return self.pow(a, self.p ** (self.k // 2))

    def subfield(self, degree):
        """Elements of the subfield F_{p^degree}, in increasing order."""
        if self.k % degree:
            raise ValueError("not a subfield degree")
        r = self.p ** degree
        return [a for a in range(self.q) if self.pow(a, r) == a]

    def dot(self, xs, ys):
        acc = 0
        for x, y in zip(xs, ys):
            if x and y:
                acc = self.add_t[acc][self.mul_t[x][y]]
        return acc

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


@lru_cache(maxsize=None)
def GF(p, k=1):
    return FiniteField(p, k)
