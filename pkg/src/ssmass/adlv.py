"""Cocharacter combinatorics for the basic locus and its component count.

X_*(T) has basis omega*, eps^{j*}_i with j running over Psi = disjoint union
of Z/f_v over the places v | p and 1 <= i <= m; sigma fixes omega* and moves
j to j + 1 inside each Z/f_v.
"""
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm, prod

from .arith_data import check_p_gate
from .errors import CapExceededError, ValidationError

__all__ = [
    "Shape",
    "Cochar",
    "CocharClass",
    "shape_of",
    "sigma_act",
    "mu",
    "newton_point",
    "natural",
    "kottwitz_point",
    "lambda_Gb",
    "in_one_minus_sigma",
    "diamond",
    "coroot_coefficients",
    "orbit_representatives",
    "components_closed",
    "components_enum",
    "count_components_closed",
    "count_components_enum",
    "ENUM_CAP",
]

ENUM_CAP = 2 ** 24


@dataclass(frozen=True)
class Shape:
    f: tuple
    m: int

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(self.f))
        if not self.f or any(x < 1 for x in self.f) or self.m < 1:
            raise ValidationError("a shape needs at least one f_v >= 1 and m >= 1")

    def indices(self):
        """(v, j, i) in lexicographic order."""
        return [(v, j, i) for v, fv in enumerate(self.f) for j in range(fv)
                for i in range(1, self.m + 1)]


def shape_of(inp):
    check_p_gate(inp)
    return Shape(tuple(v.inertia_f for v in inp.places_over_p()), inp.m)


@dataclass(frozen=True)
class Cochar:
    """c * omega* + sum a[(v, j, i)] eps^{j*}_i; entries may be Fractions."""

    shape: Shape
    c: object
    a: tuple

    @classmethod
    def from_map(cls, shape, c, amap=None):
        amap = amap or {}
        return cls(shape, c, tuple(amap.get(k, 0) for k in shape.indices()))

    def coeff(self, v, j, i):
        return self.a[self.shape.indices().index((v, j, i))]

    def as_map(self):
        return dict(zip(self.shape.indices(), self.a))

    def _same(self, other):
        if not isinstance(other, Cochar) or other.shape != self.shape:
            raise ValidationError("cocharacters live on different shapes")

    def __add__(self, other):
        self._same(other)
        return Cochar(self.shape, self.c + other.c, tuple(x + y for x, y in zip(self.a, other.a)))

    def __sub__(self, other):
        self._same(other)
        return Cochar(self.shape, self.c - other.c, tuple(x - y for x, y in zip(self.a, other.a)))

    def __rmul__(self, k):
        return Cochar(self.shape, k * self.c, tuple(k * x for x in self.a))

    def __neg__(self):
        return -1 * self


@dataclass(frozen=True)
class CocharClass:
    """An element of X_*(T)_sigma, i.e. a cocharacter modulo (1 - sigma)."""

    representative: Cochar

    def __eq__(self, other):
        return (isinstance(other, CocharClass)
                and in_one_minus_sigma(self.representative - other.representative))

    def __hash__(self):
        # invariants of the class: c and the per-(v, i) sums over j
        r = self.representative
        sums = {}
        for (v, _, i), x in r.as_map().items():
            sums[(v, i)] = sums.get((v, i), 0) + x
        return hash((r.c, tuple(sorted(sums.items()))))


def sigma_act(x):
    amap = x.as_map()
    f = x.shape.f
    return Cochar.from_map(x.shape, x.c, {(v, (j + 1) % f[v], i): val for (v, j, i), val in amap.items()})


def mu(shape):
    return Cochar.from_map(shape, 1)


def newton_point(shape):
    return Cochar(shape, Fraction(1), tuple(Fraction(-1, 2) for _ in shape.indices()))


def natural(x):
    """Image in pi_1(G)_sigma = Z: the omega* coefficient."""
    return x.c


def kottwitz_point(shape):
    """kappa of the basic class in B(G, mu), which equals mu's image."""
    return natural(mu(shape))


def lambda_Gb(shape):
    amap = {}
    for v, fv in enumerate(shape.f):
        for i in range(1, shape.m + 1):
            amap[(v, 0, i)] = -((fv + 1) // 2 if i % 2 else fv // 2)
    return CocharClass(Cochar.from_map(shape, 1, amap))


def in_one_minus_sigma(x):
    if x.c != 0:
        return False
    sums = {}
    for (v, _, i), val in x.as_map().items():
        sums[(v, i)] = sums.get((v, i), 0) + val
    return all(s == 0 for s in sums.values())


def diamond(x):
    """Average of x over its sigma-orbit."""
    n = lcm(*x.shape.f)
    total = x
    y = x
    for _ in range(n - 1):
        y = sigma_act(y)
        total = total + y
    return Fraction(1, n) * total


def coroot_coefficients(x):
    """Coefficients of x in the simple coroots alpha^{j}_k, keyed (v, j, k).

    alpha_k = eps_k - eps_{k+1} for k < m and alpha_m = eps_m, so the
    coefficient of alpha_k is the prefix sum of the eps-coefficients.
    """
    if x.c != 0:
        raise ValidationError("an omega* component is not in the coroot span")
    amap = x.as_map()
    out = {}
    for v, fv in enumerate(x.shape.f):
        for j in range(fv):
            acc = 0
            for k in range(1, x.shape.m + 1):
                acc += amap[(v, j, k)]
                out[(v, j, k)] = acc
    return out


def components_closed(shape):
    return prod(comb(fv, fv // 2) ** shape.m for fv in shape.f)


def count_components_closed(inp):
    return components_closed(shape_of(inp))


def _targets(shape):
    """Bit masks selecting (v, ., i) and the required number of -1 entries."""
    idx = shape.indices()
    out = []
    for v, fv in enumerate(shape.f):
        for i in range(1, shape.m + 1):
            mask = 0
            for j in range(fv):
                mask |= 1 << idx.index((v, j, i))
            out.append((mask, (fv + 1) // 2 if i % 2 else fv // 2))
    return out


def _count_range(args):
    targets, lo, hi = args
    count = 0
    for x in range(lo, hi):
        for mask, want in targets:
            if (x & mask).bit_count() != want:
                break
        else:
            count += 1
    return count


def _workers():
    try:
        return max(1, int(os.environ.get("SSMASS_THREADS", "1")))
    except ValueError:
        return 1


def orbit_representatives(shape):
    """Yield omega* + sum a eps for a in {-1, 0}^(Psi x m) matching lambda_Gb."""
    n = len(shape.indices())
    targets = _targets(shape)
    for x in range(2 ** n):
        if _count_range((targets, x, x + 1)):
            yield Cochar(shape, 1, tuple(-((x >> b) & 1) for b in range(n)))


def components_enum(shape, workers=None):
    """Count W.mu elements congruent to lambda_Gb, by exhaustive enumeration.

    Bit b of an assignment is 1 when the b-th eps coefficient is -1; being
    congruent mod (1 - sigma) means matching per-(v, i) sums.
    """
    n = len(shape.indices())
    if 2 ** n > ENUM_CAP:
        raise CapExceededError(f"2^{n} assignments exceed the enumeration cap 2^24")
    targets = _targets(shape)
    workers = workers or _workers()
    total = 2 ** n
    if workers == 1 or total < 2 ** 14:
        return _count_range((targets, 0, total))
    step = -(-total // workers)
    chunks = [(targets, lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(workers) as pool:
        return sum(pool.map(_count_range, chunks))


def count_components_enum(inp, workers=None):
    return components_enum(shape_of(inp), workers)
