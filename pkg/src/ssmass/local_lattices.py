"""Normal forms for local lattices.

Two kinds of lattice are handled:

* lattices in a symplectic space over a local field, given by an alternating
  Gram matrix with rational entries and a prime pi; these are reduced to the
  elementary-divisor form phi(e_i, e_{n+i}) = pi^{d_i};
* Hermitian lattices over the maximal order of a local division quaternion
  algebra, represented by their Jordan type (the map i -> rank of the
  Pi^i-modular component).  The type is a complete isomorphism invariant, so
  duality, scaling by Pi and modularity are computed on types directly.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError
from .exact import as_fraction

__all__ = [
    "valuation",
    "AlternatingGram",
    "SymplecticDivisors",
    "symplectic_divisors",
    "canonical_form",
    "verify_certificate",
    "JordanType",
    "hermitian_dual",
    "scale_by_Pi",
    "is_Pi_modular",
    "modular_exists",
    "modular_normal_form",
    "skew_modular_exists",
    "skew_to_hermitian_index",
    "split_self_dual_exists",
    "self_dual_hermitian_type",
    "parahoric_index",
]

INF = float("inf")


def valuation(x, prime):
    """prime-adic valuation of a rational; +inf for zero."""
    x = as_fraction(x)
    if x == 0:
        return INF
    v = 0
    num, den = x.numerator, x.denominator
    while num % prime == 0:
        num //= prime
        v += 1
    while den % prime == 0:
        den //= prime
        v -= 1
    return v


# --- exact matrix helpers --------------------------------------------------

def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def _transpose(a):
    return [list(row) for row in zip(*a)]


def _det(a):
    m = [list(row) for row in a]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / m[col][col]
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


# --- symplectic lattices ---------------------------------------------------

@dataclass(frozen=True)
class AlternatingGram:
    entries: tuple
    prime: int

    def __post_init__(self):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        problems = []
        if n == 0 or n % 2 or any(len(r) != n for r in rows):
            problems.append("Gram matrix must be square of even size")
        else:
            if any(rows[i][j] != -rows[j][i] for i in range(n) for j in range(n)):
                problems.append("Gram matrix is not alternating")
            elif _det(rows) == 0:
                problems.append("Gram matrix is singular")
        if problems:
            raise ValidationError(problems)

    @property
    def dim(self):
        return len(self.entries)

    def pair(self, x, y):
        g = self.entries
        return sum(x[i] * g[i][j] * y[j] for i in range(len(x)) if x[i] for j in range(len(y)) if y[j])


@dataclass(frozen=True)
class SymplecticDivisors:
    d: tuple
    # columns are the new basis vectors e_1..e_n, e_{n+1}..e_{2n}
    basis: tuple


def canonical_form(d, prime):
    """Alternating matrix with pi^{d_i} in position (i, n+i)."""
    n = len(d)
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i, di in enumerate(d):
        out[i][n + i] = Fraction(prime) ** di
        out[n + i][i] = -Fraction(prime) ** di
    return out


def symplectic_divisors(gram, prime=None):
    """Reduce an alternating Gram matrix to elementary-divisor form.

    Greedy: pick the pair (i, j), i < j, of remaining basis vectors whose
    pairing has minimal valuation (ties by lowest index), normalise it to
    pi^d, split the hyperbolic plane off the rest and repeat.  Every
    coefficient used has nonnegative valuation, so the change of basis is
    unimodular over the valuation ring.
    """
    if not isinstance(gram, AlternatingGram):
        gram = AlternatingGram(gram, prime)
    prime = gram.prime
    n2 = gram.dim
    vecs = [[Fraction(int(i == j)) for i in range(n2)] for j in range(n2)]
    remaining = list(range(n2))
    planes = []
    while remaining:
        best = None
        for pos, i in enumerate(remaining):
            for j in remaining[pos + 1:]:
                val = gram.pair(vecs[i], vecs[j])
                if val:
                    key = (valuation(val, prime), i, j)
                    if best is None or key < best[0]:
                        best = (key, val)
        (d, i, j), a = best
        scale = Fraction(prime) ** d / a
        e = vecs[i]
        f = [scale * c for c in vecs[j]]
        pd = Fraction(prime) ** d
        remaining = [k for k in remaining if k not in (i, j)]
        for k in remaining:
            x = vecs[k]
            alpha = gram.pair(x, f) / pd
            beta = gram.pair(x, e) / pd
            vecs[k] = [x[t] - alpha * e[t] + beta * f[t] for t in range(n2)]
        planes.append((d, e, f))
    planes.sort(key=lambda t: t[0])
    cols = [e for _, e, _ in planes] + [f for _, _, f in planes]
    basis = tuple(tuple(cols[c][r] for c in range(n2)) for r in range(n2))
    return SymplecticDivisors(tuple(d for d, _, _ in planes), basis)


def verify_certificate(gram, result, prime=None):
    """Exact check that basis^T G basis is canonical and basis is unimodular."""
    if not isinstance(gram, AlternatingGram):
        gram = AlternatingGram(gram, prime)
    b = [list(r) for r in result.basis]
    lhs = _matmul(_matmul(_transpose(b), [list(r) for r in gram.entries]), b)
    if lhs != canonical_form(result.d, gram.prime):
        return False
    if list(result.d) != sorted(result.d):
        return False
    return valuation(_det(b), gram.prime) == 0


# --- Hermitian lattices over a division quaternion order -------------------

class JordanType:
    """Ranks of the Jordan components of a Hermitian O_B-lattice.

    Index i carries (pi^{i/2})^n for even i and H(i)^{n/2} for odd i, so the
    rank at an odd index must be even.
    """

    __slots__ = ("_ranks",)

    def __init__(self, ranks=None):
        items = {}
        for i, n in dict(ranks or {}).items():
            if not isinstance(i, int) or not isinstance(n, int) or n < 0:
                raise ValidationError(f"bad Jordan component {i!r}: {n!r}")
            if n:
                items[i] = n
        bad = [i for i, n in items.items() if i % 2 and n % 2]
        if bad:
            raise ValidationError(
                f"odd-index components must have even rank (index {bad[0]})")
        self._ranks = tuple(sorted(items.items()))

    @property
    def ranks(self):
        return dict(self._ranks)

    @property
    def rank(self):
        return sum(n for _, n in self._ranks)

    @property
    def support(self):
        return frozenset(i for i, _ in self._ranks)

    def __getitem__(self, i):
        return self.ranks.get(i, 0)

    def __eq__(self, other):
        return isinstance(other, JordanType) and self._ranks == other._ranks

    def __hash__(self):
        return hash(self._ranks)

    def __repr__(self):
        return f"JordanType({self.ranks})"

    def summands(self):
        """Normal-form summands as strings, e.g. ['H(1)', 'H(1)', '(pi^0)']."""
        out = []
        for i, n in self._ranks:
            if i % 2:
                out.extend([f"H({i})"] * (n // 2))
            else:
                out.extend([f"(pi^{i // 2})"] * n)
        return out

    def describe(self):
        return " + ".join(self.summands()) if self._ranks else "0"


def hermitian_dual(J):
    """Type of the dual lattice: H(i) and (pi^{i/2}) are Pi^i-modular, so the
    dual of the index-i component sits at index -i."""
    return JordanType({-i: n for i, n in J.ranks.items()})


def scale_by_Pi(J, k):
    """Type of Pi^k * Lambda: Gram entries pick up Pi^k . Pi^k-bar, i -> i + 2k."""
    return JordanType({i + 2 * k: n for i, n in J.ranks.items()})


def is_Pi_modular(J, i):
    """Whether Lambda = Pi^i Lambda^dual.

    Componentwise Pi^i (Lambda_j)^dual = Pi^{i-j} Lambda_j, which equals
    Lambda_j only for j = i.
    """
    if J.rank == 0:
        raise ValidationError("the zero lattice has no modularity index")
    return J.support == {i}


def modular_exists(n, i):
    """Whether a rank-n Pi^i-modular Hermitian lattice exists."""
    if n < 1:
        raise ValidationError("rank must be >= 1")
    return n % 2 == 0 or i % 2 == 0


def modular_normal_form(n, i):
    """The unique rank-n Pi^i-modular type: H(i)^{n/2}, or
    H(i)^{(n-1)/2} + (pi^{i/2}) when n is odd and i even."""
    if not modular_exists(n, i):
        raise ValidationError(f"no Pi^{i}-modular lattice of odd rank {n} exists for odd {i}")
    return JordanType({i: n})


def skew_to_hermitian_index(i, ord_gamma):
    """Lambda = Pi^i Lambda^{dual, psi} iff Lambda = Pi^{i+ord(gamma)-1} Lambda^{dual, phi_B}."""
    return i + ord_gamma - 1


def skew_modular_exists(n, i, ord_gamma):
    """Existence of a skew-Hermitian lattice with Lambda = Pi^i Lambda^dual."""
    return modular_exists(n, skew_to_hermitian_index(i, ord_gamma))


def split_self_dual_exists(n):
    """Over a split quaternion algebra a self-dual lattice always exists and is
    unique (Morita reduction to a unimodular symplectic lattice)."""
    if n < 1:
        raise ValidationError("rank must be >= 1")
    return True


def self_dual_hermitian_type(m, gamma_parity):
    """Hermitian type of the self-dual skew-Hermitian lattice at a ramified place."""
    return modular_normal_form(m, skew_to_hermitian_index(0, gamma_parity))


def parahoric_index(J):
    """c such that the stabilizer of Lambda is conjugate to P_c.

    P_c stabilises L_c = H(-1)^c + H(0)^{...} (+ (1)), whose type is
    {-1: 2c, 0: m - 2c}.  Stabilizers do not change under scaling by Pi, so
    J is shifted until it has that shape.
    """
    lo = min(J.support)
    for k in {-((lo + 1) // 2), -(lo // 2)}:
        shifted = scale_by_Pi(J, k)
        if shifted.support <= {-1, 0}:
            return shifted[-1] // 2
    raise ValidationError(f"{J!r} is not a scaled L_c lattice")
