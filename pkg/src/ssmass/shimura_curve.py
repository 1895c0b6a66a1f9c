"""Quaternionic Shimura curves (F = Q, m = 1) with p dividing the discriminant.

Covers the set S of primes where gamma has even valuation, the mass and
component count in the case S = {p}, and a check of the explicit
Dieudonne module with Lie type (2, 0) over W(F_{p^2}) / p^K.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from sympy import isprime

from .arith_data import PELInput
from .errors import HypothesisError, InvariantError, ValidationError
from .exact import zeta_neg
from .groups_finite import order_G_modN
from .mass import lambda_superspecial

__all__ = [
    "CurveInput",
    "CurveComponentCount",
    "appendix_S",
    "curve_mass",
    "curve_mass_via_superspecial",
    "curve_component_count",
    "TruncatedWittRing",
    "DieudonneCheck",
    "dieudonne_data",
    "dieudonne_matrix_check",
    "su2_residue_order",
]


@dataclass(frozen=True)
class CurveInput:
    # pairs (prime, gamma_parity)
    delta: tuple
    p: int
    # only the component count needs the level
    N: int = None

    def __post_init__(self):
        object.__setattr__(self, "delta", tuple(sorted(
            (d, 1) if isinstance(d, int) else tuple(d) for d in self.delta)))
        problems = []
        primes = [ell for ell, _ in self.delta]
        if len(primes) % 2:
            problems.append("ramified count odd")
        if len(set(primes)) != len(primes):
            problems.append("duplicate ramified place")
        problems += [f"{ell} is not prime" for ell in primes if not isprime(ell)]
        problems += [f"gamma_parity at {ell} must be 0 or 1" for ell, e in self.delta if e not in (0, 1)]
        if not isprime(self.p):
            problems.append("p must be prime")
        if self.N is None:
            pass
        elif self.N < 3:
            problems.append("N must be an integer >= 3")
        elif gcd(self.p, self.N) != 1:
            problems.append("gcd(p,N) ≠ 1")
        if problems:
            raise ValidationError(problems)

    @property
    def primes(self):
        return tuple(ell for ell, _ in self.delta)


def appendix_S(inp):
    return frozenset(ell for ell, e in inp.delta if e == 0)


def _others_product(inp):
    return prod(ell - 1 for ell in inp.primes if ell != inp.p)


def curve_mass(inp):
    """Mass of the principally polarized O_B-surfaces when S = {p}."""
    S = appendix_S(inp)
    if inp.p not in inp.primes or S != {inp.p}:
        raise HypothesisError(
            f"hypothesis violated: S = {{p}} with p | Delta (here S = {sorted(S)}, p = {inp.p})")
    return Fraction(_others_product(inp), 12)


def curve_mass_via_superspecial(inp):
    """The same mass from the general superspecial machinery with d = m = 1.

    lambda'_p = 1 (hyperspecial at p), lambda'_ell = ell - 1 elsewhere, and a
    factor 2 for the two Lie types.
    """
    curve_mass(inp)
    local = prod(lambda_superspecial(1, ell, False, True, 1) for ell in inp.primes if ell != inp.p)
    return 2 * abs(Fraction(-1, 2) * zeta_neg(1)) * local


@dataclass(frozen=True)
class CurveComponentCount:
    count: int
    g_order: int
    # notes on how |G(Z/NZ)| was obtained
    flags: tuple = ()

    def __int__(self):
        return self.count


def curve_component_count(inp, g_order=None):
    """Irreducible components of the special fiber: |G(Z/N)| / 12 prod (ell - 1)."""
    if inp.p not in inp.primes:
        raise HypothesisError(f"hypothesis violated: p | Delta (p = {inp.p})")
    even = [ell for ell, e in inp.delta if e == 0]
    if even:
        raise HypothesisError(
            "hypothesis violated: gamma^2 = -Delta (special involution), which needs odd "
            f"gamma valuation everywhere; even at {even}")
    flags = []
    if g_order is None:
        if inp.N is None:
            raise ValidationError("the component count needs a level N >= 3 or a supplied |G(Z/NZ)|")
        pel = PELInput.over_Q(ramified=[(ell, e) for ell, e in inp.delta], m=1, N=inp.N, p=inp.p)
        g_order = order_G_modN(pel).order
        touched = sorted(ell for ell in inp.primes if inp.N % ell == 0)
        if touched:
            flags.append(f"|G(Z/NZ)| uses the ramified parahoric rule at {touched}")
    else:
        flags.append("|G(Z/NZ)| supplied by the caller")
    total = Fraction(g_order * _others_product(inp), 12)
    if total.denominator != 1:
        raise InvariantError(f"component count {total} is not an integer")
    return CurveComponentCount(int(total), g_order, tuple(flags))


# --- truncated Witt vectors of F_{p^2} -------------------------------------

class TruncatedWittRing:
    """Z/p^K [x] / (x^2 + a x + b) with f irreducible mod p; elements are pairs."""

    def __init__(self, p, K):
        if not isprime(p) or K < 1:
            raise ValidationError("need a prime p and precision K >= 1")
        self.p, self.K = p, K
        self.modulus = p ** K
        self.a, self.b = next((a, b) for a in range(p) for b in range(p)
                              if all((t * t + a * t + b) % p for t in range(p)))

    def __repr__(self):
        return f"TruncatedWittRing(p={self.p}, K={self.K}, f=x^2+{self.a}x+{self.b})"

    def elem(self, u, v=0):
        n = self.modulus
        return (u % n, v % n)

    def add(self, s, t):
        return self.elem(s[0] + t[0], s[1] + t[1])

    def sub(self, s, t):
        return self.elem(s[0] - t[0], s[1] - t[1])

    def mul(self, s, t):
        # x^2 = -a x - b
        u = s[0] * t[0] - self.b * s[1] * t[1]
        v = s[0] * t[1] + s[1] * t[0] - self.a * s[1] * t[1]
        return self.elem(u, v)

    def frob(self, s):
        # x -> -a - x, the other root of f
        return self.elem(s[0] - self.a * s[1], -s[1])

    def valuation(self, s):
        v = 0
        u, w = s
        while v < self.K and u % self.p == 0 and w % self.p == 0:
            u //= self.p
            w //= self.p
            v += 1
        return v

    def from_quadratic(self, s):
        """Reduce an element of Q(x)/(f) with p-integral coordinates."""
        out = []
        for c in s:
            c = Fraction(c)
            if c.denominator % self.p == 0:
                raise InvariantError(f"{c} is not p-integral")
            out.append(c.numerator * pow(c.denominator, -1, self.modulus))
        return self.elem(*out)

    # matrices are tuples of rows
    def matmul(self, A, B):
        return tuple(tuple(self._dot(row, col) for col in zip(*B)) for row in A)

    def _dot(self, row, col):
        acc = (0, 0)
        for s, t in zip(row, col):
            acc = self.add(acc, self.mul(s, t))
        return acc

    def mat_frob(self, A):
        return tuple(tuple(self.frob(x) for x in row) for row in A)

    def scalar(self, c, A):
        return tuple(tuple(self.mul(self.elem(c), x) for x in row) for row in A)

    def transpose(self, A):
        return tuple(zip(*A))

    def identity(self, n):
        return tuple(tuple(self.elem(int(i == j)) for j in range(n)) for i in range(n))

    def det2(self, A):
        return self.sub(self.mul(A[0][0], A[1][1]), self.mul(A[0][1], A[1][0]))

    def det(self, A):
        if len(A) == 1:
            return A[0][0]
        acc = (0, 0)
        for j, x in enumerate(A[0]):
            minor = tuple(row[:j] + row[j + 1:] for row in A[1:])
            term = self.mul(x, self.det(minor))
            acc = self.add(acc, term) if j % 2 == 0 else self.sub(acc, term)
        return acc


# exact arithmetic in Q(x)/(f), only to compute V = p F^{-1}

def _q_mul(ring, s, t):
    u = s[0] * t[0] - ring.b * s[1] * t[1]
    v = s[0] * t[1] + s[1] * t[0] - ring.a * s[1] * t[1]
    return (u, v)


def _q_inv(ring, s):
    conj = (s[0] - ring.a * s[1], -s[1])
    norm = _q_mul(ring, s, conj)[0]
    return (conj[0] / norm, conj[1] / norm)


def _q_matrix_inverse(ring, A):
    n = len(A)
    M = [[(Fraction(x[0]), Fraction(x[1])) for x in row] + [(Fraction(int(i == j)), Fraction(0))
                                                           for j in range(n)]
         for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != (0, 0)), None)
        if piv is None:
            raise InvariantError("[F] is not invertible")
        M[col], M[piv] = M[piv], M[col]
        inv = _q_inv(ring, M[col][col])
        M[col] = [_q_mul(ring, inv, x) for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != (0, 0):
                f = M[r][col]
                M[r] = [(x[0] - y[0], x[1] - y[1])
                        for x, y in zip(M[r], (_q_mul(ring, f, z) for z in M[col]))]
    return [row[n:] for row in M]


def dieudonne_data(p, perturb=False):
    """Integer matrices [Pi], pairing P and [F] for the Lie type (2, 0) module.

    With ``perturb`` the two blocks of [F] are swapped (a negative control).
    """
    J1 = ((0, -1), (1, 0))
    I2 = ((1, 0), (0, 1))
    Z2 = ((0, 0), (0, 0))

    def block(A, B, C, D):
        return tuple(A[i] + B[i] for i in range(2)) + tuple(C[i] + D[i] for i in range(2))

    def times(c, A):
        return tuple(tuple(c * x for x in row) for row in A)

    Pi = block(Z2, times(p, J1), J1, Z2)
    P = block(Z2, I2, I2, Z2)
    F = block(Z2, I2, times(p, I2), Z2) if perturb else block(Z2, times(p, I2), I2, Z2)
    return Pi, P, F


@dataclass(frozen=True)
class DieudonneCheck:
    ok: bool
    failed: str = None
    # (identity, passed) in the order checked
    checks: tuple = ()
    lie_type: tuple = None

    def __bool__(self):
        return self.ok


def dieudonne_matrix_check(p, K, perturb=False):
    """Verify the explicit Dieudonne data modulo p^K.

    F is sigma-linear, so the matrix of F o G is [F] sigma([G]); V is
    sigma^{-1}-linear with sigma([V]) = p [F]^{-1}.
    """
    if K < 2:
        raise ValidationError("precision K must be >= 2")
    R = TruncatedWittRing(p, K)
    Pi_z, P_z, F_z = dieudonne_data(p, perturb)

    def lift(A):
        return tuple(tuple(R.elem(x) for x in row) for row in A)

    Pi, P, F = lift(Pi_z), lift(P_z), lift(F_z)
    # sigma([V]) = p F^{-1} exactly in Q(x)/(f), then sigma^{-1} = sigma
    pFinv = [[(p * x[0], p * x[1]) for x in row] for row in _q_matrix_inverse(R, [[(x, 0) for x in row] for row in F_z])]
    try:
        V = R.mat_frob(tuple(tuple(R.from_quadratic(x) for x in row) for row in pFinv))
    except InvariantError:
        return DieudonneCheck(False, "V = p F^{-1} is integral", (("V = p F^{-1} is integral", False),))

    I4 = R.identity(4)
    sig = R.mat_frob
    mm = R.matmul

    def swaps_grading(A):
        return all(A[i][j] == (0, 0) for i in range(4) for j in range(4) if (i < 2) == (j < 2))

    def c_j(A, rows, cols):
        return R.valuation(R.det2(tuple(tuple(A[i][j] for j in cols) for i in rows)))

    lie = (c_j(V, (0, 1), (2, 3)), c_j(V, (2, 3), (0, 1)))
    tests = [
        ("sigma^2 = id and sigma = p-power mod p",
         lambda: all(R.frob(R.frob(x)) == x for x in (R.elem(0, 1), R.elem(3, 5)))
         and _frob_is_p_power(R)),
        ("Pi^2 = -p", lambda: mm(Pi, Pi) == R.scalar(-p, I4)),
        ("F∘Π = Π∘F", lambda: mm(F, sig(Pi)) == mm(Pi, F)),
        ("F, V, Pi swap M^0 and M^1", lambda: all(swaps_grading(A) for A in (F, V, Pi))),
        ("FV = VF = p", lambda: mm(F, sig(V)) == R.scalar(p, I4) and mm(V, sig(F)) == R.scalar(p, I4)),
        ("pairing symmetric", lambda: R.transpose(P) == P),
        ("pairing perfect", lambda: R.valuation(R.det(P)) == 0),
        ("M^0 and M^1 isotropic",
         lambda: all(P[i][j] == (0, 0) for i in range(4) for j in range(4) if (i < 2) == (j < 2))),
        ("(Πx,Πy) = p(x,y)", lambda: mm(mm(R.transpose(Pi), P), Pi) == R.scalar(p, P)),
        ("(Fx,y) = (x,Vy)^σ", lambda: mm(R.transpose(F), P) == sig(mm(P, V))),
        ("Lie type (2,0)", lambda: lie == (2, 0)),
    ]
    done = []
    for name, test in tests:
        passed = bool(test())
        done.append((name, passed))
        if not passed:
            return DieudonneCheck(False, name, tuple(done), lie)
    return DieudonneCheck(True, None, tuple(done), lie)


def _frob_is_p_power(R):
    x = R.elem(0, 1)
    acc = R.elem(1)
    for _ in range(R.p):
        acc = R.mul(acc, x)
    d = R.sub(acc, R.frob(x))
    return d[0] % R.p == 0 and d[1] % R.p == 0


def su2_residue_order(p):
    """#{A in GL_2(F_{p^2}) : conj(A)^T A = I, det A = 1}, by enumeration."""
    from .oracles.groups import enumerate_su2

    return enumerate_su2(p)
