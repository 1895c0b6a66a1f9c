"""Exact rationals, Bernoulli numbers, zeta values at negative odd integers,
and dense univariate polynomials over Q.

``fractions.Fraction`` is the rational carrier throughout the package; it is
always normalised and never rounds.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = [
    "Fraction",
    "as_fraction",
    "bernoulli",
    "zeta_neg",
    "RationalPolynomial",
    "poly_div_exact",
    "format_rational",
]


def as_fraction(value):
    """Coerce an int, Fraction, or ``"num/den"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(x):
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def bernoulli(n):
    """Return B_n with the convention B_1 = -1/2.

    Uses the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0.
    """
    if n < 0:
        raise ValueError("bernoulli index must be nonnegative")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2 == 1:
        return Fraction(0)
    total = sum(comb(n + 1, k) * bernoulli(k) for k in range(n))
    return -total / (n + 1)


def zeta_neg(j):
    """Riemann zeta at 1 - 2j, i.e. -B_{2j} / (2j)."""
    if j < 1:
        raise ValueError("zeta_neg needs j >= 1")
    return -bernoulli(2 * j) / (2 * j)


class RationalPolynomial:
    """Dense polynomial in one variable with Fraction coefficients.

    Coefficients are indexed by degree; trailing zeros are trimmed so the zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalPolynomial((other,))
        return NotImplemented

    @property
    def degree(self):
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def has_integer_coefficients(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __call__(self, value):
        value = as_fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = RationalPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, den):
        """Long division; returns (quotient, remainder)."""
        den = self._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(den.coeffs) + 1, 0)
        lead = den.leading()
        for shift in range(len(q) - 1, -1, -1):
            c = rem[shift + den.degree] / lead
            q[shift] = c
            if c:
                for k, d in enumerate(den.coeffs):
                    rem[shift + k] -= c * d
        return RationalPolynomial(q), RationalPolynomial(rem)

    def __repr__(self):
        return f"RationalPolynomial({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for deg in range(self.degree, -1, -1):
            c = self.coeffs[deg]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if deg == 0:
                body = format_rational(mag)
            else:
                mono = "q" if deg == 1 else f"q^{deg}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_div_exact(num, den):
    """Return num / den when the division is exact, otherwise None."""
    quotient, remainder = RationalPolynomial._coerce(num).divmod(den)
    if not remainder.is_zero():
        return None
    return quotient
