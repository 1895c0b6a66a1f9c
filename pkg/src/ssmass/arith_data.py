"""Global input data: the totally real field, the quaternion algebra, and the
rank / level / prime parameters, plus the invariants derived from them.

Only the local shape of F at the primes a computation touches is stored
(degree, and e_v, f_v for places over those primes).  Dedekind zeta values
for d > 1 are supplied by the user.
"""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from sympy import isprime

from .errors import DeckError, HypothesisError, ValidationError
from .exact import as_fraction, zeta_neg

__all__ = [
    "LocalPlace",
    "FieldDatum",
    "RamifiedPlace",
    "QuaternionDatum",
    "PELInput",
    "validate",
    "ensure_valid",
    "check_p_gate",
    "self_dual_exists",
    "delta_prime",
    "parse_deck",
    "load_deck",
    "deck_to_json",
]


@dataclass(frozen=True)
class LocalPlace:
    residue_char: int
    inertia_f: int = 1
    ram_e: int = 1

    @property
    def q(self):
        return self.residue_char ** self.inertia_f


@dataclass(frozen=True)
class FieldDatum:
    degree: int = 1
    # prime -> places of F above it; only primes that matter need entries
    places: dict = field(default_factory=dict)
    zeta_values: tuple = None

    def places_over(self, ell):
        """Places of F over ell, indexed as in the deck."""
        if ell in self.places:
            return tuple(self.places[ell])
        if self.degree == 1:
            return (LocalPlace(ell, 1, 1),)
        raise HypothesisError(
            f"no local data for the places of F over {ell}; add it to field.places"
        )

    def place(self, ell, index):
        return self.places_over(ell)[index]

    def zeta(self, j):
        """zeta_F(1 - 2j)."""
        if self.zeta_values is not None:
            if j > len(self.zeta_values):
                raise HypothesisError(
                    f"zeta_F(1-2j) needed for j={j} but only "
                    f"{len(self.zeta_values)} values were supplied"
                )
            return self.zeta_values[j - 1]
        if self.degree == 1:
            return zeta_neg(j)
        raise HypothesisError(
            "zeta_F(1-2j) for a field of degree > 1 must be supplied as field.zeta_values"
        )


@dataclass(frozen=True)
class RamifiedPlace:
    prime: int
    index: int = 0
    gamma_parity: int = 1

    @property
    def key(self):
        return (self.prime, self.index)


@dataclass(frozen=True)
class QuaternionDatum:
    ramified: tuple = ()

    def parity_at(self, prime, index=0):
        for r in self.ramified:
            if r.key == (prime, index):
                return r.gamma_parity
        return None

    def keys(self):
        return frozenset(r.key for r in self.ramified)


@dataclass(frozen=True)
class PELInput:
    field: FieldDatum
    quat: QuaternionDatum
    m: int
    N: int
    p: int
    # used in place of the computed |G(Z/NZ)| when supplied
    g_order_override: int = None

    @classmethod
    def over_Q(cls, ramified=(), m=1, N=3, p=5, g_order_override=None):
        """Convenience constructor for F = Q.

        ``ramified`` is an iterable of primes (parity 1) or (prime, parity) pairs.
        """
        places = []
        for r in ramified:
            if isinstance(r, tuple):
                places.append(RamifiedPlace(r[0], 0, r[1]))
            else:
                places.append(RamifiedPlace(r, 0, 1))
        return cls(FieldDatum(1), QuaternionDatum(tuple(places)), m, N, p, g_order_override)

    def places_over_p(self):
        return self.field.places_over(self.p)


def validate(inp):
    """Return a list of violated invariants; empty means valid."""
    out = []
    fd = inp.field
    if not isinstance(fd.degree, int) or fd.degree < 1:
        out.append("field degree must be a positive integer")
    for ell, places in fd.places.items():
        if not isprime(ell):
            out.append(f"field.places key {ell} is not prime")
        for v in places:
            if v.inertia_f < 1 or v.ram_e < 1:
                out.append(f"place over {ell}: e and f must be >= 1")
        if sum(v.ram_e * v.inertia_f for v in places) != fd.degree:
            out.append(f"places over {ell}: sum of e*f must equal the degree {fd.degree}")
        if fd.degree == 1 and [(v.ram_e, v.inertia_f) for v in places] != [(1, 1)]:
            out.append(f"F = Q has exactly one place over {ell} with e = f = 1")
    if fd.zeta_values is not None:
        for j, z in enumerate(fd.zeta_values, start=1):
            if z == 0:
                out.append(f"zeta value for j={j} is zero")

    ram = inp.quat.ramified
    if len(ram) % 2:
        out.append("ramified count odd")
    if len({r.key for r in ram}) != len(ram):
        out.append("duplicate ramified place")
    for r in ram:
        if r.gamma_parity not in (0, 1):
            out.append(f"gamma_parity at {r.prime} must be 0 or 1")
        if not isprime(r.prime):
            out.append(f"ramified prime {r.prime} is not prime")
            continue
        if r.prime in fd.places:
            if not 0 <= r.index < len(fd.places[r.prime]):
                out.append(f"ramified place ({r.prime}, {r.index}) is not a declared place")
        elif fd.degree == 1:
            if r.index != 0:
                out.append(f"ramified place ({r.prime}, {r.index}) is not a place of Q")
        else:
            out.append(f"ramified place over {r.prime} has no local data in field.places")

    if not isinstance(inp.m, int) or inp.m < 1:
        out.append("m must be a positive integer")
    if not isinstance(inp.N, int) or inp.N < 3:
        out.append("N must be an integer >= 3")
    if not isinstance(inp.p, int) or not isprime(inp.p):
        out.append("p must be prime")
    elif isinstance(inp.N, int) and gcd(inp.p, inp.N) != 1:
        out.append("gcd(p,N) ≠ 1")
    if inp.g_order_override is not None and inp.g_order_override < 1:
        out.append("G_order_modN override must be a positive integer")
    return out


def ensure_valid(inp):
    violations = validate(inp)
    if violations:
        raise ValidationError(violations)


def check_p_gate(inp):
    """Refuse unless p > 2 is unramified in B (and hence in F)."""
    ensure_valid(inp)
    p = inp.p
    if p == 2:
        raise HypothesisError("hypothesis violated: p > 2 is unramified in B (here p = 2)")
    for idx, v in enumerate(inp.places_over_p()):
        if v.ram_e != 1:
            raise HypothesisError(
                f"hypothesis violated: p > 2 is unramified in B "
                f"(place ({p}, {idx}) is ramified in F/Q, e = {v.ram_e})"
            )
        if (p, idx) in inp.quat.keys():
            raise HypothesisError(
                f"hypothesis violated: p > 2 is unramified in B "
                f"(B is ramified at the place ({p}, {idx}) over p)"
            )


def self_dual_exists(inp):
    """Whether a self-dual O_B-lattice of rank m exists.

    True iff m is even or gamma has odd valuation at every ramified place.
    """
    return inp.m % 2 == 0 or all(r.gamma_parity == 1 for r in inp.quat.ramified)


def delta_prime(inp):
    """Finite ramification set of D, where B (x) D_{p,inf} = Mat_2(D).

    Away from p, D and B ramify at the same places; at v | p (B split there)
    D ramifies iff f_v is odd.  Returned as a frozenset of (prime, index).
    """
    check_p_gate(inp)
    out = {r.key for r in inp.quat.ramified if r.prime != inp.p}
    for idx, v in enumerate(inp.places_over_p()):
        if v.inertia_f % 2 == 1:
            out.add((inp.p, idx))
    return frozenset(out)


# --- JSON input deck -------------------------------------------------------

def _expect(cond, path, expected):
    if not cond:
        raise DeckError(path, expected)


def _int_at(obj, key, path, minimum=None):
    _expect(key in obj, f"{path}.{key}", "a required integer")
    val = obj[key]
    _expect(isinstance(val, int) and not isinstance(val, bool), f"{path}.{key}", "an integer")
    if minimum is not None:
        _expect(val >= minimum, f"{path}.{key}", f"an integer >= {minimum}")
    return val


def parse_deck(doc):
    """Build a PELInput from a decoded JSON deck.

    Schema::

        {"field": {"degree": 1,
                   "places": {"<prime>": [{"e": 1, "f": 1}, ...]},
                   "zeta_values": ["-1/12", ...]},          # optional
         "quaternion": {"ramified": [{"prime": 2, "place_index": 0,
                                      "gamma_parity": 1}, ...]},
         "m": 1, "N": 3, "p": 7,
         "G_order_modN": 48}                                 # optional
    """
    _expect(isinstance(doc, dict), "$", "a JSON object")
    fdoc = doc.get("field", {"degree": 1})
    _expect(isinstance(fdoc, dict), "$.field", "an object with key 'degree'")
    degree = _int_at(fdoc, "degree", "$.field", minimum=1)
    places = {}
    pdoc = fdoc.get("places", {})
    _expect(isinstance(pdoc, dict), "$.field.places", 'an object mapping "<prime>" to a list of {e, f}')
    for key, lst in pdoc.items():
        path = f"$.field.places.{key}"
        _expect(key.isdigit(), path, "a decimal prime as the key")
        _expect(isinstance(lst, list) and lst, path, "a nonempty list of {e, f} objects")
        local = []
        for i, entry in enumerate(lst):
            _expect(isinstance(entry, dict), f"{path}[{i}]", "an object {e, f}")
            local.append(LocalPlace(int(key), _int_at(entry, "f", f"{path}[{i}]", 1),
                                    _int_at(entry, "e", f"{path}[{i}]", 1)))
        places[int(key)] = tuple(local)
    zeta = None
    if "zeta_values" in fdoc:
        zdoc = fdoc["zeta_values"]
        _expect(isinstance(zdoc, list), "$.field.zeta_values", 'a list of rationals as "num/den" strings')
        zeta = []
        for i, z in enumerate(zdoc):
            try:
                zeta.append(as_fraction(z))
            except (TypeError, ValueError, ZeroDivisionError):
                raise DeckError(f"$.field.zeta_values[{i}]", 'a rational such as "-1/12"') from None
        zeta = tuple(zeta)

    qdoc = doc.get("quaternion", {"ramified": []})
    _expect(isinstance(qdoc, dict), "$.quaternion", "an object with key 'ramified'")
    rdoc = qdoc.get("ramified", [])
    _expect(isinstance(rdoc, list), "$.quaternion.ramified", "a list of {prime, place_index, gamma_parity}")
    ramified = []
    for i, entry in enumerate(rdoc):
        path = f"$.quaternion.ramified[{i}]"
        _expect(isinstance(entry, dict), path, "an object {prime, place_index, gamma_parity}")
        index = _int_at(entry, "place_index", path, 0) if "place_index" in entry else 0
        ramified.append(RamifiedPlace(
            _int_at(entry, "prime", path, 2),
            index,
            _int_at(entry, "gamma_parity", path, 0),
        ))
    override = None
    if "G_order_modN" in doc:
        override = _int_at(doc, "G_order_modN", "$", 1)
    return PELInput(
        FieldDatum(degree, places, zeta),
        QuaternionDatum(tuple(ramified)),
        _int_at(doc, "m", "$", 1),
        _int_at(doc, "N", "$"),
        _int_at(doc, "p", "$"),
        override,
    )


def load_deck(path):
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DeckError("$", f"valid JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_deck(doc)


def deck_to_json(inp):
    fd = inp.field
    doc = {
        "field": {
            "degree": fd.degree,
            "places": {str(ell): [{"e": v.ram_e, "f": v.inertia_f} for v in vs]
                       for ell, vs in fd.places.items()},
        },
        "quaternion": {"ramified": [
            {"prime": r.prime, "place_index": r.index, "gamma_parity": r.gamma_parity}
            for r in inp.quat.ramified
        ]},
        "m": inp.m,
        "N": inp.N,
        "p": inp.p,
    }
    if fd.zeta_values is not None:
        doc["field"]["zeta_values"] = [str(Fraction(z)) for z in fd.zeta_values]
    if inp.g_order_override is not None:
        doc["G_order_modN"] = inp.g_order_override
    return doc
