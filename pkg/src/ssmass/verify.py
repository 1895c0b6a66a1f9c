"""Oracle batteries: every closed form against an independent computation.

``run(level)`` returns a list of Outcome records.  The fast level finishes in
well under a minute; the full level adds the 2^20-scale enumerations and the
randomized integrality battery (fixed seed ``BATTERY_SEED``).
"""
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from sympy import primerange

from . import adlv, groups_finite, mass, shimura_curve
from .arith_data import PELInput, delta_prime, self_dual_exists
from .errors import SSMassError
from .exact import RationalPolynomial, bernoulli, zeta_neg
from .local_lattices import JordanType, is_Pi_modular, modular_exists, modular_normal_form
from .oracles import (
    bernoulli_akiyama_tanigawa,
    brauer_delta_prime,
    eichler_mass,
    enumerate_gl2_mod,
    enumerate_group_order,
    gram_model_is_modular,
    weyl_assignment_count,
)

__all__ = ["Outcome", "BATTERY_SEED", "random_valid_inputs", "run"]

BATTERY_SEED = 20240501


@dataclass(frozen=True)
class Outcome:
    name: str
    ok: bool
    detail: str
    seconds: float


def _check(name, fn):
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except SSMassError as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Outcome(name, bool(ok), detail, time.perf_counter() - start)


def random_valid_inputs(count=200, seed=BATTERY_SEED):
    """Valid F = Q decks with m <= 3, |Delta| in {0, 2, 4}, N in {3, 4, 5}, 2 < p <= 23."""
    rng = random.Random(seed)
    primes = list(primerange(2, 30))
    out = []
    while len(out) < count:
        m = rng.randint(1, 3)
        N = rng.choice((3, 4, 5))
        p = rng.choice([q for q in primes if 2 < q <= 23 and N % q])
        size = rng.choice((0, 2, 4))
        ram = rng.sample([q for q in primes if q != p], size)
        ramified = [(ell, 1 if m % 2 else rng.randint(0, 1)) for ell in sorted(ram)]
        inp = PELInput.over_Q(ramified=ramified, m=m, N=N, p=p)
        if self_dual_exists(inp):
            out.append(inp)
    return out


# --- individual checks -------------------------------------------------------

def _zeta():
    bad = [n for n in range(61) if bernoulli(n) != bernoulli_akiyama_tanigawa(n)]
    pinned = (zeta_neg(1), zeta_neg(2), zeta_neg(3)) == (Fraction(-1, 12), Fraction(1, 120), Fraction(-1, 252))
    return not bad and pinned, f"bernoulli mismatches at {bad}" if bad else "B_0..B_60 agree; zeta(-1,-3,-5) pinned"


GROUP_CASES = [("sp", 1, 2), ("sp", 1, 3), ("sp", 1, 5), ("sp", 2, 2), ("u", 1, 2), ("u", 1, 3), ("u", 2, 2)]


def _groups():
    rows = []
    for kind, n, q in GROUP_CASES:
        closed = (groups_finite.order_sp if kind == "sp" else groups_finite.order_u)(n, q)
        rows.append((f"{kind}({n},{q})", closed, enumerate_group_order(kind, n, q)))
    for N in (3, 4):
        rows.append((f"GL2(Z/{N})", groups_finite.order_gsp_modN(1, N), enumerate_gl2_mod(N)))
    bad = [r for r in rows if r[1] != r[2]]
    return not bad, "; ".join(f"{a}: {b} vs {c}" for a, b, c in bad) or f"{len(rows)} orders agree"


ADLV_SHAPES = [(1,), (2,), (3,), (4,), (1, 1), (1, 2), (2, 2), (2, 3)]


def _adlv(shapes=ADLV_SHAPES, ms=(1, 2, 3)):
    bad = []
    for f in shapes:
        for m in ms:
            s = adlv.Shape(f, m)
            triple = (adlv.components_closed(s), adlv.components_enum(s), weyl_assignment_count(f, m))
            if len(set(triple)) != 1:
                bad.append((f, m, triple))
    return not bad, str(bad) if bad else f"{len(shapes) * len(ms)} shapes agree"


def _lambda():
    q = RationalPolynomial.x()
    problems = []
    for m in range(1, 7):
        for c in range(m // 2 + 1):
            if not mass.lambda_parahoric(m, c, q).has_integer_coefficients():
                problems.append(f"m={m} c={c} not integral")
        best = mass.max_volume_c(m)
        for qq in (2, 3, 4, 5, 7):
            vals = {c: mass.lambda_parahoric(m, c, qq) for c in range(m // 2 + 1)}
            low = min(vals.values())
            if [c for c, v in vals.items() if v == low] != [best]:
                problems.append(f"argmin m={m} q={qq}")
    return not problems, "; ".join(problems) or "polynomial and argmin for m <= 6"


def _modular_curve():
    rows = []
    for p in (7, 11, 13):
        inp = PELInput.over_Q(m=1, N=3, p=p)
        rows.append((p, mass.count_components(inp).count, 2 * (p - 1),
                     eichler_mass(p), Fraction(p - 1, 24), mass.mass_I1(inp).mass))
    bad = [r for r in rows if r[1] != r[2] or not r[3] == r[4] == r[5]]
    return not bad, str(bad) if bad else "counts 12, 20, 24 and Eichler masses agree"


def _siegel():
    bad = []
    for g in range(1, 5):
        for p in (5, 7, 11, 13):
            for N in (3, 4, 5):
                if N % p == 0:
                    continue
                sc = mass.siegel_counts(g, N, p)
                inp = PELInput.over_Q(m=g, N=N, p=p)
                got = (mass.count_superspecial(inp).count, mass.count_components(inp).count)
                if got != (sc.superspecial, sc.components):
                    bad.append((g, p, N))
    q = RationalPolynomial.x()
    for m in range(1, 7):
        if m % 2:
            theirs = RationalPolynomial((1,))
            for i in range(1, m + 1):
                theirs = theirs * (q ** i + (-1) ** i)
        else:
            theirs = RationalPolynomial((1,))
            for i in range(1, m // 2 + 1):
                theirs = theirs * (q ** (4 * i - 2) - 1)
        if mass.lambda_component(m, q, True) != theirs:
            bad.append(("lambda", m))
    return not bad, str(bad) if bad else "g <= 4 specialization and lambda identity hold"


def _lattices():
    bad = []
    for n in range(1, 9):
        for i in range(-8, 9):
            if modular_exists(n, i) != (n % 2 == 0 or i % 2 == 0):
                bad.append((n, i))
            elif modular_exists(n, i):
                J = modular_normal_form(n, i)
                if not (is_Pi_modular(J, i) and gram_model_is_modular(J, i)):
                    bad.append(("model", n, i))
    J = JordanType({0: 2, 2: 2})
    if any(is_Pi_modular(J, i) or gram_model_is_modular(J, i) for i in range(-4, 5)):
        bad.append("H(0)+H(2)")
    return not bad, str(bad) if bad else "modularity dichotomy n <= 8, |i| <= 8"


def _delta_prime():
    bad = []
    for inp in random_valid_inputs(40, seed=BATTERY_SEED + 1):
        f_map = {idx: v.inertia_f for idx, v in enumerate(inp.places_over_p())}
        oracle = brauer_delta_prime(inp.quat.keys(), inp.p, f_map)
        got = delta_prime(inp)
        if got != oracle or (len(got) + inp.field.degree) % 2:
            bad.append(inp)
    return not bad, f"{len(bad)} mismatches" if bad else "40 decks match the Brauer sum"


def _curves():
    C = shimura_curve.CurveInput
    problems = []
    if shimura_curve.curve_mass(C([(2, 0), (13, 1)], 2)) != 1:
        problems.append("mass {2,13}")
    if shimura_curve.curve_mass(C([(2, 0), (3, 1)], 2)) != Fraction(1, 6):
        problems.append("mass {2,3}")
    for p in (2, 3, 5):
        if not shimura_curve.dieudonne_matrix_check(p, 3):
            problems.append(f"dieudonne p={p}")
        if shimura_curve.dieudonne_matrix_check(p, 3, perturb=True):
            problems.append(f"negative control p={p}")
        if shimura_curve.su2_residue_order(p) != p * (p * p - 1):
            problems.append(f"su2 p={p}")
    return not problems, "; ".join(problems) or "curve masses, Dieudonne data and SU_2 orders"


def _dimension():
    from .arith_data import FieldDatum, LocalPlace, QuaternionDatum

    def deck(fs, m):
        fd = FieldDatum(sum(fs), {7: tuple(LocalPlace(7, f) for f in fs)})
        return PELInput(fd, QuaternionDatum(), m, 3, 7)

    cases = [((1,), 1, 0), ((1,), 2, 1), ((2,), 2, 3), ((3,), 3, 8)]
    bad = [c for c in cases if mass.supersingular_dimension(deck(c[0], c[1])) != c[2]]
    return not bad, str(bad) if bad else "four hand-evaluated cases"


def _battery(count=200):
    bad = []
    for inp in random_valid_inputs(count):
        try:
            ok = (mass.mass_I1(inp).mass > 0 and mass.count_components(inp).count > 0
                  and mass.count_superspecial(inp).count > 0)
        except SSMassError as exc:
            ok = False
            inp = (inp, str(exc))
        if not ok:
            bad.append(inp)
    return not bad, f"{len(bad)} failures, first {bad[0]}" if bad else f"{count} random decks integral and positive"


def _big_enumerations():
    rows = [("GL2(Z/32)", groups_finite.order_gsp_modN(1, 32), enumerate_gl2_mod(32)),
            ("gsp(1,4)", 3 * groups_finite.order_sp(1, 4), enumerate_group_order("gsp", 1, 4)),
            ("adlv (2,3) m=4", adlv.components_closed(adlv.Shape((2, 3), 4)),
             adlv.components_enum(adlv.Shape((2, 3), 4)))]
    bad = [r for r in rows if r[1] != r[2]]
    return not bad, str(bad) if bad else "2^20-scale enumerations agree"


FAST = [
    ("zeta values", _zeta),
    ("group orders", _groups),
    ("adlv counts", _adlv),
    ("lambda polynomiality and argmin", _lambda),
    ("modular curve", _modular_curve),
    ("siegel specialization", _siegel),
    ("lattice existence", _lattices),
    ("delta prime", _delta_prime),
    ("shimura curves", _curves),
    ("dimension", _dimension),
]

FULL = FAST + [
    ("randomized battery", _battery),
    ("large enumerations", _big_enumerations),
]


def run(level="fast"):
    if level not in ("fast", "full"):
        raise ValueError("level must be 'fast' or 'full'")
    return [_check(name, fn) for name, fn in (FAST if level == "fast" else FULL)]
