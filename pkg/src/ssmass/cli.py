"""Command-line interface: ``ssmass <subcommand> ...``.

Exit codes: 0 success, 1 invalid input, 2 hypothesis refusal (or an
enumeration cap), 3 internal invariant failure.
"""
import argparse
import json
import sys
from fractions import Fraction

from sympy import factorint

from . import adlv, arith_data, groups_finite, local_lattices, mass, shimura_curve, verify
from .errors import HypothesisError, InvariantError, SSMassError, ValidationError
from .exact import RationalPolynomial, format_rational

EXIT_OK, EXIT_INVALID, EXIT_HYPOTHESIS, EXIT_INVARIANT = 0, 1, 2, 3


# --- formatting --------------------------------------------------------------

def _factor_string(n):
    if n in (0, 1, -1):
        return str(n)
    sign = "-" if n < 0 else ""
    return sign + " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(factorint(abs(n)).items()))


def _render(value, factor=False):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return f"{value} = {_factor_string(value)}" if factor and abs(value) > 1 else str(value)
    if isinstance(value, Fraction):
        text = format_rational(value)
        if factor and value.denominator != 1:
            text += f" = ({_factor_string(value.numerator)}) / ({_factor_string(value.denominator)})"
        elif factor and abs(value) > 1:
            text += f" = {_factor_string(value.numerator)}"
        return text
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_render(v)}" for k, v in value.items()) + "}"
    return str(value)


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        # integral values stay JSON integers, others become "a/b" strings
        return value.numerator if value.denominator == 1 else format_rational(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in (sorted(value) if isinstance(value, (set, frozenset)) else value)]
    return str(value)


def _emit(args, result, factors=None):
    """Print a result mapping; ``factors`` is a list of (name, value, tag)."""
    if args.output == "json":
        doc = {k: _jsonable(v) for k, v in result.items()}
        if factors is not None:
            doc["factors"] = [{"name": n, "value": _jsonable(v), "tag": t} for n, v, t in factors]
        print(json.dumps(doc, indent=2, sort_keys=True))
        return
    for key, value in result.items():
        print(f"{key}: {_render(value, args.factor)}")
    for name, value, tag in factors or ():
        print(f"  {name} = {_render(value, args.factor)}    [{tag}]")


# --- input -------------------------------------------------------------------

def _parse_pairs(text, default=1):
    """'2:1,3:0' or '2,3' -> [(2, 1), (3, 0)] / [(2, default), ...]."""
    out = []
    for item in filter(None, (t.strip() for t in (text or "").split(","))):
        try:
            if ":" in item:
                a, b = item.split(":", 1)
                out.append((int(a), int(b)))
            else:
                out.append((int(item), default))
        except ValueError:
            raise ValidationError(f"cannot read {item!r}; expected 'integer' or 'integer:integer'") from None
    return out


def _parse_ints(text):
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ValidationError(f"cannot read {text!r}; expected comma-separated integers") from None


def _parse_rationals(text):
    try:
        return tuple(Fraction(z.strip()) for z in text.split(",") if z.strip())
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"cannot read {text!r}; expected rationals such as -1/12") from None


def _add_deck_args(p):
    p.add_argument("--input", help="JSON input deck")
    p.add_argument("--m", type=int, help="rank m (inline deck, F = Q unless --inertia is given)")
    p.add_argument("--N", type=int, help="level N")
    p.add_argument("--p", type=int, help="the prime p")
    p.add_argument("--ramified", default="", help="ramified primes of B as 'prime:parity,...'")
    p.add_argument("--inertia", help="inertia degrees f_v of the places over p, e.g. '2' or '1,2'")
    p.add_argument("--zeta", help="zeta_F(1-2j) for j = 1..m as 'num/den,...'")
    p.add_argument("--g-order", type=int, help="override |G(Z/NZ)|")


def _deck(args):
    if args.input:
        return arith_data.load_deck(args.input)
    missing = [flag for flag, val in (("--m", args.m), ("--N", args.N), ("--p", args.p)) if val is None]
    if missing:
        raise ValidationError([f"missing {flag} (or give --input)" for flag in missing])
    fd = arith_data.FieldDatum(1)
    if args.inertia or args.zeta:
        fs = _parse_ints(args.inertia) if args.inertia else (1,)
        places = {args.p: tuple(arith_data.LocalPlace(args.p, f) for f in fs)}
        zeta = _parse_rationals(args.zeta) if args.zeta else None
        fd = arith_data.FieldDatum(sum(fs), places, zeta)
    ram = tuple(arith_data.RamifiedPlace(ell, 0, e) for ell, e in _parse_pairs(args.ramified))
    inp = arith_data.PELInput(fd, arith_data.QuaternionDatum(ram), args.m, args.N, args.p, args.g_order)
    if fd.degree > 1 and ram:
        raise ValidationError("inline decks with d > 1 cannot name ramified places; use --input")
    return inp


# --- subcommands -------------------------------------------------------------

def cmd_existence(args):
    inp = _deck(args)
    arith_data.ensure_valid(inp)
    exists = arith_data.self_dual_exists(inp)
    _emit(args, {"self_dual_exists": exists,
                 "reason": "m even" if inp.m % 2 == 0 else
                 ("gamma has odd valuation at every ramified place" if exists else
                  "m odd and gamma has even valuation at some ramified place")})


def cmd_delta_prime(args):
    inp = _deck(args)
    places = arith_data.delta_prime(inp)
    _emit(args, {"delta_prime": sorted(places), "size": len(places)})


def _read_gram(args):
    text = args.gram
    if args.gram_file:
        with open(args.gram_file) as fh:
            text = fh.read()
    if text is None:
        raise ValidationError("give --gram or --gram-file")
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"Gram matrix is not valid JSON: {exc.msg}") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValidationError("Gram matrix must be a JSON array of rows")
    try:
        return [[Fraction(str(x)) for x in r] for r in rows]
    except (ValueError, ZeroDivisionError):
        raise ValidationError('Gram entries must be rationals such as "1/2"') from None


def cmd_lattice(args):
    if args.lattice_cmd == "symplectic-nf":
        gram = local_lattices.AlternatingGram(_read_gram(args), args.prime)
        res = local_lattices.symplectic_divisors(gram)
        ok = local_lattices.verify_certificate(gram, res)
        if not ok:
            raise InvariantError("symplectic certificate failed")
        _emit(args, {"d": list(res.d), "basis": [list(r) for r in res.basis], "certificate": ok})
        return
    out = {}
    if args.rank is not None:
        idx = args.index if args.ord_gamma is None else \
            local_lattices.skew_to_hermitian_index(args.index, args.ord_gamma)
        exists = local_lattices.modular_exists(args.rank, idx)
        out["hermitian_index"] = idx
        out["modular_exists"] = exists
        if exists:
            out["normal_form"] = local_lattices.modular_normal_form(args.rank, idx).describe()
    if args.ranks:
        J = local_lattices.JordanType(dict(_parse_pairs(args.ranks)))
        if args.scale:
            J = local_lattices.scale_by_Pi(J, args.scale)
        out["type"] = J.describe()
        out["ranks"] = J.ranks
        out["dual"] = local_lattices.hermitian_dual(J).describe()
        if args.modular_index is not None:
            out["is_modular"] = local_lattices.is_Pi_modular(J, args.modular_index)
        try:
            out["parahoric_c"] = local_lattices.parahoric_index(J)
        except ValidationError:
            pass
    if not out:
        raise ValidationError("give --ranks and/or --rank with --index")
    _emit(args, out)


def cmd_group_order(args):
    kind = args.kind
    if kind in ("sp", "u"):
        if args.n is None or args.q is None:
            raise ValidationError("--kind sp/u needs --n and --q")
        fn = groups_finite.order_sp if kind == "sp" else groups_finite.order_u
        _emit(args, {"order": fn(args.n, args.q)})
    elif kind == "gsp-modN":
        if args.g is None or args.N is None:
            raise ValidationError("--kind gsp-modN needs --g and --N")
        _emit(args, {"order": groups_finite.order_gsp_modN(args.g, args.N)})
    else:
        report = groups_finite.order_G_modN(_deck(args))
        _emit(args, {"order": report.order, "factorization": report.factorization},
              [("factor", f, tag) for f, tag in report.formula_trace])


def _adlv_shape(args):
    if args.shape:
        return adlv.Shape(_parse_ints(args.shape), args.m)
    return adlv.shape_of(_deck(args))


def cmd_adlv_count(args):
    shape = _adlv_shape(args)
    out = {"shape": list(shape.f), "m": shape.m}
    if args.method in ("closed", "both"):
        out["closed"] = adlv.components_closed(shape)
    if args.method in ("enum", "both"):
        out["enum"] = adlv.components_enum(shape)
    _emit(args, out)
    if args.method == "both" and out["closed"] != out["enum"]:
        raise InvariantError(f"closed form {out['closed']} != enumeration {out['enum']}")


def _report_factors(report):
    return [(name, value, tag) for name, value, tag in report.factors]


def cmd_components(args):
    report = mass.count_components(_deck(args))
    _emit(args, {"components": report.count}, _report_factors(report))


def cmd_superspecial(args):
    report = mass.count_superspecial(_deck(args))
    _emit(args, {"superspecial": report.count}, _report_factors(report))


def cmd_mass(args):
    if args.parahoric:
        m, c, q = args.parahoric
        value = mass.lambda_parahoric(m, c, RationalPolynomial.x() if q == 0 else q)
        _emit(args, {"lambda_parahoric": value, "max_volume_c": mass.max_volume_c(m)})
        return
    report = mass.mass_I1(_deck(args))
    factors = [("sign exponent", report.sign_exponent, "d m (m+1) / 2"),
               ("zeta part", report.zeta_part, "prod_{j<=m} zeta_F(1-2j)")]
    factors += [(f"lambda_{place}", v, tag) for place, v, tag in report.local_factors]
    _emit(args, {"mass": report.mass}, factors)


def cmd_dimension(args):
    _emit(args, {"dimension": mass.supersingular_dimension(_deck(args))})


def cmd_siegel(args):
    counts = mass.siegel_counts(args.g, args.N, args.p)
    _emit(args, {"superspecial": counts.superspecial, "components": counts.components,
                 "dimension": counts.dim, "C(g,N)": mass.siegel_constant(args.g, args.N),
                 "sign_convention": mass.SIEGEL_SIGN_CONVENTION})


def cmd_curve(args):
    if args.curve_cmd == "check-dieudonne":
        res = shimura_curve.dieudonne_matrix_check(args.p, args.K, perturb=args.perturb)
        _emit(args, {"ok": res.ok, "failed": res.failed or "none", "lie_type": res.lie_type},
              [(name, ok, "identity") for name, ok in res.checks])
        if not res.ok:
            raise InvariantError(f"identity failed: {res.failed}")
        return
    inp = shimura_curve.CurveInput(tuple(_parse_pairs(args.delta)), args.p, args.N)
    if args.curve_cmd == "mass":
        _emit(args, {"S": sorted(shimura_curve.appendix_S(inp)), "mass": shimura_curve.curve_mass(inp)})
    else:
        res = shimura_curve.curve_component_count(inp, args.g_order)
        _emit(args, {"components": res.count, "|G(Z/NZ)|": res.g_order, "flags": list(res.flags)})


def cmd_verify(args):
    outcomes = verify.run(args.level)
    if args.output == "json":
        print(json.dumps([{"name": o.name, "ok": o.ok, "detail": o.detail} for o in outcomes], indent=2))
    else:
        for o in outcomes:
            print(f"{'PASS' if o.ok else 'FAIL'}  {o.name}: {o.detail}")
    if not all(o.ok for o in outcomes):
        raise InvariantError("verification battery failed")


# --- parser ------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input, not hypothesis refusals
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="ssmass", description=__doc__.splitlines()[0])
    parser.add_argument("--output", choices=("plain", "json", "factored"), default="plain",
                        help="factored is plain output with prime factorizations")
    parser.add_argument("--factor", action="store_true", help="print prime factorizations")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("existence", cmd_existence, "does a self-dual lattice exist"),
        ("delta-prime", cmd_delta_prime, "ramified places of D"),
        ("components", cmd_components, "irreducible components of the supersingular locus"),
        ("superspecial", cmd_superspecial, "size of the superspecial locus"),
        ("dimension", cmd_dimension, "dimension of the supersingular locus"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_deck_args(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("mass", help="Mass(I^1, U^1), or a parahoric lambda with --parahoric")
    _add_deck_args(p)
    p.add_argument("--parahoric", type=int, nargs=3, metavar=("M", "C", "Q"),
                   help="lambda(P_c) for rank M at residue size Q (Q = 0 prints the polynomial)")
    p.set_defaults(func=cmd_mass)

    p = sub.add_parser("lattice", help="local lattice normal forms")
    lsub = p.add_subparsers(dest="lattice_cmd", required=True)
    sp = lsub.add_parser("symplectic-nf", help="elementary divisors of an alternating Gram matrix")
    sp.add_argument("--gram", help='JSON rows, e.g. [["0","1"],["-1","0"]]')
    sp.add_argument("--gram-file")
    sp.add_argument("--prime", type=int, required=True)
    jp = lsub.add_parser("jordan", help="Hermitian Jordan types over a quaternion order")
    jp.add_argument("--ranks", help="Jordan type as 'index:rank,...'")
    jp.add_argument("--scale", type=int, default=0, help="multiply by Pi^k first")
    jp.add_argument("--modular-index", type=int)
    jp.add_argument("--rank", type=int, help="rank for the existence question")
    jp.add_argument("--index", type=int, default=0)
    jp.add_argument("--ord-gamma", type=int, help="treat --index as skew-Hermitian with this ord(gamma)")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("group-order", help="finite group orders")
    p.add_argument("--kind", choices=("sp", "u", "gsp-modN", "G-modN"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--g", type=int)
    _add_deck_args(p)
    p.set_defaults(func=cmd_group_order)

    p = sub.add_parser("adlv-count", help="components of X_mu(b) modulo J_b")
    p.add_argument("--method", choices=("closed", "enum", "both"), default="both")
    p.add_argument("--shape", help="inertia degrees of the places over p, e.g. '2,3'")
    _add_deck_args(p)
    p.set_defaults(func=cmd_adlv_count)

    p = sub.add_parser("siegel", help="Siegel modular variety counts")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_siegel)

    p = sub.add_parser("curve", help="Shimura curves with p | Delta")
    csub = p.add_subparsers(dest="curve_cmd", required=True)
    for name in ("mass", "components"):
        cp = csub.add_parser(name)
        cp.add_argument("--delta", required=True, help="'prime:parity,...'")
        cp.add_argument("--p", type=int, required=True)
        cp.add_argument("--N", type=int)
        cp.add_argument("--g-order", type=int, help="use this |G(Z/NZ)|")
    cp = csub.add_parser("check-dieudonne")
    cp.add_argument("--p", type=int, required=True)
    cp.add_argument("--K", type=int, default=3)
    cp.add_argument("--perturb", action="store_true", help="swap the blocks of [F]")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("verify", help="run the oracle battery")
    p.add_argument("--level", choices=("fast", "full"), default="fast")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, usage errors exit EXIT_INVALID
        return exc.code
    if args.output == "factored":
        args.output, args.factor = "plain", True
    try:
        args.func(args)
    except ValidationError as exc:
        for v in exc.violations:
            print(f"invalid input: {v}", file=sys.stderr)
        return EXIT_INVALID
    except HypothesisError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except SSMassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def main():
    sys.exit(run())
