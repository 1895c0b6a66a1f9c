# Supersingular points on the level-3 modular curve, three ways.
from fractions import Fraction

from ssmass import PELInput, count_components, count_superspecial, mass_I1
from ssmass.oracles import eichler_mass, supersingular_j_invariants

for p in (7, 11, 13):
    inp = PELInput.over_Q(m=1, N=3, p=p)  # F = Q, B = M_2(Q), rank 1
    report = count_components(inp)
    print(f"p = {p}: components {report.count}, superspecial {count_superspecial(inp).count}")
    for name, value, tag in report.factors:
        print(f"    {name:12} {str(value):>6}   {tag}")

    # the mass is sum 1/|Aut E| over supersingular E, which the oracle counts directly
    print("    mass", mass_I1(inp).mass, "oracle", eichler_mass(p), "(p-1)/24 =", Fraction(p - 1, 24))
    print("    supersingular j in F_p^2:", supersingular_j_invariants(p))
