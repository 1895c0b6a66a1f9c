# Siegel modular varieties: m = g, F = Q, B split.
from ssmass import PELInput, count_components, count_superspecial, siegel_counts
from ssmass.mass import SIEGEL_SIGN_CONVENTION, siegel_constant, supersingular_dimension

print("sign convention:", SIEGEL_SIGN_CONVENTION)
for g in (1, 2, 3, 4):
    print(f"g = {g}: C(g, 3) = {siegel_constant(g, 3)}")
    for p in (5, 7, 11):
        sc = siegel_counts(g, 3, p)
        inp = PELInput.over_Q(m=g, N=3, p=p)
        same = (count_components(inp).count, count_superspecial(inp).count) == (sc.components, sc.superspecial)
        print(f"    p = {p:2}: superspecial {sc.superspecial:>22}  components {sc.components:>22}"
              f"  dim {supersingular_dimension(inp)}  general formula agrees: {same}")
