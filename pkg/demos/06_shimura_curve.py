# Quaternionic Shimura curves with p dividing the discriminant.
from ssmass.shimura_curve import (CurveInput, appendix_S, curve_component_count, curve_mass,
                                  curve_mass_via_superspecial, dieudonne_matrix_check, su2_residue_order)

inp = CurveInput([(3, 0), 5, 7, 11], p=3)
print("S =", set(appendix_S(inp)), "mass", curve_mass(inp), "general path", curve_mass_via_superspecial(inp))

for delta, p, N in (([2, 3], 3, 5), ([2, 3], 2, 5), ([2, 13], 13, 3)):
    res = curve_component_count(CurveInput(delta, p, N))
    print(f"Delta {delta}, p = {p}, N = {N}: {res.count} components from |G(Z/N)| = {res.g_order}", res.flags)

for p in (2, 3, 5):
    good = dieudonne_matrix_check(p, 4)
    bad = dieudonne_matrix_check(p, 4, perturb=True)
    print(f"p = {p}: Lie type {good.lie_type}, all identities {good.ok}; swapped [F] fails at {bad.failed!r}")
    print("    |SU_2(F_p)| =", su2_residue_order(p))
