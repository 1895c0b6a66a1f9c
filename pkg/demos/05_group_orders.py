# Finite group orders, closed form against brute force.
from ssmass import PELInput
from ssmass.groups_finite import order_G_modN, order_gsp_modN, order_sp, order_u, verify_similitude_surjective
from ssmass.oracles import enumerate_gl2_mod, enumerate_group_order

for kind, n, q in (("sp", 1, 3), ("sp", 2, 2), ("u", 1, 3), ("u", 2, 2)):
    closed = (order_sp if kind == "sp" else order_u)(n, q)
    print(f"{kind}({n}, {q}): formula {closed}, enumeration {enumerate_group_order(kind, n, q)}")

print("GL2(Z/4):", order_gsp_modN(1, 4), enumerate_gl2_mod(4))
print("similitude onto F_3^x:", verify_similitude_surjective("symplectic", 1, 3))

report = order_G_modN(PELInput.over_Q([2, 3], m=1, N=60, p=7))  # 2, 3 ramified in B and dividing N
print("|G(Z/60)| =", report.order, report.factorization)
for factor, tag in report.formula_trace:
    print(f"    {factor:>6}  {tag}")
