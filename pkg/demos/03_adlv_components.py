# Components of the basic affine Deligne-Lusztig variety, modulo J_b.
from ssmass import adlv
from ssmass.oracles import weyl_assignment_count

shape = adlv.Shape((2, 3), 1)  # two places over p with inertia degrees 2 and 3
print("indices (v, j, i):", shape.indices())
print("mu         ", adlv.mu(shape))
print("newton     ", [str(x) for x in adlv.newton_point(shape).a])
rep = adlv.lambda_Gb(shape).representative
print("lambda_Gb  ", rep.as_map())
print("kappa      ", adlv.natural(rep))

# nu - lambda_Gb^diamond lies in the closed unit box of the coroot basis
box = adlv.coroot_coefficients(adlv.newton_point(shape) - adlv.diamond(rep))
print("coroots    ", {k: str(v) for k, v in box.items()})

# every orbit representative is congruent to lambda_Gb modulo (1 - sigma)
reps = list(adlv.orbit_representatives(shape))
print(len(reps), "representatives, all congruent:",
      all(adlv.CocharClass(r) == adlv.lambda_Gb(shape) for r in reps))

for f, m in (((2,), 1), ((3,), 2), ((4,), 2), ((2, 3), 3)):
    s = adlv.Shape(f, m)
    print(f, m, adlv.components_closed(s), adlv.components_enum(s), weyl_assignment_count(f, m))
