# Local lattices: symplectic elementary divisors and quaternionic Jordan types.
from fractions import Fraction

from ssmass.local_lattices import (JordanType, hermitian_dual, is_Pi_modular, modular_exists, parahoric_index,
                                   self_dual_hermitian_type, symplectic_divisors, verify_certificate)

gram = [[0, 6, Fraction(1, 3), 0],
        [-6, 0, 2, 9],
        [Fraction(-1, 3), -2, 0, 1],
        [0, -9, -1, 0]]
res = symplectic_divisors(gram, 3)
print("3-adic divisors", res.d, "certificate", verify_certificate(gram, res, 3))
for row in res.basis:
    print("   ", [str(x) for x in row])

J = JordanType({1: 2, 2: 1})  # H(1) + (pi^1)
print(J.describe(), "dual", hermitian_dual(J).describe(), "modular at 1?", is_Pi_modular(J, 1))

# odd rank and odd index never admit a modular lattice
print([(n, i) for n in range(1, 4) for i in range(-2, 3) if not modular_exists(n, i)])

for m, parity in ((3, 1), (2, 0), (4, 0)):
    t = self_dual_hermitian_type(m, parity)
    print(f"m = {m}, ord(gamma) parity {parity}: self-dual type {t.describe()}, parahoric c = {parahoric_index(t)}")
