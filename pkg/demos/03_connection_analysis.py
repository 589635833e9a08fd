"""
The connection element and its norm
===================================

Folding the coefficients q_i along pi-degree gives the element
q = -1 + sum q_i pi^i of Z[pi, beta]; the register's output streams are
p-adic expansions of rationals with denominator N' = det of the
multiplication-by-(-q) matrix. The map register -> q is invertible.
"""

import json
from importlib import resources

import dvfcsr as dv

fixtures = resources.files("dvfcsr") / "fixtures"
spec = dv.spec_from_dict(json.loads((fixtures / "reg151_spec.json").read_text()))

an = dv.analyze(spec)
print("folded grid q~ :", an.q_tilde)      # row k = 0 is divisible by p
print("connection q   :", an.q.coords)     # q~ with -1 added at the corner
print("norm over Z[pi]:", an.norm_pi.coords)
print("N' signed      :", an.norm_signed)
print("|N'|           :", an.norm_abs)

# N' is always 1 mod p
print("N' mod p =", an.norm_signed % spec.ground.p)

# the integer matrix the determinant came from
for row in an.mult_matrix_int:
    print("  ", row)

# closed form for this (p, d, n) = (2, 2, 2) shape: given the four grid
# slots (x, y, z, t), the matrix is a polynomial template in them
x, z = an.q_tilde[0]
y, t = an.q_tilde[1]
assert dv.mult_matrix_Q_2_2(x, y, z, t) == an.mult_matrix_int
print("template matches the general construction")

# the inverse map: a connection element determines the register back
rebuilt = dv.spec_from_connection(spec.ground, an.q)
print("rebuilt coefficients:", [q.coords for q in rebuilt.coeffs])
print("round trip ok:", rebuilt == spec)

# negative folded values are fine as long as row 0 stays divisible by p
g = spec.ground
q2 = dv.ring_element(g, [[-3, 2], [1, -2]])
spec2 = dv.spec_from_connection(g, q2)
print("\nanother q:", q2.coords)
print("its register has r =", spec2.r, "coefficients:",
      [q.coords for q in spec2.coeffs])
print("and analyze() recovers q:", dv.analyze(spec2).q == q2)
