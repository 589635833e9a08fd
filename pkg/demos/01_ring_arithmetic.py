"""
Exact arithmetic in the carry ring
==================================

Elements of Z[pi, beta] are (d x n) integer grids over the basis
pi^k * beta^j, with pi^d = p and beta a root of a primitive degree-n
polynomial lifted to Z. Everything below is exact integer arithmetic.
"""

import dvfcsr as dv

# the ground: p = 2, pi^2 = 2, beta^2 = beta + 1 (from X^2 - X - 1)
g = dv.make_ground_params(2, 2, (-1, -1, 1))
print("p =", g.p, " d =", g.d, " n =", g.n, " basis size =", g.size)

# beta^2 reduced against the lift: coordinates of beta^2 in {1, beta}
print("beta^2 ->", g.beta_powers[0])

# build two elements; rows are pi-degrees, columns beta-degrees
a = dv.ring_element(g, [[1, 2], [0, -1]])   # 1 + 2 beta - pi beta
b = dv.ring_element(g, [[0, 1], [3, 0]])    # beta + 3 pi
print("a =", a.coords)
print("b =", b.coords)
print("a + b =", dv.add_ring(a, b).coords)
print("a * b =", dv.mul_ring(a, b, g).coords)

# pi is a square root of p: pi * pi folds back to the integer row
pi = dv.ring_basis(g, 1, 0)
print("pi^2 =", dv.mul_ring(pi, pi, g).coords)

# multiplication by a fixed element is linear; its integer matrix acts on
# flattened coordinates (column j*d + k for basis pi^k beta^j)
m = dv.mult_matrix_Q(a, g)
for row in m:
    print("  ", row)
print("det of the multiplication matrix:", dv.det_int(m))

# the same element seen over Z[pi] only: an n x n matrix of pi-polynomials,
# whose Z[pi]-determinant pushes down to the integer det via the norm
mp = dv.mult_matrix_Zpi(a, g)
dp = dv.det_Zpi(mp, g)
print("Z[pi] determinant:", dp.coords)
print("norm of that (x0^2 - p x1^2):", dv.norm_Zpi_to_Z(dp, g))

# reduction mod p keeps a canonical digit grid
c = dv.ring_element(g, [[-1, 7], [4, -6]])
print("c mod p =", dv.mod_p(c, g).coords)
