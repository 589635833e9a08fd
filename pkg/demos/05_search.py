"""
Searching folded grids for large prime moduli
=============================================

A candidate is a d x n grid of folded values (row 0 multiples of p).
Enumeration is deterministic and each candidate carries |N'|, primality,
ord_{|N'|}(p) and the maximal-period verdict, so filtering for good
generator moduli is a one-liner.
"""

import dvfcsr as dv

g = dv.make_ground_params(2, 2, (-1, -1, 1))

# all grids with slots up to 6 (row 0) / 3 (row 1) -- the shape of the
# bundled reference table
cfg = dv.SearchConfig(ground=g, bounds=((6, 6), (3, 3)))
cands = list(dv.enumerate_candidates(cfg))
print("enumerated", len(cands), "grids")

primes = [c for c in cands if c.prime]
print("prime moduli:", len(primes))
best = max(primes, key=lambda c: c.norm_abs)
print("largest prime |N'| in range:", best.norm_abs, "at grid", best.q_tilde,
      "with ord_2 =", best.order)

# d = 2 with p = 2 can never satisfy the maximal-period criterion
# (|N'| - 1 is even), so max_period stays at d * ord here
print("criterion ever true here:", any(c.criterion_ok for c in cands))

# d = 3 over the prime field does reach it
g3 = dv.make_ground_params(2, 3, (-1, 1))
cfg3 = dv.SearchConfig(
    ground=g3, bounds=((4,), (2,), (2,)), require_max_period=True
)
print("\nd = 3 maximal-period grids up to small bounds:")
for c in dv.enumerate_candidates(cfg3):
    print("  grid", c.q_tilde, " N' =", c.norm_signed,
          " guaranteed period", c.max_period)

# the bundled (p = 2, d = n = 2) norm table, recomputed from scratch;
# some listed values are composite and the report says so honestly
rep = dv.verify_norm_table()
print("\nbundled table ok:", rep.ok, " rows:", len(rep.rows))
print("composite listed values:", rep.composites)
