"""
Period structure against the norm bounds
========================================

Every d-decimated (k, j) substream has eventual period dividing
ord_{|N'|}(p); coordinate streams divide d * ord; the output period is
the lcm of the coordinate periods. When |N'| is prime, p is a primitive
root mod |N'| and gcd(d, |N'| - 1) = 1, the full period |N'| - 1 is
guaranteed.
"""

import json
from importlib import resources

import dvfcsr as dv

fixtures = resources.files("dvfcsr") / "fixtures"


def report(name):
    spec = dv.spec_from_dict(json.loads((fixtures / f"{name}_spec.json").read_text()))
    state = dv.state_from_dict(
        json.loads((fixtures / f"{name}_state.json").read_text()), spec
    )
    rep = dv.periodicity_report(spec, state)
    print(f"--- {name}: |N'| = {rep.norm_abs}, ord(p) = {rep.order}")
    for k, row in enumerate(rep.sub_periods):
        for j, (t, ell) in enumerate(row):
            print(f"  substream ({k},{j}): transient {t}, period {ell}")
    for j, (t, ell) in enumerate(rep.coord_periods):
        print(f"  coordinate {j}:    transient {t}, period {ell}")
    print("  total period:", rep.total_period,
          "| divisibility holds:", rep.divisibility_ok,
          "| max-period criterion:", rep.criterion_ok)


report("reg151")   # period 15 = ord_151(2); d*ord would allow 30
report("reg409")   # coordinate periods reach d*ord = 408

# a register that provably attains |N'| - 1: d = 3 over the prime field,
# q = -1 + pi + pi^2, N' = -11; 2 generates mod 11 and gcd(3, 10) = 1
g = dv.make_ground_params(2, 3, (-1, 1))
q = dv.ring_element(g, [[-1], [1], [1]])
spec = dv.spec_from_connection(g, q)
print("\n--- maximal-period example: N' =", dv.analyze(spec).norm_signed)
print("criterion holds:", dv.max_period_criterion(11, 2, 3))
state = dv.register_state(spec, [[1], [0]], [[0], [0], [0]])
rep = dv.periodicity_report(spec, state)
print("observed total period:", rep.total_period, "= |N'| - 1")

# the streams really are p-adic expansions of rationals over N':
# numerators solve the exact linear system and re-expand digit-perfectly
spec151 = dv.spec_from_dict(json.loads((fixtures / "reg151_spec.json").read_text()))
state151 = dv.state_from_dict(
    json.loads((fixtures / "reg151_state.json").read_text()), spec151
)
rat = dv.verify_rationality(spec151, state151)
print("\nrationality check ok:", rat.ok, " denominator:", rat.norm_signed)
for k in range(2):
    for j in range(2):
        print(f"  stream ({k},{j}) = {rat.numerators[k][j]} / {rat.norm_signed}"
              f"  (reduced denominator {rat.reduced_denominators[k][j]})")
