"""
Clocking a vectorial register by hand
=====================================

One tick: sigma = q_1 a_{r-1} + ... + q_r a_0 + memory, computed exactly
in the ring. The new cell is sigma's integer row reduced mod p, the carry
(sigma_0 - a)/p moves into the top memory row, and the lower memory rows
shift down. A trace with `steps` columns therefore clocks steps - 1 times.
"""

import json
from importlib import resources

import dvfcsr as dv

fixtures = resources.files("dvfcsr") / "fixtures"
spec = dv.spec_from_dict(json.loads((fixtures / "reg151_spec.json").read_text()))
state = dv.state_from_dict(
    json.loads((fixtures / "reg151_state.json").read_text()), spec
)

print("r =", spec.r, "cells, coefficients:")
for i, q in enumerate(spec.coeffs, start=1):
    print(f"  q_{i} =", q.coords)
print("initial cells: ", [a.coords for a in state.cells])
print("initial memory:", state.memory.coords)

# single tick, with the accumulator exposed
tr = dv.step(spec, state)
print("\nsigma      =", tr.sigma.coords)
print("new cell   =", tr.output.coords)
print("new memory =", tr.state.memory.coords)

# the defining reconstruction: a = sigma_0 - p * (new top memory row)
p = spec.ground.p
top = tr.state.memory.coords[-1]
recon = tuple(s - p * t for s, t in zip(tr.sigma.coords[0], top))
print("sigma_0 - p*top =", recon, " (must equal the new cell)")

# a 16-column trace in the same layout as the CSV codec
res = dv.run(spec, state, 16)
labels = dv.trace_labels(spec.ground)
table = dv.trace_from_csv(dv.trace_to_csv(spec.ground, res.outputs, res.memories))
print("\ncolumn:  " + " ".join(f"{i:>3d}" for i in range(16)))
for label in labels:
    print(f"{label:<7s}  " + " ".join(f"{v:>3d}" for v in table[label]))

# d-decimated coordinate streams: the (k, j) substreams the analysis bounds
print("\nsubstream (k=0, j=0):", dv.subsequence(res.outputs, 0, 0, spec.ground.d))
print("substream (k=1, j=0):", dv.subsequence(res.outputs, 1, 0, spec.ground.d))
