#!/usr/bin/env python3
# Enumerate the simple closed geodesics of a one-holed torus: slopes, traces
# and lengths, produced by walking the Markov tree over Farey triangles.

from hypident import (
    FenchelNielsen,
    brute_force_trace,
    enumerate_geodesics,
    from_fenchel_nielsen,
    markov_child,
    reduce_to_minimal,
    trace_triple,
)

# The modular torus: all three generator traces equal 3, cusp boundary.
modular = trace_triple(3.0, 3.0, 3.0)
print(f"modular torus: kappa = {modular.kappa}, boundary length k = {modular.k}")
print()

print("Markov moves from (3, 3, 3): each move replaces one trace by")
print("(product of the others) - trace, preserving kappa:")
t = (3.0, 3.0, 3.0)
for position in (3, 2, 3):
    t = markov_child(*t, position)
    print(f"  -> {t}")
print("and reduction walks back to the minimal triple:",
      reduce_to_minimal(trace_triple(*t)))
print()

print("Spectrum of the modular torus up to length 9")
print("p/q      trace          length")
for record in enumerate_geodesics(modular, 9.0):
    print(f"{str(record.slope):>5}  {record.trace:12.6f}  {record.length:12.8f}")
print()

# A torus with geodesic boundary, described in Fenchel-Nielsen coordinates.
fn = FenchelNielsen(b=1.3, t=0.0, k=1.1)
point = from_fenchel_nielsen(fn)
print(f"Fenchel-Nielsen point b={fn.b}, t={fn.t}, k={fn.k}:")
print(f"  traces x={point.x:.6f} y={point.y:.6f} z={point.z:.6f}")
records = enumerate_geodesics(point, 10.0)
print(f"  {len(records)} geodesics up to length 10; first few, checked")
print("  against the independent matrix-word oracle:")
for record in records[:8]:
    oracle = brute_force_trace(fn, record.slope)
    print(
        f"  {str(record.slope):>6}  tree {record.trace:14.8f}"
        f"  oracle {oracle:14.8f}  |diff| {abs(oracle - record.trace):.1e}"
    )
