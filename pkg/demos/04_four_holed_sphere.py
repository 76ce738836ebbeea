#!/usr/bin/env python3
# The four-holed sphere with equal boundary lengths c corresponds to a
# one-holed torus with boundary 2c: interior geodesics match up with
# doubled lengths and the orthogeodesic roles p and q swap.

from hypident import (
    IdentityKind,
    evaluate,
    foursphere_ortho,
    from_traces,
    guard_threshold,
    pants_geometry,
    term_foursphere_cusped,
    term_foursphere_ortho,
    term_foursphere_simple,
    torus_ortho,
)

c, a = 0.9, 2.6
k, b = 2.0 * c, 0.5 * a

print(f"four-holed sphere: boundaries c={c}, interior geodesic a={a}")
four = foursphere_ortho(c, a)
print(f"  orthogeodesics m={four.m:.10f} p={four.p:.10f} q={four.q:.10f}")
print(f"one-holed torus:  boundary k=2c={k}, geodesic b=a/2={b}")
torus = torus_ortho(k, b)
print(f"  orthogeodesics m={torus.m:.10f} p={torus.p:.10f} q={torus.q:.10f}")
print(f"  correspondence: m<->m {abs(four.m - torus.m):.1e}, "
      f"p<->q {abs(four.p - torus.q):.1e}, q<->p {abs(four.q - torus.p):.1e}")
print()

print("Seam lengths are bounded below by the guard threshold:")
print(f"  guard(c/2) = {guard_threshold(0.5 * c):.10f} < m = {four.m:.10f}")
print(f"  guard(k/4) = {guard_threshold(0.25 * k):.10f} < m = {torus.m:.10f}")
print()

print("One bracket, two printed forms (orthogeodesic vs boundary-length):")
v_ortho = term_foursphere_ortho(c, four.m, four.p)
v_simple = term_foursphere_simple(c, a)
print(f"  orthogeodesic form {v_ortho:.15f}")
print(f"  length-only form   {v_simple:.15f}   |diff| {abs(v_ortho - v_simple):.1e}")
print()

print("Degenerating the boundaries (c -> 0) gives the cusped bracket:")
for c_small in (1e-2, 1e-4, 1e-6):
    gap = term_foursphere_simple(c_small, a) - term_foursphere_cusped(a)
    print(f"  c = {c_small:.0e}: simple - cusped = {gap:+.3e}")
print()

print("Summing the bracket over all interior geodesics gives pi^2/2;")
print("the sum runs over the torus spectrum through the correspondence:")
point = from_traces(3.0, 3.0, k)
for kind in (IdentityKind.FOUR, IdentityKind.FOUR_SIMPLE):
    r = evaluate(kind, point, 22.0)
    print(f"  {kind.value:12s} partial = {r.partial_sum:.12f}  defect = {r.defect:+.2e}")
print()

print("General pants trigonometry behind these lengths (boundaries c, c, a):")
g = pants_geometry(c, c, a)
print(f"  seams     m1={g.m1:.8f} m2={g.m2:.8f} m3={g.m3:.8f}")
print(f"  self-perp d1={g.d1:.8f} d2={g.d2:.8f} d3={g.d3:.8f}")
print(f"  (m2 is the c<->a seam = {four.m:.8f}; d3 is the interior"
      f" self-perpendicular = {four.p:.8f})")
