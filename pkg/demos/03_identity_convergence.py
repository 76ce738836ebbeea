#!/usr/bin/env python3
# Watch the identities converge: partial sums over growing length cutoffs
# approach pi^2/2 (dilogarithm identities) and 1/2 (horocycle identity).

from math import pi

from hypident import (
    FenchelNielsen,
    IdentityKind,
    evaluate,
    from_fenchel_nielsen,
    trace_triple,
)

modular = trace_triple(3.0, 3.0, 3.0)

print("Cusped-torus identity at the modular point (target pi^2/2)")
print("cutoff   terms   partial sum          defect        tail estimate")
for cutoff in (6, 10, 14, 18, 22, 25):
    r = evaluate(IdentityKind.THM12, modular, float(cutoff))
    print(
        f"{cutoff:5d}  {r.term_count:6d}   {r.partial_sum:.15f}  {r.defect:+.3e}  {r.tail_estimate:.3e}"
    )
print(f"target = {pi * pi / 2!r}")
print()

print("Horocycle identity at the same point (target 1/2)")
print("cutoff   terms   partial sum          defect")
for cutoff in (6, 10, 14, 18, 22, 25):
    r = evaluate(IdentityKind.MCSHANE, modular, float(cutoff))
    print(f"{cutoff:5d}  {r.term_count:6d}   {r.partial_sum:.15f}  {r.defect:+.3e}")
print()

fn = FenchelNielsen(b=1.2, t=0.4, k=1.5)
point = from_fenchel_nielsen(fn)
print(f"One-holed torus with boundary k={fn.k} (target pi^2/2)")
print("cutoff   terms   partial sum          defect")
for cutoff in (8, 12, 16, 20, 25):
    r = evaluate(IdentityKind.THM11, point, float(cutoff))
    print(f"{cutoff:5d}  {r.term_count:6d}   {r.partial_sum:.15f}  {r.defect:+.3e}")
print()

print("The same sum in three equivalent forms (identical spectra):")
for kind in (IdentityKind.THM11, IdentityKind.THM31, IdentityKind.FOUR_SIMPLE):
    r = evaluate(kind, point, 20.0)
    print(f"  {kind.value:12s} partial = {r.partial_sum:.15f}")
