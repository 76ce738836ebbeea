#!/usr/bin/env python3
# Tour of the dilogarithm module: special values, the functional equations,
# and the lasso combination that appears in every identity term.

from math import log, log1p, pi

from hypident import lasso, li2, rogers

print("Special values of the Rogers dilogarithm")
print("----------------------------------------")
print(f"  L(0)    = {rogers(0.0)!r}     (expected 0)")
print(f"  L(1/2)  = {rogers(0.5)!r}   (expected pi^2/12 = {pi * pi / 12!r})")
print(f"  L(1)    = {rogers(1.0)!r}   (expected pi^2/6  = {pi * pi / 6!r})")
print(f"  L(-1)   = {rogers(-1.0)!r}  (expected -pi^2/12)")
print()

# The Rogers form is the classical dilogarithm plus a logarithmic correction.
z = 0.73
print(f"Normalization at z = {z}:")
print(f"  li2(z)               = {li2(z)!r}")
print(f"  rogers(z)            = {rogers(z)!r}")
print(f"  li2 + log correction = {li2(z) + 0.5 * log(z) * log1p(-z)!r}")
print()

print("Functional equations (residuals should sit at machine precision)")
print("-----------------------------------------------------------------")
x, y = 0.37, 0.81
print(f"  Euler     L(x)+L(1-x)-pi^2/6          = {rogers(x) + rogers(1 - x) - pi * pi / 6:+.2e}")
print(f"  inversion L(-x)+L(-1/x)+pi^2/6        = {rogers(-x) + rogers(-1 / x) + pi * pi / 6:+.2e}")
print(f"  Landen    L(-x/(1-x))+L(x)            = {rogers(-x / (1 - x)) + rogers(x):+.2e}")
pentagon = (
    rogers(x)
    + rogers(y)
    + rogers((1 - x) / (1 - x * y))
    + rogers((1 - y) / (1 - x * y))
    - rogers(x * y)
    - pi * pi / 3
)
print(f"  pentagon  (five-term combination)     = {pentagon:+.2e}")
print()

print("The lasso combination La(x, y)")
print("------------------------------")
print("  La(x, x) collapses to L(x):", lasso(0.4, 0.4), "vs", rogers(0.4))
print("  La(0, y) vanishes by Euler:", lasso(0.0, 0.8))
print("  La(x, 1) vanishes:         ", lasso(0.6, 1.0))
print("  Generic value La(0.2, 0.7):", lasso(0.2, 0.7))
