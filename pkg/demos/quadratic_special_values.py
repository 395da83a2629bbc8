"""Special values of L-functions of quadratic norm tori at s = 0 and s = 1.

For imaginary fields L*(0) is the rational number 2h/w; for real fields
it vanishes to order one with leading term h log(eps).
"""
import numpy as np

from toric_lvalues.euler import norm_torus_report
from toric_lvalues.lseries import QuadraticCharacter, b1_chi

print(f"{'d':>5} {'Delta':>6} {'h':>3} {'r':>2} {'L*(0) alg':>14} {'L*(0) ana':>14} {'L(1)':>12} {'err':>9}")
errs = []
for d in (-1, -2, -3, -5, -23, -163, 2, 3, 5, 6, 13, 94, 229):
    r = norm_torus_report(d)
    errs.append(r.max_error)
    print(f"{d:5d} {r.discriminant:6d} {r.h:3d} {r.algebraic_L0.order:2d} {r.algebraic_L0.value:14.10f}"
          f" {r.analytic_L0.value:14.10f} {r.analytic_L1.value:12.9f} {r.max_error:9.2e}")
print("worst disagreement:", np.max(errs))

# generalized Bernoulli numbers carry the class number exactly
print("\n-B1 for Delta = -3, -4, -23, -47:", [str(-b1_chi(QuadraticCharacter(D))) for D in (-3, -4, -23, -47)])
