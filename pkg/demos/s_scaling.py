"""Removing Euler factors at finite places, Gaussian field example.

Split primes contribute two places of norm p, inert ones a single place of
norm p^2; each place raises the order at s=0 by one.
"""
import math

from toric_lvalues.euler import chi_constant_z, zeta_s_comparison
from toric_lvalues.quadratic import QuadraticField

k = QuadraticField.from_d(-1)
for primes in [(), (5,), (3,), (3, 5), (5, 13), (3, 7, 13)]:
    z = zeta_s_comparison(k, primes)
    print(f"S_f={str(primes):12s} places={str(z.place_norms):16s} order={z.via_chi.order}"
          f"  via chi={z.via_chi.value:.10f}  via L={z.via_l.value:.10f}  agree={z.agree}")

c = chi_constant_z(k, [5, 5])
print("\nby hand, (1/4) log(5)^2 =", 0.25 * math.log(5) ** 2, " library:", c.value)
