"""Local L-factors det(1 - t F) of lattices with a finite cyclic action.

The leading term at s=0 is computed twice, once straight from the
characteristic polynomial and once through the Herbrand quotient.
"""
from toric_lvalues.cyclic import CyclicModule, herbrand_quotient
from toric_lvalues.local import (
    LocalPlaceData,
    crosscheck_local,
    local_l_polynomial,
    local_leading_direct,
    local_leading_formula,
    local_order,
)

cases = {
    "trivial, f=1": ([[1]], 1),
    "sign, f=2": ([[-1]], 2),
    "rotation by i, f=4": ([[0, -1], [1, 0]], 4),
    "3-cycle, f=3": ([[0, 0, 1], [1, 0, 0], [0, 1, 0]], 3),
    "trivial rank 2, f=3": ([[1, 0], [0, 1]], 3),
}

for q in (5, 9):
    print(f"q = {q}")
    for name, (sigma, f) in cases.items():
        place = LocalPlaceData(q, f, CyclicModule.lattice(sigma, f))
        direct, formula = local_leading_direct(place), local_leading_formula(place)
        print(f"  {name:22s} P(t)={local_l_polynomial(place)!s:18s} r={local_order(place)}"
              f"  h={herbrand_quotient(place.module)!s:4s} L*={direct!s:16s} agree={crosscheck_local(place)}")
        assert direct.float_value == formula.float_value
