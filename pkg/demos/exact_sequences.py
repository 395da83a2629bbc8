"""Torsion in an exact sequence of lattices is measured by the real determinant.

Walks through 0 -> Z -(x k)-> Z -> Z/k -> 0 by hand, then a batch of random
sequences, then a 3x3 diagram.
"""
import random

from toric_lvalues.generators import random_exact_sequence, random_nine_diagram
from toric_lvalues.lattice import AbHom, FgAbGroup, IntMatrix, smith_normal_form
from toric_lvalues.sequences import (
    LatticeExactSequence,
    check_exactness,
    nu_real,
    torsion_alternating_product,
    verify_3x3,
)

Z = FgAbGroup(1)

s = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
print("SNF of [[2,4],[6,8]]:", s.invariants)

for k in (1, 2, 6, 12):
    q = FgAbGroup(0, (k,)) if k > 1 else FgAbGroup(0)
    seq = LatticeExactSequence((Z, Z, q), (AbHom.from_rows(Z, Z, [[k]]), AbHom.from_rows(Z, q, [[1]] if k > 1 else [])))
    print(f"k={k:3d}  exact={bool(check_exactness(seq))}  nu={nu_real(seq)}  torsion product={torsion_alternating_product(seq)}")

rng = random.Random(1)
print("\nrandom sequences with nu != 1 (length, nu, torsion product):")
shown = 0
while shown < 6:
    seq = random_exact_sequence(rng, rng.randint(3, 6), bound=50)
    nu = nu_real(seq)
    if nu != 1:
        shown += 1
        print(" ", len(seq), nu, torsion_alternating_product(seq))

ok = sum(verify_3x3(random_nine_diagram(rng)) for _ in range(50))
print(f"\n3x3 identity held on {ok}/50 random diagrams")
