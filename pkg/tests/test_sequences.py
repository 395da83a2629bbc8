import random
from fractions import Fraction

import pytest

from toric_lvalues.errors import InputError
from toric_lvalues.generators import random_exact_sequence, random_nine_diagram
from toric_lvalues.lattice import AbHom, FgAbGroup
from toric_lvalues.sequences import (
    LatticeExactSequence,
    NineDiagram,
    check_exactness,
    dual_sequence,
    five_term_nu,
    nu_of_real_sequence,
    nu_real,
    split_nu,
    torsion_alternating_product,
    verify_3x3,
    verify_det_tor,
)

Z = FgAbGroup(1)


def times(k):
    """0 -> Z -(x k)-> Z -> Z/k -> 0"""
    q = FgAbGroup(0, (k,)) if k > 1 else FgAbGroup(0)
    return LatticeExactSequence((Z, Z, q), (AbHom.from_rows(Z, Z, [[k]]), AbHom.from_rows(Z, q, [[1]] if k > 1 else [])))


def test_exactness_examples():
    assert check_exactness(times(2))
    seq = LatticeExactSequence((Z, Z), (AbHom.from_rows(Z, Z, [[2]]),))
    rep = check_exactness(seq)
    assert not rep and rep.position == 1


def test_exactness_reports_failure_positions():
    # 0 -> Z -(x2)-> Z -(x1)-> Z/2 is exact; break it by multiplying by 3 first
    seq = LatticeExactSequence(
        (Z, Z, FgAbGroup(0, (2,))),
        (AbHom.from_rows(Z, Z, [[3]]), AbHom.from_rows(Z, FgAbGroup(0, (2,)), [[1]])),
    )
    rep = check_exactness(seq)
    assert not rep and rep.position == 1
    zero = LatticeExactSequence((Z, Z), (AbHom.zero(Z, Z),))
    assert check_exactness(zero).position == 0


def test_non_composable_rejected():
    with pytest.raises(InputError):
        LatticeExactSequence((Z, FgAbGroup(2)), (AbHom.identity(Z),))


def test_nu_examples():
    assert nu_of_real_sequence([1, 1], [[[2]]]) == 2
    assert nu_real(times(2)) == 2 == torsion_alternating_product(times(2))
    assert nu_real(times(6)) == 6 and verify_det_tor(times(6))
    g = FgAbGroup(2, (3,))
    ident = LatticeExactSequence((g, g), (AbHom.identity(g),))
    assert nu_real(ident) == 1 and verify_det_tor(ident)


def test_all_torsion_sequence():
    z2, z4 = FgAbGroup(0, (2,)), FgAbGroup(0, (4,))
    seq = LatticeExactSequence((z2, z4, z2), (AbHom.from_rows(z2, z4, [[2]]), AbHom.from_rows(z4, z2, [[1]])))
    assert check_exactness(seq)
    assert nu_real(seq) == 1
    assert torsion_alternating_product(seq) == 1


def test_torsion_product_examples():
    assert torsion_alternating_product(times(2)) == 2
    free = LatticeExactSequence((FgAbGroup(2), FgAbGroup(2)), (AbHom.identity(FgAbGroup(2)),))
    assert torsion_alternating_product(free) == 1


def test_non_exact_rejected():
    seq = LatticeExactSequence((Z, Z), (AbHom.from_rows(Z, Z, [[2]]),))
    with pytest.raises(InputError):
        nu_real(seq)


def test_det_tor_on_generated_sequences():
    rng = random.Random(101)
    for _ in range(150):
        seq = random_exact_sequence(rng, rng.randint(2, 6))
        assert check_exactness(seq)
        assert nu_real(seq) == torsion_alternating_product(seq)


def test_section_independence():
    rng = random.Random(7)
    for _ in range(80):
        seq = random_exact_sequence(rng, rng.randint(3, 6))
        base = nu_real(seq)
        assert nu_real(seq, random.Random(rng.random())) == base
        assert nu_real(seq, random.Random(rng.random())) == base


def test_split_consistency():
    rng = random.Random(8)
    for _ in range(80):
        seq = random_exact_sequence(rng, rng.randint(3, 6))
        base = nu_real(seq)
        for i in range(len(seq.maps)):
            assert split_nu(seq, i) == base


def _scaled_real(seq, rng):
    """Multiply each real map by a nonzero scalar: still exact over R, nu changes."""
    maps = []
    for m in seq.real_maps():
        k = rng.choice([1, 2, 3, 5, Fraction(1, 2)])
        maps.append([[k * x for x in row] for row in m])
    return seq.real_dims(), maps


def test_dual_sequence_even_number_of_maps_inverts_nu():
    rng = random.Random(9)
    seen = 0
    for _ in range(150):
        seq = random_exact_sequence(rng, rng.choice([3, 5]))
        dims, maps = _scaled_real(seq, rng)
        nu = nu_of_real_sequence(dims, maps)
        ddims, dmaps = dual_sequence(dims, maps)
        assert nu_of_real_sequence(ddims, dmaps) == 1 / nu
        seen += nu != 1
    assert seen > 20


def test_dual_sequence_odd_number_of_maps_keeps_nu():
    # 0 -> R -(2)-> R -> 0 dualizes to the same matrix
    assert nu_of_real_sequence(*dual_sequence([1, 1], [[[2]]])) == 2
    rng = random.Random(10)
    for _ in range(100):
        seq = random_exact_sequence(rng, rng.choice([4, 6]))
        dims, maps = _scaled_real(seq, rng)
        assert nu_of_real_sequence(*dual_sequence(dims, maps)) == nu_of_real_sequence(dims, maps)


def test_dual_of_free_integral_sequences():
    rng = random.Random(12)
    n = 0
    while n < 40:
        seq = random_exact_sequence(rng, rng.randint(3, 6))
        if any(g.torsion_rank for g in seq.groups):
            continue
        n += 1
        dims, maps = seq.real_dims(), seq.real_maps()
        nu = nu_of_real_sequence(dims, maps)
        assert nu == 1
        assert nu_of_real_sequence(*dual_sequence(dims, maps)) == 1 / nu


def _identity_diagram(g):
    i = AbHom.identity(g)
    z = FgAbGroup(0)
    zg, gz = AbHom.zero(z, g), AbHom.zero(g, z)
    zz = AbHom.identity(z)
    groups = ((z, g, g), (z, g, g), (z, z, z))
    row_maps = ((zg, i), (zg, i), (zz, zz))
    col_maps = ((zz, zz), (i, gz), (i, gz))
    return NineDiagram(groups, row_maps, col_maps)


def test_3x3_identity_diagram():
    assert verify_3x3(_identity_diagram(FgAbGroup(1)))


def test_3x3_scaled_rows():
    # rows x2, x6 and Z/3 = Z/3; columns id, x3 and Z/2 -> Z/6 -> Z/3
    z = Z
    z2, z3, z6 = FgAbGroup(0, (2,)), FgAbGroup(0, (3,)), FgAbGroup(0, (6,))
    zero = FgAbGroup(0)
    groups = ((z, z, z2), (z, z, z6), (zero, z3, z3))
    row_maps = (
        (AbHom.from_rows(z, z, [[2]]), AbHom.from_rows(z, z2, [[1]])),
        (AbHom.from_rows(z, z, [[6]]), AbHom.from_rows(z, z6, [[1]])),
        (AbHom.zero(zero, z3), AbHom.identity(z3)),
    )
    col_maps = (
        (AbHom.identity(z), AbHom.zero(z, zero)),
        (AbHom.from_rows(z, z, [[3]]), AbHom.from_rows(z, z3, [[1]])),
        (AbHom.from_rows(z2, z6, [[3]]), AbHom.from_rows(z6, z3, [[1]])),
    )
    d = NineDiagram(groups, row_maps, col_maps)
    assert verify_3x3(d)
    rows = [nu_real(d.row(k)) for k in range(3)]
    assert rows == [2, 6, 1]


def test_3x3_rejects_noncommuting():
    d = _identity_diagram(FgAbGroup(1))
    neg = AbHom.from_rows(Z, Z, [[-1]])
    bad = NineDiagram(d.groups, ((d.row_maps[0][0], neg),) + d.row_maps[1:], d.col_maps)
    with pytest.raises(InputError):
        verify_3x3(bad)


def test_3x3_generated():
    rng = random.Random(13)
    for _ in range(60):
        assert verify_3x3(random_nine_diagram(rng), random.Random(rng.random()))


def test_five_term_identity_chain():
    g = FgAbGroup(2)
    zero = FgAbGroup(0)
    i = AbHom.identity(g)
    seq = LatticeExactSequence(
        (zero, g, g, zero, zero),
        (AbHom.zero(zero, g), i, AbHom.zero(g, zero), AbHom.identity(zero)),
    )
    assert five_term_nu(seq) == 1


def test_five_term_with_finite_ends():
    # 0 -> Z/2 = Z/2 -0-> Z -(x4)-> Z -> Z/4 -> 0
    z2, z4 = FgAbGroup(0, (2,)), FgAbGroup(0, (4,))
    seq = LatticeExactSequence(
        (z2, z2, Z, Z, z4),
        (AbHom.identity(z2), AbHom.zero(z2, Z), AbHom.from_rows(Z, Z, [[4]]), AbHom.from_rows(Z, z4, [[1]])),
    )
    assert five_term_nu(seq) == Fraction(1, 4)


def test_five_term_generated():
    rng = random.Random(14)
    hits = 0
    for _ in range(400):
        seq = random_exact_sequence(rng, 5)
        if seq.groups[0].is_finite() and seq.groups[4].is_finite():
            five_term_nu(seq)
            hits += 1
    assert hits >= 20


def test_five_term_rejects_infinite_ends():
    seq = LatticeExactSequence(
        (Z, Z, FgAbGroup(0), FgAbGroup(0), FgAbGroup(0)),
        (AbHom.identity(Z), AbHom.zero(Z, FgAbGroup(0)), AbHom.identity(FgAbGroup(0)), AbHom.identity(FgAbGroup(0))),
    )
    with pytest.raises(InputError):
        five_term_nu(seq)
