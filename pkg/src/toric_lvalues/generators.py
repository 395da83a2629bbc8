"""Random instances that are exact (or valid) by construction.

These feed the property suites: sequences are spliced from kernels,
cokernels and graph embeddings, diagrams come from two subgroups of one
group, and cyclic modules are block sums of permutation, sign and
cyclotomic-companion actions conjugated by random unimodular matrices.
"""

from __future__ import annotations

import random
from math import gcd, lcm

from .lattice import (
    AbHom,
    FgAbGroup,
    Lattice,
    Subquotient,
    direct_sum,
    eye,
    from_columns,
    inclusion_hom,
    induced_hom,
    matmul,
    projection_hom,
    present,
)
from .cyclic import CyclicModule, induced_module, orbit_lattice
from .sequences import LatticeExactSequence, NineDiagram


def random_group(rng: random.Random, max_gens: int = 3, bound: int = 6) -> FgAbGroup:
    """Cokernel of a small random relation matrix."""
    n = rng.randint(0, max_gens)
    nrel = rng.randint(0, n)
    rels = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(nrel)]
    return present(rels, n).group


def random_hom(rng: random.Random, source: FgAbGroup, target: FgAbGroup, bound: int = 50) -> AbHom:
    """Uniform-ish random hom; torsion columns are forced to respect orders."""
    rows = [[0] * source.ngens for _ in range(target.ngens)]
    tmod = target.moduli
    for j, e in enumerate(source.moduli):
        for i, f in enumerate(tmod):
            if e == 0:
                rows[i][j] = rng.randint(-bound, bound) if f == 0 else rng.randint(0, f - 1)
            elif f:
                step = f // gcd(e, f)
                rows[i][j] = step * rng.randint(0, f // step - 1)
    return AbHom.from_rows(source, target, rows)


def _graph_embedding(rng, c: FgAbGroup, bound: int):
    """Injective hom ``c -> c + F`` given by ``x -> (x, h x)``, normalized."""
    f = random_group(rng)
    h = random_hom(rng, c, f, bound)
    sq, offsets = direct_sum([c, f])
    hr = h.rows

    def graph(x):
        return list(x) + [sum(hr[i][j] * x[j] for j in range(c.ngens)) for i in range(f.ngens)]

    cols = []
    for j in range(c.ngens):
        e = [int(i == j) for i in range(c.ngens)]
        cols.append(sq.coords(graph(e)))
    return AbHom.from_rows(c, sq.group, from_columns(cols, sq.group.ngens))


def random_exact_sequence(rng: random.Random, length: int, bound: int = 50) -> LatticeExactSequence:
    """Exact ``0 -> A_0 -> ... -> A_{length-1} -> 0``."""
    if length < 2:
        raise ValueError("length must be at least 2")
    g0 = random_group(rng)
    if length == 2:
        # 0 -> A -> B -> 0 forces an isomorphism
        return LatticeExactSequence((g0, g0), (AbHom.identity(g0),))
    f = random_hom(rng, g0, random_group(rng), bound)
    ker = f.kernel()
    groups = [ker.group, g0]
    maps = [inclusion_hom(ker, g0)]
    while len(groups) < length - 1:
        last = maps[-1]
        proj = projection_hom(last.target, last.cokernel())
        emb = _graph_embedding(rng, proj.target, bound)
        maps.append(emb.compose(proj))
        groups.append(emb.target)
    last = maps[-1]
    proj = projection_hom(last.target, last.cokernel())
    maps.append(proj)
    groups.append(proj.target)
    return LatticeExactSequence(tuple(groups), tuple(maps))


def random_nine_diagram(rng: random.Random, bound: int = 6) -> NineDiagram:
    """Diagram of subquotients of one group ``B`` cut out by subgroups ``P``, ``Q``:

        P∩Q  ->  P  ->  P/(P∩Q)
         Q   ->  B  ->  B/Q
      Q/(P∩Q) -> B/P -> B/(P+Q)
    """
    b = random_group(rng, max_gens=4, bound=bound)
    n = b.ngens
    rel = b.relation_lattice()

    def subgroup():
        k = rng.randint(0, n + 1)
        gens = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(k)]
        return Lattice(gens, n) + rel

    p, q = subgroup(), subgroup()
    pq = p.intersect(q)
    full = Lattice(eye(n), n)
    grid = [
        [Subquotient(pq, rel), Subquotient(p, rel), Subquotient(p, pq)],
        [Subquotient(q, rel), Subquotient(full, rel), Subquotient(full, q)],
        [Subquotient(q, pq), Subquotient(full, p), Subquotient(full, p + q)],
    ]
    groups = tuple(tuple(s.group for s in row) for row in grid)
    row_maps = tuple(
        (induced_hom(grid[r][0], grid[r][1]), induced_hom(grid[r][1], grid[r][2])) for r in range(3)
    )
    col_maps = tuple(
        (induced_hom(grid[0][c], grid[1][c]), induced_hom(grid[1][c], grid[2][c])) for c in range(3)
    )
    return NineDiagram(groups, row_maps, col_maps)


# ---------------------------------------------------------------------------
# actions of finite cyclic groups


def cyclotomic_polynomial(k: int) -> list[int]:
    """Coefficients (low to high) of the k-th cyclotomic polynomial."""
    num = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            num = _poly_divexact(num, cyclotomic_polynomial(d))
    return num


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] // den[-1]
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    assert not any(num), "inexact polynomial division"
    return out


def companion(poly: list[int]) -> list[list[int]]:
    """Companion matrix of a monic polynomial given low-to-high."""
    deg = len(poly) - 1
    m = [[0] * deg for _ in range(deg)]
    for i in range(1, deg):
        m[i][i - 1] = 1
    for i in range(deg):
        m[i][deg - 1] = -poly[i]
    return m


def random_unimodular(rng: random.Random, n: int, steps: int = 6, bound: int = 2) -> tuple[list[list[int]], list[list[int]]]:
    """Random ``u`` with ``det u = +-1`` together with its inverse."""
    u, uinv = eye(n), eye(n)
    if n < 2:
        if n == 1 and rng.random() < 0.5:
            return [[-1]], [[-1]]
        return u, uinv
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        q = rng.randint(-bound, bound)
        # u <- E u with E = I + q e_i e_j^T ; uinv <- uinv E^{-1}
        u[i] = [a + q * b for a, b in zip(u[i], u[j])]
        for row in uinv:
            row[j] -= q * row[i]
    return u, uinv


def block_diag(blocks: list[list[list[int]]]) -> list[list[int]]:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            out[off + i][off:off + k] = b[i]
        off += k
    return out


def random_lattice_action(rng: random.Random, max_blocks: int = 3, kinds=("perm", "sign", "cyclo", "trivial")):
    """Random finite-order automorphism of ``Z^n``.

    Returns ``(sigma, order)`` where ``order`` is the exact order of sigma.
    """
    blocks, orders = [], []
    for _ in range(rng.randint(1, max_blocks)):
        kind = rng.choice(kinds)
        if kind == "perm":
            k = rng.randint(1, 4)
            perm = list(range(k))
            rng.shuffle(perm)
            blocks.append([[int(perm[j] == i) for j in range(k)] for i in range(k)])
            orders.append(_perm_order(perm))
        elif kind == "sign":
            blocks.append([[-1]])
            orders.append(2)
        elif kind == "cyclo":
            k = rng.choice([1, 2, 3, 4, 5, 6, 8, 10, 12])
            blocks.append(companion(cyclotomic_polynomial(k)))
            orders.append(k)
        else:
            blocks.append([[1]])
            orders.append(1)
    sigma = block_diag(blocks)
    n = len(sigma)
    u, uinv = random_unimodular(rng, n)
    sigma = matmul(matmul(u, sigma, n), uinv, n)
    return sigma, lcm(*orders)


def _perm_order(perm: list[int]) -> int:
    seen, order = set(), 1
    for s in range(len(perm)):
        if s in seen:
            continue
        length, x = 0, s
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        order = lcm(order, length)
    return order


def random_cyclic_module(rng: random.Random, max_blocks: int = 3) -> CyclicModule:
    sigma, order = random_lattice_action(rng, max_blocks)
    return CyclicModule.lattice(sigma, order)


def _stable_sublattice(rng: random.Random, m: CyclicModule, nvec: int, bound: int, full: bool = False) -> Lattice:
    n = m.group.ngens
    vecs = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(nvec)]
    if full:
        # k e_i for small k keeps the index bounded and the rank full
        vecs += [[rng.randint(2, 7) * (i == j) for j in range(n)] for i in range(n)]
    return orbit_lattice(m, vecs)


def random_cyclic_ses(rng: random.Random, bound: int = 3) -> tuple[CyclicModule, CyclicModule, CyclicModule]:
    """``(M', M, M'')`` with ``0 -> M' -> M -> M'' -> 0`` exact and equivariant.

    ``M`` is a lattice with a finite-order action, ``M'`` a stable
    sublattice and ``M''`` the (possibly non-free) quotient.
    """
    m = random_cyclic_module(rng)
    n = m.group.ngens
    sub = _stable_sublattice(rng, m, rng.randint(0, 2), bound)
    full = Lattice(eye(n), n)
    zero = Lattice([], n)
    return induced_module(m, Subquotient(sub, zero)), m, induced_module(m, Subquotient(full, sub))


def random_finite_module(rng: random.Random, max_order: int = 200, tries: int = 100) -> CyclicModule:
    """Finite ``Z^n / L`` with ``L`` stable under a random finite-order action."""
    for _ in range(tries):
        m = random_cyclic_module(rng, max_blocks=2)
        n = m.group.ngens
        sub = _stable_sublattice(rng, m, rng.randint(0, 1), 2, full=True)
        q = induced_module(m, Subquotient(Lattice(eye(n), n), sub))
        if q.group.is_finite() and 2 <= q.group.order() <= max_order:
            return q
    return CyclicModule.from_rows(FgAbGroup(0, (2,)), [[1]], 1)
