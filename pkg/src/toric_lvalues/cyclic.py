"""Tate cohomology of a finite cyclic group acting on a f.g. abelian group.

A :class:`CyclicModule` is a normalized group ``M`` with the matrix of a
generator ``sigma`` on its canonical generators and a declared order ``n``
with ``sigma^n = 1``.  With ``N = 1 + sigma + ... + sigma^(n-1)``::

    H^0_T  = ker(sigma - 1) / N M
    H^-1_T = ker N / (sigma - 1) M
    h      = [H^0_T] / [H^-1_T]

All groups are computed as subquotients of the free cover ``Z^ngens``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError, VerificationError
from .lattice import (
    AbHom,
    FgAbGroup,
    IntMatrix,
    Lattice,
    Subquotient,
    columns,
    direct_sum,
    eye,
    from_columns,
    matmul,
    preimage_lattice,
    rank_q,
)


@dataclass(frozen=True)
class CyclicModule:
    group: FgAbGroup
    sigma: IntMatrix
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise InputError("declared order must be positive")
        n = self.group.ngens
        if (self.sigma.rows, self.sigma.cols) != (n, n):
            raise InputError(f"sigma must be {n}x{n} for {self.group}")
        # raises InputError when relations are not respected
        hom = AbHom(self.group, self.group, self.sigma)
        power = AbHom.identity(self.group)
        for _ in range(self.order):
            power = hom.compose(power)
        if not power.same_map(AbHom.identity(self.group)):
            raise InputError(f"sigma^{self.order} is not the identity")

    @classmethod
    def from_rows(cls, group: FgAbGroup, sigma: Sequence[Sequence[int]], order: int) -> CyclicModule:
        return cls(group, IntMatrix.from_rows(sigma, group.ngens), order)

    @classmethod
    def lattice(cls, sigma: Sequence[Sequence[int]], order: int) -> CyclicModule:
        """Action on ``Z^n`` given by an integer matrix."""
        return cls.from_rows(FgAbGroup(len(sigma)), sigma, order)

    @property
    def hom(self) -> AbHom:
        return AbHom(self.group, self.group, self.sigma)

    def sigma_rows(self) -> list[list[int]]:
        return self.sigma.to_rows()


@dataclass(frozen=True)
class TateGroups:
    h0_tate: FgAbGroup
    h_minus1_tate: FgAbGroup
    herbrand: Fraction

    def __post_init__(self):
        if not (self.h0_tate.is_finite() and self.h_minus1_tate.is_finite()):
            raise VerificationError("Tate cohomology groups must be finite")


def _norm_rows(sigma: list[list[int]], order: int) -> list[list[int]]:
    n = len(sigma)
    total = eye(n)
    power = eye(n)
    for _ in range(order - 1):
        power = matmul(sigma, power, n)
        total = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(total, power)]
    return total


def norm_endomorphism(m: CyclicModule) -> AbHom:
    """``N = sum_{i<n} sigma^i`` as a self-map (entries reduced on torsion slots)."""
    rows = _norm_rows(m.sigma_rows(), m.order)
    g = m.group
    cols = [g.reduce(c) for c in columns(rows, g.ngens)]
    return AbHom.from_rows(g, g, from_columns(cols, g.ngens))


def _minus_identity(sigma: list[list[int]]) -> list[list[int]]:
    return [[x - (i == j) for j, x in enumerate(row)] for i, row in enumerate(sigma)]


def tate_subquotients(m: CyclicModule) -> tuple[Subquotient, Subquotient]:
    """``(H^0_T, H^-1_T)`` as subquotients of ``Z^ngens``."""
    g = m.group
    n = g.ngens
    rel = g.relation_lattice()
    s1 = _minus_identity(m.sigma_rows())
    nr = _norm_rows(m.sigma_rows(), m.order)
    fixed = preimage_lattice(s1, n, n, rel)
    norm_image = Lattice(columns(nr, n), n) + rel
    norm_kernel = preimage_lattice(nr, n, n, rel)
    aug_image = Lattice(columns(s1, n), n) + rel
    return Subquotient(fixed, norm_image), Subquotient(norm_kernel, aug_image)


def tate_cohomology(m: CyclicModule) -> TateGroups:
    h0, hm1 = tate_subquotients(m)
    if not (h0.group.is_finite() and hm1.group.is_finite()):
        raise VerificationError("Tate cohomology came out infinite")
    return TateGroups(h0.group, hm1.group, Fraction(h0.group.order(), hm1.group.order()))


def herbrand_quotient(m: CyclicModule) -> Fraction:
    return tate_cohomology(m).herbrand


def invariants_rank(m: CyclicModule) -> int:
    """Rank of the fixed sublattice of ``M`` (equivalently of ``M_f``)."""
    block = [row[: m.group.free_rank] for row in m.sigma_rows()[: m.group.free_rank]]
    return m.group.free_rank - rank_q(_minus_identity(block), m.group.free_rank)


def conjugate(m: CyclicModule, u: Sequence[Sequence[int]], uinv: Sequence[Sequence[int]]) -> CyclicModule:
    """``u sigma u^-1`` on a free module (``u`` unimodular)."""
    if m.group.torsion_rank:
        raise InputError("conjugation helper is for lattices only")
    n = m.group.ngens
    s = matmul(matmul(u, m.sigma_rows(), n), uinv, n)
    return CyclicModule.from_rows(m.group, s, m.order)


def module_direct_sum(mods: Sequence[CyclicModule], order: int | None = None) -> CyclicModule:
    """Direct sum with block-diagonal action, renormalized."""
    from math import lcm

    sq, offsets = direct_sum([md.group for md in mods])
    total = sum(md.group.ngens for md in mods)
    big = [[0] * total for _ in range(total)]
    for md, off in zip(mods, offsets):
        k = md.group.ngens
        rows = md.sigma_rows()
        for i in range(k):
            big[off + i][off:off + k] = rows[i]
    n_out = sq.group.ngens
    cols = [sq.coords([sum(big[r][c] * g[c] for c in range(total)) for r in range(total)])
            for g in sq.generator_lifts()]
    order = order or lcm(*(md.order for md in mods))
    return CyclicModule.from_rows(sq.group, from_columns(cols, n_out), order)


def induced_module(m: CyclicModule, sub: Subquotient) -> CyclicModule:
    """Action induced on a sigma-stable subquotient of the free cover of ``m``."""
    s = m.sigma_rows()
    n = m.group.ngens

    def act(v):
        return [sum(s[i][j] * v[j] for j in range(n)) for i in range(n)]

    cols = [sub.coords(act(g)) for g in sub.generator_lifts()]
    return CyclicModule.from_rows(sub.group, from_columns(cols, sub.group.ngens), m.order)


def orbit_lattice(m: CyclicModule, vectors: Sequence[Sequence[int]]) -> Lattice:
    """Smallest sigma-stable lattice containing ``vectors`` and the relations."""
    s = m.sigma_rows()
    n = m.group.ngens
    gens = []
    for v in vectors:
        w = list(v)
        for _ in range(m.order):
            gens.append(w)
            w = [sum(s[i][j] * w[j] for j in range(n)) for i in range(n)]
    return Lattice(gens, n) + m.group.relation_lattice()
