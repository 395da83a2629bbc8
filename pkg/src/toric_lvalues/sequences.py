"""Determinants of exact sequences and torsion-order identities.

For an exact sequence of finitely generated abelian groups
``0 -> A_0 -> A_1 -> ... -> A_n -> 0`` the real determinant ``nu`` is taken
with respect to integral bases (images of the canonical free generators),
and equals the alternating product of torsion orders.  Everything here is
exact: values are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import InputError, VerificationError
from .lattice import (
    AbHom,
    FgAbGroup,
    Subquotient,
    _snf,
    columns,
    det,
    torsion_order,
    torsion_restriction,
)


@dataclass(frozen=True)
class LatticeExactSequence:
    """``groups[0] -> groups[1] -> ... -> groups[-1]`` with zeros at both ends."""

    groups: tuple[FgAbGroup, ...]
    maps: tuple[AbHom, ...]

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.groups) < 2:
            raise InputError("an exact sequence needs at least two groups")
        if len(self.maps) != len(self.groups) - 1:
            raise InputError("need exactly one map between consecutive groups")
        for i, f in enumerate(self.maps):
            if f.source != self.groups[i] or f.target != self.groups[i + 1]:
                raise InputError(f"map {i} is not {self.groups[i]} -> {self.groups[i + 1]}")

    def __len__(self) -> int:
        return len(self.groups)

    def real_dims(self) -> list[int]:
        return [g.free_rank for g in self.groups]

    def real_maps(self) -> list[list[list[int]]]:
        return [f.free_block() for f in self.maps]


@dataclass(frozen=True)
class ExactnessReport:
    exact: bool
    position: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.exact


def _exact_at(prev: AbHom | None, nxt: AbHom | None) -> str:
    if prev is None:
        if nxt.is_injective():
            return ""
        return f"kernel {nxt.kernel().group} is nonzero"
    if nxt is None:
        if prev.is_surjective():
            return ""
        return f"cokernel {prev.cokernel().group} is nonzero"
    if not nxt.compose(prev).is_zero():
        return "composite of consecutive maps is nonzero"
    ker = nxt.kernel_lattice()
    homology = Subquotient(ker, prev.image_lattice())
    if homology.group.is_trivial():
        return ""
    return f"homology {homology.group} is nonzero"


def check_exactness(seq: LatticeExactSequence) -> ExactnessReport:
    """Exactness at every group; ``position`` is the index of the first failing group."""
    maps = seq.maps
    for i in range(len(seq.groups)):
        prev = maps[i - 1] if i > 0 else None
        nxt = maps[i] if i < len(maps) else None
        reason = _exact_at(prev, nxt)
        if reason:
            return ExactnessReport(False, i, reason)
    return ExactnessReport(True)


# ---------------------------------------------------------------------------
# determinant of an exact sequence of real vector spaces


def _to_integer(a: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    den = 1
    for row in a:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    return [[int(Fraction(x) * den) for x in row] for row in a], den


def _section(t1: Sequence[Sequence], m: int, n: int, rng: random.Random | None):
    """Right inverse ``gamma`` (``n x m``) of a surjective ``m x n`` matrix, via its SNF.

    With ``rng`` the section is perturbed by random kernel vectors.
    """
    ti, den = _to_integer(t1)
    d, u, _, v, _ = _snf(ti, m, n)
    if any(d[i][i] == 0 for i in range(m)):
        raise InputError("map onto the last space is not surjective over R")
    # gamma = den * V[:, :m] diag(1/d) U
    gamma = [
        [sum(Fraction(v[r][k] * u[k][c] * den, d[k][k]) for k in range(m)) for c in range(m)]
        for r in range(n)
    ]
    if rng is not None and n > m:
        ker = [[v[r][k] for r in range(n)] for k in range(m, n)]
        for c in range(m):
            for kv in ker:
                s = rng.randint(-3, 3)
                if s:
                    for r in range(n):
                        gamma[r][c] += s * kv[r]
    return gamma


def _image_split(t: Sequence[Sequence], m: int, n: int, rng: random.Random | None):
    """Basis ``b`` (``m x k``) of the image of ``t`` and coordinates ``c`` (``k x n``)
    with ``b c = t``."""
    ti, den = _to_integer(t)
    d, _, uinv, _, vinv = _snf(ti, m, n)
    k = sum(1 for i in range(min(m, n)) if d[i][i])
    b = [[Fraction(uinv[r][i] * d[i][i], den) for i in range(k)] for r in range(m)]
    c = [[Fraction(vinv[i][j]) for j in range(n)] for i in range(k)]
    if rng is not None and k:
        g = _random_invertible(k, rng)
        ginv = _inverse(g)
        b = [[sum(row[a] * g[a][j] for a in range(k)) for j in range(k)] for row in b]
        c = [[sum(ginv[i][a] * c[a][j] for a in range(k)) for j in range(n)] for i in range(k)]
    return b, c, k


def _random_invertible(k: int, rng: random.Random) -> list[list[Fraction]]:
    while True:
        g = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(k)] for _ in range(k)]
        if det(g) != 0:
            return g


def _inverse(g: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(g)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(g)]
    for c in range(k):
        p = next(i for i in range(c, k) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[k:] for row in aug]


def nu_of_real_sequence(
    dims: Sequence[int],
    maps: Sequence[Sequence[Sequence]],
    rng: random.Random | None = None,
) -> Fraction:
    """``nu`` of ``0 -> V_0 -> ... -> V_n -> 0`` in the standard bases.

    ``maps[i]`` is a ``dims[i+1] x dims[i]`` matrix (integers or fractions);
    the sequence is assumed exact.  Passing ``rng`` randomizes every
    internal choice (sections, bases of intermediate images) without
    changing the result.
    """
    dims = list(dims)
    n = len(maps)
    if n == 1:
        if dims[0] != dims[1]:
            raise InputError("0 -> V -> W -> 0 needs dim V == dim W")
        return abs(Fraction(det(maps[0])))
    if n == 2:
        d0, d1, d2 = dims
        if d0 + d2 != d1:
            raise InputError("dimensions do not add up along a short exact sequence")
        gamma = _section(maps[1], d2, d1, rng) if d2 else [[] for _ in range(d1)]
        theta = [list(maps[0][r]) + list(gamma[r]) for r in range(d1)] if d0 else gamma
        return abs(Fraction(det(theta)))
    # split off the last two spaces at the image of maps[n-2]
    b, c, k = _image_split(maps[n - 2], dims[n - 1], dims[n - 2], rng)
    head = nu_of_real_sequence(dims[: n - 1] + [k], list(maps[: n - 2]) + [c], rng)
    tail = nu_of_real_sequence([k, dims[n - 1], dims[n]], [b, maps[n - 1]], rng)
    return head * tail if n % 2 == 0 else head / tail


def _require_exact(seq: LatticeExactSequence) -> None:
    report = check_exactness(seq)
    if not report:
        raise InputError(f"sequence is not exact at position {report.position}: {report.reason}")


def nu_real(seq: LatticeExactSequence, rng: random.Random | None = None, *, check: bool = True) -> Fraction:
    """``nu`` of the real-tensored sequence with respect to integral bases."""
    if check:
        _require_exact(seq)
    return nu_of_real_sequence(seq.real_dims(), seq.real_maps(), rng)


def torsion_alternating_product(seq: LatticeExactSequence) -> Fraction:
    out = Fraction(1)
    for i, g in enumerate(seq.groups):
        t = torsion_order(g)
        out = out * t if i % 2 == 0 else out / t
    return out


def verify_det_tor(seq: LatticeExactSequence) -> bool:
    return nu_real(seq) == torsion_alternating_product(seq)


def split_nu(seq: LatticeExactSequence, i: int) -> Fraction:
    """``nu`` recomputed by cutting the sequence at the image of ``maps[i]``
    (``0 < i < n-1`` in map indices) and recombining the two halves."""
    n = len(seq.maps)
    if not 0 <= i < n:
        raise InputError("split index out of range")
    dims, maps = seq.real_dims(), seq.real_maps()
    b, c, k = _image_split(maps[i], dims[i + 1], dims[i], None)
    first = nu_of_real_sequence(dims[: i + 1] + [k], maps[:i] + [c])
    second = nu_of_real_sequence([k] + dims[i + 1:], [b] + maps[i + 1:])
    return first * second ** ((-1) ** i)


def dual_sequence(dims: Sequence[int], maps: Sequence[Sequence[Sequence]]):
    """Dual real sequence ``0 -> V_n^* -> ... -> V_0^* -> 0`` in dual bases."""
    rdims = list(reversed(dims))
    rmaps = [columns(m, d) for m, d in zip(reversed(maps), reversed(dims[:-1]))]
    return rdims, rmaps


# ---------------------------------------------------------------------------
# 3 x 3 diagrams


@dataclass(frozen=True)
class NineDiagram:
    """Commutative 3x3 diagram with exact rows and columns.

    ``groups[r][c]``: rows are E_A, E_B, E_C; columns E_1, E_2, E_3.
    ``row_maps[r] = (phi, psi)`` along row ``r``;
    ``col_maps[c] = (theta, tau)`` down column ``c``.
    """

    groups: tuple[tuple[FgAbGroup, ...], ...]
    row_maps: tuple[tuple[AbHom, AbHom], ...]
    col_maps: tuple[tuple[AbHom, AbHom], ...]

    def row(self, r: int) -> LatticeExactSequence:
        return LatticeExactSequence(self.groups[r], self.row_maps[r])

    def column(self, c: int) -> LatticeExactSequence:
        return LatticeExactSequence(tuple(self.groups[r][c] for r in range(3)), self.col_maps[c])

    def check(self) -> None:
        for k in range(3):
            for name, seq in ((f"row {k}", self.row(k)), (f"column {k}", self.column(k))):
                rep = check_exactness(seq)
                if not rep:
                    raise InputError(f"{name} not exact at {rep.position}: {rep.reason}")
        for r in range(2):
            for c in range(2):
                # square with corners (r,c) -> (r,c+1) -> (r+1,c+1)
                right_down = self.col_maps[c + 1][r].compose(self.row_maps[r][c])
                down_right = self.row_maps[r + 1][c].compose(self.col_maps[c][r])
                if not right_down.same_map(down_right):
                    raise InputError(f"square at ({r},{c}) does not commute")


def verify_3x3(diagram: NineDiagram, rng: random.Random | None = None) -> bool:
    diagram.check()
    rows = [nu_real(diagram.row(k), rng, check=False) for k in range(3)]
    cols = [nu_real(diagram.column(k), rng, check=False) for k in range(3)]
    return cols[1] / (cols[0] * cols[2]) == rows[1] / (rows[0] * rows[2])


# ---------------------------------------------------------------------------
# five-term sequences with finite ends


def five_term_nu(seq: LatticeExactSequence) -> Fraction:
    """``nu(0 -> B_R -> C_R -> D_R -> 0)`` for an exact ``0->A->B->C->D->E->0``
    with ``A`` and ``E`` finite.  Raises :class:`VerificationError` if the
    value disagrees with either torsion formula."""
    if len(seq.groups) != 5:
        raise InputError("five_term_nu needs exactly five groups A, B, C, D, E")
    a, b, c, d, e = seq.groups
    if not (a.is_finite() and e.is_finite()):
        raise InputError("the outer groups A and E must be finite")
    _require_exact(seq)
    phi, psi = seq.maps[1], seq.maps[2]
    value = nu_of_real_sequence(
        [b.free_rank, c.free_rank, d.free_rank], [phi.free_block(), psi.free_block()]
    )
    formula = Fraction(torsion_order(b) * torsion_order(d),
                       a.order() * torsion_order(c) * e.order())
    cok_tor = torsion_order(torsion_restriction(psi).cokernel().group)
    cok = psi.cokernel().group
    alt = Fraction(cok_tor, cok.order())
    if not value == formula == alt:
        raise VerificationError(f"five-term identity failed: nu={value}, torsion={formula}, cok={alt}")
    return value
