"""Exact integer linear algebra and finitely generated abelian groups.

Everything here works on arbitrary-precision Python integers. The central
routine is :func:`smith_normal_form`; groups, homomorphisms, kernels and
cokernels are all reduced to it.

Conventions
-----------
* A group ``FgAbGroup(r, (e_1, ..., e_t))`` is ``Z^r + Z/e_1 + ... + Z/e_t``
  with ``e_1 | e_2 | ... | e_t`` and every ``e_i >= 2``.  Its canonical
  generators are ordered free ones first, then the torsion ones.
* Elements of a group are integer column vectors of length ``r + t`` in the
  canonical generators; two vectors are equal in the group when their
  difference lies in the relation lattice (``0`` on free slots, multiples of
  ``e_i`` on torsion slots).
* An :class:`AbHom` matrix has shape ``target.ngens x source.ngens`` and
  acts on column vectors.
* :func:`cokernel_group` reads the *rows* of its argument as relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from .errors import InputError

Rows = list[list[int]]


# ---------------------------------------------------------------------------
# plain list-of-rows helpers


def zeros(m: int, n: int) -> Rows:
    return [[0] * n for _ in range(m)]


def eye(n: int) -> Rows:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], ncols: int) -> list[list]:
    """Product of row-major matrices; ``ncols`` is the column count of ``b``."""
    bt = [[row[j] for row in b] for j in range(ncols)]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*a)]


def hstack(a: Rows, b: Rows, nrows: int) -> Rows:
    if not a:
        a = [[] for _ in range(nrows)]
    if not b:
        b = [[] for _ in range(nrows)]
    return [ra + rb for ra, rb in zip(a, b)]


def columns(a: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    return [[row[j] for row in a] for j in range(ncols)]


def from_columns(cols: Sequence[Sequence[int]], nrows: int) -> Rows:
    return [[c[i] for c in cols] for i in range(nrows)]


def det(a: Sequence[Sequence]) -> Fraction | int:
    """Determinant by fraction-free (Bareiss) elimination for integers,
    plain Gaussian elimination otherwise.  ``det([]) == 1``."""
    n = len(a)
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in a for x in row):
        m = [list(r) for r in a]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]
    m = [[Fraction(x) for x in r] for r in a]
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            result = -result
        result *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return result


def rank_q(a: Sequence[Sequence], ncols: int | None = None) -> int:
    """Rank over the rationals."""
    m = [[Fraction(x) for x in r] for r in a]
    if not m:
        return 0
    n = len(m[0]) if ncols is None else ncols
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


# ---------------------------------------------------------------------------
# public matrix type


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        if not all(isinstance(x, int) for x in self.entries):
            raise InputError("matrix entries must be integers")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        n = len(rows[0]) if rows else (ncols or 0)
        if any(len(r) != n for r in rows):
            raise InputError("ragged matrix rows")
        return cls(len(rows), n, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls.from_rows(eye(n), n)

    @classmethod
    def zero(cls, m: int, n: int) -> IntMatrix:
        return cls(m, n, (0,) * (m * n))

    def to_rows(self) -> Rows:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise InputError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        return IntMatrix.from_rows(matmul(self.to_rows(), other.to_rows(), other.cols), other.cols)

    @property
    def T(self) -> IntMatrix:
        return IntMatrix.from_rows(transpose(self.to_rows(), self.cols), self.rows)

    def det(self) -> int:
        if self.rows != self.cols:
            raise InputError("determinant of a non-square matrix")
        return det(self.to_rows())

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def __str__(self) -> str:
        rows = self.to_rows()
        if not rows:
            return f"[] ({self.rows}x{self.cols})"
        width = max(len(str(x)) for x in self.entries) if self.entries else 1
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in rows)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    """``d == u @ a @ v`` with ``u``, ``v`` unimodular and ``d`` diagonal."""

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def invariants(self) -> list[int]:
        return self.d.diagonal()

    @property
    def rank(self) -> int:
        return sum(1 for x in self.invariants if x != 0)


def _snf(a: Sequence[Sequence[int]], m: int, n: int):
    """Core elimination.  Returns ``(d, u, uinv, v, vinv)`` as row lists.

    Pivot: smallest nonzero absolute value in the remaining block, ties
    broken by lowest (row, column) index.
    """
    a = [list(r) for r in a]
    u, uinv, v, vinv = eye(m), eye(m), eye(n), eye(n)

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]
        for row in uinv:
            row[i], row[k] = row[k], row[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]
        vinv[j], vinv[k] = vinv[k], vinv[j]

    def add_row(i, t, q):
        # row_i += q * row_t
        ai, at = a[i], a[t]
        for c in range(n):
            ai[c] += q * at[c]
        ui, ut = u[i], u[t]
        for c in range(m):
            ui[c] += q * ut[c]
        for row in uinv:
            row[t] -= q * row[i]

    def add_col(j, t, q):
        # col_j += q * col_t
        for row in a:
            row[j] += q * row[t]
        for row in v:
            row[j] += q * row[t]
        vj, vt = vinv[j], vinv[t]
        for c in range(n):
            vt[c] -= q * vj[c]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = abs(a[i][j])
                if x and (best is None or x < best[0]):
                    best = (x, i, j)
        if best is None:
            break
        _, i0, j0 = best
        if i0 != t:
            swap_rows(i0, t)
        if j0 != t:
            swap_cols(j0, t)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            if dirty:
                k = min((i for i in range(t, m) if a[i][t]), key=lambda i: (abs(a[i][t]), i))
                if k != t:
                    swap_rows(k, t)
                continue
            p = a[t][t]
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                k = min((j for j in range(t, n) if a[t][j]), key=lambda j: (abs(a[t][j]), j))
                if k != t:
                    swap_cols(k, t)
                continue
            p = a[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
            for row in uinv:
                row[t] = -row[t]
    return a, u, uinv, v, vinv


def smith_normal_form(a: IntMatrix) -> SmithForm:
    d, u, _, v, _ = _snf(a.to_rows(), a.rows, a.cols)
    return SmithForm(
        IntMatrix.from_rows(d, a.cols),
        IntMatrix.from_rows(u, a.rows),
        IntMatrix.from_rows(v, a.cols),
    )


# ---------------------------------------------------------------------------
# lattices in Z^n given by generating columns


def integer_kernel(a: Rows, m: int, n: int) -> list[list[int]]:
    """Basis (as column vectors) of ``{x in Z^n : a x = 0}``."""
    d, _, _, v, _ = _snf(a, m, n)
    r = sum(1 for i in range(min(m, n)) if d[i][i])
    return [[v[i][j] for i in range(n)] for j in range(r, n)]


class Lattice:
    """Full-or-partial rank sublattice of ``Z^n`` with a membership solver.

    Built from arbitrary generating columns.  ``basis`` columns are
    ``uinv[:, i] * d_i``; coordinates of a member ``x`` are
    ``(u x)_i / d_i``.
    """

    def __init__(self, gens: Iterable[Sequence[int]], n: int):
        gens = [list(g) for g in gens if any(g)]
        self.n = n
        if not gens:
            self.basis: list[list[int]] = []
            self._u = eye(n)
            self._d: list[int] = []
            return
        w = from_columns(gens, n)
        d, u, uinv, _, _ = _snf(w, n, len(gens))
        diag = [d[i][i] for i in range(min(n, len(gens)))]
        r = sum(1 for x in diag if x)
        self._u = u
        self._d = diag[:r]
        self.basis = [[uinv[i][k] * diag[k] for i in range(n)] for k in range(r)]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def solve(self, x: Sequence[int]) -> list[int] | None:
        """Integer coordinates of ``x`` in ``basis``, or ``None`` if ``x`` is not a member."""
        ux = matvec(self._u, x)
        r = len(self._d)
        if any(ux[i] for i in range(r, self.n)):
            return None
        out = []
        for i in range(r):
            q, rem = divmod(ux[i], self._d[i])
            if rem:
                return None
            out.append(q)
        return out

    def contains(self, x: Sequence[int]) -> bool:
        return self.solve(x) is not None

    def contains_lattice(self, other: Lattice) -> bool:
        return all(self.contains(b) for b in other.basis)

    def __add__(self, other: Lattice) -> Lattice:
        return Lattice(self.basis + other.basis, self.n)

    def intersect(self, other: Lattice) -> Lattice:
        if not self.basis or not other.basis:
            return Lattice([], self.n)
        k1, k2 = len(self.basis), len(other.basis)
        cols = self.basis + [[-x for x in b] for b in other.basis]
        ker = integer_kernel(from_columns(cols, self.n), self.n, k1 + k2)
        gens = [
            [sum(c[j] * self.basis[j][i] for j in range(k1)) for i in range(self.n)]
            for c in ker
        ]
        return Lattice(gens, self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.n == other.n and self.contains_lattice(other) and other.contains_lattice(self)

    __hash__ = None  # type: ignore[assignment]


def preimage_lattice(a: Rows, m: int, n: int, target: Lattice) -> Lattice:
    """``{x in Z^n : a x in target}`` for an ``m x n`` integer matrix ``a``."""
    tb = target.basis
    cols = columns(a, n) + [[-x for x in b] for b in tb]
    ker = integer_kernel(from_columns(cols, m), m, n + len(tb)) if m else [
        [1 if i == j else 0 for i in range(n)] for j in range(n)
    ]
    return Lattice([k[:n] for k in ker], n)


# ---------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class FgAbGroup:
    """``Z^free_rank`` plus cyclic factors in invariant-factor form."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(int(e) for e in self.invariant_factors))
        if self.free_rank < 0:
            raise InputError("free rank must be nonnegative")
        es = self.invariant_factors
        if any(e < 2 for e in es):
            raise InputError(f"invariant factors must be >= 2, got {es}")
        if any(es[i + 1] % es[i] for i in range(len(es) - 1)):
            raise InputError(f"invariant factors must form a divisibility chain, got {es}")

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.invariant_factors)

    @property
    def torsion_rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def moduli(self) -> list[int]:
        """Per-generator order, ``0`` for free generators."""
        return [0] * self.free_rank + list(self.invariant_factors)

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def order(self) -> int:
        if self.free_rank:
            raise InputError("infinite group has no finite order")
        return prod(self.invariant_factors)

    def relation_lattice(self) -> Lattice:
        n = self.ngens
        gens = []
        for k, e in enumerate(self.invariant_factors):
            g = [0] * n
            g[self.free_rank + k] = e
            gens.append(g)
        return Lattice(gens, n)

    def reduce(self, x: Sequence[int]) -> list[int]:
        return [xi % e if e else xi for xi, e in zip(x, self.moduli)]

    def is_zero(self, x: Sequence[int]) -> bool:
        return all((xi % e == 0) if e else xi == 0 for xi, e in zip(x, self.moduli))

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{e}" for e in self.invariant_factors]
        return " + ".join(parts) if parts else "0"


def torsion_order(g: FgAbGroup) -> int:
    return prod(g.invariant_factors)


class Subquotient:
    """The group ``X / Y`` for lattices ``Y <= X <= Z^n``, normalized.

    ``coords`` sends a member of ``X`` to canonical coordinates of the
    normalized group; ``lift`` goes back to ``Z^n``.
    """

    def __init__(self, x: Lattice, y: Lattice):
        if not x.contains_lattice(y):
            raise InputError("relation lattice is not contained in the generator lattice")
        self.x, self.y, self.n = x, y, x.n
        k = x.rank
        rel_cols = [x.solve(b) for b in y.basis]
        if rel_cols:
            d, u, uinv, _, _ = _snf(from_columns(rel_cols, k), k, len(rel_cols))
            diag = [d[i][i] for i in range(min(k, len(rel_cols)))]
        else:
            u, uinv, diag = eye(k), eye(k), []
        r = sum(1 for e in diag if e)
        free_idx = list(range(r, k))
        tors_idx = [i for i in range(r) if diag[i] != 1]
        self.group = FgAbGroup(len(free_idx), tuple(diag[i] for i in tors_idx))
        order = free_idx + tors_idx
        self._p = [u[i] for i in order]
        # canonical generator j -> Z^n vector
        self._gens = [
            [sum(x.basis[c][row] * uinv[c][i] for c in range(k)) for row in range(self.n)]
            for i in order
        ]

    def coords(self, v: Sequence[int]) -> list[int]:
        c = self.x.solve(v)
        if c is None:
            raise InputError("vector does not lie in the generator lattice")
        return self.group.reduce(matvec(self._p, c))

    def lift(self, c: Sequence[int]) -> list[int]:
        out = [0] * self.n
        for cj, g in zip(c, self._gens):
            if cj:
                for i in range(self.n):
                    out[i] += cj * g[i]
        return out

    def generator_lifts(self) -> list[list[int]]:
        return [list(g) for g in self._gens]


def cokernel_group(a: IntMatrix) -> FgAbGroup:
    """``Z^cols`` modulo the lattice spanned by the rows of ``a``."""
    n = a.cols
    full = Lattice([[1 if i == j else 0 for i in range(n)] for j in range(n)], n)
    return Subquotient(full, Lattice(a.to_rows(), n)).group


def present(relations: Sequence[Sequence[int]], n: int) -> Subquotient:
    """``Z^n`` modulo the given relation vectors, with coordinate maps."""
    full = Lattice([[1 if i == j else 0 for i in range(n)] for j in range(n)], n)
    return Subquotient(full, Lattice(relations, n))


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class AbHom:
    """Homomorphism between normalized groups, acting on canonical generators."""

    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix
    _rows: Rows = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        m = self.matrix
        if (m.rows, m.cols) != (self.target.ngens, self.source.ngens):
            raise InputError(
                f"hom matrix is {m.rows}x{m.cols}, expected "
                f"{self.target.ngens}x{self.source.ngens}"
            )
        rows = m.to_rows()
        object.__setattr__(self, "_rows", rows)
        src = self.source
        for k, e in enumerate(src.invariant_factors):
            j = src.free_rank + k
            col = [e * rows[i][j] for i in range(m.rows)]
            if not self.target.is_zero(col):
                raise InputError(
                    f"hom does not respect relations: generator {j} of order {e} "
                    "maps to an element of different order"
                )

    @classmethod
    def from_rows(cls, source: FgAbGroup, target: FgAbGroup, rows: Sequence[Sequence[int]]) -> AbHom:
        return cls(source, target, IntMatrix.from_rows(rows, source.ngens))

    @classmethod
    def identity(cls, g: FgAbGroup) -> AbHom:
        return cls(g, g, IntMatrix.identity(g.ngens))

    @classmethod
    def zero(cls, source: FgAbGroup, target: FgAbGroup) -> AbHom:
        return cls(source, target, IntMatrix.zero(target.ngens, source.ngens))

    @property
    def rows(self) -> Rows:
        return [list(r) for r in self._rows]

    def __call__(self, x: Sequence[int]) -> list[int]:
        return self.target.reduce(matvec(self._rows, x))

    def compose(self, inner: AbHom) -> AbHom:
        """``self o inner``."""
        if inner.target != self.source:
            raise InputError("cannot compose: groups do not match")
        prod_rows = matmul(self._rows, inner._rows, inner.source.ngens)
        reduced = transpose(
            [self.target.reduce(c) for c in columns(prod_rows, inner.source.ngens)],
            self.target.ngens,
        ) if inner.source.ngens else [[] for _ in range(self.target.ngens)]
        return AbHom.from_rows(inner.source, self.target, reduced)

    def is_zero(self) -> bool:
        return all(self.target.is_zero(c) for c in columns(self._rows, self.source.ngens))

    def same_map(self, other: AbHom) -> bool:
        if (self.source, self.target) != (other.source, other.target):
            return False
        n = self.source.ngens
        return all(
            self.target.is_zero([a - b for a, b in zip(c1, c2)])
            for c1, c2 in zip(columns(self._rows, n), columns(other._rows, n))
        )

    def free_block(self) -> Rows:
        """Matrix of the induced map ``source (x) R -> target (x) R``."""
        fs, ft = self.source.free_rank, self.target.free_rank
        return [self._rows[i][:fs] for i in range(ft)]

    def torsion_block(self) -> Rows:
        fs, ft = self.source.free_rank, self.target.free_rank
        return [self._rows[i][fs:] for i in range(ft, self.target.ngens)]

    def kernel_lattice(self) -> Lattice:
        return preimage_lattice(self._rows, self.target.ngens, self.source.ngens,
                                self.target.relation_lattice())

    def image_lattice(self) -> Lattice:
        return Lattice(columns(self._rows, self.source.ngens), self.target.ngens) + \
            self.target.relation_lattice()

    def kernel(self) -> Subquotient:
        return Subquotient(self.kernel_lattice(), self.source.relation_lattice())

    def cokernel(self) -> Subquotient:
        n = self.target.ngens
        full = Lattice([[1 if i == j else 0 for i in range(n)] for j in range(n)], n)
        return Subquotient(full, self.image_lattice())

    def image(self) -> Subquotient:
        return Subquotient(self.image_lattice(), self.target.relation_lattice())

    def is_injective(self) -> bool:
        return self.kernel().group.is_trivial()

    def is_surjective(self) -> bool:
        return self.cokernel().group.is_trivial()


def hom_kernel(f: AbHom) -> FgAbGroup:
    return f.kernel().group


def hom_cokernel(f: AbHom) -> FgAbGroup:
    return f.cokernel().group


def hom_image_rank(f: AbHom) -> int:
    return rank_q(f.free_block(), f.source.free_rank)


def torsion_restriction(f: AbHom) -> AbHom:
    """``f_tor : source_tor -> target_tor``."""
    s = FgAbGroup(0, f.source.invariant_factors)
    t = FgAbGroup(0, f.target.invariant_factors)
    return AbHom.from_rows(s, t, f.torsion_block() or [[] for _ in range(t.ngens)])


def inclusion_hom(sub: Subquotient, ambient: FgAbGroup) -> AbHom:
    """Hom ``sub.group -> ambient`` for a subquotient of the ambient's own coordinates."""
    cols = [ambient.reduce(g) for g in sub.generator_lifts()]
    return AbHom.from_rows(sub.group, ambient, from_columns(cols, ambient.ngens))


def projection_hom(ambient: FgAbGroup, quotient: Subquotient) -> AbHom:
    """Hom ``ambient -> quotient.group`` sending each canonical generator to its class."""
    n = ambient.ngens
    cols = [quotient.coords([int(i == j) for i in range(n)]) for j in range(n)]
    return AbHom.from_rows(ambient, quotient.group, from_columns(cols, quotient.group.ngens))


def induced_hom(src: Subquotient, dst: Subquotient, ambient_map=None) -> AbHom:
    """Map ``X/Y -> X'/Y'`` induced by the identity of ``Z^n`` (or ``ambient_map``)."""
    f = ambient_map or (lambda v: v)
    cols = [dst.coords(f(g)) for g in src.generator_lifts()]
    return AbHom.from_rows(src.group, dst.group, from_columns(cols, dst.group.ngens))


def direct_sum(groups: Sequence[FgAbGroup]) -> tuple[Subquotient, list[int]]:
    """Normalized direct sum; returns the presentation over the concatenated
    generators and the offset of each summand's block."""
    offsets, n = [], 0
    for g in groups:
        offsets.append(n)
        n += g.ngens
    rels = []
    for g, off in zip(groups, offsets):
        for b in g.relation_lattice().basis:
            v = [0] * n
            v[off:off + g.ngens] = b
            rels.append(v)
    return present(rels, n), offsets
