"""Local Euler factors ``L_v(M, s) = det(1 - q^{-s} F | M^{I})^{-1}`` at ``s = 0``.

The leading term is kept symbolic as ``mantissa * (log q)^(-log_power)``
so that products over places stay exact.  Two independent routes are
provided: one through the Herbrand quotient of the Frobenius action and
one that factors ``(1 - t)^r`` out of ``det(1 - tF)`` directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclic import CyclicModule, herbrand_quotient, invariants_rank
from .errors import InputError, VerificationError
from .lattice import matmul

Poly = tuple[int, ...]  # coefficients, lowest degree first

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for ``n < 3.3e24``."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_power_base(q: int) -> int | None:
    """``p`` if ``q = p^k`` with ``k >= 1``, else ``None``."""
    if q < 2:
        return None
    for k in range(q.bit_length(), 0, -1):
        r = round(q ** (1.0 / k))
        for c in (r - 1, r, r + 1):
            if c >= 2 and c ** k == q and is_prime(c):
                return c
    return None


@dataclass(frozen=True)
class LocalPlaceData:
    """Residue norm ``q``, inertia degree ``f`` and Frobenius on ``M^{I_w}``."""

    q: int
    f: int
    module: CyclicModule

    def __post_init__(self):
        if prime_power_base(self.q) is None:
            raise InputError(f"residue norm {self.q} is not a prime power")
        if self.f < 1:
            raise InputError("inertia degree must be positive")
        if self.module.group.torsion_rank:
            raise InputError("the inertia invariants must be torsion free")
        if self.module.order != self.f:
            raise InputError(
                f"module order {self.module.order} does not match inertia degree {self.f}"
            )

    @property
    def rank(self) -> int:
        return self.module.group.free_rank


@dataclass(frozen=True)
class LocalLeadingTerm:
    """``L_v^*(M, 0) = mantissa * (log q)^(-log_power)``."""

    order_of_vanishing: int
    mantissa: Fraction
    log_power: int
    q: int

    @property
    def float_value(self) -> float:
        return float(self.mantissa) * math.log(self.q) ** (-self.log_power)

    def __str__(self) -> str:
        if self.log_power == 0:
            return f"{self.mantissa}"
        power = "" if self.log_power == 1 else f"^{self.log_power}"
        return f"{self.mantissa} / (log {self.q}){power}"


def charpoly(a: list[list[int]]) -> list[int]:
    """``det(x I - a)`` high-to-low, by Faddeev-LeVerrier (exact divisions)."""
    n = len(a)
    coeffs = [1]
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = matmul(a, m, n)
        for i in range(n):
            m[i][i] += coeffs[-1]
        am = matmul(a, m, n)
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise VerificationError("non-integral charpoly coefficient")
        coeffs.append(-tr // k)
    return coeffs


def local_l_polynomial(d: LocalPlaceData) -> Poly:
    """``P(t) = det(1 - t F)`` so that ``L_v = P(q^{-s})^{-1}``."""
    # det(1 - tF) = t^n det(t^{-1} - F): coefficients of the charpoly read low-to-high
    return tuple(charpoly(d.module.sigma_rows()))


def _divide_one_minus_t(p: list[int]) -> list[int] | None:
    """Exact quotient ``p / (1 - t)`` or ``None`` when ``p(1) != 0``."""
    if sum(p) != 0:
        return None
    # p = (1 - t) q  =>  q_k = sum_{i<=k} p_i
    out, acc = [], 0
    for c in p[:-1]:
        acc += c
        out.append(acc)
    return out


def local_order(d: LocalPlaceData) -> int:
    return -invariants_rank(d.module)


def root_multiplicity_at_one(p: Poly) -> int:
    p, k = list(p), 0
    while len(p) > 1:
        q = _divide_one_minus_t(p)
        if q is None:
            break
        p, k = q, k + 1
    return k


def local_leading_formula(d: LocalPlaceData) -> LocalLeadingTerm:
    """``h / (f log q)^r`` with ``h`` the Herbrand quotient of the Frobenius action."""
    r = invariants_rank(d.module)
    h = herbrand_quotient(d.module)
    return LocalLeadingTerm(-r, h / Fraction(d.f) ** r, r, d.q)


def local_leading_direct(d: LocalPlaceData) -> LocalLeadingTerm:
    """Factor ``P(t) = (1 - t)^r Q(t)``; leading term ``1 / (Q(1) (log q)^r)``."""
    p = list(local_l_polynomial(d))
    r = invariants_rank(d.module)
    for _ in range(r):
        p = _divide_one_minus_t(p)
        if p is None:
            raise VerificationError("(1 - t)^r does not divide det(1 - tF)")
    q1 = sum(p)
    if q1 == 0:
        raise VerificationError("Q(1) = 0: 1 is an eigenvalue of F off the fixed space")
    return LocalLeadingTerm(-r, Fraction(1, q1), r, d.q)


def crosscheck_local(d: LocalPlaceData) -> bool:
    a, b = local_leading_formula(d), local_leading_direct(d)
    return (a.mantissa, a.log_power, a.order_of_vanishing) == (
        b.mantissa, b.log_power, b.order_of_vanishing)


def product_of_leading_terms(terms: list[LocalLeadingTerm]) -> tuple[Fraction, dict[int, int]]:
    """Exact product: rational part and ``{q: total power of (log q)^-1}``."""
    mant = Fraction(1)
    logs: dict[int, int] = {}
    for t in terms:
        mant *= t.mantissa
        if t.log_power:
            logs[t.q] = logs.get(t.q, 0) + t.log_power
    return mant, logs
