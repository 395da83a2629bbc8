"""Euler characteristics and the algebraic vs analytic special-value comparisons.

The algebraic side is assembled from class numbers, units and roots of
unity; the analytic side from Dirichlet L-values.  All comparisons are on
absolute values since the sign of the leading term is not pinned down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .lseries import (
    LeadingValue,
    QuadraticCharacter,
    functional_ratio,
    l_at_one,
    l_at_zero,
    remove_euler_factors,
)
from .local import is_prime
from .quadratic import (
    FundamentalUnit,
    QuadraticField,
    TorusInvariants,
    class_number_of,
    fundamental_unit,
    torus_invariants,
)


def chi_finite_constant(n: int) -> int:
    """Euler characteristic of the constant sheaf ``Z/n``."""
    if n < 1:
        raise InputError("n must be positive")
    return 1


def chi_negligible(description: object = None) -> int:
    return 1


def chi_constructible(description: object = None) -> int:
    return 1


@dataclass(frozen=True)
class ConstantSheafChi:
    """``chi_U(Z) = h_S R_S / w`` for ``U = Spec O_{K,S}``."""

    field: QuadraticField
    s_norms: tuple[int, ...]
    value: float
    order: int

    def __post_init__(self):
        if not self.value > 0:
            raise InputError("Euler characteristic must be positive")


def chi_constant_z(field: QuadraticField, split_norms: Sequence[int] = ()) -> ConstantSheafChi:
    """``(h R / w) prod log N(w)`` over the removed finite places ``w`` of ``K``.

    The order is the rank of the ``S``-units, ``|S| - 1`` with ``S``
    containing the archimedean places.
    """
    for n in split_norms:
        if n < 2:
            raise InputError(f"place norm {n} is not >= 2")
    h = class_number_of(field)
    if field.is_real:
        reg, n_inf = fundamental_unit(field.d).regulator, 2
    else:
        reg, n_inf = 1.0, 1
    value = h * reg / field.w
    for n in split_norms:
        value *= math.log(n)
    return ConstantSheafChi(field, tuple(split_norms), value, n_inf + len(split_norms) - 1)


@dataclass(frozen=True)
class QuadraticTorusReport:
    d: int
    discriminant: int
    h: int
    w: int
    unit: FundamentalUnit | None
    torus: TorusInvariants
    algebraic_L0: LeadingValue
    analytic_L0: LeadingValue
    algebraic_L1: LeadingValue
    analytic_L1: LeadingValue
    abs_errors: dict = dc_field(default_factory=dict)

    @property
    def signature(self) -> str:
        return "real" if self.d > 0 else "imaginary"

    @property
    def max_error(self) -> float:
        return max(self.abs_errors.values())


def norm_torus_report(d: int, tol: float = 1e-8) -> QuadraticTorusReport:
    """Both sides of ``L*(T^, 0)`` and ``L*(T^, 1)`` for the norm-one torus of ``Q(sqrt d)``."""
    fld = QuadraticField.from_d(d)
    chi = QuadraticCharacter(fld.discriminant)
    tol_l = max(tol, 1e-12)
    h = class_number_of(fld)
    inv = torus_invariants(d, class_number=h)
    root = math.sqrt(abs(fld.discriminant))
    l1 = l_at_one(chi, tol_l)

    if fld.is_real:
        unit = fundamental_unit(d)
        alg0 = LeadingValue(inv.hom_rank, inv.ext1_order * inv.regulator_T / inv.w_T)
        alg1 = LeadingValue(0, 2 * h * unit.regulator / root)
        ana0 = LeadingValue(1, l1 / functional_ratio(fld))
    else:
        unit = None
        alg0 = LeadingValue.exact(inv.hom_rank, Fraction(inv.ext1_order, inv.w_T))
        alg1 = LeadingValue(0, 2 * math.pi * h / (root * fld.w))
        ana0 = l_at_zero(chi, tol_l)
    ana1 = LeadingValue(0, l1)

    if alg0.exact_value is not None and ana0.exact_value is not None:
        err0 = float(abs(alg0.exact_value - ana0.exact_value))
    else:
        err0 = abs(alg0.value - ana0.value)
    errors = {"L0": err0, "L1": abs(alg1.value - ana1.value)}
    return QuadraticTorusReport(d, fld.discriminant, h, fld.w, unit, inv, alg0, ana0, alg1, ana1, errors)


@dataclass(frozen=True)
class ZetaSComparison:
    field: QuadraticField
    primes: tuple[int, ...]
    place_norms: tuple[int, ...]
    via_chi: ConstantSheafChi
    via_l: LeadingValue
    abs_error: float
    tol: float

    @property
    def agree(self) -> bool:
        return self.via_chi.order == self.via_l.order and self.abs_error <= self.tol


def resolve_places(field: QuadraticField, primes: Sequence[int]) -> list[int]:
    """Norms of the places of ``K`` above each rational prime (split: ``p, p``; inert: ``p^2``)."""
    chi = QuadraticCharacter(field.discriminant)
    norms: list[int] = []
    for p in primes:
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        c = chi(p)
        if c == 0:
            raise InputError(f"{p} ramifies in {field}")
        norms.extend([p, p] if c == 1 else [p * p])
    return norms


def zeta_s_comparison(field: QuadraticField, removed_primes: Sequence[int] = (), tol: float = 1e-8) -> ZetaSComparison:
    """``|zeta*_{K,S}(0)|`` as ``h_S R_S / w`` and as ``|zeta*_S(0) L*_S(chi, 0)|``."""
    primes = tuple(removed_primes)
    if len(set(primes)) != len(primes):
        raise InputError("removed primes must be distinct")
    chi = QuadraticCharacter(field.discriminant)
    norms = resolve_places(field, primes)
    via_chi = chi_constant_z(field, norms)

    zeta = remove_euler_factors(LeadingValue.exact(0, Fraction(1, 2)), primes, [1] * len(primes))
    lchi = remove_euler_factors(l_at_zero(chi, max(tol, 1e-12)), primes, [chi(p) for p in primes], field.discriminant)
    via_l = LeadingValue(zeta.order + lchi.order, abs(zeta.value * lchi.value))
    return ZetaSComparison(field, primes, tuple(norms), via_chi, via_l, abs(via_chi.value - via_l.value), tol)
