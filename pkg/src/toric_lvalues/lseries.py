"""Special values of quadratic Dirichlet L-functions.

``L(chi, 0)`` is exact (a generalized Bernoulli number).  ``L(chi, 1)`` comes
from the finite closed forms over one period, evaluated in extended
precision, and is cross-checked against an independent digamma
representation.  ``L'(chi, 0)`` for even ``chi`` is never differentiated
numerically: it is ``L(chi, 1)`` divided by the functional-equation ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np
from scipy.special import digamma

from .errors import InputError, PrecisionError
from .quadratic import QuadraticField, character_table, is_fundamental_discriminant, _kronecker

_PI_LD = np.longdouble("3.14159265358979323846264338327950288")


@dataclass(frozen=True)
class QuadraticCharacter:
    """``chi = (delta | .)`` for a fundamental discriminant ``delta``."""

    delta: int

    def __post_init__(self):
        if not is_fundamental_discriminant(self.delta):
            raise InputError(f"{self.delta} is not a fundamental discriminant")

    @property
    def conductor(self) -> int:
        return abs(self.delta)

    @property
    def parity(self) -> str:
        return "odd" if self.delta < 0 else "even"

    def __call__(self, n: int) -> int:
        return _kronecker(self.delta, n)

    def table(self) -> list[int]:
        return character_table(self.delta)


@dataclass(frozen=True)
class LeadingValue:
    """First nonzero Taylor coefficient: ``L(s) ~ value * (s - s0)^order``."""

    order: int
    value: float
    exact_value: Fraction | None = None

    def __post_init__(self):
        if self.exact_value is not None:
            ev = float(self.exact_value)
            if abs(self.value - ev) > 1e-12 * abs(ev):
                raise InputError("float value disagrees with the exact value")

    @classmethod
    def exact(cls, order: int, value: Fraction) -> LeadingValue:
        return cls(order, float(value), Fraction(value))


def b1_chi(chi: QuadraticCharacter) -> Fraction:
    """``B_{1,chi} = (1/f) sum_{a=1}^{f} chi(a) a``; zero for even ``chi``."""
    f = chi.conductor
    tab = chi.table()
    return Fraction(sum(tab[a] * a for a in range(1, f)), f)


def _l1_closed_form(chi: QuadraticCharacter) -> float:
    f = chi.conductor
    tab = chi.table()
    if chi.delta < 0:
        # L(1) = -pi / f^{3/2} * sum chi(a) a
        s = sum(tab[a] * a for a in range(1, f))
        with mpmath.workdps(30):
            return float(-mpmath.pi * s / mpmath.mpf(f) ** 1.5)
    # L(1) = -(1/sqrt f) sum chi(a) log sin(pi a / f); chi(a) = chi(f - a)
    half = np.arange(1, (f + 1) // 2, dtype=np.int64)
    weights = np.array([tab[a] for a in half], dtype=np.longdouble)
    logs = np.log(np.sin(_PI_LD * half.astype(np.longdouble) / np.longdouble(f)))
    s = 2 * np.sum(weights * logs)
    return float(-s / np.sqrt(np.longdouble(f)))


def _l1_digamma(chi: QuadraticCharacter) -> float:
    """``L(1) = -(1/f) sum_a chi(a) psi(a/f)``, with ``psi(x) = psi(1+x) - 1/x``
    split off so the large terms are summed exactly-rounded."""
    f = chi.conductor
    tab = np.array(chi.table()[1:], dtype=np.float64)
    a = np.arange(1, f, dtype=np.float64)
    mask = tab != 0
    smooth = math.fsum((tab[mask] * digamma(1.0 + a[mask] / f)).tolist())
    singular = math.fsum((tab[mask] / a[mask]).tolist())
    return -smooth / f + singular


def l_at_one_partial_sums(chi: QuadraticCharacter, terms: int = 10**6) -> float:
    """Slow route: Cesaro mean of the partial sums of ``sum chi(n)/n``."""
    f = chi.conductor
    tab = np.array(chi.table(), dtype=np.float64)
    n = np.arange(1, terms + 1, dtype=np.float64)
    vals = tab[np.arange(1, terms + 1) % f] / n
    partial = np.cumsum(vals)
    return float(np.mean(partial[terms // 2:]))


def l_at_one(chi: QuadraticCharacter, tol: float = 1e-12) -> float:
    """``L(chi, 1)`` to absolute error ``tol`` (``tol >= 1e-12``)."""
    if tol < 1e-12:
        raise InputError("tolerance below 1e-12 is not supported")
    main = _l1_closed_form(chi)
    check = _l1_digamma(chi)
    if abs(main - check) > 10 * tol:
        raise PrecisionError(
            f"L(chi_{chi.delta}, 1): closed form {main!r} and digamma route {check!r} disagree"
        )
    return main


def functional_ratio(field: QuadraticField) -> float:
    """``|L*(T, 1) / L*(T, 0)|`` for the norm-one torus of ``field``:
    ``pi / sqrt|delta|`` (imaginary) or ``2 / sqrt(delta)`` (real)."""
    root = math.sqrt(abs(field.discriminant))
    return 2.0 / root if field.is_real else math.pi / root


def l_at_zero(chi: QuadraticCharacter, tol: float = 1e-12) -> LeadingValue:
    """Leading term of ``L(chi, s)`` at ``s = 0`` (absolute value)."""
    if chi.delta < 0:
        return LeadingValue.exact(0, abs(-b1_chi(chi)))
    field = QuadraticField.from_d(chi.delta if chi.delta % 4 == 1 else chi.delta // 4)
    return LeadingValue(1, l_at_one(chi, tol) / functional_ratio(field))


def remove_euler_factors(
    lead: LeadingValue,
    norms: Sequence[int],
    character_values: Sequence[int],
    delta: int | None = None,
) -> LeadingValue:
    """Multiply by ``prod (1 - chi(p) p^{-s})`` and take the new leading term at 0.

    A factor with ``chi = 1`` vanishes to first order with derivative
    ``log p``; any other factor is the constant ``1 - chi``.  With ``delta``
    given, each value is checked against the Kronecker character.
    """
    if len(norms) != len(character_values):
        raise InputError("need one character value per removed norm")
    order, value = lead.order, lead.value
    exact = lead.exact_value
    for p, c in zip(norms, character_values):
        if p < 2:
            raise InputError(f"norm {p} is not >= 2")
        if c not in (-1, 0, 1):
            raise InputError(f"character value {c} not in {{-1, 0, 1}}")
        if delta is not None and _kronecker(delta, p) != c:
            raise InputError(f"chi_{delta}({p}) is {_kronecker(delta, p)}, not {c}")
        if c == 1:
            order += 1
            value *= math.log(p)
            exact = None
        else:
            value *= 1 - c
            if exact is not None:
                exact *= 1 - c
    return replace(lead, order=order, value=value, exact_value=exact)
