"""Arithmetic of quadratic fields ``Q(sqrt d)`` and their norm tori."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import mpmath

from .errors import InputError, PrecisionError

MAX_ABS_DISCRIMINANT = 10**6


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


def is_fundamental_discriminant(delta: int) -> bool:
    if delta in (0, 1):
        return False
    if delta % 4 == 1:
        return is_squarefree(delta)
    if delta % 4 == 0:
        m = delta // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def discriminant_of(d: int) -> int:
    return d if d % 4 == 1 else 4 * d


@dataclass(frozen=True)
class QuadraticField:
    d: int
    discriminant: int
    is_real: bool
    w: int

    @classmethod
    def from_d(cls, d: int) -> QuadraticField:
        if d in (0, 1) or not is_squarefree(d):
            raise InputError(f"d = {d} is not a squarefree integer other than 0, 1")
        delta = discriminant_of(d)
        if abs(delta) > MAX_ABS_DISCRIMINANT:
            raise InputError(f"|discriminant| {abs(delta)} exceeds supported bound {MAX_ABS_DISCRIMINANT}")
        w = {-1: 4, -3: 6}.get(d, 2)
        return cls(d, delta, d > 0, w)

    @property
    def signature(self) -> str:
        return "real" if self.is_real else "imaginary"

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"


def kronecker_character(delta: int, n: int) -> int:
    """Kronecker symbol ``(delta | n)`` for a fundamental discriminant."""
    if not is_fundamental_discriminant(delta):
        raise InputError(f"{delta} is not a fundamental discriminant")
    return _kronecker(delta, n)


def _kronecker(a: int, n: int) -> int:
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a | n) for odd n > 0
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def character_table(delta: int) -> list[int]:
    """``chi(a)`` for ``a = 0 .. |delta| - 1``."""
    if not is_fundamental_discriminant(delta):
        raise InputError(f"{delta} is not a fundamental discriminant")
    f = abs(delta)
    return [_kronecker(delta, a) for a in range(f)]


def reduced_forms(delta: int) -> list[tuple[int, int, int]]:
    """Reduced primitive positive definite forms ``(a, b, c)`` of discriminant ``delta``."""
    if delta >= 0 or delta % 4 not in (0, 1):
        raise InputError("need a negative discriminant")
    forms = []
    a = 1
    while 3 * a * a <= -delta:
        for b in range(-a + 1, a + 1):
            if (b - delta) % 2:
                continue
            num = b * b - delta
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, b), c) == 1:
                forms.append((a, b, c))
        a += 1
    return forms


def class_number_imaginary(delta: int) -> int:
    if not (delta < 0 and is_fundamental_discriminant(delta)):
        raise InputError(f"{delta} is not a negative fundamental discriminant")
    return len(reduced_forms(delta))


@dataclass(frozen=True)
class FundamentalUnit:
    """``eps = (a + b sqrt(discriminant)) / 2 > 1``."""

    a: int
    b: int
    discriminant: int
    norm: int

    @property
    def regulator(self) -> float:
        return float(self.log())

    def log(self, dps: int = 30):
        with mpmath.workdps(dps):
            return mpmath.log((self.a + self.b * mpmath.sqrt(self.discriminant)) / 2)

    def __str__(self) -> str:
        return f"({self.a} + {self.b}*sqrt({self.discriminant}))/2"


def fundamental_unit(d: int) -> FundamentalUnit:
    """Smallest solution of ``a^2 - delta b^2 = +-4`` from the continued
    fraction of ``(P0 + sqrt(delta)) / 2`` with ``P0 = delta mod 2``."""
    field = QuadraticField.from_d(d)
    if not field.is_real:
        raise InputError("fundamental units exist only for real quadratic fields")
    delta = field.discriminant
    s = isqrt(delta)
    p0 = delta % 2
    big_p, big_q = p0, 2
    # convergents h/k of the expansion
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    for _ in range(4 * delta + 10):
        a = (big_p + s) // big_q
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        x, y = 2 * h - p0 * k, k
        val = x * x - delta * y * y
        if val in (4, -4):
            return FundamentalUnit(x, y, delta, 1 if val == 4 else -1)
        big_p = a * big_q - big_p
        big_q = (delta - big_p * big_p) // big_q
    raise PrecisionError(f"no unit found for discriminant {delta}")  # unreachable for valid input


@dataclass(frozen=True)
class TorusInvariants:
    """Invariants of the norm-one torus of ``K / Q``.

    ``hom_description`` names the group of integral points: ``"mu_K"``,
    ``"full unit group"`` or ``"index-2 unit subgroup"``.
    """

    hom_description: str
    hom_rank: int
    ext1_order: int
    regulator_T: float
    w_T: int


def torus_invariants(d: int, class_number: int | None = None) -> TorusInvariants:
    field = QuadraticField.from_d(d)
    h = class_number if class_number is not None else class_number_of(field)
    if not field.is_real:
        return TorusInvariants("mu_K", 0, 2 * h, 1.0, field.w)
    unit = fundamental_unit(d)
    if unit.norm == 1:
        return TorusInvariants("full unit group", 1, 2 * h, unit.regulator, 2)
    return TorusInvariants("index-2 unit subgroup", 1, h, 2 * unit.regulator, 2)


def class_number_real(delta: int, tol: float = 1e-12) -> int:
    """``sqrt(delta) L(chi, 1) / (2 log eps)`` rounded, with a 0.2 integrality guard."""
    from .lseries import QuadraticCharacter, l_at_one

    if not (delta > 0 and is_fundamental_discriminant(delta)):
        raise InputError(f"{delta} is not a positive fundamental discriminant")
    d = delta if delta % 4 == 1 else delta // 4
    unit = fundamental_unit(d)
    raw = mpmath.sqrt(delta) * l_at_one(QuadraticCharacter(delta), tol) / (2 * unit.log())
    h = int(mpmath.nint(raw))
    if abs(raw - h) >= 0.2 or h < 1:
        raise PrecisionError(f"class number estimate {float(raw)} is not near an integer")
    return h


def class_number_of(field: QuadraticField) -> int:
    if field.is_real:
        return class_number_real(field.discriminant)
    return class_number_imaginary(field.discriminant)
