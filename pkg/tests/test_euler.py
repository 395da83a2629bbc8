import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from toric_lvalues.errors import InputError
from toric_lvalues.euler import (
    chi_constant_z,
    chi_constructible,
    chi_finite_constant,
    chi_negligible,
    norm_torus_report,
    resolve_places,
    zeta_s_comparison,
)
from toric_lvalues.quadratic import QuadraticField, is_squarefree

LOG_EPS5 = math.log((1 + math.sqrt(5)) / 2)

SUPPORTED_D = [
    d for d in range(-500, 501)
    if d not in (0, 1) and is_squarefree(d) and abs(d if d % 4 == 1 else 4 * d) <= 2000
]


def test_constant_one_characteristics():
    assert chi_finite_constant(7) == 1
    assert chi_negligible("skyscraper Z/3 at p=5") == 1
    assert chi_constructible(None) == 1
    with pytest.raises(InputError):
        chi_finite_constant(0)


def test_chi_constant_z_examples():
    c = chi_constant_z(QuadraticField.from_d(-1))
    assert c.value == pytest.approx(0.25, rel=1e-15) and c.order == 0
    c = chi_constant_z(QuadraticField.from_d(5))
    assert c.value == pytest.approx(LOG_EPS5 / 2, rel=1e-12) and c.order == 1
    assert c.value == pytest.approx(0.2406, abs=1e-4)
    c = chi_constant_z(QuadraticField.from_d(-1), [5, 5])
    assert c.value == pytest.approx(0.25 * math.log(5) ** 2, rel=1e-12)
    assert c.value == pytest.approx(0.6476, abs=1e-4)
    assert c.order == 2


def test_report_d_minus_1():
    r = norm_torus_report(-1)
    assert r.algebraic_L0.exact_value == Fraction(1, 2) == r.analytic_L0.exact_value
    assert r.abs_errors["L0"] == 0
    assert r.algebraic_L1.value == pytest.approx(math.pi / 4, abs=1e-12)
    assert r.analytic_L1.value == pytest.approx(math.pi / 4, abs=1e-12)
    assert (r.h, r.w, r.unit) == (1, 4, None)


def test_report_d_5():
    r = norm_torus_report(5)
    assert r.algebraic_L0.order == r.analytic_L0.order == 1
    assert r.algebraic_L0.value == pytest.approx(0.4812118251, abs=1e-9)
    assert r.analytic_L0.value == pytest.approx(0.4812118251, abs=1e-9)
    assert r.analytic_L1.value == pytest.approx(0.4304089409, abs=1e-9)
    assert r.unit.norm == -1


def test_reports_over_supported_range():
    for d in SUPPORTED_D:
        r = norm_torus_report(d)
        assert r.algebraic_L0.order == r.analytic_L0.order == (1 if d > 0 else 0)
        scale = max(1.0, abs(r.analytic_L0.value))
        assert r.abs_errors["L0"] <= 1e-6 * scale
        assert r.abs_errors["L1"] <= 1e-6 * max(1.0, r.analytic_L1.value)
        if d < 0:
            assert r.algebraic_L0.exact_value == r.analytic_L0.exact_value


def test_report_rejects_non_squarefree():
    with pytest.raises(InputError):
        norm_torus_report(4)


def test_resolve_places():
    k = QuadraticField.from_d(-1)
    assert resolve_places(k, [5]) == [5, 5]
    assert resolve_places(k, [3]) == [9]
    with pytest.raises(InputError):
        resolve_places(k, [2])
    with pytest.raises(InputError):
        resolve_places(k, [9])


@pytest.mark.parametrize(
    "primes,expected",
    [
        ((), 0.25),
        ((5,), 0.25 * math.log(5) ** 2),
        ((3,), 0.25 * math.log(9)),
        ((3, 5), 0.25 * math.log(9) * math.log(5) ** 2),
    ],
)
def test_zeta_comparison_gaussian(primes, expected):
    z = zeta_s_comparison(QuadraticField.from_d(-1), primes)
    assert z.agree
    assert z.via_chi.value == pytest.approx(expected, rel=1e-12)
    assert z.via_l.value == pytest.approx(expected, rel=1e-12)


def test_zeta_comparison_rejects_ramified_and_duplicates():
    with pytest.raises(InputError):
        zeta_s_comparison(QuadraticField.from_d(-1), [2])
    with pytest.raises(InputError):
        zeta_s_comparison(QuadraticField.from_d(-1), [3, 3])


FIELDS = [-1, -2, -3, -5, -7, -23, 2, 3, 5, 6, 13]
SMALL_PRIMES = [p for p in range(3, 100) if all(p % q for q in range(2, p))] + [2]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS), st.lists(st.sampled_from(SMALL_PRIMES), max_size=5, unique=True))
def test_zeta_comparison_property(d, primes):
    k = QuadraticField.from_d(d)
    primes = [p for p in primes if k.discriminant % p]
    z = zeta_s_comparison(k, primes)
    assert z.via_chi.order == z.via_l.order
    assert z.abs_error <= 1e-8
