import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from airygap.asymptotics import (
    LOG_R_COEFFICIENT,
    ZETA_PRIME_M1,
    asymp_log_F,
    fit_C,
    nu_of_r,
    one_interval_asymp,
)
from airygap.errors import DomainError
from airygap.fredholm import log_F_two_interval
from airygap.surface import build_surface


@pytest.fixture(scope="module")
def sq(canonical):
    return build_surface(canonical)


def test_zeta_prime_constant():
    assert ZETA_PRIME_M1 == pytest.approx(float(mpmath.zeta(-1, derivative=1)), abs=1e-16)
    assert abs(ZETA_PRIME_M1 - (1 / 12 - math.log(float(mpmath.glaisher)))) < 1e-16


def test_log_r_coefficient_is_minus_half():
    assert LOG_R_COEFFICIENT == -0.5


def test_nu_small_r_and_reduction(sq):
    nu, red = nu_of_r(sq, 1e-12)
    assert abs(nu) < 1e-15 and abs(red) < 1e-15
    for r in (3.0, 17.0, 250.0):
        nu, red = nu_of_r(sq, r)
        assert -0.5 <= red < 0.5
        assert abs(nu - red - round(nu - red)) < 1e-9
        assert abs(sq.theta(nu) - sq.theta(red)) < 1e-13 * max(1.0, abs(nu))


@settings(max_examples=40, deadline=None)
@given(st.floats(0.1, 100.0), st.floats(1e-3, 1.0))
def test_nu_strictly_decreasing(r, dr):
    sq = build_surface(__import__("airygap").GapConfig(-1.0, -2.0, -3.0))
    assert nu_of_r(sq, r + dr)[0] < nu_of_r(sq, r)[0]


def test_canonical_cubic_term(sq):
    a = asymp_log_F(sq, 4.0)
    assert a.c_r3 == pytest.approx(sq.c * 64)
    assert abs(a.c_r3 + 26.8442) < 1e-3
    assert a.log_r_term == pytest.approx(-0.5 * math.log(4.0))


def test_theta_term_bounded(sq):
    lo = math.log(sq.theta(0.5).real)
    hi = math.log(sq.theta(0.0).real)
    for r in np.linspace(1, 30, 200):
        a = asymp_log_F(sq, r)
        assert sq.theta(a.nu_reduced).real > 0
        assert lo - 1e-14 <= a.theta_term <= hi + 1e-14


def test_C_is_additive(sq):
    a0 = asymp_log_F(sq, 5.0, C=0.0)
    a1 = asymp_log_F(sq, 5.0, C=1.0)
    assert a1.value - a0.value == 1.0
    assert asymp_log_F(sq, 5.0).C is None


def test_accepts_config_or_surface(canonical, sq):
    assert asymp_log_F(canonical, 3.3).value == asymp_log_F(sq, 3.3).value


def test_domain_errors(sq):
    with pytest.raises(DomainError):
        nu_of_r(sq, 0.0)
    with pytest.raises(DomainError):
        asymp_log_F(sq, -1.0)
    with pytest.raises(DomainError):
        one_interval_asymp(0.0)


def test_fit_C_grid_checks(canonical):
    with pytest.raises(DomainError):
        fit_C(canonical, [3.0, 3.0, 3.0])
    with pytest.raises(DomainError):
        fit_C(canonical, [3.0, 4.0])


def test_fit_C_disjoint_grids_agree(canonical):
    C1, res1 = fit_C(canonical, [3.0, 3.5, 4.0])
    C2, res2 = fit_C(canonical, [4.5, 5.0, 5.5], n=160)
    assert abs(C1 - C2) < 3 * (1 / 3.0)
    assert abs(np.mean(res1)) < 1e-14 and abs(np.mean(res2)) < 1e-14


def test_residual_differences_are_order_one_over_r(canonical):
    C, _ = fit_C(canonical, [3.0, 3.5, 4.0])
    res = {}
    for r in (3.0, 5.0):
        res[r] = log_F_two_interval(canonical, r, 120).log_F - asymp_log_F(canonical, r, C).value
    assert abs(res[3.0] - res[5.0]) < 10 * abs(1 / 3.0 - 1 / 5.0)


def test_one_interval_formula():
    # -1/12 + zeta'(-1) + log(2)/24 from mpmath
    ref = float(-mpmath.mpf(1) / 12 + mpmath.zeta(-1, derivative=1) + mpmath.log(2) / 24)
    assert one_interval_asymp(1.0) == pytest.approx(ref, abs=1e-15)
    assert one_interval_asymp(1.0) == pytest.approx(-0.2198733, abs=1e-7)


def test_one_interval_log_coefficient():
    # (f(2r) - f(r)) + (8 - 1) r^3 / 12 isolates -(1/8) log 2
    r = 3.0
    d = one_interval_asymp(2 * r) - one_interval_asymp(r) + 7 * r**3 / 12
    assert d == pytest.approx(-math.log(2) / 8, abs=1e-12)


def test_one_interval_remainder_is_order_r_minus_3():
    # the next term of the Tracy-Widom left tail is 3 / (64 r^3), so the
    # remainder falls faster than the r^(-3/2) allowance
    from airygap.fredholm import log_F_one_interval

    for r in (6.0, 8.0):
        res = log_F_one_interval(r, 100).log_F - one_interval_asymp(r)
        assert res == pytest.approx(3 / (64 * r**3), rel=0.05)
