import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from airygap import fredholm
from airygap.asymptotics import one_interval_asymp
from airygap.errors import DomainError, FactorizationError
from airygap.fredholm import (
    airy_kernel,
    log_det_gap,
    log_F_one_interval,
    log_F_two_interval,
    truncation_T,
)
from airygap.specfun import airy, integrate
from airygap.surface import GapConfig

AIP0 = -0.25881940379280679840


def test_kernel_diagonal_at_origin():
    assert airy_kernel(0.0, 0.0) == pytest.approx(AIP0**2, abs=1e-16)
    assert abs(airy_kernel(0.0, 0.0) - 0.0669875) < 1e-7


def test_kernel_symmetry_random_pairs():
    rng = np.random.default_rng(5)
    u = rng.uniform(-15, 15, 100)
    v = rng.uniform(-15, 15, 100)
    assert np.max(np.abs(airy_kernel(u, v) - airy_kernel(v, u))) <= 1e-15


def test_kernel_continuity_near_diagonal():
    d = airy_kernel(-1.0, -1.0)
    h = 1e-6
    assert abs(airy_kernel(-1.0, -1.0 + h) - d) < 10 * h


@settings(max_examples=80, deadline=None)
@given(st.floats(-12.0, 12.0), st.floats(-0.3, 0.3))
def test_kernel_near_diagonal_matches_quotient(u, h):
    # across the 0.1 switch both formulas must agree
    v = u + h
    ai_u, aip_u = airy(u)
    ai_v, aip_v = airy(v)
    k = airy_kernel(u, v)
    if abs(h) > 0.05:
        q = (ai_u * aip_v - aip_u * ai_v) / (u - v)
        assert abs(k - q) < 1e-13 / abs(h)
    assert abs(k - airy_kernel(v, u)) == 0.0


def test_kernel_diagonal_formula():
    for u in (-7.3, -1.0, 0.5, 4.0):
        ai, aip = airy(u)
        assert abs(airy_kernel(u, u) - (aip**2 - u * ai**2)) < 1e-15


def test_kernel_rejects_non_finite():
    with pytest.raises(DomainError):
        airy_kernel(np.inf, 0.0)


def test_empty_interval_list():
    res = log_det_gap([], 40)
    assert res.log_F == 0.0


def test_tiny_interval_is_trace_dominated():
    res = log_det_gap([(0.0, 1e-8)], 20)
    trace = integrate(lambda u: airy_kernel(u, u), 0.0, 1e-8)
    assert abs(res.log_F) < 1e-8
    assert abs(res.log_F + trace) < 1e-15


def test_overlapping_intervals_rejected():
    with pytest.raises(DomainError):
        log_det_gap([(-3.0, -1.0), (-2.0, 5.0)], 30)
    with pytest.raises(DomainError):
        log_det_gap([(1.0, 1.0)], 30)
    with pytest.raises(DomainError):
        log_det_gap([(-1.0, np.inf)], 30)


def test_factorization_error_carries_pivot(monkeypatch):
    def bad(x):
        K = np.zeros((x.size, x.size))
        K[2, 2] = 1e6
        return K

    monkeypatch.setattr(fredholm.kernels, "airy_kernel_matrix", bad)
    with pytest.raises(FactorizationError) as exc:
        log_det_gap([(-1.0, 1.0)], 10)
    assert exc.value.pivot == 2


def test_truncation_rule():
    L = -math.log(1e-24)
    assert truncation_T(3.0) == pytest.approx((1.5 * L) ** (2 / 3))
    assert truncation_T(100.0) == pytest.approx((1.5 * L) ** (2 / 3))
    # with a loose tail tolerance the 8-unit floor takes over
    assert truncation_T(1.0, tol_tail=1e-2) == pytest.approx(7.0)


def test_small_r_is_near_zero(canonical):
    assert abs(log_F_two_interval(canonical, 0.1, 40).log_F) < 1


def test_convergence_n60_vs_n120(canonical):
    a = log_F_two_interval(canonical, 3.0, 60).log_F
    b = log_F_two_interval(canonical, 3.0, 120).log_F
    assert abs(a - b) < 1e-10


def test_monotone_in_r(canonical):
    vals = [log_F_two_interval(canonical, r, 100).log_F for r in (2.0, 3.0, 4.0)]
    assert vals[0] > vals[1] > vals[2]
    assert all(v <= 0 for v in vals)


def test_two_intervals_smaller_than_one(canonical):
    for r in (1.0, 2.5, 4.0):
        both = log_F_two_interval(canonical, r, 100).log_F
        right = log_det_gap([(r * canonical.x1, truncation_T(r))], 100).log_F
        assert both < right


def test_truncation_insensitive(canonical):
    base = log_F_two_interval(canonical, 3.0, 120)
    shifted = log_F_two_interval(canonical, 3.0, 120, T=base.truncation_T + 5)
    assert abs(base.log_F - shifted.log_F) < 1e-12


def test_spectral_convergence(canonical):
    ivs = canonical.intervals(3.0, truncation_T(3.0))
    ref = log_det_gap(ivs, 160).log_F
    errs = [abs(log_det_gap(ivs, n).log_F - ref) for n in (10, 20, 40)]
    assert errs[1] < errs[0] / 5 and errs[2] < errs[1] / 5


def test_one_interval_against_tracy_widom_expansion():
    assert abs(log_F_one_interval(2.0, 80).log_F - one_interval_asymp(2.0)) < 2e-2
    assert abs(log_F_one_interval(6.0, 80).log_F - one_interval_asymp(6.0)) < 2e-3
    assert log_F_one_interval(6.0, 80).convergence_gap < 1e-10


def test_one_interval_matches_scipy_tracy_widom():
    # scipy's tracy_widom (>= 1.15) is an independent oracle when present
    tw = pytest.importorskip("scipy.stats").__dict__.get("tracy_widom")
    if tw is None:
        pytest.skip("scipy without tracy_widom")
    for s in (-3.0, -1.0, 0.5):
        assert abs(math.exp(log_F_one_interval(-s, 80).log_F) - tw(beta=2).cdf(s)) < 1e-8


def test_argument_checks(canonical):
    with pytest.raises(DomainError):
        log_F_two_interval(canonical, 0.0, 40)
    with pytest.raises(DomainError):
        log_F_two_interval(canonical, 2.0, 10)
    with pytest.raises(DomainError):
        log_F_one_interval(-1.0, 40)


def test_result_reports_gap(canonical):
    res = log_F_two_interval(canonical, 3.0, 80)
    assert res.nodes_per_interval == 80
    assert res.convergence_gap is not None and res.convergence_gap < 1e-10
    assert res.truncation_T == pytest.approx(truncation_T(3.0))
    assert len(res.intervals) == 2


def test_gap_config_validation():
    for args in [(-1, -0.5, -3), (-1, -2, -1.5), (1, -2, -3), (-1, -2, float("nan"))]:
        with pytest.raises(DomainError):
            GapConfig(*args)
