"""Precomputed data shared by both kernel backends.

Ai and Ai' are tabulated on a uniform grid over ``[-GRID_EDGE, GRID_EDGE]``
by Taylor-series continuation of ``w'' = x w``. Outside the grid the classical
asymptotic expansions are accurate to full double precision.
"""

import math

import numpy as np

AI0 = 0.35502805388781723926  # 3**(-2/3) / Gamma(2/3)
AIP0 = -0.25881940379280679840  # -3**(-1/3) / Gamma(1/3)

GRID_EDGE = 9.5
GRID_STEP = 0.25
N_ASYM = 48
TAYLOR_TERMS = 64

# Coefficients u_k, v_k of the Airy asymptotic series.
U_COEF = np.empty(N_ASYM)
V_COEF = np.empty(N_ASYM)
U_COEF[0] = V_COEF[0] = 1.0
for _k in range(1, N_ASYM):
    U_COEF[_k] = (
        U_COEF[_k - 1]
        * (6 * _k - 5) * (6 * _k - 3) * (6 * _k - 1)
        / ((2 * _k - 1) * 216.0 * _k)
    )
    V_COEF[_k] = -(6 * _k + 1) / (6 * _k - 1) * U_COEF[_k]


def _asym_sum(coef, zeta, start, stride, alternate):
    """Optimally truncated sum of coef[k] * zeta**-k over k = start, start+stride, ..."""
    total = 0.0
    prev = math.inf
    sign = 1.0
    for k in range(start, N_ASYM, stride):
        term = coef[k] / zeta**k
        if abs(term) >= prev:
            break
        total += sign * term
        if abs(term) < 1e-18 * abs(total):
            break
        prev = abs(term)
        if alternate:
            sign = -sign
    return total


def airy_asymptotic(x):
    """Ai(x), Ai'(x) from the large-|x| expansions (|x| >= GRID_EDGE)."""
    t = abs(x)
    zeta = 2.0 / 3.0 * t * math.sqrt(t)
    t4 = t**0.25
    if x > 0:
        e = math.exp(-zeta) / (2.0 * math.sqrt(math.pi))
        su = _asym_sum(U_COEF, -zeta, 0, 1, False)
        sv = _asym_sum(V_COEF, -zeta, 0, 1, False)
        return e * su / t4, -t4 * e * sv
    ph = zeta - math.pi / 4.0
    c, s = math.cos(ph), math.sin(ph)
    ue = _asym_sum(U_COEF, zeta, 0, 2, True)
    uo = _asym_sum(U_COEF, zeta, 1, 2, True)
    ve = _asym_sum(V_COEF, zeta, 0, 2, True)
    vo = _asym_sum(V_COEF, zeta, 1, 2, True)
    rp = 1.0 / math.sqrt(math.pi)
    return rp / t4 * (c * ue + s * uo), rp * t4 * (s * ve - c * vo)


def taylor_step(x0, a, ap, h):
    """Advance (Ai, Ai') from x0 to x0 + h with the Taylor series of w'' = x w."""
    c = [a, ap, 0.5 * x0 * a]
    val = a + ap * h + c[2] * h * h
    der = ap + 2.0 * c[2] * h
    hk = h * h
    small = 0
    for k in range(3, TAYLOR_TERMS):
        ck = (x0 * c[k - 2] + c[k - 3]) / (k * (k - 1))
        c.append(ck)
        der += k * ck * hk
        hk *= h
        val += ck * hk
        # the recurrence skips, so require three negligible terms in a row
        small = small + 1 if abs(ck * hk) < 1e-19 * abs(val) else 0
        if small == 3:
            break
    return val, der


def _build_grid():
    n = int(round(2 * GRID_EDGE / GRID_STEP)) + 1
    xs = -GRID_EDGE + GRID_STEP * np.arange(n)
    ai = np.empty(n)
    aip = np.empty(n)
    mid = (n - 1) // 2
    ai[mid], aip[mid] = AI0, AIP0
    # Oscillatory side: forward from the exact values at 0.
    for j in range(mid - 1, -1, -1):
        ai[j], aip[j] = taylor_step(xs[j + 1], ai[j + 1], aip[j + 1], -GRID_STEP)
    # Decaying side: Ai is recessive, so integrate backwards from the far edge.
    ai[-1], aip[-1] = airy_asymptotic(xs[-1])
    for j in range(n - 2, mid, -1):
        ai[j], aip[j] = taylor_step(xs[j + 1], ai[j + 1], aip[j + 1], -GRID_STEP)
    back_at_zero = taylor_step(xs[mid + 1], ai[mid + 1], aip[mid + 1], -GRID_STEP)
    return xs, ai, aip, back_at_zero


GRID_X, GRID_AI, GRID_AIP, BACKWARD_AT_ZERO = _build_grid()
