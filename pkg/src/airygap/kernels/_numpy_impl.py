"""Vectorized numpy versions of the hot kernels."""

import numpy as np

from . import _tables as T

AIRY_LOCAL_TERMS = 30
NEAR_DIAG = 0.1
NEAR_DIAG_TERMS = 24
_ASYM_TERMS = 40


def _asym_sums(zeta, alternate_even_odd):
    # Sums of u_k zeta^-k and v_k zeta^-k with a fixed term count; for
    # zeta >= 19.5 the terms are below 1e-17 well before the series turns.
    inv = 1.0 / zeta
    su = np.zeros_like(zeta)
    sv = np.zeros_like(zeta)
    pw = np.ones_like(zeta)
    if not alternate_even_odd:
        for k in range(_ASYM_TERMS):
            su += T.U_COEF[k] * pw
            sv += T.V_COEF[k] * pw
            pw = -pw * inv
        return su, sv
    ue = np.zeros_like(zeta)
    uo = np.zeros_like(zeta)
    ve = np.zeros_like(zeta)
    vo = np.zeros_like(zeta)
    for k in range(_ASYM_TERMS):
        sign = 1.0 if (k // 2) % 2 == 0 else -1.0
        if k % 2 == 0:
            ue += sign * T.U_COEF[k] * pw
            ve += sign * T.V_COEF[k] * pw
        else:
            uo += sign * T.U_COEF[k] * pw
            vo += sign * T.V_COEF[k] * pw
        pw = pw * inv
    return ue, uo, ve, vo


def airy_coefficients(x0, nterms):
    """Taylor coefficients of Ai about each point of ``x0``, shape (len(x0), nterms)."""
    x0 = np.asarray(x0, dtype=float)
    ai, aip = airy_eval(x0)
    c = np.zeros(x0.shape + (nterms,))
    c[..., 0] = ai
    c[..., 1] = aip
    if nterms > 2:
        c[..., 2] = 0.5 * x0 * ai
    for k in range(3, nterms):
        c[..., k] = (x0 * c[..., k - 2] + c[..., k - 3]) / (k * (k - 1))
    return c


def airy_eval(x):
    """Ai(x) and Ai'(x) for a real array."""
    x = np.asarray(x, dtype=float)
    ai = np.empty_like(x)
    aip = np.empty_like(x)
    inner = np.abs(x) < T.GRID_EDGE
    if np.any(inner):
        xi = x[inner]
        j = np.rint((xi + T.GRID_EDGE) / T.GRID_STEP).astype(np.int64)
        x0 = T.GRID_X[j]
        h = xi - x0
        c0 = T.GRID_AI[j]
        c1 = T.GRID_AIP[j]
        c2 = 0.5 * x0 * c0
        val = c0 + h * (c1 + h * c2)
        der = c1 + 2.0 * h * c2
        hk = h * h
        cs = [c0, c1, c2]
        for k in range(3, AIRY_LOCAL_TERMS):
            ck = (x0 * cs[k - 2] + cs[k - 3]) / (k * (k - 1))
            cs.append(ck)
            der = der + k * ck * hk
            hk = hk * h
            val = val + ck * hk
        ai[inner] = val
        aip[inner] = der
    pos = x >= T.GRID_EDGE
    if np.any(pos):
        t = x[pos]
        zeta = 2.0 / 3.0 * t * np.sqrt(t)
        t4 = t**0.25
        e = np.exp(-zeta) / (2.0 * np.sqrt(np.pi))
        su, sv = _asym_sums(zeta, False)
        ai[pos] = e * su / t4
        aip[pos] = -t4 * e * sv
    neg = x <= -T.GRID_EDGE
    if np.any(neg):
        t = -x[neg]
        zeta = 2.0 / 3.0 * t * np.sqrt(t)
        t4 = t**0.25
        ph = zeta - np.pi / 4.0
        c, s = np.cos(ph), np.sin(ph)
        ue, uo, ve, vo = _asym_sums(zeta, True)
        rp = 1.0 / np.sqrt(np.pi)
        ai[neg] = rp / t4 * (c * ue + s * uo)
        aip[neg] = rp * t4 * (s * ve - c * vo)
    return ai, aip


def airy_kernel_matrix(x):
    """Symmetric matrix of K_Ai(x_i, x_j)."""
    x = np.asarray(x, dtype=float)
    ai, aip = airy_eval(x)
    dx = x[:, None] - x[None, :]
    near = np.abs(dx) < NEAR_DIAG
    with np.errstate(divide="ignore", invalid="ignore"):
        K = (ai[:, None] * aip[None, :] - aip[:, None] * ai[None, :]) / dx
    ii, jj = np.nonzero(np.triu(near))
    if ii.size:
        lo = np.where(x[ii] <= x[jj], ii, jj)
        hi = np.where(x[ii] <= x[jj], jj, ii)
        h = x[hi] - x[lo]
        a = airy_coefficients(x[lo], NEAR_DIAG_TERMS + 2)
        k = np.arange(1, NEAR_DIAG_TERMS + 1)
        terms = (k + 1) * a[:, :1] * a[:, 2:] - a[:, 1:2] * a[:, 1:-1]
        powers = h[:, None] ** (k - 1)
        vals = -np.sum(terms * powers, axis=1)
        K[ii, jj] = vals
        K[jj, ii] = vals
    return K


def theta_series(z, tau, M, order):
    """sum_{|m|<=M} (2 pi i m)^order exp(2 pi i m z + i pi m^2 tau)."""
    z = np.asarray(z, dtype=complex)
    m = np.arange(-M, M + 1, dtype=float)
    # one exponential per term so large Im z cannot overflow before the decay
    terms = np.exp(2j * np.pi * np.multiply.outer(z, m) + 1j * np.pi * m * m * tau)
    if order:
        terms = terms * (2j * np.pi * m) ** order
    return terms.sum(axis=-1)


def landen_chain(k, kp):
    """Descending Landen moduli k_1, k_2, ... until k_n is negligible."""
    ks = []
    while k > 1e-14 and len(ks) < 40:
        k, kp = (1.0 - kp) / (1.0 + kp), min(2.0 * np.sqrt(kp) / (1.0 + kp), 1.0)
        ks.append(k)
    return np.array(ks)


def sn_cn_dn(u, k, kp):
    """Jacobi sn, cn, dn for real ``u`` and modulus ``k`` (complement ``kp``)."""
    u = np.asarray(u, dtype=float)
    ks = landen_chain(k, kp)
    scale = np.prod(1.0 + ks) if ks.size else 1.0
    v = u / scale
    s = np.sin(v)
    c = np.cos(v)
    d = np.ones_like(v)
    for kn in ks[::-1]:
        den = 1.0 + kn * s * s
        s, c, d = (1.0 + kn) * s / den, c * d / den, (1.0 - kn * s * s) / den
    return s, c, d
