"""numba-compiled versions of the hot kernels.

Same signatures and results as ``_numpy_impl``; loops replace broadcasting.
"""

import math

import numpy as np
from numba import njit

from . import _tables as T
from ._numpy_impl import NEAR_DIAG, NEAR_DIAG_TERMS, AIRY_LOCAL_TERMS, landen_chain

_GX = T.GRID_X.copy()
_GA = T.GRID_AI.copy()
_GAP = T.GRID_AIP.copy()
_U = T.U_COEF.copy()
_V = T.V_COEF.copy()
_EDGE = T.GRID_EDGE
_STEP = T.GRID_STEP
_NASYM = T.N_ASYM


@njit(cache=True)
def _airy_scalar(x, gx, ga, gap, u, v):
    if x >= _EDGE or x <= -_EDGE:
        t = abs(x)
        zeta = 2.0 / 3.0 * t * math.sqrt(t)
        t4 = t**0.25
        if x > 0:
            su = 0.0
            sv = 0.0
            pw = 1.0
            prev = 1e300
            for k in range(_NASYM):
                tu = u[k] * pw
                if abs(tu) >= prev:
                    break
                su += tu
                sv += v[k] * pw
                prev = abs(tu)
                pw = -pw / zeta
            e = math.exp(-zeta) / (2.0 * math.sqrt(math.pi))
            return e * su / t4, -t4 * e * sv
        ue = 0.0
        uo = 0.0
        ve = 0.0
        vo = 0.0
        pw = 1.0
        prev = 1e300
        for k in range(_NASYM):
            tu = u[k] * pw
            if abs(tu) >= prev:
                break
            sign = 1.0 if (k // 2) % 2 == 0 else -1.0
            if k % 2 == 0:
                ue += sign * tu
                ve += sign * v[k] * pw
            else:
                uo += sign * tu
                vo += sign * v[k] * pw
            prev = abs(tu)
            pw = pw / zeta
        ph = zeta - math.pi / 4.0
        c = math.cos(ph)
        s = math.sin(ph)
        rp = 1.0 / math.sqrt(math.pi)
        return rp / t4 * (c * ue + s * uo), rp * t4 * (s * ve - c * vo)
    j = int(round((x + _EDGE) / _STEP))
    x0 = gx[j]
    h = x - x0
    cm3 = 0.0
    cm2 = ga[j]
    cm1 = gap[j]
    c2 = 0.5 * x0 * cm2
    val = cm2 + h * (cm1 + h * c2)
    der = cm1 + 2.0 * h * c2
    cm3, cm2, cm1 = cm2, cm1, c2
    hk = h * h
    for k in range(3, AIRY_LOCAL_TERMS):
        ck = (x0 * cm2 + cm3) / (k * (k - 1))
        der += k * ck * hk
        hk *= h
        val += ck * hk
        cm3, cm2, cm1 = cm2, cm1, ck
    return val, der


@njit(cache=True)
def _airy_vec(x, gx, ga, gap, u, v):
    n = x.shape[0]
    ai = np.empty(n)
    aip = np.empty(n)
    for i in range(n):
        ai[i], aip[i] = _airy_scalar(x[i], gx, ga, gap, u, v)
    return ai, aip


def airy_eval(x):
    """Ai(x) and Ai'(x) for a real array."""
    x = np.asarray(x, dtype=float)
    flat = np.ascontiguousarray(x.ravel())
    ai, aip = _airy_vec(flat, _GX, _GA, _GAP, _U, _V)
    return ai.reshape(x.shape), aip.reshape(x.shape)


@njit(cache=True)
def _kernel_matrix(x, ai, aip, nterms, near):
    n = x.shape[0]
    K = np.empty((n, n))
    a = np.empty(nterms + 2)
    for i in range(n):
        for j in range(i, n):
            dx = x[i] - x[j]
            if abs(dx) >= near:
                val = (ai[i] * aip[j] - aip[i] * ai[j]) / dx
            else:
                lo = i if x[i] <= x[j] else j
                h = abs(dx)
                u0 = x[lo]
                a[0] = ai[lo]
                a[1] = aip[lo]
                a[2] = 0.5 * u0 * a[0]
                for k in range(3, nterms + 2):
                    a[k] = (u0 * a[k - 2] + a[k - 3]) / (k * (k - 1))
                # Horner from the top coefficient down
                acc = 0.0
                for k in range(nterms, 0, -1):
                    acc = acc * h + (k + 1) * a[0] * a[k + 1] - a[1] * a[k]
                val = -acc
            K[i, j] = val
            K[j, i] = val
    return K


def airy_kernel_matrix(x):
    """Symmetric matrix of K_Ai(x_i, x_j)."""
    x = np.ascontiguousarray(x, dtype=float)
    ai, aip = airy_eval(x)
    return _kernel_matrix(x, ai, aip, NEAR_DIAG_TERMS, NEAR_DIAG)


@njit(cache=True)
def _theta(z, tau, M, order):
    out = np.zeros(z.shape[0], dtype=np.complex128)
    for i in range(z.shape[0]):
        acc = 0j
        for m in range(-M, M + 1):
            t = np.exp(2j * np.pi * m * z[i] + 1j * np.pi * m * m * tau)
            if order:
                t *= (2j * np.pi * m) ** order
            acc += t
        out[i] = acc
    return out


def theta_series(z, tau, M, order):
    """sum_{|m|<=M} (2 pi i m)^order exp(2 pi i m z + i pi m^2 tau)."""
    z = np.asarray(z, dtype=complex)
    flat = np.ascontiguousarray(z.ravel())
    return _theta(flat, complex(tau), int(M), int(order)).reshape(z.shape)


@njit(cache=True)
def _sn_cn_dn(u, ks, scale):
    n = u.shape[0]
    s_out = np.empty(n)
    c_out = np.empty(n)
    d_out = np.empty(n)
    for i in range(n):
        v = u[i] / scale
        s = math.sin(v)
        c = math.cos(v)
        d = 1.0
        for j in range(ks.shape[0] - 1, -1, -1):
            kn = ks[j]
            den = 1.0 + kn * s * s
            s, c, d = (1.0 + kn) * s / den, c * d / den, (1.0 - kn * s * s) / den
        s_out[i] = s
        c_out[i] = c
        d_out[i] = d
    return s_out, c_out, d_out


def sn_cn_dn(u, k, kp):
    """Jacobi sn, cn, dn for real ``u`` and modulus ``k`` (complement ``kp``)."""
    u = np.asarray(u, dtype=float)
    ks = np.asarray(landen_chain(k, kp), dtype=float)
    scale = float(np.prod(1.0 + ks)) if ks.size else 1.0
    s, c, d = _sn_cn_dn(np.ascontiguousarray(u.ravel()), ks, scale)
    return s.reshape(u.shape), c.reshape(u.shape), d.reshape(u.shape)
