"""Special functions: Airy, complete elliptic integrals, Jacobi theta and sn,
and Gauss-Legendre quadrature.

Everything here is self-contained double-precision code; scipy and mpmath are
only used by the test-suite as independent references.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import math

import numpy as np

from . import kernels
from .errors import DomainError

__all__ = [
    "airy",
    "elliptic_KE",
    "ThetaFunction",
    "theta",
    "theta_tilde",
    "jacobi_sn",
    "jacobi_sn_cn_dn",
    "QuadratureRule",
    "gauss_legendre",
    "integrate",
]


def _require_finite(x, what="argument"):
    if not np.all(np.isfinite(x)):
        raise DomainError(f"{what} must be finite")


# ---------------------------------------------------------------------------
# Airy

def airy(x):
    """Airy function Ai and its derivative.

    Parameters
    ----------
    x : float or array_like
        Real, finite argument(s).

    Returns
    -------
    ai, aip : float or ndarray
        Ai(x) and Ai'(x), same shape as `x`.
    """
    arr = np.asarray(x, dtype=float)
    _require_finite(arr, "Airy argument")
    ai, aip = kernels.airy_eval(np.atleast_1d(arr))
    if arr.ndim == 0:
        return float(ai[0]), float(aip[0])
    return ai.reshape(arr.shape), aip.reshape(arr.shape)


# ---------------------------------------------------------------------------
# Complete elliptic integrals

def elliptic_KE(k, kprime=None):
    """Complete elliptic integrals K(k) and E(k) by the AGM.

    Modulus convention: ``K(k) = int_0^1 dx / sqrt((1-x^2)(1-k^2 x^2))``.

    Parameters
    ----------
    k : float
        Modulus in [0, 1).
    kprime : float, optional
        Complementary modulus sqrt(1 - k^2). Pass it when k is close to 1 and
        the complement is known more accurately than ``1 - k*k``.

    Returns
    -------
    K, E : float
    """
    k = float(k)
    if not math.isfinite(k) or k < 0.0 or k >= 1.0:
        raise DomainError(f"elliptic modulus must lie in [0, 1), got {k!r}")
    if kprime is None:
        kprime = math.sqrt((1.0 - k) * (1.0 + k))
    a, b = 1.0, float(kprime)
    # E = K * (1 - sum 2^(n-1) c_n^2) with c_0 = k
    s = 0.5 * k * k
    pw = 0.5
    for _ in range(60):
        if abs(a - b) <= 1e-16 * a:
            break
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        pw *= 2.0
        s += pw * c * c
    K = math.pi / (2.0 * a)
    return K, K * (1.0 - s)


# ---------------------------------------------------------------------------
# Jacobi theta

THETA_MAX_ORDER = 4


@dataclass(frozen=True)
class ThetaFunction:
    """Jacobi theta function ``theta(z) = sum_m exp(2 pi i m z + i pi m^2 tau)``.

    Parameters
    ----------
    tau : complex
        Modulus with Im(tau) > 0. The genus-one surfaces of this package give
        purely imaginary tau, but the series is valid for any Im(tau) > 0.
    tol : float
        Target truncation tolerance of the series.
    """

    tau: complex
    tol: float = 1e-17
    series_cutoff: int = field(init=False)

    def __post_init__(self):
        tau = complex(self.tau)
        if not tau.imag > 0:
            raise DomainError("theta modulus needs Im(tau) > 0")
        if not (0.0 < self.tol < 1.0):
            raise DomainError("tol must lie in (0, 1)")
        object.__setattr__(self, "tau", tau)
        M = max(8, math.ceil(math.sqrt(-math.log(self.tol) / (math.pi * tau.imag))) + 4)
        object.__setattr__(self, "series_cutoff", M)

    @property
    def nome_q(self):
        """Nome q = exp(i pi tau)."""
        q = np.exp(1j * np.pi * self.tau)
        return float(q.real) if self.tau.real == 0.0 else complex(q)

    def __call__(self, z, deriv_order=0):
        return theta(self, z, deriv_order)

    def series(self, z, deriv_order):
        """Raw series for any derivative order (no range check)."""
        arr = np.asarray(z, dtype=complex)
        # extra terms keep the tail small when |Im z| grows
        M = self.series_cutoff + int(math.ceil(abs(arr.imag).max() / self.tau.imag)) if arr.size else 0
        out = kernels.theta_series(np.atleast_1d(arr), self.tau, M, int(deriv_order))
        if arr.ndim == 0:
            return complex(out[0])
        return out.reshape(arr.shape)


def theta(t, z, deriv_order=0):
    """Derivative of order `deriv_order` (0..4) of theta at `z`.

    Parameters
    ----------
    t : ThetaFunction
    z : complex or array_like
    deriv_order : int
    """
    if not (isinstance(deriv_order, (int, np.integer)) and 0 <= deriv_order <= THETA_MAX_ORDER):
        raise DomainError(f"deriv_order must be an integer in 0..{THETA_MAX_ORDER}")
    _require_finite(np.asarray(z, dtype=complex), "theta argument")
    return t.series(z, deriv_order)


_TILDE_TAYLOR_RADIUS = 0.05
_TILDE_TAYLOR_TERMS = 16


def theta_tilde(t, z, deriv_order=0):
    """Regularized quotient ``theta(z) / (z - (1+tau)/2)`` and its derivatives.

    Near the simple zero of theta the quotient is replaced by its Taylor series,
    so the result is continuous across the removable singularity.

    Parameters
    ----------
    t : ThetaFunction
    z : complex
    deriv_order : int
        0..3.
    """
    if not (isinstance(deriv_order, (int, np.integer)) and 0 <= deriv_order <= 3):
        raise DomainError("deriv_order must be an integer in 0..3")
    z = complex(z)
    _require_finite(np.asarray(z), "theta_tilde argument")
    z0 = 0.5 * (1.0 + t.tau)
    h = z - z0
    d = int(deriv_order)
    if abs(h) < _TILDE_TAYLOR_RADIUS:
        # theta(z0 + h) = sum_{j>=1} theta^(j)(z0) h^j / j!
        total = 0j
        for j in range(d + 1, d + 1 + _TILDE_TAYLOR_TERMS):
            coef = t.series(z0, j) / math.factorial(j)
            total += coef * math.perm(j - 1, d) * h ** (j - 1 - d)
        return total
    total = 0j
    for i in range(d + 1):
        total += math.comb(d, i) * t.series(z, d - i) * (-1) ** i * math.factorial(i) / h ** (i + 1)
    return total


# ---------------------------------------------------------------------------
# Jacobi elliptic functions

def jacobi_sn_cn_dn(u, k, kprime=None):
    """sn, cn, dn of real argument by descending Landen transformation.

    Parameters
    ----------
    u : float or array_like
        Real argument(s).
    k : float
        Modulus in [0, 1).
    kprime : float, optional
        Complementary modulus (more accurate than ``sqrt(1-k^2)`` for k near 1).
    """
    k = float(k)
    if not (0.0 <= k < 1.0):
        raise DomainError(f"elliptic modulus must lie in [0, 1), got {k!r}")
    if kprime is None:
        kprime = math.sqrt((1.0 - k) * (1.0 + k))
    arr = np.asarray(u, dtype=float)
    _require_finite(arr, "sn argument")
    s, c, d = kernels.sn_cn_dn(np.atleast_1d(arr), k, float(kprime))
    if arr.ndim == 0:
        return float(s[0]), float(c[0]), float(d[0])
    return s.reshape(arr.shape), c.reshape(arr.shape), d.reshape(arr.shape)


def jacobi_sn(u, k, kprime=None):
    """Jacobi sn(u, k) for complex `u` and real modulus `k` in [0, 1).

    The second argument is the modulus k, not the parameter m = k^2.
    Complex arguments use the addition formula with the imaginary part
    evaluated at the complementary modulus. An exactly hit pole returns
    complex infinity; one hit only to rounding gives a very large value.
    """
    k = float(k)
    if not (0.0 <= k < 1.0):
        raise DomainError(f"elliptic modulus must lie in [0, 1), got {k!r}")
    if kprime is None:
        kprime = math.sqrt((1.0 - k) * (1.0 + k))
    uu = np.asarray(u, dtype=complex)
    _require_finite(uu, "sn argument")
    x = np.atleast_1d(uu.real)
    y = np.atleast_1d(uu.imag)
    s, c, d = kernels.sn_cn_dn(x, k, float(kprime))
    if not np.any(y):
        out = s.astype(complex)
    else:
        s1, c1, d1 = kernels.sn_cn_dn(y, float(kprime), k)
        den = c1 * c1 + k * k * s * s * s1 * s1
        num = s * d1 + 1j * c * d * s1 * c1
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.where(den != 0.0, num / np.where(den != 0.0, den, 1.0), complex(np.inf, np.inf))
    if uu.ndim == 0:
        return complex(out[0])
    return out.reshape(uu.shape)


# ---------------------------------------------------------------------------
# Gauss-Legendre quadrature

@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre rule on (-1, 1).

    Attributes
    ----------
    order : int
    nodes, weights : ndarray
        Read-only arrays; nodes strictly increasing.
    """

    order: int
    nodes: np.ndarray
    weights: np.ndarray

    def mapped(self, a, b):
        """Nodes and weights affinely mapped to (a, b)."""
        half = 0.5 * (b - a)
        return 0.5 * (a + b) + half * self.nodes, half * self.weights

    def union(self, intervals):
        """Concatenated nodes and weights over a list of (a, b) intervals."""
        if not intervals:
            return np.empty(0), np.empty(0)
        xs, ws = zip(*(self.mapped(a, b) for a, b in intervals))
        return np.concatenate(xs), np.concatenate(ws)

    def integrate(self, f, a=-1.0, b=1.0):
        x, w = self.mapped(a, b)
        return np.dot(w, f(x))


@lru_cache(maxsize=64)
def _gl_cached(n):
    m = (n + 1) // 2
    # Tricomi's initial guesses for the positive roots, largest first
    i = np.arange(1, m + 1)
    theta_ = np.pi * (4 * i - 1) / (4 * n + 2)
    x = np.cos(theta_) * (1 - (n - 1) / (8.0 * n**3) - (39 - 28 / np.sin(theta_) ** 2) / (384.0 * n**4))
    for _ in range(100):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for kk in range(2, n + 1):
            p0, p1 = p1, ((2 * kk - 1) * x * p1 - (kk - 1) * p0) / kk
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < 4e-16:
            break
    p0 = np.ones_like(x)
    p1 = x.copy()
    for kk in range(2, n + 1):
        p0, p1 = p1, ((2 * kk - 1) * x * p1 - (kk - 1) * p0) / kk
    dp = n * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    if n % 2:
        x[-1] = 0.0
    # mirror the positive half so the rule is exactly symmetric
    xs = np.concatenate([-x, x[::-1][n % 2:]])
    ws = np.concatenate([w, w[::-1][n % 2:]])
    xs.setflags(write=False)
    ws.setflags(write=False)
    return xs, ws


def gauss_legendre(n):
    """Gauss-Legendre rule with `n` nodes (2 <= n <= 2000)."""
    if not isinstance(n, (int, np.integer)) or not (2 <= n <= 2000):
        raise DomainError(f"Gauss-Legendre order must be an integer in [2, 2000], got {n!r}")
    x, w = _gl_cached(int(n))
    return QuadratureRule(int(n), x, w)


_PANEL = 20


def integrate(f, a, b, tol=1e-14, max_depth=40):
    """Adaptive Gauss-Legendre integral of a vectorized `f` over [a, b].

    Each panel is compared with the sum over its two halves; panels are
    bisected until the difference is below ``tol`` times the running
    integral of ``|f|``. Complex-valued integrands are fine.
    """
    rule = gauss_legendre(_PANEL)

    def panel(lo, hi):
        x, w = rule.mapped(lo, hi)
        fx = f(x)
        return np.dot(w, fx), np.dot(w, np.abs(fx))

    whole, scale = panel(a, b)
    stack = [(a, b, whole, 0)]
    total = 0.0
    while stack:
        lo, hi, val, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left, sl = panel(lo, mid)
        right, sr = panel(mid, hi)
        refined = left + right
        if abs(refined - val) <= tol * max(scale, 1e-300) or depth >= max_depth:
            total = total + refined
        else:
            stack.append((mid, hi, right, depth + 1))
            stack.append((lo, mid, left, depth + 1))
    return total
