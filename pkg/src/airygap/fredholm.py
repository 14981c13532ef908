"""Airy-kernel Fredholm determinants on unions of intervals.

The operator ``K_Ai`` restricted to a set ``J`` is discretized with
Gauss-Legendre nodes on each interval (Nystrom's method). The symmetric
matrix ``A = sqrt(w) K sqrt(w)`` has eigenvalues in [0, 1), so ``I - A`` is
positive definite and its log-determinant comes from a Cholesky factor.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy.linalg import lapack

from . import kernels
from .errors import DomainError, FactorizationError
from .specfun import gauss_legendre

__all__ = [
    "DeterminantResult",
    "airy_kernel",
    "log_det_gap",
    "log_F_two_interval",
    "log_F_one_interval",
    "truncation_T",
    "TAIL_TOL",
]

TAIL_TOL = 1e-24


@dataclass(frozen=True)
class DeterminantResult:
    """Outcome of a Nystrom log-determinant.

    Attributes
    ----------
    log_F : float
        ``log det(I - K_Ai)`` on the union of intervals.
    nodes_per_interval : int
    truncation_T : float or None
        Right endpoint used in place of ``+inf`` (None if nothing was truncated).
    convergence_gap : float or None
        ``|log_F(n) - log_F(n // 2)|`` when a half-resolution run was made.
    intervals : tuple
    """

    log_F: float
    nodes_per_interval: int
    truncation_T: float = None
    convergence_gap: float = None
    intervals: tuple = ()


def airy_kernel(u, v):
    """Airy kernel ``(Ai(u) Ai'(v) - Ai'(u) Ai(v)) / (u - v)``.

    Broadcasts over `u` and `v`. The diagonal value is ``Ai'(u)^2 - u Ai(u)^2``;
    pairs closer than ``0.1`` use a Taylor expansion about the smaller point,
    so the kernel is continuous and exactly symmetric.
    """
    u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
        raise DomainError("kernel arguments must be finite")
    shape = u.shape
    lo = np.minimum(u, v).ravel()
    hi = np.maximum(u, v).ravel()
    h = hi - lo
    ai_lo, aip_lo = kernels.airy_eval(lo)
    ai_hi, aip_hi = kernels.airy_eval(hi)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (ai_lo * aip_hi - aip_lo * ai_hi) / (lo - hi)
    near = h < kernels._numpy_impl.NEAR_DIAG
    if np.any(near):
        nt = kernels._numpy_impl.NEAR_DIAG_TERMS
        a = kernels.airy_coefficients(lo[near], nt + 2)
        k = np.arange(1, nt + 1)
        terms = (k + 1) * a[:, :1] * a[:, 2:] - a[:, 1:2] * a[:, 1:-1]
        out[near] = -np.sum(terms * h[near][:, None] ** (k - 1), axis=1)
    if shape == ():
        return float(out[0])
    return out.reshape(shape)


def _check_intervals(intervals):
    ivs = sorted((float(a), float(b)) for a, b in intervals)
    for a, b in ivs:
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError("intervals must be finite; truncate +inf first")
        if not a < b:
            raise DomainError(f"empty or reversed interval ({a}, {b})")
    for (a0, b0), (a1, b1) in zip(ivs, ivs[1:]):
        if a1 < b0:
            raise DomainError(f"intervals ({a0}, {b0}) and ({a1}, {b1}) overlap")
    return ivs


def _log_det(intervals, n):
    rule = gauss_legendre(n)
    x, w = rule.union(intervals)
    K = kernels.airy_kernel_matrix(x)
    sw = np.sqrt(w)
    M = -(sw[:, None] * K * sw[None, :])
    M[np.diag_indices_from(M)] += 1.0
    chol, info = lapack.dpotrf(M, lower=1, clean=0, overwrite_a=1)
    if info > 0:
        raise FactorizationError(info - 1)
    if info < 0:  # pragma: no cover - argument error inside LAPACK
        raise FactorizationError(-1, f"dpotrf argument error {info}")
    return 2.0 * float(np.sum(np.log(np.diag(chol))))


def log_det_gap(intervals, n, truncation_T=None, estimate_gap=False):
    """Nystrom approximation of ``log det(I - K_Ai)`` on a union of intervals.

    Parameters
    ----------
    intervals : list of (a, b)
        Disjoint finite intervals.
    n : int
        Gauss-Legendre nodes per interval.
    truncation_T : float, optional
        Recorded in the result when the last interval stands in for ``+inf``.
    estimate_gap : bool
        Also run with ``n // 2`` nodes and report the difference.

    Raises
    ------
    DomainError
        Intervals that overlap or are not finite and nonempty.
    FactorizationError
        ``I - A`` was not numerically positive definite; ``.pivot`` is the
        zero-based index of the failing pivot.
    """
    ivs = _check_intervals(intervals)
    if not ivs:
        return DeterminantResult(0.0, int(n), truncation_T, 0.0 if estimate_gap else None, ())
    val = _log_det(ivs, n)
    gap = None
    if estimate_gap:
        gap = abs(val - _log_det(ivs, max(2, n // 2)))
    return DeterminantResult(val, int(n), truncation_T, gap, tuple(ivs))


def truncation_T(r, x1=-1.0, tol_tail=TAIL_TOL):
    """Right endpoint replacing ``+inf`` for the interval ``(r x1, +inf)``.

    ``Ai(u)^2 ~ exp(-(4/3) u^(3/2))``, so beyond ``(1.5 L)^(2/3)`` with
    ``L = -log(tol_tail)`` the kernel is below the tail tolerance. At least
    8 units of interval are always kept.
    """
    L = -math.log(tol_tail)
    left = r * x1
    return left + max(8.0, (1.5 * L) ** (2.0 / 3.0) - left)


def log_F_two_interval(cfg, r, n, T=None):
    """``log F(r x)`` on ``(r x3, r x2) U (r x1, +inf)``, with a half-n error estimate."""
    if not r > 0:
        raise DomainError("r must be positive")
    if n < 20:
        raise DomainError("use at least 20 nodes per interval")
    if T is None:
        T = truncation_T(r, cfg.x1)
    return log_det_gap(cfg.intervals(r, T), n, truncation_T=T, estimate_gap=True)


def log_F_one_interval(r, n, T=None):
    """``log det(I - K_Ai)`` on ``(-r, +inf)``, i.e. the log of the Tracy-Widom CDF at ``-r``."""
    if not r > 0:
        raise DomainError("r must be positive")
    if n < 20:
        raise DomainError("use at least 20 nodes per interval")
    if T is None:
        T = truncation_T(r, -1.0)
    return log_det_gap([(-r, T)], n, truncation_T=T, estimate_gap=True)
