"""Large-gap expansion of the two-interval determinant, and the one-interval
Tracy-Widom tail used for calibration.

Two intervals:  ``log F(r x) = c r^3 - (1/2) log r + log theta(nu) + C + O(1/r)``
with ``nu = -Omega r^(3/2) / (2 pi)``. The constant ``C`` has no closed form
and is fitted against the Nystrom determinant.

One interval:   ``log F(-r) = -r^3/12 - (1/8) log r + zeta'(-1) + (1/24) log 2
+ O(r^(-3/2))``.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError
from .fredholm import log_F_two_interval
from .surface import build_surface, nu_raw

__all__ = [
    "AsymptoticExpansion",
    "ZETA_PRIME_M1",
    "LOG_R_COEFFICIENT",
    "nu_of_r",
    "asymp_log_F",
    "fit_C",
    "one_interval_asymp",
]

# zeta'(-1) = 1/12 - log(A), A = Glaisher-Kinkelin constant 1.28242712910062263688
ZETA_PRIME_M1 = -0.16542114370045092

LOG_R_COEFFICIENT = -0.5


@dataclass(frozen=True)
class AsymptoticExpansion:
    """Terms of the two-interval expansion at one value of r.

    ``value`` is ``c_r3 + log_r_term + theta_term`` plus ``C`` when known.
    """

    r: float
    c_r3: float
    log_r_term: float
    theta_term: float
    nu: float
    nu_reduced: float
    C: float = None

    @property
    def value(self):
        base = self.c_r3 + self.log_r_term + self.theta_term
        return base if self.C is None else base + self.C


def nu_of_r(sq, r):
    """``nu = -Omega r^(3/2) / (2 pi)`` and its representative in [-1/2, 1/2).

    Returns
    -------
    nu, nu_reduced : float
    """
    if not r > 0:
        raise DomainError("r must be positive")
    nu = nu_raw(sq, r)
    # theta has period 1, so reduce before forming exp(2 pi i m nu)
    return nu, (nu + 0.5) % 1.0 - 0.5


def _surface(cfg_or_sq):
    return cfg_or_sq if hasattr(cfg_or_sq, "Omega") else build_surface(cfg_or_sq)


def asymp_log_F(cfg, r, C=None):
    """Expansion terms at `r` for a GapConfig (or prebuilt SurfaceQuantities)."""
    sq = _surface(cfg)
    if not r > 0:
        raise DomainError("r must be positive")
    nu, red = nu_of_r(sq, r)
    th = sq.theta(red).real
    return AsymptoticExpansion(
        r=float(r),
        c_r3=sq.c * r**3,
        log_r_term=LOG_R_COEFFICIENT * math.log(r),
        theta_term=math.log(th),
        nu=nu,
        nu_reduced=red,
        C=None if C is None else float(C),
    )


def fit_C(cfg, r_grid, n=120):
    """Fit the constant C as the mean of ``log F(r) - expansion(r)`` over `r_grid`.

    Returns
    -------
    C : float
    residuals : ndarray
        ``log F(r) - expansion(r) - C`` at each grid point.
    """
    r_grid = np.asarray(r_grid, dtype=float)
    if r_grid.ndim != 1 or r_grid.size < 3:
        raise DomainError("fit_C needs at least three r values")
    if np.any(np.diff(r_grid) <= 0):
        raise DomainError("r_grid must be strictly increasing")
    sq = _surface(cfg)
    cfg = sq.cfg
    diffs = np.array(
        [log_F_two_interval(cfg, r, n).log_F - asymp_log_F(sq, r).value for r in r_grid]
    )
    C = float(diffs.mean())
    return C, diffs - C


def one_interval_asymp(r):
    """``-r^3/12 - (1/8) log r + zeta'(-1) + (1/24) log 2``."""
    if not r > 0:
        raise DomainError("r must be positive")
    return -(r**3) / 12.0 - math.log(r) / 8.0 + ZETA_PRIME_M1 + math.log(2.0) / 24.0
