"""Airy-kernel gap probabilities on two intervals.

Computes the Fredholm determinant numerically and compares it with the
large-gap expansion. The identities behind the expansion constants are
checked numerically as well.
"""

from .asymptotics import AsymptoticExpansion, asymp_log_F, fit_C, nu_of_r, one_interval_asymp
from .errors import DomainError, FactorizationError, NumericalError
from .fredholm import (
    DeterminantResult,
    airy_kernel,
    log_det_gap,
    log_F_one_interval,
    log_F_two_interval,
    truncation_T,
)
from .identities import IdentityReport, run_suite
from .kernels import BACKEND
from .specfun import (
    QuadratureRule,
    ThetaFunction,
    airy,
    elliptic_KE,
    gauss_legendre,
    jacobi_sn,
    jacobi_sn_cn_dn,
    theta,
    theta_tilde,
)
from .surface import GapConfig, SurfaceQuantities, abel_inverse, abel_phi, build_surface

__version__ = "0.1.0"

__all__ = [
    "AsymptoticExpansion",
    "BACKEND",
    "DeterminantResult",
    "DomainError",
    "FactorizationError",
    "GapConfig",
    "IdentityReport",
    "NumericalError",
    "QuadratureRule",
    "SurfaceQuantities",
    "ThetaFunction",
    "abel_inverse",
    "abel_phi",
    "airy",
    "airy_kernel",
    "asymp_log_F",
    "build_surface",
    "elliptic_KE",
    "fit_C",
    "gauss_legendre",
    "jacobi_sn",
    "jacobi_sn_cn_dn",
    "log_det_gap",
    "log_F_one_interval",
    "log_F_two_interval",
    "nu_of_r",
    "one_interval_asymp",
    "run_suite",
    "theta",
    "theta_tilde",
    "truncation_T",
]
