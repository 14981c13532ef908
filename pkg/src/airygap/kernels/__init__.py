"""Hot numerical kernels with a numba path and a pure-numpy fallback.

The implementation is picked once at import from ``airygap._backend``. Both
modules are importable directly for side-by-side comparison.
"""

from .. import _backend
from . import _numpy_impl

if _backend.USE_NUMBA:
    from . import _numba_impl as _impl
else:
    _impl = _numpy_impl

BACKEND = _backend.NAME

airy_eval = _impl.airy_eval
airy_kernel_matrix = _impl.airy_kernel_matrix
theta_series = _impl.theta_series
sn_cn_dn = _impl.sn_cn_dn
airy_coefficients = _numpy_impl.airy_coefficients


def implementation(name):
    """Return the kernel module for ``"numba"`` or ``"numpy"``."""
    if name == "numpy":
        return _numpy_impl
    if name == "numba":
        from . import _numba_impl

        return _numba_impl
    raise ValueError(f"unknown backend {name!r}")


__all__ = [
    "BACKEND",
    "airy_eval",
    "airy_kernel_matrix",
    "airy_coefficients",
    "theta_series",
    "sn_cn_dn",
    "implementation",
]
