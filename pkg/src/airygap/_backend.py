"""Backend selection for the compiled kernels.

Set ``AIRYGAP_BACKEND=numpy`` to force the pure-numpy path. Any other value
(or no value) uses numba when it is importable.
"""

import os

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

REQUESTED = os.environ.get("AIRYGAP_BACKEND", "numba").strip().lower()
USE_NUMBA = HAVE_NUMBA and REQUESTED != "numpy"
NAME = "numba" if USE_NUMBA else "numpy"
