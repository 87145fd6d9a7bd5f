"""Kernel backend selection.

Hot per-node kernels (batched 3x3 symmetric eigensolves and the polar /
rotation-distance pipeline built on them) exist twice: a numba @njit
implementation and a pure-numpy vectorized one.  The numpy path is selected
by setting the environment variable ``SHELLRIG_DISABLE_NUMBA=1`` before
import, and is also the automatic fallback when numba is not importable.
"""

import os

_DISABLED = os.environ.get("SHELLRIG_DISABLE_NUMBA", "0") not in ("0", "", "false", "False")

if _DISABLED:
    _HAVE_NUMBA = False
else:
    try:
        import numba  # noqa: F401

        _HAVE_NUMBA = True
    except ImportError:
        _HAVE_NUMBA = False


def numba_enabled() -> bool:
    """True when the numba kernel path is active for this process."""
    return _HAVE_NUMBA


def set_num_threads(n: int) -> None:
    """Limit numba worker threads; no-op on the numpy path."""
    if _HAVE_NUMBA and n > 0:
        import numba

        numba.set_num_threads(n)
