"""Backend dispatch for the hot batched 3x3 kernels.

Both implementations run the same cyclic Jacobi sweep schedule (off-diagonal
norm driven below 1e-14 of the matrix scale), so results agree to roundoff.
"""

from .backend import numba_enabled

if numba_enabled():
    from ._kernels_numba import eigh3_batch, polar_pipeline
else:
    from ._kernels_numpy import eigh3_batch, polar_pipeline

__all__ = ["eigh3_batch", "polar_pipeline"]
