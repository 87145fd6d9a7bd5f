"""Exact 3x3 linear algebra: polar factors and distance to the rotation group.

All operations accept a single (3, 3) matrix or a batch (..., 3, 3) and
return results with matching leading shape.  The symmetric eigensolve is a
cyclic Jacobi iteration (off-diagonal norm below 1e-14 of the matrix scale);
the matrix square root comes from that eigendecomposition with tiny negative
eigenvalues of A^T A clamped at zero.
"""

from dataclasses import dataclass

import numpy as np

from .kernels import eigh3_batch, polar_pipeline

NEAR_SINGULAR_RATIO = 1e-12

_I3 = np.eye(3)


def _as_batch(A):
    A = np.asarray(A, dtype=float)
    if A.shape[-2:] != (3, 3):
        raise ValueError(f"expected trailing shape (3, 3), got {A.shape}")
    lead = A.shape[:-2]
    return A.reshape(-1, 3, 3), lead


def _unbatch(x, lead):
    return x.reshape(lead + x.shape[1:])


def frobenius_norm(A):
    """sqrt(trace(A A^T)), batched over leading axes."""
    A = np.asarray(A, dtype=float)
    return np.sqrt(np.sum(A * A, axis=(-2, -1)))


def sym(A):
    """Symmetric part (A + A^T) / 2."""
    A = np.asarray(A, dtype=float)
    return 0.5 * (A + np.swapaxes(A, -2, -1))


def det3(A):
    """Determinant, batched; closed-form cofactor expansion."""
    A = np.asarray(A, dtype=float)
    return (
        A[..., 0, 0] * (A[..., 1, 1] * A[..., 2, 2] - A[..., 1, 2] * A[..., 2, 1])
        - A[..., 0, 1] * (A[..., 1, 0] * A[..., 2, 2] - A[..., 1, 2] * A[..., 2, 0])
        + A[..., 0, 2] * (A[..., 1, 0] * A[..., 2, 1] - A[..., 1, 1] * A[..., 2, 0])
    )


def inv3(A):
    """Inverse via the adjugate; batched and deterministic."""
    A = np.asarray(A, dtype=float)
    out = np.empty_like(A)
    out[..., 0, 0] = A[..., 1, 1] * A[..., 2, 2] - A[..., 1, 2] * A[..., 2, 1]
    out[..., 0, 1] = A[..., 0, 2] * A[..., 2, 1] - A[..., 0, 1] * A[..., 2, 2]
    out[..., 0, 2] = A[..., 0, 1] * A[..., 1, 2] - A[..., 0, 2] * A[..., 1, 1]
    out[..., 1, 0] = A[..., 1, 2] * A[..., 2, 0] - A[..., 1, 0] * A[..., 2, 2]
    out[..., 1, 1] = A[..., 0, 0] * A[..., 2, 2] - A[..., 0, 2] * A[..., 2, 0]
    out[..., 1, 2] = A[..., 0, 2] * A[..., 1, 0] - A[..., 0, 0] * A[..., 1, 2]
    out[..., 2, 0] = A[..., 1, 0] * A[..., 2, 1] - A[..., 1, 1] * A[..., 2, 0]
    out[..., 2, 1] = A[..., 0, 1] * A[..., 2, 0] - A[..., 0, 0] * A[..., 2, 1]
    out[..., 2, 2] = A[..., 0, 0] * A[..., 1, 1] - A[..., 0, 1] * A[..., 1, 0]
    return out / det3(A)[..., None, None]


def eigh3(A):
    """Eigenvalues (ascending) and eigenvector columns of a symmetric matrix."""
    batch, lead = _as_batch(A)
    vals, vecs = eigh3_batch(np.ascontiguousarray(batch))
    return _unbatch(vals, lead), _unbatch(vecs, lead)


@dataclass
class PolarFactors:
    """Polar decomposition A = R U.

    R is orthogonal (a proper rotation whenever det A > 0), U = (A^T A)^{1/2}
    is symmetric positive-semidefinite.  ``valid`` is True iff det A > 0;
    ``degenerate`` flags near-singular inputs (smallest singular value below
    1e-12 of the largest), where the caller decides what to do.
    """

    R: np.ndarray
    U: np.ndarray
    valid: np.ndarray
    degenerate: np.ndarray
    singular_values: np.ndarray  # ascending
    det: np.ndarray


def polar_decompose(A) -> PolarFactors:
    batch, lead = _as_batch(A)
    R, U, s, dets = polar_pipeline(np.ascontiguousarray(batch))
    degenerate = s[:, 0] < NEAR_SINGULAR_RATIO * np.maximum(s[:, 2], 1e-300)
    valid = dets > 0.0
    return PolarFactors(
        R=_unbatch(R, lead),
        U=_unbatch(U, lead),
        valid=_unbatch(valid, lead),
        degenerate=_unbatch(degenerate, lead),
        singular_values=_unbatch(s, lead),
        det=_unbatch(dets, lead),
    )


def strain_T(A):
    """(A^T A)^{1/2} - I, with the polar factors' degeneracy flag."""
    pf = polar_decompose(A)
    return pf.U - _I3, pf.degenerate


def dist_SO3(A, with_flag: bool = False):
    """Distance from A to the rotation group SO(3).

    For det A > 0 this equals the Frobenius norm of (A^T A)^{1/2} - I.  For
    det A <= 0 the true projection distance is still returned (the smallest
    singular value enters with flipped sign) together with a flag.
    """
    batch, lead = _as_batch(A)
    _, _, s, dets = polar_pipeline(np.ascontiguousarray(batch))
    flagged = dets <= 0.0
    lo = np.where(flagged, s[:, 0] + 1.0, s[:, 0] - 1.0)
    d = np.sqrt(lo**2 + (s[:, 1] - 1.0) ** 2 + (s[:, 2] - 1.0) ** 2)
    d = _unbatch(d, lead)
    if with_flag:
        return d, _unbatch(flagged, lead)
    return d


def dist_SO3_squared_batch(A):
    """(dist^2, det<=0 flags, degeneracy flags) for a contiguous (n,3,3) batch.

    Hot-path variant used by the energy quadrature; skips shape juggling.
    """
    _, _, s, dets = polar_pipeline(A)
    flagged = dets <= 0.0
    lo = np.where(flagged, s[:, 0] + 1.0, s[:, 0] - 1.0)
    d2 = lo**2 + (s[:, 1] - 1.0) ** 2 + (s[:, 2] - 1.0) ** 2
    degenerate = s[:, 0] < NEAR_SINGULAR_RATIO * np.maximum(s[:, 2], 1e-300)
    return d2, flagged, degenerate


def nonlinear_strain_Phi(B):
    """sym B + (1/2) B^T B."""
    B = np.asarray(B, dtype=float)
    return sym(B) + 0.5 * np.swapaxes(B, -2, -1) @ B


def sandwich_check(B, slack: float = 1e-12):
    """Two-sided comparison of |T(A)| and |Phi(B)| for A = I + B.

    True iff |T(A)|/(2 sqrt(3)) <= |Phi(B)| <= (sqrt(3) + |A|)/2 * |T(A)|
    within ``slack``.  Requires det(I + B) > 0.
    """
    B = np.asarray(B, dtype=float)
    A = _I3 + B
    if not np.all(det3(A) > 0.0):
        raise ValueError("sandwich_check requires det(I + B) > 0")
    tnorm = dist_SO3(A)
    pnorm = frobenius_norm(nonlinear_strain_Phi(B))
    anorm = frobenius_norm(A)
    lower = tnorm / (2.0 * np.sqrt(3.0))
    upper = 0.5 * (np.sqrt(3.0) + anorm) * tnorm
    return (lower <= pnorm + slack) & (pnorm <= upper + slack)
